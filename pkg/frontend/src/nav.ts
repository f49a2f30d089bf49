/**
 * Route table and role gating.
 *
 * The navigation matrix mirrors the API's RBAC contract exactly: a route is
 * reachable in the UI iff the role's requests behind it would be authorized.
 * Role-gated routes are unreachable without a session of that role — the
 * router falls back to the login view instead of rendering anything.
 */

import type { Role } from "./api.js";

export type RouteName = "login" | "register-company" | "student" | "company" | "admin";

export const ALL_ROLES: Role[] = ["Student", "Company", "Admin"];

/** null = public; otherwise the roles allowed through. */
export const NAV_MATRIX: Record<RouteName, Role[] | null> = {
  "login": null,
  "register-company": null,
  "student": ["Student"],
  "company": ["Company"],
  "admin": ["Admin"],
};

export function canNavigate(route: RouteName, role: Role | null): boolean {
  const allowed = NAV_MATRIX[route];
  if (allowed === null) return true;
  return role !== null && allowed.includes(role);
}

export function homeRoute(role: Role): RouteName {
  switch (role) {
    case "Student":
      return "student";
    case "Company":
      return "company";
    case "Admin":
      return "admin";
  }
}

export function parseHash(hash: string): RouteName {
  const name = hash.replace(/^#\/?/, "").split("?")[0];
  if (name in NAV_MATRIX) return name as RouteName;
  return "login";
}
