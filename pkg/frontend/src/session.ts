/**
 * Client-side session indicator.  The HttpOnly cookie does the actual
 * authenticating; sessionStorage only remembers who we are so the router
 * can gate navigation and pick the right dashboard after a reload.
 */

import type { Role, SessionInfo } from "./api.js";

const KEY = "campus-recruit-session";

export interface ClientSession {
  role: Role;
  principalId: string;
  expiresAt: string;
}

export function saveSession(info: SessionInfo): ClientSession {
  const session: ClientSession = {
    role: info.role,
    principalId: info.principal_id,
    expiresAt: info.expires_at,
  };
  sessionStorage.setItem(KEY, JSON.stringify(session));
  return session;
}

export function loadSession(): ClientSession | null {
  const raw = sessionStorage.getItem(KEY);
  if (!raw) return null;
  try {
    const session = JSON.parse(raw) as ClientSession;
    if (Date.parse(session.expiresAt) <= Date.now()) {
      clearSession();
      return null;
    }
    return session;
  } catch {
    clearSession();
    return null;
  }
}

export function clearSession(): void {
  sessionStorage.removeItem(KEY);
}
