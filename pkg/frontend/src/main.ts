/**
 * Entry point: hash router with role-gated navigation, session header, and
 * the per-role dashboards.  Every view renders against the JSON API; there
 * is no client-only state that outlives a refresh besides the session
 * indicator.
 */

import { ApiClient } from "./api.js";
import type { AppContext } from "./context.js";
import { clear, h } from "./dom.js";
import { buildForm } from "./forms.js";
import { canNavigate, homeRoute, parseHash, type RouteName } from "./nav.js";
import { clearSession, loadSession } from "./session.js";
import { mountToasts, showError, showInfo } from "./toast.js";
import { renderAdmin } from "./views/admin.js";
import { renderCompany } from "./views/company.js";
import { renderCompanyRegistration, renderLogin } from "./views/login.js";
import { renderStudent } from "./views/student.js";

export function createApp(root: HTMLElement, api: ApiClient = new ApiClient()): AppContext {
  const header = h("header", { class: "topbar" });
  const outlet = h("main", { class: "outlet", dataset: { testid: "outlet" } });
  root.append(header, outlet);
  mountToasts(root);

  const ctx: AppContext = {
    api,
    session: loadSession(),
    navigate(route: RouteName) {
      window.location.hash = `#/${route}`;
      void render(route);
    },
    setSession(session) {
      ctx.session = session;
      renderHeader();
    },
    async refresh() {
      await render(currentRoute);
    },
  };

  let currentRoute: RouteName = parseHash(window.location.hash);

  function renderHeader(): void {
    clear(header);
    header.append(h("span", { class: "brand" }, "Campus Recruitment"));
    if (ctx.session) {
      header.append(
        h("span", { dataset: { testid: "session-indicator" } },
          `${ctx.session.role} · ${ctx.session.principalId}`),
        h("button", {
          type: "button",
          dataset: { testid: "password-button" },
          onClick: () => void renderPasswordForm(),
        }, "Change password"),
        h("button", {
          type: "button",
          dataset: { testid: "logout-button" },
          onClick: async () => {
            try {
              await ctx.api.logout();
            } catch (error) {
              showError(error);
            }
            clearSession();
            ctx.setSession(null);
            ctx.navigate("login");
          },
        }, "Log out"),
      );
    }
  }

  async function renderPasswordForm(): Promise<void> {
    clear(outlet);
    const form = buildForm({
      testid: "password-form",
      submitLabel: "Change password",
      fields: [
        { name: "old", label: "Current password", type: "password" },
        { name: "new", label: "New password", type: "password" },
        { name: "confirm", label: "Confirm new password", type: "password" },
      ],
      validate(handle) {
        const values = handle.values();
        if (values.new !== values.confirm) return "New passwords do not match";
        return null;
      },
      async onSubmit(handle) {
        const values = handle.values();
        const outcome = await ctx.api.changePassword(values.old, values.new, values.confirm);
        if (outcome.outcome === "Changed") {
          showInfo("Password changed");
          await render(currentRoute);
        } else {
          handle.setError(outcome.outcome === "WrongOld"
            ? "Current password is wrong"
            : "New passwords do not match");
        }
      },
      onCancel: () => void render(currentRoute),
    });
    outlet.append(h("section", { class: "card" }, h("h2", {}, "Change password"), form.element));
  }

  async function render(route: RouteName): Promise<void> {
    // role-gated routes are unreachable without a matching session, and a
    // live session skips the login page for its role's dashboard
    if (!canNavigate(route, ctx.session?.role ?? null)) {
      route = ctx.session ? homeRoute(ctx.session.role) : "login";
      window.location.hash = `#/${route}`;
    } else if (route === "login" && ctx.session) {
      route = homeRoute(ctx.session.role);
      window.location.hash = `#/${route}`;
    }
    currentRoute = route;
    renderHeader();
    clear(outlet);
    try {
      switch (route) {
        case "login":
          renderLogin(outlet, ctx);
          break;
        case "register-company":
          renderCompanyRegistration(outlet, ctx);
          break;
        case "student":
          await renderStudent(outlet, ctx);
          break;
        case "company":
          await renderCompany(outlet, ctx);
          break;
        case "admin":
          await renderAdmin(outlet, ctx);
          break;
      }
    } catch (error) {
      showError(error);
    }
  }

  window.addEventListener("hashchange", () => {
    if (!root.isConnected) return; // app instance was torn down
    void render(parseHash(window.location.hash));
  });
  void render(currentRoute);
  return ctx;
}

declare global {
  interface Window {
    campusRecruitBooted?: boolean;
  }
}

if (typeof document !== "undefined" && document.getElementById("app") && !window.campusRecruitBooted) {
  window.campusRecruitBooted = true;
  createApp(document.getElementById("app") as HTMLElement);
}
