import type { Role } from "../api.js";
import type { AppContext } from "../context.js";
import { h } from "../dom.js";
import { buildForm } from "../forms.js";
import { homeRoute } from "../nav.js";
import { saveSession } from "../session.js";

export function renderLogin(root: HTMLElement, ctx: AppContext): void {
  const form = buildForm({
    testid: "login-form",
    submitLabel: "Sign in",
    fields: [
      {
        name: "role",
        label: "Role",
        type: "select",
        value: "Student",
        options: [
          { value: "Student", label: "Student" },
          { value: "Company", label: "Company" },
          { value: "Admin", label: "Administrator" },
        ],
      },
      { name: "id", label: "ID", required: true },
      { name: "password", label: "Password", type: "password", required: true },
    ],
    async onSubmit(handle) {
      const values = handle.values();
      const info = await ctx.api.login(values.role as Role, values.id, values.password);
      ctx.setSession(saveSession(info));
      ctx.navigate(homeRoute(info.role));
    },
  });
  root.append(
    h("section", { class: "card login-card" },
      h("h1", {}, "Campus Recruitment"),
      h("p", {}, "Sign in to browse postings, manage hiring, or administer the platform."),
      form.element,
      h("p", {},
        "New employer? ",
        h("a", {
          href: "#/register-company",
          dataset: { testid: "goto-register" },
        }, "Register your company"),
      ),
    ),
  );
}

export function renderCompanyRegistration(root: HTMLElement, ctx: AppContext): void {
  let industries: { value: string; label: string }[] = [];
  const container = h("section", { class: "card" },
    h("h1", {}, "Company Registration"),
    h("p", {}, "Submitted registrations wait for administrator review before login works."),
  );
  root.append(container);

  ctx.api.listDict("industry").then((rows) => {
    industries = rows.map((r) => ({
      value: String(r.industry_id),
      label: String(r.industry_name),
    }));
    const form = buildForm({
      testid: "company-registration",
      submitLabel: "Submit registration",
      fields: [
        { name: "company_id", label: "Company ID" },
        { name: "company_name", label: "Name" },
        { name: "industry_id", label: "Industry", type: "select", value: industries[0]?.value, options: industries },
        { name: "phone", label: "Phone" },
        { name: "scale", label: "Scale" },
        { name: "address", label: "Address" },
        { name: "established", label: "Established", type: "date", value: "2020-01-01" },
        { name: "capital", label: "Capital" },
        { name: "worktime", label: "Work hours" },
        { name: "email", label: "Email" },
        { name: "detail", label: "About", type: "textarea" },
        { name: "initial_password", label: "Password", type: "password" },
      ],
      async onSubmit(handle) {
        await ctx.api.registerCompany(handle.values());
        container.append(
          h("p", { class: "success", dataset: { testid: "registration-pending" } },
            "Registration submitted; an administrator will review it."),
        );
      },
      onCancel: () => ctx.navigate("login"),
    });
    container.append(form.element);
  });
}
