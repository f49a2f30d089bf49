/** Role dashboards against the live fixture: application badges, expired
 * postings hidden, pending review queues. */

import { beforeAll, afterAll, describe, expect, it } from "vitest";

import { ApiClient, type Role } from "../src/api.js";
import { createApp } from "../src/main.js";
import { saveSession } from "../src/session.js";
import { loginToken, startServer, waitFor, type LiveServer } from "./helpers/server.js";

let server: LiveServer;

beforeAll(async () => {
  server = await startServer();
});

afterAll(() => server.stop());

async function boot(role: Role, id: string, password: string, route: string) {
  sessionStorage.clear();
  document.body.innerHTML = '<div id="root"></div>';
  const token = await loginToken(server.baseUrl, role, id, password);
  saveSession({ token, role, principal_id: id, expires_at: "2099-01-01T00:00:00Z" });
  window.location.hash = route;
  createApp(
    document.getElementById("root") as HTMLElement,
    new ApiClient(server.baseUrl, { bearer: token }),
  );
}

describe("student dashboard", () => {
  it("shows the two fixture applications with correct badges", async () => {
    await boot("Student", "S1", "s1-pass", "#/student");
    const table = await waitFor(() =>
      document.querySelector('[data-testid="application-table"]'),
    );
    const rows = table.querySelectorAll("tbody tr");
    expect(rows).toHaveLength(2);
    const r1 = document.querySelector('[data-testid="application-R1"]') as HTMLElement;
    const r5 = document.querySelector('[data-testid="application-R5"]') as HTMLElement;
    expect(r1.textContent).toContain("Responded");
    expect(r1.textContent).toContain("Interview Scheduled");
    expect(r5.textContent).toContain("Submitted");
  });

  it("hides the expired posting from the job list", async () => {
    await boot("Student", "S2", "s2-pass", "#/student");
    const list = await waitFor(() => document.querySelector('[data-testid="job-list"]'));
    expect(list.querySelectorAll("li")).toHaveLength(5);
    expect(list.textContent).not.toContain("J6");
  });
});

describe("company dashboard", () => {
  it("lists postings, received resumes, and presentation statuses", async () => {
    await boot("Company", "CO1", "co1-pass", "#/company");
    const received = await waitFor(() =>
      document.querySelector('[data-testid="received-table"]'),
    );
    expect(received.querySelectorAll("tbody tr")).toHaveLength(4);
    const statuses = document.querySelector(
      '[data-testid="presentation-status-list"]',
    ) as HTMLElement;
    expect(statuses.textContent).toContain("NovaSoft Campus Talk — Approved");
    expect(statuses.textContent).toContain("Internship Openings — Pending");
    expect(
      (document.querySelector('[data-testid="presentation-schedule"]') as HTMLElement).textContent,
    ).toContain("Auditorium A");
  });
});

describe("admin dashboard", () => {
  it("shows one pending company and one pending presentation from the fixture", async () => {
    await boot("Admin", "A1", "a1-pass", "#/admin");
    const pendingCompanies = await waitFor(() =>
      document.querySelector('[data-testid="pending-companies"]'),
    );
    expect(pendingCompanies.querySelectorAll("li")).toHaveLength(1);
    expect(pendingCompanies.textContent).toContain("BlueLeaf Tech");
    const pendingPresentations = document.querySelector(
      '[data-testid="pending-presentations"]',
    ) as HTMLElement;
    expect(pendingPresentations.querySelectorAll("li")).toHaveLength(1);
    expect(pendingPresentations.textContent).toContain("Internship Openings");
  });
});
