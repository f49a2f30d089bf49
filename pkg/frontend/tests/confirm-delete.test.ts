/** Two-step delete confirmation: no request leaves before the dialog's
 * explicit confirm, and the confirmed request carries confirmed=true. */

import { beforeAll, afterAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { createApp } from "../src/main.js";
import { saveSession } from "../src/session.js";
import {
  countingFetch,
  loginToken,
  startServer,
  waitFor,
  type LiveServer,
} from "./helpers/server.js";

describe("admin two-step student delete", () => {
  let server: LiveServer;

  beforeAll(async () => {
    server = await startServer();
  });

  afterAll(() => server.stop());

  it("only deletes after the confirmation dialog", async () => {
    sessionStorage.clear();
    document.body.innerHTML = '<div id="root"></div>';
    const token = await loginToken(server.baseUrl, "Admin", "A1", "a1-pass");
    saveSession({
      token,
      role: "Admin",
      principal_id: "A1",
      expires_at: "2099-01-01T00:00:00Z",
    });
    const counter = countingFetch();
    const api = new ApiClient(server.baseUrl, { bearer: token, fetchFn: counter.fn });
    window.location.hash = "#/admin";
    createApp(document.getElementById("root") as HTMLElement, api);
    await waitFor(() => document.querySelector('[data-testid="student-find-form"]'));

    // look up S8 (no dependent rows in the fixture)
    const findForm = document.querySelector(
      '[data-testid="student-find-form"]',
    ) as HTMLFormElement;
    (findForm.querySelector('input[name="student_id"]') as HTMLInputElement).value = "S8";
    findForm.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    await waitFor(() => document.querySelector('[data-testid="student-heading"]'));

    const deletesBefore = counter.calls.filter((c) => c.method === "DELETE").length;
    expect(deletesBefore).toBe(0);

    // step 1: the delete button only reveals the dialog
    const dialog = document.querySelector('[data-testid="student-delete-dialog"]') as HTMLElement;
    expect(dialog.hidden).toBe(true);
    (document.querySelector('[data-testid="student-delete"]') as HTMLElement).click();
    expect(dialog.hidden).toBe(false);
    expect(counter.calls.filter((c) => c.method === "DELETE")).toHaveLength(0);

    // cancel closes the dialog without any request
    (document.querySelector('[data-testid="student-delete-cancel"]') as HTMLElement).click();
    expect(dialog.hidden).toBe(true);
    expect(counter.calls.filter((c) => c.method === "DELETE")).toHaveLength(0);
    const check = new ApiClient(server.baseUrl, { bearer: token });
    expect((await check.findStudent("S8")).student_id).toBe("S8");

    // step 2: confirm issues exactly one DELETE with confirmed=true
    (document.querySelector('[data-testid="student-delete"]') as HTMLElement).click();
    (document.querySelector('[data-testid="student-delete-confirm"]') as HTMLElement).click();
    await waitFor(() => counter.calls.some((c) => c.method === "DELETE"));
    const deletes = counter.calls.filter((c) => c.method === "DELETE");
    expect(deletes).toHaveLength(1);
    expect(deletes[0].url).toContain("/api/students/S8");
    expect(deletes[0].url).toContain("confirmed=true");
    await waitFor(async () => {
      try {
        await check.findStudent("S8");
        return null;
      } catch {
        return true;
      }
    });
  });
});
