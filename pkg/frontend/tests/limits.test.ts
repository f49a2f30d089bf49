/** The 400-character client-side limit on experience/skill. */

import { beforeAll, afterAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { checkLimit } from "../src/limits.js";
import { createApp } from "../src/main.js";
import { saveSession } from "../src/session.js";
import {
  countingFetch,
  loginToken,
  startServer,
  waitFor,
  type LiveServer,
} from "./helpers/server.js";

describe("limit checks", () => {
  it("flags 401 characters and accepts 400", () => {
    expect(checkLimit("x".repeat(400), 400).over).toBe(false);
    expect(checkLimit("x".repeat(401), 400)).toMatchObject({ over: true, remaining: -1 });
  });
});

describe("resume form against a live service", () => {
  let server: LiveServer;

  beforeAll(async () => {
    server = await startServer();
  });

  afterAll(() => server.stop());

  it("blocks a 401-char skill client-side and submits at 400", async () => {
    sessionStorage.clear();
    document.body.innerHTML = '<div id="root"></div>';
    const token = await loginToken(server.baseUrl, "Student", "S6", "s6-pass");
    saveSession({
      token,
      role: "Student",
      principal_id: "S6",
      expires_at: "2099-01-01T00:00:00Z",
    });
    const counter = countingFetch();
    const api = new ApiClient(server.baseUrl, { bearer: token, fetchFn: counter.fn });
    window.location.hash = "#/student";
    createApp(document.getElementById("root") as HTMLElement, api);
    await waitFor(() => document.querySelector('[data-testid="job-list"]'));

    // open the apply form on a posting S6 has not applied to
    (document.querySelector('[data-testid="job-view-J5"]') as HTMLElement).click();
    const form = (await waitFor(
      () => document.querySelector('[data-testid="resume-form"]'),
    )) as HTMLFormElement;
    const skill = form.querySelector('textarea[name="skill"]') as HTMLTextAreaElement;

    // 401 characters: live counter flips to over-limit, submit sends nothing
    skill.value = "s".repeat(401);
    skill.dispatchEvent(new Event("input", { bubbles: true }));
    const skillCounter = document.querySelector('[data-testid="counter-skill"]') as HTMLElement;
    expect(skillCounter.textContent).toBe("401 / 400");
    expect(skillCounter.classList.contains("over-limit")).toBe(true);

    const postsBefore = counter.calls.filter((c) => c.method === "POST").length;
    form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    await new Promise((r) => setTimeout(r, 120));
    expect(counter.calls.filter((c) => c.method === "POST")).toHaveLength(postsBefore);
    const error = document.querySelector('[data-testid="resume-form-error"]') as HTMLElement;
    expect(error.textContent).toContain("skill exceeds 400");

    // trimmed to 400: the submission goes through and the server accepts it
    skill.value = "s".repeat(400);
    skill.dispatchEvent(new Event("input", { bubbles: true }));
    form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    await waitFor(() =>
      counter.calls.some((c) => c.method === "POST" && c.url.includes("/api/jobs/J5/resumes")),
    );
    const check = new ApiClient(server.baseUrl, { bearer: token });
    const created = await waitFor(async () => {
      const rows = await check.myApplications();
      return rows.find((row) => row.application.recruit_id === "J5") ?? null;
    });
    expect(created.application.skill).toHaveLength(400);
    expect(created.status).toBe("Submitted");
  });
});
