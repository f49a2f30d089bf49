/**
 * Student dashboard: browse postings and apply, track application statuses,
 * browse presentations and register (with the guarded button states).
 */

import { ApiError, type Arrangement, type JobPosting, type MyApplicationRow } from "../api.js";
import type { AppContext } from "../context.js";
import { clear, h } from "../dom.js";
import { buildForm } from "../forms.js";
import { FIELD_LIMITS, attachCounter, checkLimit } from "../limits.js";
import { registrationButtonState } from "../registration.js";
import { showError, showInfo } from "../toast.js";

export const RESULT_LABELS: Record<string, string> = {
  Reviewed: "Reviewed",
  InterviewScheduled: "Interview Scheduled",
  NotSelected: "Not Selected",
};

export async function renderStudent(root: HTMLElement, ctx: AppContext): Promise<void> {
  const [jobs, applications, arrangements] = await Promise.all([
    ctx.api.listJobs(),
    ctx.api.myApplications(),
    ctx.api.listArrangements(),
  ]);
  root.append(
    h("div", { class: "columns" },
      renderJobs(ctx, jobs, applications),
      renderApplications(applications),
      renderPresentations(ctx, arrangements),
    ),
  );
}

function renderJobs(
  ctx: AppContext,
  jobs: JobPosting[],
  applications: MyApplicationRow[],
): HTMLElement {
  const appliedTo = new Set(applications.map((row) => row.application.recruit_id));
  const detailBox = h("div", { class: "detail-box", dataset: { testid: "job-detail" } });
  const list = h(
    "ul",
    { class: "item-list", dataset: { testid: "job-list" } },
    ...jobs.map((job) =>
      h("li", {},
        h("strong", {}, `${job.position_id} · ${job.city}`),
        ` ${job.place} — ¥${job.salary} · ${job.recruit_type === 0 ? "full-time" : "internship"} `,
        h("button", {
          type: "button",
          dataset: { testid: `job-view-${job.recruit_id}` },
          onClick: () => showJobDetail(ctx, detailBox, job, appliedTo.has(job.recruit_id)),
        }, "View"),
      ),
    ),
  );
  return h("section", { class: "card" },
    h("h2", {}, `Job Postings (${jobs.length})`), list, detailBox);
}

function showJobDetail(ctx: AppContext, box: HTMLElement, job: JobPosting, alreadyApplied: boolean): void {
  clear(box);
  box.append(
    h("h3", {}, `${job.position_id} — ${job.city}`),
    h("p", {}, job.detail),
    h("p", {}, `Place: ${job.place} · Headcount: ${job.number} · Deadline: ${job.deadline}`),
  );
  if (alreadyApplied) {
    box.append(h("p", { dataset: { testid: "already-applied-note" } }, "You already applied to this posting."));
    return;
  }
  const form = buildForm({
    testid: "resume-form",
    submitLabel: "Submit resume",
    fields: [
      { name: "experience", label: "Experience", type: "textarea" },
      { name: "skill", label: "Skills", type: "textarea" },
      { name: "accessory", label: "Attachment (.pdf/.doc/.docx)", type: "file" },
    ],
    validate(handle) {
      const values = handle.values();
      for (const field of ["experience", "skill"] as const) {
        if (checkLimit(values[field], FIELD_LIMITS[field]).over) {
          return `${field} exceeds ${FIELD_LIMITS[field]} characters`;
        }
      }
      return null;
    },
    async onSubmit(handle) {
      const values = handle.values();
      const created = await ctx.api.submitResume(
        job.recruit_id,
        { experience: values.experience, skill: values.skill },
        handle.file("accessory"),
      );
      showInfo(`Application ${created.resume_id} submitted`);
      await ctx.refresh();
    },
    onCancel: () => clear(box),
  });
  box.append(form.element);
  for (const name of ["experience", "skill"]) {
    const textarea = form.element.querySelector(`textarea[name="${name}"]`);
    if (textarea) attachCounter(textarea as HTMLTextAreaElement, FIELD_LIMITS[name]);
  }
}

function renderApplications(rows: MyApplicationRow[]): HTMLElement {
  return h("section", { class: "card" },
    h("h2", {}, `My Applications (${rows.length})`),
    h("table", { class: "data-table", dataset: { testid: "application-table" } },
      h("thead", {}, h("tr", {},
        h("th", {}, "Posting"), h("th", {}, "Company"), h("th", {}, "Status"), h("th", {}, "Result"))),
      h("tbody", {},
        ...rows.map((row) =>
          h("tr", { dataset: { testid: `application-${row.application.resume_id}` } },
            h("td", {},
              `${row.posting.position_id} (${row.posting.recruit_id})`,
              row.posting.withdrawn ? h("em", {}, " — posting withdrawn") : null),
            h("td", {}, row.posting.company_name),
            h("td", {}, h("span", { class: `badge badge-${row.status.toLowerCase()}` }, row.status)),
            h("td", {}, row.application.result ? RESULT_LABELS[row.application.result] : "—"),
          ),
        ),
      ),
    ),
  );
}

function renderPresentations(ctx: AppContext, arrangements: Arrangement[]): HTMLElement {
  const detailBox = h("div", { class: "detail-box", dataset: { testid: "arrangement-detail" } });
  const list = h(
    "ul",
    { class: "item-list", dataset: { testid: "arrangement-list" } },
    ...arrangements.map((a) =>
      h("li", {},
        h("strong", {}, a.company_name ?? a.company_id),
        ` — ${a.theme} · ${a.start_time} · ${a.place} `,
        h("button", {
          type: "button",
          dataset: { testid: `arrangement-view-${a.arrangement_id}` },
          onClick: () => showArrangementDetail(ctx, detailBox, a.arrangement_id),
        }, "View"),
      ),
    ),
  );
  return h("section", { class: "card" },
    h("h2", {}, `Presentations (${arrangements.length})`), list, detailBox);
}

export async function showArrangementDetail(
  ctx: AppContext,
  box: HTMLElement,
  arrangementId: string,
): Promise<void> {
  const detail = await ctx.api.arrangementDetail(arrangementId);
  clear(box);
  const countLine = h("p", { dataset: { testid: "apply-count" } },
    `Registered: ${detail.apply_count} / ${detail.max_participants}`);
  const state = registrationButtonState({
    hasApplied: detail.has_applied,
    applyCount: detail.apply_count,
    maxParticipants: detail.max_participants,
    startTime: detail.start_time,
  });
  const outcome = h("p", { dataset: { testid: "register-outcome" } });
  const button = h("button", {
    type: "button",
    disabled: state.disabled,
    dataset: { testid: "register-button", reason: state.reason },
    onClick: async () => {
      button.disabled = true;
      button.textContent = "Registering…";
      try {
        await ctx.api.register(arrangementId);
        outcome.textContent = "Registered!";
        // live update, no reload: re-query the detail and re-render
        await showArrangementDetail(ctx, box, arrangementId);
      } catch (error) {
        if (error instanceof ApiError && error.envelope.code === "ALREADY_APPLIED") {
          outcome.textContent = "You are already registered.";
          await showArrangementDetail(ctx, box, arrangementId);
        } else if (error instanceof ApiError && error.envelope.code === "FULL") {
          outcome.textContent = "The presentation is full.";
          await showArrangementDetail(ctx, box, arrangementId);
        } else {
          showError(error);
          button.disabled = false;
          button.textContent = state.label;
        }
      }
    },
  }, state.label);
  box.append(
    h("h3", {}, detail.theme),
    h("p", {},
      `${detail.company.company_name} (${detail.company.industry}, ${detail.company.scale})`),
    h("p", {}, detail.company.detail),
    h("p", {}, `${detail.start_time} · ${detail.duration_minutes} min · ${detail.place}`),
    countLine,
    button,
    outcome,
  );
}
