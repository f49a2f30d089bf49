/**
 * Company dashboard: posting lifecycle, received resumes with the
 * view/download/respond loop, presentation requests with status feedback,
 * and profile maintenance.
 */

import type { JobPosting, PresentationRow, ResumeApplication } from "../api.js";
import type { AppContext } from "../context.js";
import { clear, h } from "../dom.js";
import { buildForm, confirmGate } from "../forms.js";
import { showInfo } from "../toast.js";
import { RESULT_LABELS } from "./student.js";

export async function renderCompany(root: HTMLElement, ctx: AppContext): Promise<void> {
  const [postings, received, presentations, profile, educationLevels] = await Promise.all([
    ctx.api.listJobs({ mine: true }),
    ctx.api.receivedResumes(),
    ctx.api.myPresentations(),
    ctx.api.companyProfile(),
    ctx.api.listDict("education_level"),
  ]);
  const educationOptions = educationLevels.map((e) => ({
    value: String(e.education_id),
    label: String(e.education_name),
  }));
  root.append(
    h("div", { class: "columns" },
      renderPostings(ctx, postings, educationOptions),
      renderReceived(ctx, received),
      renderPresentations(ctx, presentations),
      h("section", { class: "card" },
        h("h2", {}, `Profile — ${profile.company_name}`),
        buildForm({
          testid: "profile-form",
          submitLabel: "Save profile",
          fields: [
            { name: "phone", label: "Phone", value: profile.phone },
            { name: "scale", label: "Scale", value: profile.scale },
            { name: "address", label: "Address", value: profile.address },
            { name: "worktime", label: "Work hours", value: profile.worktime },
            { name: "detail", label: "About", type: "textarea", value: profile.detail },
          ],
          async onSubmit(handle) {
            await ctx.api.updateCompanyProfile(handle.values());
            showInfo("Profile saved");
          },
        }).element,
      ),
    ),
  );
}

function postingFields(edu: { value: string; label: string }[], posting?: JobPosting) {
  return [
    { name: "position_id", label: "Position ID", value: posting?.position_id ?? "" },
    { name: "education_id", label: "Education requirement", type: "select" as const,
      value: posting?.education_id ?? edu[0]?.value, options: edu },
    { name: "linkman_name", label: "Contact name", value: posting?.linkman_name ?? "" },
    { name: "linkman_email", label: "Contact email", value: posting?.linkman_email ?? "" },
    { name: "company_type", label: "Company type", value: posting?.company_type ?? "Private" },
    { name: "place", label: "Place", value: posting?.place ?? "" },
    { name: "city", label: "City", value: posting?.city ?? "" },
    { name: "number", label: "Headcount", type: "number" as const, value: String(posting?.number ?? 1) },
    { name: "salary", label: "Salary", type: "number" as const, value: String(posting?.salary ?? 8000) },
    { name: "recruit_type", label: "Type", type: "select" as const,
      value: String(posting?.recruit_type ?? 0),
      options: [
        { value: "0", label: "Full-time" },
        { value: "1", label: "Internship" },
      ] },
    { name: "experience", label: "Experience", value: posting?.experience ?? "none" },
    { name: "time", label: "Posted on", type: "date" as const,
      value: posting?.time || new Date().toISOString().slice(0, 10) },
    { name: "deadline", label: "Deadline (ISO)", value: posting?.deadline ?? "2099-01-01T00:00:00Z" },
    { name: "detail", label: "Details", type: "textarea" as const, value: posting?.detail ?? "" },
  ];
}

function draftFromValues(values: Record<string, string>) {
  return {
    ...values,
    number: Number(values.number),
    salary: Number(values.salary),
    recruit_type: Number(values.recruit_type),
  };
}

function renderPostings(
  ctx: AppContext,
  postings: JobPosting[],
  edu: { value: string; label: string }[],
): HTMLElement {
  const editorBox = h("div", { class: "detail-box", dataset: { testid: "posting-editor" } });

  const openEditor = (posting?: JobPosting) => {
    clear(editorBox);
    const form = buildForm({
      testid: posting ? "posting-edit-form" : "posting-form",
      submitLabel: posting ? "Save changes" : "Publish posting",
      fields: postingFields(edu, posting),
      async onSubmit(handle) {
        const draft = draftFromValues(handle.values());
        if (posting) {
          await ctx.api.editJob(posting.recruit_id, draft);
          showInfo(`Posting ${posting.recruit_id} updated`);
        } else {
          const created = await ctx.api.postJob(draft);
          showInfo(`Posting ${created.recruit_id} published`);
        }
        await ctx.refresh();
      },
      onCancel: () => clear(editorBox),
    });
    editorBox.append(form.element);
  };

  const rows = postings.map((posting) =>
    h("li", { dataset: { testid: `posting-${posting.recruit_id}` } },
      h("strong", {}, `${posting.recruit_id} ${posting.position_id}`),
      ` ${posting.city} · deadline ${posting.deadline} `,
      h("button", {
        type: "button",
        dataset: { testid: `posting-edit-${posting.recruit_id}` },
        onClick: () => openEditor(posting),
      }, "Edit"),
      " ",
      confirmGate({
        testid: `posting-delete-${posting.recruit_id}`,
        prompt: "Withdraw this posting?",
        actionLabel: "Delete",
        onConfirm: async () => {
          await ctx.api.deleteJob(posting.recruit_id);
          showInfo(`Posting ${posting.recruit_id} withdrawn`);
          await ctx.refresh();
        },
      }),
      " ",
      h("button", {
        type: "button",
        dataset: { testid: `posting-match-${posting.recruit_id}` },
        onClick: async () => {
          const matches = await ctx.api.matchCandidates(posting.recruit_id);
          clear(editorBox);
          editorBox.append(
            h("h3", {}, `Matched candidates for ${posting.recruit_id}`),
            h("ol", { dataset: { testid: "match-list" } },
              ...matches.map((m) =>
                h("li", {}, `${m.student_name} (${m.education_id}, ${m.major_id})`)),
            ),
          );
        },
      }, "Match"),
    ),
  );

  return h("section", { class: "card" },
    h("h2", {}, `My Postings (${postings.length})`),
    h("button", { type: "button", dataset: { testid: "posting-new" }, onClick: () => openEditor() },
      "New posting"),
    h("ul", { class: "item-list" }, ...rows),
    editorBox,
  );
}

function renderReceived(ctx: AppContext, received: ResumeApplication[]): HTMLElement {
  const detailBox = h("div", { class: "detail-box", dataset: { testid: "resume-detail" } });

  const showDetail = async (resumeId: string) => {
    const app = await ctx.api.viewResume(resumeId); // marks Viewed server-side
    clear(detailBox);
    const respond = async (result: string) => {
      await ctx.api.respondToResume(resumeId, result);
      showInfo(`Marked ${RESULT_LABELS[result]}`);
      await ctx.refresh();
    };
    detailBox.append(
      h("h3", {}, `${app.student_name} — ${app.resume_id}`),
      h("p", {}, `Education ${app.education_id} · Major ${app.major_id}`),
      h("p", {}, `Experience: ${app.experience}`),
      h("p", {}, `Skills: ${app.skill}`),
      h("p", {}, `Contact: ${app.email} / ${app.phone}`),
      app.accessory
        ? h("a", { href: ctx.api.accessoryUrl(resumeId), dataset: { testid: "download-link" } },
            "Download attachment")
        : h("em", {}, "No attachment"),
      app.result
        ? h("p", {}, `Result already sent: ${RESULT_LABELS[app.result]}`)
        : h("div", { class: "respond-buttons" },
            ...Object.entries(RESULT_LABELS).map(([value, label]) =>
              h("button", {
                type: "button",
                dataset: { testid: `respond-${value}` },
                onClick: () => respond(value),
              }, label),
            ),
          ),
    );
  };

  return h("section", { class: "card" },
    h("h2", {}, `Received Resumes (${received.length})`),
    h("table", { class: "data-table", dataset: { testid: "received-table" } },
      h("thead", {}, h("tr", {},
        h("th", {}, "Applicant"), h("th", {}, "Posting"), h("th", {}, "State"), h("th", {}, ""))),
      h("tbody", {},
        ...received.map((app) =>
          h("tr", {},
            h("td", {}, app.student_name),
            h("td", {}, app.recruit_id),
            h("td", {}, app.result ? RESULT_LABELS[app.result] : app.viewed_at ? "Viewed" : "New"),
            h("td", {}, h("button", {
              type: "button",
              dataset: { testid: `resume-open-${app.resume_id}` },
              onClick: () => showDetail(app.resume_id),
            }, "Open")),
          ),
        ),
      ),
    ),
    detailBox,
  );
}

function renderPresentations(ctx: AppContext, rows: PresentationRow[]): HTMLElement {
  const form = buildForm({
    testid: "presentation-form",
    submitLabel: "Request presentation",
    fields: [
      { name: "requested_start", label: "Requested start (ISO)", value: "2099-09-01T10:00:00Z" },
      { name: "requested_duration_minutes", label: "Duration (min)", type: "number", value: "60" },
      { name: "theme", label: "Theme" },
      { name: "expected_attendance", label: "Expected attendance", type: "number", value: "50" },
    ],
    async onSubmit(handle) {
      const values = handle.values();
      await ctx.api.applyForPresentation({
        requested_start: values.requested_start,
        requested_duration_minutes: Number(values.requested_duration_minutes),
        theme: values.theme,
        expected_attendance: Number(values.expected_attendance),
      });
      showInfo("Presentation requested");
      await ctx.refresh();
    },
  });
  return h("section", { class: "card" },
    h("h2", {}, `Presentations (${rows.length})`),
    h("ul", { class: "item-list", dataset: { testid: "presentation-status-list" } },
      ...rows.map((row) =>
        h("li", { dataset: { testid: `presentation-${row.application.application_id}` } },
          h("strong", {}, row.application.theme),
          ` — ${row.application.status}`,
          row.arrangement
            ? h("span", { dataset: { testid: "presentation-schedule" } },
                ` · scheduled ${row.arrangement.start_time} @ ${row.arrangement.place}`)
            : null,
        ),
      ),
    ),
    form.element,
  );
}
