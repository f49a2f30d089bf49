/**
 * Administrator dashboard: student maintenance (add / find / modify /
 * two-step delete), pending company reviews, pending presentation reviews.
 */

import type { StudentRecord } from "../api.js";
import type { AppContext } from "../context.js";
import { clear, h } from "../dom.js";
import { buildForm, confirmGate } from "../forms.js";
import { showInfo } from "../toast.js";

export async function renderAdmin(root: HTMLElement, ctx: AppContext): Promise<void> {
  const [pendingCompanies, pendingPresentations, colleges, majors, classes, educationLevels] =
    await Promise.all([
      ctx.api.listCompanies("Pending"),
      ctx.api.listPresentationApplications("Pending"),
      ctx.api.listDict("college"),
      ctx.api.listDict("major"),
      ctx.api.listDict("class_group"),
      ctx.api.listDict("education_level"),
    ]);
  const dict = {
    colleges: colleges.map((c) => ({ value: String(c.college_id), label: String(c.college_name) })),
    majors: majors.map((m) => ({ value: String(m.major_id), label: String(m.major_name) })),
    classes: classes.map((k) => ({ value: String(k.class_id), label: String(k.class_name) })),
    education: educationLevels.map((e) => ({
      value: String(e.education_id),
      label: String(e.education_name),
    })),
  };
  root.append(
    h("div", { class: "columns" },
      renderStudents(ctx, dict),
      renderCompanyReviews(ctx, pendingCompanies),
      renderPresentationReviews(ctx, pendingPresentations),
    ),
  );
}

function studentFields(dict: {
  colleges: { value: string; label: string }[];
  majors: { value: string; label: string }[];
  classes: { value: string; label: string }[];
  education: { value: string; label: string }[];
}, student?: StudentRecord) {
  return [
    { name: "student_id", label: "Student ID", value: student?.student_id ?? "" },
    { name: "name", label: "Name", value: student?.name ?? "" },
    { name: "sex", label: "Sex", value: student?.sex ?? "" },
    { name: "birthday", label: "Birthday", type: "date" as const, value: student?.birthday ?? "2004-01-01" },
    { name: "phone", label: "Phone", value: student?.phone ?? "" },
    { name: "email", label: "Email", value: student?.email ?? "" },
    { name: "college_id", label: "College", type: "select" as const,
      value: student?.college_id ?? dict.colleges[0]?.value, options: dict.colleges },
    { name: "major_id", label: "Major", type: "select" as const,
      value: student?.major_id ?? dict.majors[0]?.value, options: dict.majors },
    { name: "class_id", label: "Class", type: "select" as const,
      value: student?.class_id ?? dict.classes[0]?.value, options: dict.classes },
    { name: "education_id", label: "Education", type: "select" as const,
      value: student?.education_id ?? dict.education[0]?.value, options: dict.education },
  ];
}

function renderStudents(ctx: AppContext, dict: Parameters<typeof studentFields>[0]): HTMLElement {
  const resultBox = h("div", { class: "detail-box", dataset: { testid: "student-result" } });

  const showStudent = (student: StudentRecord) => {
    clear(resultBox);
    const editForm = buildForm({
      testid: "student-edit-form",
      submitLabel: "Save changes",
      fields: studentFields(dict, student).filter((f) => f.name !== "student_id"),
      async onSubmit(handle) {
        await ctx.api.updateStudent(student.student_id, handle.values());
        showInfo(`Student ${student.student_id} updated`);
      },
      onCancel: () => clear(resultBox),
    });
    resultBox.append(
      h("h3", { dataset: { testid: "student-heading" } }, `${student.student_id} — ${student.name}`),
      confirmGate({
        testid: "student-delete",
        prompt: `Really delete ${student.student_id}?`,
        actionLabel: "Delete student",
        onConfirm: async () => {
          await ctx.api.deleteStudent(student.student_id, true);
          showInfo(`Student ${student.student_id} deleted`);
          clear(resultBox);
        },
      }),
      editForm.element,
    );
  };

  const findForm = buildForm({
    testid: "student-find-form",
    submitLabel: "Find by ID",
    fields: [{ name: "student_id", label: "Student ID" }],
    async onSubmit(handle) {
      showStudent(await ctx.api.findStudent(handle.values().student_id));
    },
  });

  const addForm = buildForm({
    testid: "student-add-form",
    submitLabel: "Add student",
    fields: [
      ...studentFields(dict),
      { name: "initial_password", label: "Initial password", type: "password" as const },
    ],
    async onSubmit(handle) {
      const created = await ctx.api.addStudent(handle.values());
      showInfo(`Student ${created.student_id} added`);
      showStudent(created);
    },
  });

  return h("section", { class: "card" },
    h("h2", {}, "Student Management"),
    findForm.element,
    resultBox,
    h("h3", {}, "Add student"),
    addForm.element,
  );
}

function renderCompanyReviews(
  ctx: AppContext,
  pending: { company_id: string; company_name: string; industry_id: string }[],
): HTMLElement {
  const decide = async (companyId: string, decision: "Approve" | "Reject") => {
    await ctx.api.reviewCompany(companyId, decision);
    showInfo(`${companyId} ${decision.toLowerCase()}d`);
    await ctx.refresh();
  };
  return h("section", { class: "card" },
    h("h2", {}, `Pending Company Reviews (${pending.length})`),
    h("ul", { class: "item-list", dataset: { testid: "pending-companies" } },
      ...pending.map((company) =>
        h("li", { dataset: { testid: `pending-company-${company.company_id}` } },
          h("strong", {}, company.company_name),
          ` (${company.company_id}) `,
          h("button", {
            type: "button",
            dataset: { testid: `company-approve-${company.company_id}` },
            onClick: () => decide(company.company_id, "Approve"),
          }, "Approve"),
          " ",
          h("button", {
            type: "button",
            dataset: { testid: `company-reject-${company.company_id}` },
            onClick: () => decide(company.company_id, "Reject"),
          }, "Reject"),
        ),
      ),
    ),
  );
}

function renderPresentationReviews(
  ctx: AppContext,
  pending: { application_id: string; company_id: string; theme: string; requested_start: string }[],
): HTMLElement {
  const reviewBox = h("div", { class: "detail-box", dataset: { testid: "presentation-review" } });

  const openApproval = (applicationId: string, requestedStart: string, theme: string) => {
    clear(reviewBox);
    const form = buildForm({
      testid: "schedule-form",
      submitLabel: "Approve with schedule",
      fields: [
        { name: "start_time", label: "Start (ISO)", value: requestedStart },
        { name: "duration_minutes", label: "Duration (min)", type: "number", value: "60" },
        { name: "place", label: "Place" },
        { name: "max_participants", label: "Capacity", type: "number", value: "100" },
        { name: "theme", label: "Theme", value: theme },
      ],
      async onSubmit(handle) {
        const values = handle.values();
        await ctx.api.reviewPresentation(applicationId, "Approve", {
          start_time: values.start_time,
          duration_minutes: Number(values.duration_minutes),
          place: values.place,
          max_participants: Number(values.max_participants),
          theme: values.theme,
        });
        showInfo(`Presentation ${applicationId} approved`);
        await ctx.refresh();
      },
      onCancel: () => clear(reviewBox),
    });
    reviewBox.append(h("h3", {}, `Schedule ${applicationId}`), form.element);
  };

  return h("section", { class: "card" },
    h("h2", {}, `Pending Presentations (${pending.length})`),
    h("ul", { class: "item-list", dataset: { testid: "pending-presentations" } },
      ...pending.map((app) =>
        h("li", { dataset: { testid: `pending-presentation-${app.application_id}` } },
          h("strong", {}, app.theme),
          ` ${app.company_id} · wants ${app.requested_start} `,
          h("button", {
            type: "button",
            dataset: { testid: `presentation-approve-${app.application_id}` },
            onClick: () => openApproval(app.application_id, app.requested_start, app.theme),
          }, "Approve…"),
          " ",
          h("button", {
            type: "button",
            dataset: { testid: `presentation-reject-${app.application_id}` },
            onClick: async () => {
              await ctx.api.reviewPresentation(app.application_id, "Reject");
              showInfo(`Presentation ${app.application_id} rejected`);
              await ctx.refresh();
            },
          }, "Reject"),
        ),
      ),
    ),
    reviewBox,
  );
}
