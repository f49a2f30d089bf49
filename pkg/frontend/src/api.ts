/**
 * Typed client for the recruitment service JSON API.
 *
 * In the browser the session rides on the HttpOnly cookie the server sets at
 * login; tests construct the client with a bearer token instead.  Every
 * mutation in the UI goes through these methods — there are no
 * client-side-only state transitions.
 */

export type Role = "Student" | "Company" | "Admin";

export interface ErrorEnvelope {
  code: string;
  message: string;
  details?: { field: string; message: string }[];
}

export class ApiError extends Error {
  constructor(public status: number, public envelope: ErrorEnvelope) {
    super(envelope.message);
  }
}

export interface SessionInfo {
  token: string;
  role: Role;
  principal_id: string;
  expires_at: string;
}

export interface JobPosting {
  recruit_id: string;
  company_id: string;
  position_id: string;
  education_id: string;
  linkman_name: string;
  linkman_email: string;
  company_type: string;
  place: string;
  city: string;
  number: number;
  salary: number;
  recruit_type: number;
  experience: string;
  time: string;
  deadline: string;
  detail: string;
  withdrawn: boolean;
}

export interface ResumeApplication {
  resume_id: string;
  recruit_id: string;
  student_id: string;
  student_name: string;
  education_id: string;
  major_id: string;
  experience: string;
  skill: string;
  email: string;
  phone: string;
  accessory: string | null;
  submitted_at: string;
  viewed_at: string | null;
  result: string | null;
}

export interface MyApplicationRow {
  application: ResumeApplication;
  status: "Submitted" | "Viewed" | "Responded";
  posting: {
    recruit_id: string;
    position_id: string;
    company_id: string;
    company_name: string;
    city: string;
    place: string;
    deadline: string;
    withdrawn: boolean;
  };
}

export interface Arrangement {
  arrangement_id: string;
  application_id: string;
  company_id: string;
  start_time: string;
  duration_minutes: number;
  place: string;
  max_participants: number;
  theme: string;
  company_name?: string;
}

export interface ArrangementDetail extends Arrangement {
  company: {
    company_id: string;
    company_name: string;
    industry: string;
    scale: string;
    detail: string;
  };
  apply_count: number;
  has_applied: boolean;
}

export interface PresentationApplication {
  application_id: string;
  company_id: string;
  requested_start: string;
  requested_duration_minutes: number;
  theme: string;
  expected_attendance: number;
  status: "Pending" | "Approved" | "Rejected";
}

export interface PresentationRow {
  application: PresentationApplication;
  arrangement: Arrangement | null;
}

export interface StudentRecord {
  student_id: string;
  name: string;
  sex: string;
  birthday: string;
  phone: string;
  email: string;
  college_id: string;
  major_id: string;
  class_id: string;
  education_id: string;
}

export interface CompanyRecord {
  company_id: string;
  company_name: string;
  industry_id: string;
  phone: string;
  scale: string;
  address: string;
  established: string;
  capital: string;
  detail: string;
  worktime: string;
  email: string;
  approval_status: "Pending" | "Approved" | "Rejected";
}

export interface DictEntry {
  [key: string]: string | number;
}

type Query = Record<string, string | number | boolean | undefined>;

export class ApiClient {
  constructor(
    private baseUrl = "",
    private options: { bearer?: string; fetchFn?: typeof fetch } = {},
  ) {}

  setBearer(token: string | undefined): void {
    this.options.bearer = token;
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    query?: Query,
  ): Promise<T> {
    const url = new URL(this.baseUrl + path, this.baseUrl || "http://localhost");
    for (const [key, value] of Object.entries(query ?? {})) {
      if (value !== undefined) url.searchParams.set(key, String(value));
    }
    const headers: Record<string, string> = {};
    if (this.options.bearer) headers["Authorization"] = `Bearer ${this.options.bearer}`;
    let payload: BodyInit | undefined;
    if (body instanceof FormData) {
      payload = body;
    } else if (body !== undefined) {
      headers["Content-Type"] = "application/json";
      payload = JSON.stringify(body);
    }
    const fetchFn = this.options.fetchFn ?? fetch;
    const target = this.baseUrl ? url.toString() : url.pathname + url.search;
    const response = await fetchFn(target, {
      method,
      headers,
      body: payload,
      credentials: "include",
    });
    if (!response.ok) {
      let envelope: ErrorEnvelope;
      try {
        envelope = (await response.json()) as ErrorEnvelope;
      } catch {
        envelope = { code: "INTERNAL_ERROR", message: response.statusText };
      }
      throw new ApiError(response.status, envelope);
    }
    if (response.headers.get("content-type")?.includes("application/json")) {
      return (await response.json()) as T;
    }
    return (await response.blob()) as unknown as T;
  }

  // -- auth ----------------------------------------------------------------

  login(role: Role, id: string, password: string): Promise<SessionInfo> {
    return this.request("POST", "/api/login", { role, id, password });
  }

  logout(): Promise<{ outcome: string }> {
    return this.request("POST", "/api/logout", {});
  }

  changePassword(old: string, newPassword: string, confirm: string): Promise<{ outcome: string }> {
    return this.request("POST", "/api/password", { old, new: newPassword, confirm });
  }

  // -- dictionaries ----------------------------------------------------------

  listDict(kind: string): Promise<DictEntry[]> {
    return this.request("GET", `/api/dict/${kind}`);
  }

  // -- jobs ---------------------------------------------------------------------

  listJobs(query: Query = {}): Promise<JobPosting[]> {
    return this.request("GET", "/api/jobs", undefined, query);
  }

  getJob(recruitId: string): Promise<JobPosting> {
    return this.request("GET", `/api/jobs/${recruitId}`);
  }

  postJob(draft: Record<string, unknown>): Promise<JobPosting> {
    return this.request("POST", "/api/jobs", draft);
  }

  editJob(recruitId: string, changes: Record<string, unknown>): Promise<JobPosting> {
    return this.request("PATCH", `/api/jobs/${recruitId}`, changes);
  }

  deleteJob(recruitId: string): Promise<{ outcome: string }> {
    return this.request("DELETE", `/api/jobs/${recruitId}`);
  }

  matchCandidates(recruitId: string): Promise<ResumeApplication[]> {
    return this.request("GET", `/api/jobs/${recruitId}/match`);
  }

  // -- resumes --------------------------------------------------------------------

  submitResume(
    recruitId: string,
    fields: { experience: string; skill: string; email?: string; phone?: string },
    accessory?: File,
  ): Promise<ResumeApplication & { status: string }> {
    if (accessory) {
      const form = new FormData();
      form.set("experience", fields.experience);
      form.set("skill", fields.skill);
      if (fields.email) form.set("email", fields.email);
      if (fields.phone) form.set("phone", fields.phone);
      form.set("accessory", accessory);
      return this.request("POST", `/api/jobs/${recruitId}/resumes`, form);
    }
    return this.request("POST", `/api/jobs/${recruitId}/resumes`, fields);
  }

  myApplications(): Promise<MyApplicationRow[]> {
    return this.request("GET", "/api/resumes/mine");
  }

  receivedResumes(recruitId?: string): Promise<ResumeApplication[]> {
    return this.request("GET", "/api/resumes/received", undefined, { recruit_id: recruitId });
  }

  viewResume(resumeId: string): Promise<ResumeApplication> {
    return this.request("GET", `/api/resumes/${resumeId}`);
  }

  respondToResume(resumeId: string, result: string): Promise<ResumeApplication> {
    return this.request("POST", `/api/resumes/${resumeId}/result`, { result });
  }

  accessoryUrl(resumeId: string): string {
    return `${this.baseUrl}/api/resumes/${resumeId}/accessory`;
  }

  // -- presentations ----------------------------------------------------------------

  applyForPresentation(request: Record<string, unknown>): Promise<PresentationApplication> {
    return this.request("POST", "/api/presentations", request);
  }

  myPresentations(): Promise<PresentationRow[]> {
    return this.request("GET", "/api/presentations/mine");
  }

  reviewPresentation(
    applicationId: string,
    decision: "Approve" | "Reject",
    schedule?: Record<string, unknown>,
  ): Promise<{ application: PresentationApplication; arrangement: Arrangement | null }> {
    return this.request("POST", `/api/presentations/${applicationId}/review`, {
      decision,
      schedule,
    });
  }

  listArrangements(): Promise<Arrangement[]> {
    return this.request("GET", "/api/arrangements");
  }

  arrangementDetail(arrangementId: string): Promise<ArrangementDetail> {
    return this.request("GET", `/api/arrangements/${arrangementId}`);
  }

  register(arrangementId: string): Promise<{ id: number }> {
    return this.request("POST", `/api/arrangements/${arrangementId}/register`, {});
  }

  myRegistrations(): Promise<Arrangement[]> {
    return this.request("GET", "/api/arrangements/mine");
  }

  // -- admin ---------------------------------------------------------------------------

  addStudent(draft: Record<string, unknown>): Promise<StudentRecord> {
    return this.request("POST", "/api/students", draft);
  }

  findStudent(studentId: string): Promise<StudentRecord> {
    return this.request("GET", `/api/students/${studentId}`);
  }

  updateStudent(studentId: string, changes: Record<string, unknown>): Promise<StudentRecord> {
    return this.request("PATCH", `/api/students/${studentId}`, changes);
  }

  deleteStudent(studentId: string, confirmed: boolean): Promise<{ outcome: string }> {
    return this.request("DELETE", `/api/students/${studentId}`, undefined, { confirmed });
  }

  registerCompany(payload: Record<string, unknown>): Promise<CompanyRecord> {
    return this.request("POST", "/api/companies", payload);
  }

  reviewCompany(companyId: string, decision: "Approve" | "Reject", note = ""): Promise<CompanyRecord> {
    return this.request("POST", `/api/companies/${companyId}/review`, { decision, note });
  }

  companyProfile(): Promise<CompanyRecord> {
    return this.request("GET", "/api/companies/me");
  }

  updateCompanyProfile(changes: Record<string, unknown>): Promise<CompanyRecord> {
    return this.request("PATCH", "/api/companies/me", changes);
  }

  listCompanies(status?: string): Promise<CompanyRecord[]> {
    return this.request("GET", "/api/companies", undefined, { status });
  }

  listPresentationApplications(status?: string): Promise<PresentationApplication[]> {
    return this.request("GET", "/api/presentations", undefined, { status });
  }

  // -- search ------------------------------------------------------------------------------

  search(type: "Recruit" | "Application", keyword: string, city?: string): Promise<{
    type: string;
    items: (JobPosting | Arrangement)[];
  }> {
    return this.request("GET", "/api/search", undefined, { type, keyword, city });
  }
}
