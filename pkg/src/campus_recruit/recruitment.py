"""Job-posting lifecycle, resume submission and tracking, employer feedback,
and the education/major candidate ranking.

Status is never stored: it derives from viewed_at/result
(Submitted -> Viewed -> Responded) and only ever moves forward.  Application
rows snapshot the student's name/education/major/contact at submission time.
Deleting a posting leaves a tombstone (withdrawn flag) so existing
applications keep resolving.
"""

from __future__ import annotations

from typing import Any, Callable, Mapping, Sequence

from . import store as storage
from .attachments import AttachmentStore
from .auth import AuthService, now_epoch
from .errors import (
    AlreadyResponded,
    DuplicateKey,
    Expired,
    NoAccessory,
    NotFound,
    NotOwner,
    NotViewed,
    ValidationError,
)
from .models import (
    FeedbackResult,
    JobPosting,
    Notification,
    ResumeApplication,
    Role,
    parse_timestamp,
)
from .store import Store

_POSTING_DRAFT_FIELDS = frozenset(
    {
        "position_id",
        "education_id",
        "linkman_name",
        "linkman_email",
        "company_type",
        "place",
        "city",
        "number",
        "salary",
        "recruit_type",
        "experience",
        "time",
        "deadline",
        "detail",
    }
)


def visible_postings(
    store: Store,
    now: int,
    city: str | None = None,
    education_id: str | None = None,
    recruit_type: int | None = None,
) -> list[JobPosting]:
    """Student-facing listing: unexpired, not withdrawn, newest first
    (posting time text descending, then recruit_id)."""
    filters: dict[str, Any] = {"withdrawn": False}
    if city is not None:
        filters["city"] = city
    if education_id is not None:
        filters["education_id"] = education_id
    if recruit_type is not None:
        filters["recruit_type"] = recruit_type
    postings = [p for p in store.query("job_posting", filters) if p.deadline >= now]
    postings.sort(key=lambda p: p.recruit_id)
    postings.sort(key=lambda p: p.time, reverse=True)
    return postings


def rank_candidates(
    applications: Sequence[ResumeApplication],
    ranks: Mapping[str, int],
    required_rank: int,
    implied_major_id: str | None = None,
) -> list[ResumeApplication]:
    """Filter to education rank >= required, then order: matching major
    first, higher education rank next, earlier submission breaks ties."""
    qualified = [a for a in applications if ranks.get(a.education_id, -1) >= required_rank]
    qualified.sort(
        key=lambda a: (
            0 if implied_major_id is not None and a.major_id == implied_major_id else 1,
            -ranks[a.education_id],
            a.submitted_at,
            a.resume_id,
        )
    )
    return qualified


class RecruitmentService:
    def __init__(
        self,
        store: Store,
        auth: AuthService,
        attachments: AttachmentStore,
        clock: Callable[[], int] = now_epoch,
    ):
        self.store = store
        self.auth = auth
        self.attachments = attachments
        self._clock = clock

    # -- postings ------------------------------------------------------------

    def post_job(self, token: str | None, draft: Mapping[str, Any]) -> JobPosting:
        principal = self.auth.authorize(token, (Role.COMPANY,))
        data = dict(draft)
        unknown = set(data) - _POSTING_DRAFT_FIELDS
        if unknown:
            raise ValidationError(f"unknown posting fields: {sorted(unknown)}")
        if "deadline" not in data:
            raise ValidationError("deadline is required")
        data["deadline"] = parse_timestamp(data["deadline"])
        if data["deadline"] <= self._clock():
            raise ValidationError("deadline must be in the future")
        data["recruit_id"] = None
        data["company_id"] = principal.principal_id
        posting = storage.record_to_entity("job_posting", data)
        with self.store.transaction() as tx:
            return tx.save(posting)

    def _owned_posting(self, principal, recruit_id: str) -> JobPosting:
        posting = self.store.find_by_id("job_posting", recruit_id)
        if posting is None:
            raise NotFound(f"posting {recruit_id!r} does not exist")
        if posting.company_id != principal.principal_id:
            raise NotOwner("posting belongs to another company")
        return posting

    def edit_job(
        self, token: str | None, recruit_id: str, changes: Mapping[str, Any]
    ) -> JobPosting:
        principal = self.auth.authorize(token, (Role.COMPANY,))
        posting = self._owned_posting(principal, recruit_id)
        if posting.withdrawn:
            raise NotFound(f"posting {recruit_id!r} does not exist")
        unknown = set(changes) - _POSTING_DRAFT_FIELDS
        if unknown:
            raise ValidationError(f"fields not updatable: {sorted(unknown)}")
        data = dict(changes)
        if "deadline" in data:
            data["deadline"] = parse_timestamp(data["deadline"])
            if data["deadline"] <= self._clock():
                raise ValidationError("deadline must be in the future")
        merged = storage.entity_to_record(posting)
        merged.update(data)
        storage.record_to_entity("job_posting", merged)  # validate the result
        with self.store.transaction() as tx:
            tx.update("job_posting", recruit_id, data)
        return self.store.find_by_id("job_posting", recruit_id)

    def delete_job(self, token: str | None, recruit_id: str) -> None:
        """Tombstone the posting: it disappears from every listing while
        applications that reference it stay readable."""
        principal = self.auth.authorize(token, (Role.COMPANY,))
        posting = self._owned_posting(principal, recruit_id)
        if posting.withdrawn:
            raise NotFound(f"posting {recruit_id!r} does not exist")
        with self.store.transaction() as tx:
            tx.update("job_posting", recruit_id, {"withdrawn": True})

    def list_jobs(
        self,
        token: str | None,
        city: str | None = None,
        education_id: str | None = None,
        recruit_type: int | None = None,
        offset: int = 0,
        limit: int | None = None,
    ) -> list[JobPosting]:
        self.auth.authorize(token, tuple(Role))
        postings = visible_postings(self.store, self._clock(), city, education_id, recruit_type)
        end = None if limit is None else offset + max(limit, 0)
        return postings[offset:end]

    def list_my_jobs(self, token: str | None) -> list[JobPosting]:
        """Owner view: includes expired postings, excludes withdrawn ones."""
        principal = self.auth.authorize(token, (Role.COMPANY,))
        postings = self.store.query(
            "job_posting", {"company_id": principal.principal_id, "withdrawn": False}
        )
        postings.sort(key=lambda p: p.recruit_id)
        postings.sort(key=lambda p: p.time, reverse=True)
        return postings

    def get_job(self, token: str | None, recruit_id: str) -> JobPosting:
        """Detail view; expired or withdrawn postings stay visible only to
        the owning company."""
        principal = self.auth.authorize(token, tuple(Role))
        posting = self.store.find_by_id("job_posting", recruit_id)
        if posting is None:
            raise NotFound(f"posting {recruit_id!r} does not exist")
        is_owner = (
            principal.role is Role.COMPANY and posting.company_id == principal.principal_id
        )
        if (posting.withdrawn or posting.deadline < self._clock()) and not is_owner:
            raise NotFound(f"posting {recruit_id!r} does not exist")
        return posting

    # -- applications ----------------------------------------------------------

    def submit_resume(
        self,
        token: str | None,
        recruit_id: str,
        experience: str = "",
        skill: str = "",
        email: str | None = None,
        phone: str | None = None,
        accessory: tuple[str, bytes] | None = None,
    ) -> ResumeApplication:
        principal = self.auth.authorize(token, (Role.STUDENT,))
        student = self.store.find_by_id("student", principal.principal_id)
        accessory_key = None
        if accessory is not None:
            accessory_key = self.attachments.put(accessory[0], accessory[1])
        with self.store.transaction() as tx:
            posting = tx.find_by_id("job_posting", recruit_id)
            if posting is None or posting.withdrawn:
                raise NotFound(f"posting {recruit_id!r} does not exist")
            if posting.deadline < self._clock():
                raise Expired("posting deadline has passed")
            if tx.count(
                "resume_application",
                {"recruit_id": recruit_id, "student_id": student.student_id},
            ):
                raise DuplicateKey("already applied to this posting")
            application = ResumeApplication(
                resume_id=None,
                recruit_id=recruit_id,
                student_id=student.student_id,
                student_name=student.name,
                education_id=student.education_id,
                major_id=student.major_id,
                experience=experience,
                skill=skill,
                email=email or student.email,
                phone=phone or student.phone,
                accessory=accessory_key,
                submitted_at=self._clock(),
            )
            return tx.save(application)

    def list_my_applications(self, token: str | None) -> list[dict]:
        """The session student's applications, newest first, each with its
        derived status and a posting summary."""
        principal = self.auth.authorize(token, (Role.STUDENT,))
        apps = self.store.query(
            "resume_application",
            {"student_id": principal.principal_id},
            order=[("submitted_at", "desc")],
        )
        apps.sort(key=lambda a: a.resume_id)
        apps.sort(key=lambda a: a.submitted_at, reverse=True)
        out = []
        for app in apps:
            posting = self.store.find_by_id("job_posting", app.recruit_id)
            company = self.store.find_by_id("company", posting.company_id)
            out.append(
                {
                    "application": app,
                    "status": storage.models.derive_application_status(app).value,
                    "posting": {
                        "recruit_id": posting.recruit_id,
                        "position_id": posting.position_id,
                        "company_id": posting.company_id,
                        "company_name": company.company_name,
                        "city": posting.city,
                        "place": posting.place,
                        "deadline": storage.models.format_timestamp(posting.deadline),
                        "withdrawn": posting.withdrawn,
                    },
                }
            )
        return out

    def list_received_resumes(
        self, token: str | None, recruit_id: str | None = None
    ) -> list[ResumeApplication]:
        """All applications to this company's postings; reading the list
        does not mark anything viewed."""
        principal = self.auth.authorize(token, (Role.COMPANY,))
        if recruit_id is not None:
            self._owned_posting(principal, recruit_id)
            recruit_ids = [recruit_id]
        else:
            recruit_ids = [
                p.recruit_id
                for p in self.store.query(
                    "job_posting", {"company_id": principal.principal_id}
                )
            ]
        apps: list[ResumeApplication] = []
        for rid in recruit_ids:
            apps.extend(self.store.query("resume_application", {"recruit_id": rid}))
        apps.sort(key=lambda a: a.resume_id)
        apps.sort(key=lambda a: a.submitted_at, reverse=True)
        return apps

    def _owned_application(self, tx, principal, resume_id: str) -> ResumeApplication:
        app = tx.find_by_id("resume_application", resume_id)
        if app is None:
            raise NotFound(f"application {resume_id!r} does not exist")
        posting = tx.find_by_id("job_posting", app.recruit_id)
        if posting.company_id != principal.principal_id:
            raise NotOwner("application targets another company's posting")
        return app

    def _mark_viewed(self, tx, app: ResumeApplication) -> ResumeApplication:
        if app.viewed_at is None:
            app.viewed_at = self._clock()
            tx.update("resume_application", app.resume_id, {"viewed_at": app.viewed_at})
        return app

    def view_resume_detail(self, token: str | None, resume_id: str) -> ResumeApplication:
        """First view stamps viewed_at (idempotent afterwards); the student's
        derived status becomes Viewed."""
        principal = self.auth.authorize(token, (Role.COMPANY,))
        with self.store.transaction() as tx:
            app = self._owned_application(tx, principal, resume_id)
            return self._mark_viewed(tx, app)

    def download_accessory(self, token: str | None, resume_id: str) -> tuple[str, bytes]:
        principal = self.auth.authorize(token, (Role.COMPANY,))
        with self.store.transaction() as tx:
            app = self._owned_application(tx, principal, resume_id)
            if app.accessory is None:
                raise NoAccessory("application has no attachment")
            self._mark_viewed(tx, app)
            key = app.accessory
        return self.attachments.get(key)

    def respond_to_resume(
        self, token: str | None, resume_id: str, result: FeedbackResult | str
    ) -> ResumeApplication:
        """Record the employer's one-shot result and append an inbox
        notification for the student."""
        principal = self.auth.authorize(token, (Role.COMPANY,))
        try:
            result = FeedbackResult(result)
        except ValueError:
            allowed = ", ".join(m.value for m in FeedbackResult)
            raise ValidationError(f"result must be one of: {allowed}") from None
        with self.store.transaction() as tx:
            app = self._owned_application(tx, principal, resume_id)
            if app.viewed_at is None:
                raise NotViewed("respond requires viewing the application first")
            if app.result is not None:
                raise AlreadyResponded("result already recorded")
            tx.update("resume_application", resume_id, {"result": result})
            app.result = result
            tx.save(
                Notification(
                    id=None,
                    student_id=app.student_id,
                    resume_id=resume_id,
                    result=result,
                    created_at=self._clock(),
                )
            )
            return app

    # -- matching -----------------------------------------------------------------

    def match_candidates(self, token: str | None, recruit_id: str) -> list[ResumeApplication]:
        """Applicants meeting the posting's education requirement, ranked.
        A posting implies a major when its position_id names one."""
        principal = self.auth.authorize(token, (Role.COMPANY,))
        posting = self._owned_posting(principal, recruit_id)
        ranks = {e.education_id: e.rank for e in self.store.query("education_level")}
        implied_major = None
        if self.store.find_by_id("major", posting.position_id) is not None:
            implied_major = posting.position_id
        applications = self.store.query("resume_application", {"recruit_id": recruit_id})
        return rank_candidates(
            applications, ranks, ranks[posting.education_id], implied_major
        )
