"""Presentation (info-session) workflow: company applications, admin review
producing the scheduled arrangement, student browsing and registration.

Approval is one-shot and atomically creates exactly one arrangement.
Registration is an atomic check-and-insert: duplicates, capacity, and the
start-time cutoff are all enforced inside a single write transaction.
"""

from __future__ import annotations

from typing import Any, Callable, Mapping

from . import store as storage
from .auth import AuthService, now_epoch
from .errors import (
    AlreadyApplied,
    Closed,
    DuplicateKey,
    Full,
    InvalidTransition,
    NotFound,
    Unauthorized,
    ValidationError,
)
from .models import (
    Arrangement,
    PresentationApplication,
    PresentationStatus,
    Registration,
    Role,
    parse_timestamp,
)
from .store import Store

_SCHEDULE_FIELDS = ("start_time", "duration_minutes", "place", "max_participants", "theme")


def all_arrangements(store: Store) -> list[Arrangement]:
    """Every arrangement, soonest first; arrangement_id breaks ties."""
    rows = store.query("arrangement")
    rows.sort(key=lambda a: a.arrangement_id)
    rows.sort(key=lambda a: a.start_time)
    return rows


class PresentationService:
    def __init__(
        self,
        store: Store,
        auth: AuthService,
        clock: Callable[[], int] = now_epoch,
        enforce_capacity: bool = True,
    ):
        self.store = store
        self.auth = auth
        self._clock = clock
        self.enforce_capacity = enforce_capacity

    # -- company side ---------------------------------------------------------

    def apply_for_presentation(
        self, token: str | None, request: Mapping[str, Any]
    ) -> PresentationApplication:
        principal = self.auth.authorize(token, (Role.COMPANY,))
        data = dict(request)
        unknown = set(data) - {
            "requested_start",
            "requested_duration_minutes",
            "theme",
            "expected_attendance",
        }
        if unknown:
            raise ValidationError(f"unknown request fields: {sorted(unknown)}")
        if "requested_start" not in data:
            raise ValidationError("requested_start is required")
        start = parse_timestamp(data["requested_start"])
        if start <= self._clock():
            raise ValidationError("requested_start must be in the future")
        application = PresentationApplication(
            application_id=None,
            company_id=principal.principal_id,
            requested_start=start,
            requested_duration_minutes=data.get("requested_duration_minutes", 0),
            theme=data.get("theme"),
            expected_attendance=data.get("expected_attendance", 0),
            status=PresentationStatus.PENDING,
        )
        with self.store.transaction() as tx:
            return tx.save(application)

    def application_status(self, token: str | None) -> list[dict]:
        """The company's own applications; approved rows embed the published
        arrangement (time and location feedback)."""
        principal = self.auth.authorize(token, (Role.COMPANY,))
        apps = self.store.query(
            "presentation_application", {"company_id": principal.principal_id}
        )
        apps.sort(key=lambda a: a.application_id)
        apps.sort(key=lambda a: a.requested_start)
        out = []
        for app in apps:
            arrangements = self.store.query(
                "arrangement", {"application_id": app.application_id}
            )
            out.append(
                {
                    "application": app,
                    "arrangement": arrangements[0] if arrangements else None,
                }
            )
        return out

    # -- admin review ------------------------------------------------------------

    def list_applications(
        self, token: str | None, status: PresentationStatus | str | None = None
    ) -> list[PresentationApplication]:
        """Review queue feed for administrators, soonest requested start
        first."""
        self.auth.authorize(token, (Role.ADMIN,))
        filters = None
        if status is not None:
            try:
                filters = {"status": PresentationStatus(status)}
            except ValueError:
                raise ValidationError(f"unknown status: {status!r}") from None
        apps = self.store.query("presentation_application", filters)
        apps.sort(key=lambda a: a.application_id)
        apps.sort(key=lambda a: a.requested_start)
        return apps

    def review_presentation(
        self,
        token: str | None,
        application_id: str,
        decision: str,
        schedule: Mapping[str, Any] | None = None,
    ) -> tuple[PresentationApplication, Arrangement | None]:
        """Approve (with a schedule, creating the arrangement atomically) or
        reject; either way the pending state is consumed for good."""
        self.auth.authorize(token, (Role.ADMIN,))
        if decision not in ("Approve", "Reject"):
            raise ValidationError("decision must be Approve or Reject")
        with self.store.transaction() as tx:
            application = tx.find_by_id("presentation_application", application_id)
            if application is None:
                raise NotFound(f"application {application_id!r} does not exist")
            if application.status is not PresentationStatus.PENDING:
                raise InvalidTransition(
                    f"application already {application.status.value.lower()}"
                )
            if decision == "Reject":
                tx.update(
                    "presentation_application",
                    application_id,
                    {"status": PresentationStatus.REJECTED},
                )
                application.status = PresentationStatus.REJECTED
                return application, None
            if not schedule:
                raise ValidationError("approval requires a schedule")
            unknown = set(schedule) - set(_SCHEDULE_FIELDS)
            if unknown:
                raise ValidationError(f"unknown schedule fields: {sorted(unknown)}")
            missing = [f for f in _SCHEDULE_FIELDS if f not in schedule]
            if missing:
                raise ValidationError(f"schedule missing fields: {missing}")
            arrangement = Arrangement(
                arrangement_id=None,
                application_id=application_id,
                company_id=application.company_id,
                start_time=parse_timestamp(schedule["start_time"]),
                duration_minutes=schedule["duration_minutes"],
                place=schedule["place"],
                max_participants=schedule["max_participants"],
                theme=schedule["theme"],
            )
            tx.update(
                "presentation_application",
                application_id,
                {"status": PresentationStatus.APPROVED},
            )
            application.status = PresentationStatus.APPROVED
            arrangement = tx.save(arrangement)
            return application, arrangement

    def update_arrangement(
        self, token: str | None, arrangement_id: str, changes: Mapping[str, Any]
    ) -> Arrangement:
        """Admin-only full-field edit of a published arrangement; keeps one
        audit timestamp."""
        self.auth.authorize(token, (Role.ADMIN,))
        current = self.store.find_by_id("arrangement", arrangement_id)
        if current is None:
            raise NotFound(f"arrangement {arrangement_id!r} does not exist")
        unknown = set(changes) - set(_SCHEDULE_FIELDS)
        if unknown:
            raise ValidationError(f"fields not updatable: {sorted(unknown)}")
        data = dict(changes)
        if "start_time" in data:
            data["start_time"] = parse_timestamp(data["start_time"])
        merged = storage.entity_to_record(current)
        for key, value in data.items():
            merged[key] = storage.models.format_timestamp(value) if key == "start_time" else value
        storage.record_to_entity("arrangement", merged)  # validate the result
        data["updated_at"] = self._clock()
        with self.store.transaction() as tx:
            tx.update("arrangement", arrangement_id, data)
        return self.store.find_by_id("arrangement", arrangement_id)

    # -- student side ----------------------------------------------------------------

    def list_arrangements(self, token: str | None) -> list[dict]:
        """All arrangements with the presenting company's name, soonest
        start time first."""
        self.auth.authorize(token, tuple(Role))
        out = []
        for arrangement in all_arrangements(self.store):
            company = self.store.find_by_id("company", arrangement.company_id)
            out.append({"arrangement": arrangement, "company_name": company.company_name})
        return out

    def arrangement_detail(self, token: str | None, arrangement_id: str) -> dict:
        """Joined detail view: company summary, live registration count, and
        whether the requesting student already registered."""
        principal = self.auth.authorize(token, tuple(Role))
        self._check_id(arrangement_id)
        arrangement = self.store.find_by_id("arrangement", arrangement_id)
        if arrangement is None:
            raise NotFound(f"arrangement {arrangement_id!r} does not exist")
        company = self.store.find_by_id("company", arrangement.company_id)
        industry = self.store.find_by_id("industry", company.industry_id)
        apply_count = self.store.count("registration", {"arrangement_id": arrangement_id})
        has_applied = False
        if principal.role is Role.STUDENT:
            has_applied = bool(
                self.store.count(
                    "registration",
                    {
                        "arrangement_id": arrangement_id,
                        "student_id": principal.principal_id,
                    },
                )
            )
        return {
            "arrangement": arrangement,
            "company": {
                "company_id": company.company_id,
                "company_name": company.company_name,
                "industry": industry.industry_name,
                "scale": company.scale,
                "detail": company.detail,
            },
            "apply_count": apply_count,
            "has_applied": has_applied,
        }

    @staticmethod
    def _check_id(arrangement_id: str) -> None:
        # mirrors the non-positive-id guard of the original detail endpoint
        if not arrangement_id:
            raise ValidationError("arrangement id is required")
        try:
            if int(arrangement_id) <= 0:
                raise ValidationError("arrangement id must be positive")
        except ValueError:
            pass  # non-numeric identifiers are fine

    def register_for_arrangement(self, token: str | None, arrangement_id: str) -> Registration:
        principal = self.auth.authorize(token, (Role.STUDENT,))
        with self.store.transaction() as tx:
            arrangement = tx.find_by_id("arrangement", arrangement_id)
            if arrangement is None:
                raise NotFound(f"arrangement {arrangement_id!r} does not exist")
            if arrangement.start_time <= self._clock():
                raise Closed("registration closed: the presentation has started")
            if tx.count(
                "registration",
                {"arrangement_id": arrangement_id, "student_id": principal.principal_id},
            ):
                raise AlreadyApplied("already registered for this presentation")
            if (
                self.enforce_capacity
                and tx.count("registration", {"arrangement_id": arrangement_id})
                >= arrangement.max_participants
            ):
                raise Full("presentation is at capacity")
            registration = Registration(
                id=None,
                student_id=principal.principal_id,
                arrangement_id=arrangement_id,
                registered_at=self._clock(),
            )
            try:
                return tx.save(registration)
            except DuplicateKey:
                raise AlreadyApplied("already registered for this presentation") from None

    def list_my_registrations(self, token: str | None) -> list[dict]:
        """Arrangements the student registered for, soonest first."""
        principal = self.auth.authorize(token, (Role.STUDENT,))
        if self.store.find_by_id("student", principal.principal_id) is None:
            raise Unauthorized("student record does not exist")
        registrations = self.store.query(
            "registration", {"student_id": principal.principal_id}
        )
        rows = []
        for reg in registrations:
            arrangement = self.store.find_by_id("arrangement", reg.arrangement_id)
            company = self.store.find_by_id("company", arrangement.company_id)
            rows.append(
                {
                    "arrangement": arrangement,
                    "company_name": company.company_name,
                    "registered_at": reg.registered_at,
                }
            )
        rows.sort(key=lambda r: r["arrangement"].arrangement_id)
        rows.sort(key=lambda r: r["arrangement"].start_time)
        return rows
