"""Administrator maintenance: students, company review, academic dictionary.

Every operation authorizes the session as Admin before touching the store;
deletes follow the restrict policy of the persistence layer.
"""

from __future__ import annotations

from enum import Enum
from typing import Any, Callable, Mapping

from . import store as storage
from .auth import AuthService, PasswordHasher, now_epoch
from .errors import InvalidTransition, NotFound, ValidationError
from .models import (
    ApprovalStatus,
    Company,
    Role,
    Student,
    validate_hierarchy,
)
from .store import Store

_ADMIN_ONLY = (Role.ADMIN,)

#: dictionary kinds manageable through manage_dictionary
DICTIONARY_KINDS = ("college", "major", "class_group", "industry", "education_level")

_STUDENT_DRAFT_FIELDS = frozenset(
    {
        "student_id",
        "name",
        "sex",
        "birthday",
        "phone",
        "email",
        "college_id",
        "major_id",
        "class_id",
        "education_id",
    }
)
_STUDENT_UPDATE_FIELDS = _STUDENT_DRAFT_FIELDS - {"student_id"}
_HIERARCHY_FIELDS = ("college_id", "major_id", "class_id")


class ReviewDecision(str, Enum):
    APPROVE = "Approve"
    REJECT = "Reject"


def _enum_status(value: ApprovalStatus | str) -> ApprovalStatus:
    try:
        return ApprovalStatus(value)
    except ValueError:
        raise ValidationError(f"unknown approval status: {value!r}") from None


class DeleteOutcome(str, Enum):
    DELETED = "Deleted"
    NEEDS_CONFIRMATION = "NeedsConfirmation"


def check_hierarchy(store: Store, student: Student) -> None:
    """Raise unless the student's class -> major -> college chain is
    consistent with the directory currently in the store."""
    snapshot = {
        "colleges": {c.college_id: c for c in store.query("college")},
        "majors": {m.major_id: m for m in store.query("major")},
        "class_groups": {k.class_id: k for k in store.query("class_group")},
    }
    if not validate_hierarchy(
        student, snapshot["colleges"], snapshot["majors"], snapshot["class_groups"]
    ):
        raise ValidationError(
            "college_id/major_id/class_id do not form a consistent hierarchy"
        )


class DirectoryAdminService:
    def __init__(
        self,
        store: Store,
        auth: AuthService,
        hasher: PasswordHasher | None = None,
        clock: Callable[[], int] = now_epoch,
    ):
        self.store = store
        self.auth = auth
        self.hasher = hasher or auth.hasher
        self._clock = clock

    # -- students ----------------------------------------------------------

    def add_student(self, token: str | None, draft: Mapping[str, Any]) -> Student:
        self.auth.authorize(token, _ADMIN_ONLY)
        payload = dict(draft)
        initial_password = payload.pop("initial_password", None)
        if not initial_password:
            raise ValidationError("initial_password is required")
        unknown = set(payload) - _STUDENT_DRAFT_FIELDS
        if unknown:
            raise ValidationError(f"unknown student fields: {sorted(unknown)}")
        payload["password_digest"] = self.hasher.digest(initial_password)
        student = storage.record_to_entity("student", payload)
        check_hierarchy(self.store, student)
        with self.store.transaction() as tx:
            return tx.save(student)

    def update_student(
        self, token: str | None, student_id: str, changes: Mapping[str, Any]
    ) -> Student:
        self.auth.authorize(token, _ADMIN_ONLY)
        current = self.store.find_by_id("student", student_id)
        if current is None:
            raise NotFound(f"student {student_id!r} does not exist")
        unknown = set(changes) - _STUDENT_UPDATE_FIELDS
        if unknown:
            raise ValidationError(f"fields not updatable: {sorted(unknown)}")
        merged_record = storage.entity_to_record(current)
        merged_record.update(changes)
        merged = storage.record_to_entity("student", merged_record)
        if any(f in changes for f in _HIERARCHY_FIELDS):
            check_hierarchy(self.store, merged)
        with self.store.transaction() as tx:
            tx.update("student", student_id, dict(changes))
        return merged

    def delete_student(
        self, token: str | None, student_id: str, confirmed: bool
    ) -> DeleteOutcome:
        """Two-step confirmation: without confirmed=True nothing is written."""
        self.auth.authorize(token, _ADMIN_ONLY)
        if self.store.find_by_id("student", student_id) is None:
            raise NotFound(f"student {student_id!r} does not exist")
        if not confirmed:
            return DeleteOutcome.NEEDS_CONFIRMATION
        with self.store.transaction() as tx:
            tx.delete("student", student_id)
        return DeleteOutcome.DELETED

    def find_student(self, token: str | None, student_id: str) -> Student | None:
        """Exact-match lookup by id; identifiers are case-sensitive."""
        self.auth.authorize(token, _ADMIN_ONLY)
        return self.store.find_by_id("student", student_id)

    # -- company review ------------------------------------------------------

    def list_companies(
        self, token: str | None, status: ApprovalStatus | str | None = None
    ) -> list[Company]:
        """Review queue feed: companies, optionally filtered by approval
        status, stable order by id."""
        self.auth.authorize(token, _ADMIN_ONLY)
        filters = None
        if status is not None:
            filters = {"approval_status": _enum_status(status)}
        return self.store.query("company", filters)

    def review_company(
        self,
        token: str | None,
        company_id: str,
        decision: ReviewDecision | str,
        note: str = "",
    ) -> Company:
        self.auth.authorize(token, _ADMIN_ONLY)
        try:
            decision = ReviewDecision(decision)
        except ValueError:
            raise ValidationError(f"decision must be Approve or Reject") from None
        if note and len(note) > 400:
            raise ValidationError("note longer than 400 characters")
        company = self.store.find_by_id("company", company_id)
        if company is None:
            raise NotFound(f"company {company_id!r} does not exist")
        if company.approval_status is not ApprovalStatus.PENDING:
            raise InvalidTransition(
                f"company already {company.approval_status.value.lower()}"
            )
        status = (
            ApprovalStatus.APPROVED
            if decision is ReviewDecision.APPROVE
            else ApprovalStatus.REJECTED
        )
        with self.store.transaction() as tx:
            tx.update(
                "company",
                company_id,
                {
                    "approval_status": status,
                    "reviewed_at": self._clock(),
                    "review_note": note or None,
                },
            )
        return self.store.find_by_id("company", company_id)

    # -- dictionary CRUD -----------------------------------------------------

    @staticmethod
    def _dictionary_spec(kind: str):
        if kind not in DICTIONARY_KINDS:
            raise ValidationError(f"unknown dictionary kind: {kind}")
        return storage.spec_for(kind)

    def list_dictionary(self, kind: str) -> list[Any]:
        # public read: registration and posting forms need these values
        self._dictionary_spec(kind)
        return self.store.query(kind)

    def manage_dictionary(
        self,
        token: str | None,
        kind: str,
        action: str,
        payload: Mapping[str, Any],
        entity_id: str | None = None,
    ):
        self.auth.authorize(token, _ADMIN_ONLY)
        spec = self._dictionary_spec(kind)
        if action == "create":
            entity = storage.record_to_entity(kind, payload)
            with self.store.transaction() as tx:
                return tx.save(entity)
        if action == "update":
            if entity_id is None:
                raise ValidationError("update requires an id")
            current = self.store.find_by_id(kind, entity_id)
            if current is None:
                raise NotFound(f"{kind} {entity_id!r} does not exist")
            valid = {name for name, _ in spec.columns} - {spec.pk}
            unknown = set(payload) - valid
            if unknown:
                raise ValidationError(f"fields not updatable: {sorted(unknown)}")
            merged = storage.entity_to_record(current)
            merged.update(payload)
            storage.record_to_entity(kind, merged)  # validate the result
            with self.store.transaction() as tx:
                tx.update(kind, entity_id, dict(payload))
            return self.store.find_by_id(kind, entity_id)
        if action == "delete":
            if entity_id is None:
                raise ValidationError("delete requires an id")
            with self.store.transaction() as tx:
                deleted = tx.delete(kind, entity_id)
            if deleted == 0:
                raise NotFound(f"{kind} {entity_id!r} does not exist")
            return DeleteOutcome.DELETED
        raise ValidationError(f"unknown action: {action}")
