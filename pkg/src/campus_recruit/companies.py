"""Company self-service: registration (lands in Pending review state),
profile view and maintenance.  Approval itself is an admin operation."""

from __future__ import annotations

from typing import Any, Mapping

from . import store as storage
from .auth import AuthService, PasswordHasher
from .errors import NotFound, ValidationError
from .models import ApprovalStatus, Company, Role
from .store import Store

_REGISTRATION_FIELDS = frozenset(
    {
        "company_id",
        "company_name",
        "industry_id",
        "phone",
        "scale",
        "address",
        "established",
        "capital",
        "detail",
        "worktime",
        "email",
    }
)
_PROFILE_FIELDS = _REGISTRATION_FIELDS - {"company_id"}


class CompanyService:
    def __init__(self, store: Store, auth: AuthService, hasher: PasswordHasher | None = None):
        self.store = store
        self.auth = auth
        self.hasher = hasher or auth.hasher

    def register(self, payload: Mapping[str, Any]) -> Company:
        """Open registration; the account stays Pending (and cannot log in)
        until an administrator approves it."""
        data = dict(payload)
        initial_password = data.pop("initial_password", None)
        if not initial_password:
            raise ValidationError("initial_password is required")
        unknown = set(data) - _REGISTRATION_FIELDS
        if unknown:
            raise ValidationError(f"unknown company fields: {sorted(unknown)}")
        data["password_digest"] = self.hasher.digest(initial_password)
        data["approval_status"] = ApprovalStatus.PENDING.value
        company = storage.record_to_entity("company", data)
        with self.store.transaction() as tx:
            return tx.save(company)

    def get_profile(self, token: str | None) -> Company:
        principal = self.auth.authorize(token, (Role.COMPANY,))
        company = self.store.find_by_id("company", principal.principal_id)
        if company is None:
            raise NotFound("company record does not exist")
        return company

    def update_profile(self, token: str | None, changes: Mapping[str, Any]) -> Company:
        principal = self.auth.authorize(token, (Role.COMPANY,))
        current = self.store.find_by_id("company", principal.principal_id)
        if current is None:
            raise NotFound("company record does not exist")
        unknown = set(changes) - _PROFILE_FIELDS
        if unknown:
            raise ValidationError(f"fields not updatable: {sorted(unknown)}")
        merged = storage.entity_to_record(current)
        merged.update(changes)
        storage.record_to_entity("company", merged)  # validate the result
        with self.store.transaction() as tx:
            tx.update("company", principal.principal_id, dict(changes))
        return self.store.find_by_id("company", principal.principal_id)
