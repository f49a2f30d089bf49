"""Company self-registration and profile maintenance."""

import pytest

from campus_recruit.errors import (
    CompanyNotApproved,
    DuplicateKey,
    Forbidden,
    ForeignKeyViolation,
    ValidationError,
)
from campus_recruit.models import ApprovalStatus, Role


def registration_payload(company_id="CO9", **overrides):
    payload = {
        "company_id": company_id,
        "company_name": "Fresh Co",
        "industry_id": "I1",
        "phone": "010-1111",
        "scale": "1-50",
        "address": "1 New Road",
        "established": "2024-05-01",
        "capital": "1M CNY",
        "detail": "A new company.",
        "worktime": "9-6",
        "email": "hello@fresh.co",
        "initial_password": "fresh-pass",
    }
    payload.update(overrides)
    return payload


class TestRegister:
    def test_lands_pending_and_cannot_login(self, seeded):
        company = seeded.companies.register(registration_payload())
        assert company.approval_status is ApprovalStatus.PENDING
        with pytest.raises(CompanyNotApproved):
            seeded.auth.login(Role.COMPANY, "CO9", "fresh-pass")

    def test_approval_then_login(self, seeded, tokens):
        seeded.companies.register(registration_payload())
        seeded.admin.review_company(tokens[Role.ADMIN], "CO9", "Approve")
        assert seeded.auth.login(Role.COMPANY, "CO9", "fresh-pass")

    def test_duplicate_id(self, seeded):
        with pytest.raises(DuplicateKey):
            seeded.companies.register(registration_payload("CO1"))

    def test_unknown_industry(self, seeded):
        with pytest.raises(ForeignKeyViolation):
            seeded.companies.register(registration_payload(industry_id="I99"))

    def test_cannot_self_approve(self, seeded):
        with pytest.raises(ValidationError):
            seeded.companies.register(
                registration_payload(approval_status="Approved")
            )


class TestProfile:
    def test_get_profile(self, seeded, tokens):
        company = seeded.companies.get_profile(tokens[Role.COMPANY])
        assert company.company_id == "CO1"

    def test_update_profile(self, seeded, tokens):
        updated = seeded.companies.update_profile(
            tokens[Role.COMPANY], {"scale": "1000+", "detail": "Bigger now."}
        )
        assert (updated.scale, updated.detail) == ("1000+", "Bigger now.")

    def test_update_cannot_touch_approval(self, seeded, tokens):
        with pytest.raises(ValidationError):
            seeded.companies.update_profile(
                tokens[Role.COMPANY], {"approval_status": "Rejected"}
            )

    def test_student_forbidden(self, seeded, tokens):
        with pytest.raises(Forbidden):
            seeded.companies.get_profile(tokens[Role.STUDENT])

    def test_worktime_limit(self, seeded, tokens):
        with pytest.raises(ValidationError):
            seeded.companies.update_profile(tokens[Role.COMPANY], {"worktime": "x" * 101})
