import json
from pathlib import Path

import pytest

from campus_recruit.api import Services, build_services
from campus_recruit.config import ServiceConfig
from campus_recruit.models import Role
from campus_recruit.store import Store, load_default_fixture, seed_store

#: 2026-08-01T00:00:00Z — between the fixture's past activity (2026-07) and
#: its far-future deadlines/arrangements (2099)
NOW = 1_785_456_000


class FakeClock:
    def __init__(self, now: int = NOW):
        self.now = now

    def __call__(self) -> int:
        return self.now

    def advance(self, seconds: int) -> None:
        self.now += seconds


@pytest.fixture(scope="session")
def fixture_doc() -> dict:
    return load_default_fixture()


@pytest.fixture
def clock() -> FakeClock:
    return FakeClock()


def make_bundle(tmp_path: Path, clock, **config_overrides) -> Services:
    config = ServiceConfig(
        attachments_dir=str(tmp_path / "attachments"),
        password_iterations=1_000,  # keep non-fixture logins cheap in tests
        **config_overrides,
    )
    return build_services(config, clock=clock)


@pytest.fixture
def bundle(tmp_path, clock) -> Services:
    """Service bundle over a fresh in-memory store."""
    return make_bundle(tmp_path, clock)


@pytest.fixture
def seeded(bundle) -> Services:
    seed_store(bundle.store)
    return bundle


def token_for(bundle: Services, role: Role, principal_id: str) -> str:
    """Issue a session directly; skips password hashing for speed."""
    return bundle.sessions.issue(role, principal_id).token


@pytest.fixture
def tokens(seeded):
    return {
        Role.STUDENT: token_for(seeded, Role.STUDENT, "S1"),
        Role.COMPANY: token_for(seeded, Role.COMPANY, "CO1"),
        Role.ADMIN: token_for(seeded, Role.ADMIN, "A1"),
    }


# -- entity factories -----------------------------------------------------------


def student_record(student_id="SX1", **overrides) -> dict:
    record = {
        "student_id": student_id,
        "name": "Test Student",
        "sex": "F",
        "birthday": "2003-01-01",
        "phone": "13800009999",
        "email": f"{student_id.lower()}@c.edu",
        "password_digest": "pbkdf2_sha256$1$aa$bb",
        "college_id": "C1",
        "major_id": "M1",
        "class_id": "K1",
        "education_id": "E3",
    }
    record.update(overrides)
    return record


def posting_record(recruit_id=None, company_id="CO1", **overrides) -> dict:
    record = {
        "recruit_id": recruit_id,
        "company_id": company_id,
        "position_id": "P-T1",
        "education_id": "E3",
        "linkman_name": "HR",
        "linkman_email": "hr@x.cn",
        "company_type": "Private",
        "place": "Somewhere",
        "city": "Hangzhou",
        "number": 1,
        "salary": 10000,
        "recruit_type": 0,
        "experience": "none",
        "time": "2026-07-30",
        "deadline": "2099-01-01T00:00:00Z",
        "detail": "test posting",
        "withdrawn": False,
    }
    record.update(overrides)
    return record


def seeded_file_store(path: Path, busy_timeout_ms: int = 5000) -> Store:
    store = Store(path, busy_timeout_ms=busy_timeout_ms)
    store.migrate()
    seed_store(store)
    return store


def fixture_rows(fixture_doc: dict, key: str) -> list[dict]:
    return json.loads(json.dumps(fixture_doc[key]))  # deep copy
