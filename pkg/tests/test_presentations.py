"""Presentation applications, review/scheduling, and guarded registration."""

import threading

import pytest

from campus_recruit.errors import (
    AlreadyApplied,
    Closed,
    Forbidden,
    Full,
    InvalidTransition,
    NotFound,
    Unauthorized,
    ValidationError,
)
from campus_recruit.models import PresentationStatus, Role

import oracles
from conftest import token_for


@pytest.fixture
def company(tokens):
    return tokens[Role.COMPANY]


@pytest.fixture
def admin(tokens):
    return tokens[Role.ADMIN]


@pytest.fixture
def student(tokens):
    return tokens[Role.STUDENT]


def request_payload(**overrides):
    payload = {
        "requested_start": "2099-06-01T10:00:00Z",
        "requested_duration_minutes": 60,
        "theme": "Demo Day",
        "expected_attendance": 50,
    }
    payload.update(overrides)
    return payload


def schedule_payload(**overrides):
    payload = {
        "start_time": "2099-06-01T10:00:00Z",
        "duration_minutes": 60,
        "place": "Hall 3",
        "max_participants": 40,
        "theme": "Demo Day",
    }
    payload.update(overrides)
    return payload


class TestApply:
    def test_valid_request_is_pending(self, seeded, company):
        app = seeded.presentations.apply_for_presentation(company, request_payload())
        assert app.status is PresentationStatus.PENDING
        assert app.company_id == "CO1"

    def test_past_start_rejected(self, seeded, company):
        with pytest.raises(ValidationError):
            seeded.presentations.apply_for_presentation(
                company, request_payload(requested_start="2020-01-01T00:00:00Z")
            )

    def test_company_sees_pending_status(self, seeded, company):
        app = seeded.presentations.apply_for_presentation(company, request_payload())
        rows = seeded.presentations.application_status(company)
        row = next(r for r in rows if r["application"].application_id == app.application_id)
        assert row["application"].status is PresentationStatus.PENDING
        assert row["arrangement"] is None

    def test_student_cannot_apply(self, seeded, student):
        with pytest.raises(Forbidden):
            seeded.presentations.apply_for_presentation(student, request_payload())


class TestReviewQueue:
    def test_pending_queue_from_fixture(self, seeded, admin):
        pending = seeded.presentations.list_applications(admin, "Pending")
        assert [a.application_id for a in pending] == ["P3"]

    def test_unfiltered_sorted_by_requested_start(self, seeded, admin):
        apps = seeded.presentations.list_applications(admin)
        starts = [a.requested_start for a in apps]
        assert len(apps) == 3 and starts == sorted(starts)

    def test_non_admin_forbidden(self, seeded, company):
        with pytest.raises(Forbidden):
            seeded.presentations.list_applications(company)


class TestReview:
    def test_approve_creates_exactly_one_arrangement(self, seeded, admin):
        app, arrangement = seeded.presentations.review_presentation(
            admin, "P3", "Approve", schedule_payload()
        )
        assert app.status is PresentationStatus.APPROVED
        assert arrangement is not None and arrangement.application_id == "P3"
        assert arrangement.company_id == app.company_id
        assert seeded.store.count("arrangement", {"application_id": "P3"}) == 1

    def test_reject_creates_no_arrangement(self, seeded, admin):
        app, arrangement = seeded.presentations.review_presentation(admin, "P3", "Reject")
        assert app.status is PresentationStatus.REJECTED
        assert arrangement is None
        assert seeded.store.count("arrangement", {"application_id": "P3"}) == 0

    def test_review_is_one_shot(self, seeded, admin):
        seeded.presentations.review_presentation(admin, "P3", "Approve", schedule_payload())
        with pytest.raises(InvalidTransition):
            seeded.presentations.review_presentation(admin, "P3", "Approve", schedule_payload())

    def test_approve_without_schedule(self, seeded, admin):
        with pytest.raises(ValidationError):
            seeded.presentations.review_presentation(admin, "P3", "Approve")
        # nothing half-written: still pending, reviewable
        app = seeded.store.find_by_id("presentation_application", "P3")
        assert app.status is PresentationStatus.PENDING

    def test_company_gets_schedule_feedback(self, seeded, admin, company):
        seeded.presentations.review_presentation(admin, "P3", "Approve", schedule_payload())
        rows = seeded.presentations.application_status(company)
        row = next(r for r in rows if r["application"].application_id == "P3")
        assert row["arrangement"].place == "Hall 3"
        assert row["arrangement"].start_time is not None

    def test_other_companys_rows_excluded(self, seeded, company, fixture_doc):
        rows = seeded.presentations.application_status(company)
        expected = {
            a["application_id"]
            for a in fixture_doc["presentation_applications"]
            if a["company_id"] == "CO1"
        }
        assert {r["application"].application_id for r in rows} == expected

    def test_bijection_after_random_reviews(self, seeded, admin, company):
        import random

        rng = random.Random(3)
        for n in range(12):
            seeded.presentations.apply_for_presentation(company, request_payload())
        pending = seeded.store.query("presentation_application", {"status": "Pending"})
        for app in pending:
            decision = rng.choice(["Approve", "Reject", "skip"])
            if decision == "skip":
                continue
            schedule = schedule_payload() if decision == "Approve" else None
            seeded.presentations.review_presentation(
                admin, app.application_id, decision, schedule
            )
        tables = {kind: seeded.store.dump_rows(kind) for kind in oracles.PRIMARY_KEYS}
        assert oracles.integrity_sweep(tables) == []


class TestListings:
    def test_fixture_arrangements_ordered_by_start(self, seeded, student, fixture_doc):
        rows = seeded.presentations.list_arrangements(student)
        expected = oracles.sorted_arrangements(fixture_doc["arrangements"])
        assert [r["arrangement"].arrangement_id for r in rows] == [
            a["arrangement_id"] for a in expected
        ]
        assert rows[0]["company_name"] == "NovaSoft"

    def test_empty_store(self, bundle):
        token = token_for(bundle, Role.ADMIN, "nobody")
        assert bundle.presentations.list_arrangements(token) == []

    def test_tie_broken_by_arrangement_id(self, seeded, admin, company, student):
        # schedule two presentations at A1's exact start time
        for _ in range(2):
            app = seeded.presentations.apply_for_presentation(company, request_payload())
            seeded.presentations.review_presentation(
                admin, app.application_id,
                "Approve", schedule_payload(start_time="2099-03-01T09:00:00Z"),
            )
        rows = seeded.presentations.list_arrangements(student)
        same_start = [
            r["arrangement"].arrangement_id
            for r in rows
            if r["arrangement"].start_time == rows[0]["arrangement"].start_time
        ]
        assert same_start == sorted(same_start)


class TestDetail:
    def test_zero_id_rejected(self, seeded, student):
        with pytest.raises(ValidationError):
            seeded.presentations.arrangement_detail(student, "0")

    def test_negative_id_rejected(self, seeded, student):
        with pytest.raises(ValidationError):
            seeded.presentations.arrangement_detail(student, "-3")

    def test_missing_id(self, seeded, student):
        with pytest.raises(NotFound):
            seeded.presentations.arrangement_detail(student, "A99")

    def test_registered_student_sees_has_applied(self, seeded, student):
        view = seeded.presentations.arrangement_detail(student, "A1")  # S1 registered
        assert view["has_applied"] is True

    def test_company_summary_joined(self, seeded, student):
        view = seeded.presentations.arrangement_detail(student, "A1")
        assert view["company"]["company_name"] == "NovaSoft"
        assert view["company"]["industry"] == "Software & Internet"

    def test_apply_count_equals_registration_count(self, seeded, student, fixture_doc):
        for arr in fixture_doc["arrangements"]:
            view = seeded.presentations.arrangement_detail(student, arr["arrangement_id"])
            expected = sum(
                1
                for r in fixture_doc["registrations"]
                if r["arrangement_id"] == arr["arrangement_id"]
            )
            assert view["apply_count"] == expected

    def test_non_student_roles_get_has_applied_false(self, seeded, company):
        view = seeded.presentations.arrangement_detail(company, "A1")
        assert view["has_applied"] is False


class TestRegister:
    def test_first_registration_succeeds(self, seeded):
        s7 = token_for(seeded, Role.STUDENT, "S7")
        registration = seeded.presentations.register_for_arrangement(s7, "A1")
        assert registration.id is not None
        assert seeded.store.count(
            "registration", {"student_id": "S7", "arrangement_id": "A1"}
        ) == 1

    def test_duplicate_rejected(self, seeded, student):
        with pytest.raises(AlreadyApplied):
            seeded.presentations.register_for_arrangement(student, "A1")  # S1 already in

    def test_full_rejected(self, seeded):
        s7 = token_for(seeded, Role.STUDENT, "S7")
        with pytest.raises(Full):
            seeded.presentations.register_for_arrangement(s7, "A2")  # capacity 2, 2 taken

    def test_capacity_enforcement_can_be_disabled(self, tmp_path, clock):
        from conftest import make_bundle
        from campus_recruit.store import seed_store

        bundle = make_bundle(tmp_path, clock, enforce_capacity=False)
        seed_store(bundle.store)
        s7 = token_for(bundle, Role.STUDENT, "S7")
        assert bundle.presentations.register_for_arrangement(s7, "A2").id is not None

    def test_closed_after_start(self, seeded, clock):
        clock.now = oracles.iso_to_epoch("2099-03-01T09:00:01Z")
        s7 = token_for(seeded, Role.STUDENT, "S7")  # session issued post-jump
        with pytest.raises(Closed):
            seeded.presentations.register_for_arrangement(s7, "A1")

    def test_missing_arrangement(self, seeded, student):
        with pytest.raises(NotFound):
            seeded.presentations.register_for_arrangement(student, "A99")

    def test_concurrent_race_admits_exactly_one(self, tmp_path, clock, admin_unused=None):
        from conftest import make_bundle
        from campus_recruit.store import seed_store

        bundle = make_bundle(
            tmp_path, clock, store_path=str(tmp_path / "race.db")
        )
        seed_store(bundle.store)
        admin = token_for(bundle, Role.ADMIN, "A1")
        company = token_for(bundle, Role.COMPANY, "CO1")
        app = bundle.presentations.apply_for_presentation(company, request_payload())
        _, arrangement = bundle.presentations.review_presentation(
            admin, app.application_id, "Approve", schedule_payload(max_participants=1)
        )
        students = [f"S{i}" for i in range(1, 9)]
        tokens = {s: token_for(bundle, Role.STUDENT, s) for s in students}
        barrier = threading.Barrier(len(students))
        outcomes = []
        lock = threading.Lock()

        def attempt(sid):
            barrier.wait()
            try:
                bundle.presentations.register_for_arrangement(
                    tokens[sid], arrangement.arrangement_id
                )
                result = "ok"
            except Full:
                result = "full"
            except AlreadyApplied:
                result = "dup"
            with lock:
                outcomes.append(result)

        threads = [threading.Thread(target=attempt, args=(s,)) for s in students]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert outcomes.count("ok") == 1
        assert len(outcomes) == 8
        assert bundle.store.count(
            "registration", {"arrangement_id": arrangement.arrangement_id}
        ) == 1


class TestMyRegistrations:
    def test_fixture_s1(self, seeded, student, fixture_doc):
        rows = seeded.presentations.list_my_registrations(student)
        expected = {
            r["arrangement_id"] for r in fixture_doc["registrations"] if r["student_id"] == "S1"
        }
        assert {r["arrangement"].arrangement_id for r in rows} == expected

    def test_sorted_by_start(self, seeded, student):
        rows = seeded.presentations.list_my_registrations(student)
        starts = [r["arrangement"].start_time for r in rows]
        assert starts == sorted(starts)

    def test_none_registered(self, seeded):
        s8 = token_for(seeded, Role.STUDENT, "S8")
        assert seeded.presentations.list_my_registrations(s8) == []

    def test_join_oracle_equality(self, seeded, fixture_doc):
        for sid in ("S1", "S2", "S3", "S4", "S5"):
            token = token_for(seeded, Role.STUDENT, sid)
            got = {
                r["arrangement"].arrangement_id
                for r in seeded.presentations.list_my_registrations(token)
            }
            expected = {
                r["arrangement_id"]
                for r in fixture_doc["registrations"]
                if r["student_id"] == sid
            }
            assert got == expected

    def test_unknown_student_session(self, seeded):
        ghost = token_for(seeded, Role.STUDENT, "SGHOST")
        with pytest.raises(Unauthorized):
            seeded.presentations.list_my_registrations(ghost)


class TestUpdateArrangement:
    def test_admin_full_field_update_keeps_audit_stamp(self, seeded, admin, clock):
        updated = seeded.presentations.update_arrangement(
            admin, "A1", {"place": "Auditorium B", "max_participants": 150}
        )
        assert updated.place == "Auditorium B"
        assert updated.updated_at == clock.now

    def test_non_admin_forbidden(self, seeded, company):
        with pytest.raises(Forbidden):
            seeded.presentations.update_arrangement(company, "A1", {"place": "X"})

    def test_validation_on_merge(self, seeded, admin):
        with pytest.raises(ValidationError):
            seeded.presentations.update_arrangement(admin, "A1", {"max_participants": 0})
