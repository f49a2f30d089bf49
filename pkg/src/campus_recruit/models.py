"""Persistent entity types, field constraints, and referential structure.

Pure value types: every constructor enforces its field limits, so an entity
instance is valid by construction.  No I/O happens here; uniqueness and
foreign-key existence are the store's job, hierarchy consistency has a pure
checker (`validate_hierarchy`) the owning workflows call.

Timestamps are integer epoch seconds internally and ISO-8601 UTC text
(`2026-03-01T09:00:00Z`) at every interface; calendar dates are ISO date
text (`2003-05-14`).
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from datetime import date, datetime, timezone
from enum import Enum
from typing import Mapping

from .errors import ForeignKeyViolation, ValidationError

# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------


class Role(str, Enum):
    STUDENT = "Student"
    COMPANY = "Company"
    ADMIN = "Admin"


class ApprovalStatus(str, Enum):
    """Review state of a company registration."""

    PENDING = "Pending"
    APPROVED = "Approved"
    REJECTED = "Rejected"


class PresentationStatus(str, Enum):
    """Review state of a presentation application; transitions are one-shot."""

    PENDING = "Pending"
    APPROVED = "Approved"
    REJECTED = "Rejected"


class FeedbackResult(str, Enum):
    """Employer's response to a resume application."""

    REVIEWED = "Reviewed"
    INTERVIEW_SCHEDULED = "InterviewScheduled"
    NOT_SELECTED = "NotSelected"


class ApplicationStatus(str, Enum):
    """Student-visible application stage, derived, never stored."""

    SUBMITTED = "Submitted"
    VIEWED = "Viewed"
    RESPONDED = "Responded"


#: recruit_type values: 0 = full-time, 1 = internship
RECRUIT_TYPES = (0, 1)

# ---------------------------------------------------------------------------
# Time helpers
# ---------------------------------------------------------------------------

_TS_FORMAT = "%Y-%m-%dT%H:%M:%SZ"


def format_timestamp(epoch: int) -> str:
    """Render epoch seconds as ISO-8601 UTC text."""
    return datetime.fromtimestamp(int(epoch), tz=timezone.utc).strftime(_TS_FORMAT)


def parse_timestamp(value: str | int) -> int:
    """Accept epoch seconds or ISO-8601 text (Z or explicit offset)."""
    if isinstance(value, bool):
        raise ValidationError("timestamp must be epoch seconds or ISO-8601 text")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return int(value)
    if not isinstance(value, str):
        raise ValidationError("timestamp must be epoch seconds or ISO-8601 text")
    text = value.strip()
    try:
        dt = datetime.fromisoformat(text.replace("Z", "+00:00"))
    except ValueError:
        raise ValidationError(f"invalid timestamp: {value!r}") from None
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return int(dt.timestamp())


def parse_date(value: str) -> str:
    """Validate ISO calendar-date text and return it normalized."""
    if not isinstance(value, str):
        raise ValidationError("date must be ISO text (YYYY-MM-DD)")
    try:
        return date.fromisoformat(value.strip()).isoformat()
    except ValueError:
        raise ValidationError(f"invalid date: {value!r}") from None


# ---------------------------------------------------------------------------
# Validation helpers
# ---------------------------------------------------------------------------


def _fail(field_name: str, message: str) -> ValidationError:
    return ValidationError(
        f"{field_name}: {message}", details=[{"field": field_name, "message": message}]
    )


def _text(value, field_name: str, *, max_len: int | None = None, required: bool = True) -> str:
    if value is None:
        if required:
            raise _fail(field_name, "is required")
        return value
    if not isinstance(value, str):
        raise _fail(field_name, "must be text")
    if required and not value:
        raise _fail(field_name, "must be non-empty")
    if max_len is not None and len(value) > max_len:
        raise _fail(field_name, f"longer than {max_len} characters")
    return value


def _ident(value, field_name: str) -> str:
    # Identifier columns are varchar(20) throughout the schema.
    return _text(value, field_name, max_len=20)


def _int(value, field_name: str, *, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(field_name, "must be an integer")
    if minimum is not None and value < minimum:
        raise _fail(field_name, f"must be >= {minimum}")
    return value


def _opt_int(value, field_name: str) -> int | None:
    if value is None:
        return None
    return _int(value, field_name)


def _enum(value, field_name: str, enum_cls):
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(m.value for m in enum_cls)
        raise _fail(field_name, f"must be one of: {allowed}") from None


# ---------------------------------------------------------------------------
# Dictionary and hierarchy entities
# ---------------------------------------------------------------------------


@dataclass
class College:
    college_id: str
    college_name: str

    def __post_init__(self):
        self.college_id = _text(self.college_id, "college_id", max_len=20)
        self.college_name = _text(self.college_name, "college_name", max_len=20)


@dataclass
class Major:
    major_id: str
    major_name: str
    college_id: str

    def __post_init__(self):
        self.major_id = _ident(self.major_id, "major_id")
        self.major_name = _text(self.major_name, "major_name")
        self.college_id = _ident(self.college_id, "college_id")


@dataclass
class ClassGroup:
    class_id: str
    class_name: str
    major_id: str

    def __post_init__(self):
        self.class_id = _ident(self.class_id, "class_id")
        self.class_name = _text(self.class_name, "class_name")
        self.major_id = _ident(self.major_id, "major_id")


@dataclass
class EducationLevel:
    """Credential dictionary entry; `rank` orders levels lowest to highest."""

    education_id: str
    education_name: str
    rank: int

    def __post_init__(self):
        self.education_id = _ident(self.education_id, "education_id")
        self.education_name = _text(self.education_name, "education_name")
        self.rank = _int(self.rank, "rank")


@dataclass
class Industry:
    industry_id: str
    industry_name: str

    def __post_init__(self):
        self.industry_id = _ident(self.industry_id, "industry_id")
        self.industry_name = _text(self.industry_name, "industry_name")


# ---------------------------------------------------------------------------
# Principals
# ---------------------------------------------------------------------------


@dataclass
class Student:
    student_id: str
    name: str
    sex: str
    birthday: str
    phone: str
    email: str
    password_digest: str
    college_id: str
    major_id: str
    class_id: str
    education_id: str

    def __post_init__(self):
        self.student_id = _ident(self.student_id, "student_id")
        self.name = _text(self.name, "name")
        self.sex = _text(self.sex, "sex", max_len=10)
        self.birthday = parse_date(self.birthday)
        self.phone = _text(self.phone, "phone", max_len=20)
        self.email = _text(self.email, "email", max_len=20)
        if "@" not in self.email:
            raise _fail("email", "must contain '@'")
        self.password_digest = _text(self.password_digest, "password_digest")
        self.college_id = _ident(self.college_id, "college_id")
        self.major_id = _ident(self.major_id, "major_id")
        self.class_id = _ident(self.class_id, "class_id")
        self.education_id = _ident(self.education_id, "education_id")


@dataclass
class Administrator:
    admin_id: str
    name: str
    phone: str
    sex: str
    email: str
    password_digest: str

    def __post_init__(self):
        self.admin_id = _ident(self.admin_id, "admin_id")
        self.name = _text(self.name, "name")
        self.phone = _text(self.phone, "phone", max_len=10)
        self.sex = _text(self.sex, "sex")
        self.email = _text(self.email, "email")
        self.password_digest = _text(self.password_digest, "password_digest")


@dataclass
class Company:
    company_id: str
    company_name: str
    industry_id: str
    phone: str
    scale: str
    address: str
    established: str
    capital: str
    detail: str
    worktime: str
    email: str
    password_digest: str
    approval_status: ApprovalStatus = ApprovalStatus.PENDING
    reviewed_at: int | None = None
    review_note: str | None = None

    def __post_init__(self):
        self.company_id = _ident(self.company_id, "company_id")
        self.company_name = _text(self.company_name, "company_name")
        self.industry_id = _ident(self.industry_id, "industry_id")
        self.phone = _text(self.phone, "phone", max_len=20)
        self.scale = _text(self.scale, "scale", max_len=20)
        self.address = _text(self.address, "address")
        self.established = parse_date(self.established)
        self.capital = _text(self.capital, "capital", max_len=20)
        # detail is long text by design; worktime capped per schema
        self.detail = _text(self.detail, "detail", required=False) or ""
        self.worktime = _text(self.worktime, "worktime", max_len=100)
        self.email = _text(self.email, "email")
        self.password_digest = _text(self.password_digest, "password_digest")
        self.approval_status = _enum(self.approval_status, "approval_status", ApprovalStatus)
        self.reviewed_at = _opt_int(self.reviewed_at, "reviewed_at")
        self.review_note = _text(self.review_note, "review_note", max_len=400, required=False)


# ---------------------------------------------------------------------------
# Recruitment entities
# ---------------------------------------------------------------------------


@dataclass
class JobPosting:
    recruit_id: str | None
    company_id: str
    position_id: str
    education_id: str
    linkman_name: str
    linkman_email: str
    company_type: str
    place: str
    city: str
    number: int
    salary: int
    recruit_type: int
    experience: str
    time: str
    deadline: int
    detail: str
    withdrawn: bool = False

    def __post_init__(self):
        # recruit_id may be absent before the store assigns one
        if self.recruit_id is not None:
            self.recruit_id = _ident(self.recruit_id, "recruit_id")
        self.company_id = _ident(self.company_id, "company_id")
        self.position_id = _ident(self.position_id, "position_id")
        self.education_id = _ident(self.education_id, "education_id")
        self.linkman_name = _text(self.linkman_name, "linkman_name", max_len=20)
        self.linkman_email = _text(self.linkman_email, "linkman_email", max_len=20)
        self.company_type = _text(self.company_type, "company_type", max_len=20)
        self.place = _text(self.place, "place", max_len=50)
        self.city = _text(self.city, "city", max_len=20)
        self.number = _int(self.number, "number", minimum=1)
        self.salary = _int(self.salary, "salary", minimum=0)
        self.recruit_type = _int(self.recruit_type, "recruit_type")
        if self.recruit_type not in RECRUIT_TYPES:
            raise _fail("recruit_type", "must be 0 (full-time) or 1 (internship)")
        self.experience = _text(self.experience, "experience", max_len=10, required=False) or ""
        self.time = _text(self.time, "time", required=False) or ""
        self.deadline = _int(self.deadline, "deadline")
        self.detail = _text(self.detail, "detail", required=False) or ""
        self.withdrawn = bool(self.withdrawn)


@dataclass
class ResumeApplication:
    resume_id: str | None
    recruit_id: str
    student_id: str
    student_name: str
    education_id: str
    major_id: str
    experience: str
    skill: str
    email: str
    phone: str
    accessory: str | None
    submitted_at: int
    viewed_at: int | None = None
    result: FeedbackResult | None = None

    def __post_init__(self):
        if self.resume_id is not None:
            self.resume_id = _ident(self.resume_id, "resume_id")
        self.recruit_id = _ident(self.recruit_id, "recruit_id")
        self.student_id = _ident(self.student_id, "student_id")
        self.student_name = _text(self.student_name, "student_name", max_len=20)
        self.education_id = _ident(self.education_id, "education_id")
        self.major_id = _ident(self.major_id, "major_id")
        self.experience = _text(self.experience, "experience", max_len=400, required=False) or ""
        self.skill = _text(self.skill, "skill", max_len=400, required=False) or ""
        self.email = _text(self.email, "email", max_len=20)
        self.phone = _text(self.phone, "phone", max_len=20)
        self.accessory = _text(self.accessory, "accessory", max_len=20, required=False)
        self.submitted_at = _int(self.submitted_at, "submitted_at")
        self.viewed_at = _opt_int(self.viewed_at, "viewed_at")
        if self.result is not None:
            self.result = _enum(self.result, "result", FeedbackResult)
        if self.result is not None and self.viewed_at is None:
            raise _fail("result", "cannot be set before the application was viewed")


# ---------------------------------------------------------------------------
# Presentation entities
# ---------------------------------------------------------------------------


@dataclass
class PresentationApplication:
    application_id: str | None
    company_id: str
    requested_start: int
    requested_duration_minutes: int
    theme: str
    expected_attendance: int
    status: PresentationStatus = PresentationStatus.PENDING

    def __post_init__(self):
        if self.application_id is not None:
            self.application_id = _ident(self.application_id, "application_id")
        self.company_id = _ident(self.company_id, "company_id")
        self.requested_start = _int(self.requested_start, "requested_start")
        self.requested_duration_minutes = _int(
            self.requested_duration_minutes, "requested_duration_minutes", minimum=1
        )
        self.theme = _text(self.theme, "theme")
        self.expected_attendance = _int(self.expected_attendance, "expected_attendance", minimum=1)
        self.status = _enum(self.status, "status", PresentationStatus)


@dataclass
class Arrangement:
    arrangement_id: str | None
    application_id: str
    company_id: str
    start_time: int
    duration_minutes: int
    place: str
    max_participants: int
    theme: str
    updated_at: int | None = None

    def __post_init__(self):
        if self.arrangement_id is not None:
            self.arrangement_id = _ident(self.arrangement_id, "arrangement_id")
        self.application_id = _ident(self.application_id, "application_id")
        self.company_id = _ident(self.company_id, "company_id")
        self.start_time = _int(self.start_time, "start_time")
        self.duration_minutes = _int(self.duration_minutes, "duration_minutes", minimum=1)
        self.place = _text(self.place, "place")
        self.max_participants = _int(self.max_participants, "max_participants", minimum=1)
        self.theme = _text(self.theme, "theme")
        self.updated_at = _opt_int(self.updated_at, "updated_at")


@dataclass
class Registration:
    id: int | None
    student_id: str
    arrangement_id: str
    registered_at: int

    def __post_init__(self):
        self.id = _opt_int(self.id, "id")
        self.student_id = _ident(self.student_id, "student_id")
        self.arrangement_id = _ident(self.arrangement_id, "arrangement_id")
        self.registered_at = _int(self.registered_at, "registered_at")


@dataclass
class Notification:
    """In-store inbox record appended when an employer responds."""

    id: int | None
    student_id: str
    resume_id: str
    result: FeedbackResult
    created_at: int

    def __post_init__(self):
        self.id = _opt_int(self.id, "id")
        self.student_id = _ident(self.student_id, "student_id")
        self.resume_id = _ident(self.resume_id, "resume_id")
        self.result = _enum(self.result, "result", FeedbackResult)
        self.created_at = _int(self.created_at, "created_at")


# ---------------------------------------------------------------------------
# Session
# ---------------------------------------------------------------------------


@dataclass
class Session:
    token: str
    role: Role
    principal_id: str
    expires_at: int

    def __post_init__(self):
        self.token = _text(self.token, "token")
        self.role = _enum(self.role, "role", Role)
        self.principal_id = _ident(self.principal_id, "principal_id")
        self.expires_at = _int(self.expires_at, "expires_at")


# ---------------------------------------------------------------------------
# Pure operations
# ---------------------------------------------------------------------------


def validate_hierarchy(
    student: Student,
    colleges: Mapping[str, College],
    majors: Mapping[str, Major],
    class_groups: Mapping[str, ClassGroup],
) -> bool:
    """True iff the student's class belongs to their major, which belongs
    to their college.

    The snapshot must contain the three referenced rows; a dangling
    reference raises :class:`ForeignKeyViolation`.
    """
    if student.college_id not in colleges:
        raise ForeignKeyViolation(f"college_id references missing row: {student.college_id}")
    cls = class_groups.get(student.class_id)
    if cls is None:
        raise ForeignKeyViolation(f"class_id references missing row: {student.class_id}")
    major = majors.get(student.major_id)
    if major is None:
        raise ForeignKeyViolation(f"major_id references missing row: {student.major_id}")
    return cls.major_id == student.major_id and major.college_id == student.college_id


def derive_application_status(app: ResumeApplication) -> ApplicationStatus:
    """Three-stage tracker: Responded once a result exists, Viewed once the
    employer opened it, Submitted otherwise.  Total on valid applications."""
    if app.result is not None:
        return ApplicationStatus.RESPONDED
    if app.viewed_at is not None:
        return ApplicationStatus.VIEWED
    return ApplicationStatus.SUBMITTED


def entity_fields(entity_cls) -> tuple[str, ...]:
    return tuple(f.name for f in fields(entity_cls))
