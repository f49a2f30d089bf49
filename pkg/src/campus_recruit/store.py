"""Durable relational storage with transactions and constraint enforcement.

Backed by SQLite: uniqueness and foreign keys are checked at write time,
writers are serialized (``BEGIN IMMEDIATE`` + busy timeout), and committed
rows survive restart when the store points at a file.  ``:memory:`` stores
serve tests; they share one connection guarded by a re-entrant lock so the
API's worker threads can use them too.

Identifiers the callers do not supply (recruit_id, resume_id,
application_id, arrangement_id, Registration.id) are generated
monotonically by the store.
"""

from __future__ import annotations

import json
import sqlite3
import threading
from contextlib import contextmanager, nullcontext
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Any, Iterator, Mapping, Sequence

from . import models
from .errors import (
    DuplicateKey,
    ForeignKeyViolation,
    QueryError,
    RestrictViolation,
    StoreUnavailable,
    ValidationError,
)

# ---------------------------------------------------------------------------
# Schema registry
# ---------------------------------------------------------------------------

# Column value kinds: text | date | int | ts | bool | enum.
# "ts" columns are integer epoch seconds in rows and ISO-8601 UTC text in
# fixture/JSON records.


@dataclass(frozen=True)
class EntitySpec:
    kind: str
    entity: type
    pk: str
    columns: tuple[tuple[str, str], ...]
    id_prefix: str | None = None  # text pks generated as f"{prefix}{n}"
    auto_pk: bool = False  # integer AUTOINCREMENT pk


_ENUMS: dict[tuple[str, str], type[Enum]] = {
    ("company", "approval_status"): models.ApprovalStatus,
    ("presentation_application", "status"): models.PresentationStatus,
    ("resume_application", "result"): models.FeedbackResult,
    ("notification", "result"): models.FeedbackResult,
}

SPECS: dict[str, EntitySpec] = {
    spec.kind: spec
    for spec in [
        EntitySpec(
            "college",
            models.College,
            "college_id",
            (("college_id", "text"), ("college_name", "text")),
        ),
        EntitySpec(
            "major",
            models.Major,
            "major_id",
            (("major_id", "text"), ("major_name", "text"), ("college_id", "text")),
        ),
        EntitySpec(
            "class_group",
            models.ClassGroup,
            "class_id",
            (("class_id", "text"), ("class_name", "text"), ("major_id", "text")),
        ),
        EntitySpec(
            "education_level",
            models.EducationLevel,
            "education_id",
            (("education_id", "text"), ("education_name", "text"), ("rank", "int")),
        ),
        EntitySpec(
            "industry",
            models.Industry,
            "industry_id",
            (("industry_id", "text"), ("industry_name", "text")),
        ),
        EntitySpec(
            "student",
            models.Student,
            "student_id",
            (
                ("student_id", "text"),
                ("name", "text"),
                ("sex", "text"),
                ("birthday", "date"),
                ("phone", "text"),
                ("email", "text"),
                ("password_digest", "text"),
                ("college_id", "text"),
                ("major_id", "text"),
                ("class_id", "text"),
                ("education_id", "text"),
            ),
        ),
        EntitySpec(
            "administrator",
            models.Administrator,
            "admin_id",
            (
                ("admin_id", "text"),
                ("name", "text"),
                ("phone", "text"),
                ("sex", "text"),
                ("email", "text"),
                ("password_digest", "text"),
            ),
        ),
        EntitySpec(
            "company",
            models.Company,
            "company_id",
            (
                ("company_id", "text"),
                ("company_name", "text"),
                ("industry_id", "text"),
                ("phone", "text"),
                ("scale", "text"),
                ("address", "text"),
                ("established", "date"),
                ("capital", "text"),
                ("detail", "text"),
                ("worktime", "text"),
                ("email", "text"),
                ("password_digest", "text"),
                ("approval_status", "enum"),
                ("reviewed_at", "ts"),
                ("review_note", "text"),
            ),
        ),
        EntitySpec(
            "job_posting",
            models.JobPosting,
            "recruit_id",
            (
                ("recruit_id", "text"),
                ("company_id", "text"),
                ("position_id", "text"),
                ("education_id", "text"),
                ("linkman_name", "text"),
                ("linkman_email", "text"),
                ("company_type", "text"),
                ("place", "text"),
                ("city", "text"),
                ("number", "int"),
                ("salary", "int"),
                ("recruit_type", "int"),
                ("experience", "text"),
                ("time", "text"),
                ("deadline", "ts"),
                ("detail", "text"),
                ("withdrawn", "bool"),
            ),
            id_prefix="J",
        ),
        EntitySpec(
            "resume_application",
            models.ResumeApplication,
            "resume_id",
            (
                ("resume_id", "text"),
                ("recruit_id", "text"),
                ("student_id", "text"),
                ("student_name", "text"),
                ("education_id", "text"),
                ("major_id", "text"),
                ("experience", "text"),
                ("skill", "text"),
                ("email", "text"),
                ("phone", "text"),
                ("accessory", "text"),
                ("submitted_at", "ts"),
                ("viewed_at", "ts"),
                ("result", "enum"),
            ),
            id_prefix="R",
        ),
        EntitySpec(
            "presentation_application",
            models.PresentationApplication,
            "application_id",
            (
                ("application_id", "text"),
                ("company_id", "text"),
                ("requested_start", "ts"),
                ("requested_duration_minutes", "int"),
                ("theme", "text"),
                ("expected_attendance", "int"),
                ("status", "enum"),
            ),
            id_prefix="P",
        ),
        EntitySpec(
            "arrangement",
            models.Arrangement,
            "arrangement_id",
            (
                ("arrangement_id", "text"),
                ("application_id", "text"),
                ("company_id", "text"),
                ("start_time", "ts"),
                ("duration_minutes", "int"),
                ("place", "text"),
                ("max_participants", "int"),
                ("theme", "text"),
                ("updated_at", "ts"),
            ),
            id_prefix="A",
        ),
        EntitySpec(
            "registration",
            models.Registration,
            "id",
            (
                ("id", "int"),
                ("student_id", "text"),
                ("arrangement_id", "text"),
                ("registered_at", "ts"),
            ),
            auto_pk=True,
        ),
        EntitySpec(
            "notification",
            models.Notification,
            "id",
            (
                ("id", "int"),
                ("student_id", "text"),
                ("resume_id", "text"),
                ("result", "enum"),
                ("created_at", "ts"),
            ),
            auto_pk=True,
        ),
    ]
}

KINDS = tuple(SPECS)

_KIND_BY_ENTITY = {spec.entity: spec.kind for spec in SPECS.values()}

SCHEMA_SQL = """
CREATE TABLE IF NOT EXISTS college (
    college_id   TEXT PRIMARY KEY,
    college_name TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS major (
    major_id   TEXT PRIMARY KEY,
    major_name TEXT NOT NULL,
    college_id TEXT NOT NULL REFERENCES college(college_id)
);
CREATE TABLE IF NOT EXISTS class_group (
    class_id   TEXT PRIMARY KEY,
    class_name TEXT NOT NULL,
    major_id   TEXT NOT NULL REFERENCES major(major_id)
);
CREATE TABLE IF NOT EXISTS education_level (
    education_id   TEXT PRIMARY KEY,
    education_name TEXT NOT NULL UNIQUE,
    rank           INTEGER NOT NULL UNIQUE
);
CREATE TABLE IF NOT EXISTS industry (
    industry_id   TEXT PRIMARY KEY,
    industry_name TEXT NOT NULL UNIQUE
);
CREATE TABLE IF NOT EXISTS student (
    student_id      TEXT PRIMARY KEY,
    name            TEXT NOT NULL,
    sex             TEXT NOT NULL,
    birthday        TEXT NOT NULL,
    phone           TEXT NOT NULL,
    email           TEXT NOT NULL,
    password_digest TEXT NOT NULL,
    college_id      TEXT NOT NULL REFERENCES college(college_id),
    major_id        TEXT NOT NULL REFERENCES major(major_id),
    class_id        TEXT NOT NULL REFERENCES class_group(class_id),
    education_id    TEXT NOT NULL REFERENCES education_level(education_id)
);
CREATE TABLE IF NOT EXISTS administrator (
    admin_id        TEXT PRIMARY KEY,
    name            TEXT NOT NULL,
    phone           TEXT NOT NULL,
    sex             TEXT NOT NULL,
    email           TEXT NOT NULL,
    password_digest TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS company (
    company_id      TEXT PRIMARY KEY,
    company_name    TEXT NOT NULL,
    industry_id     TEXT NOT NULL REFERENCES industry(industry_id),
    phone           TEXT NOT NULL,
    scale           TEXT NOT NULL,
    address         TEXT NOT NULL,
    established     TEXT NOT NULL,
    capital         TEXT NOT NULL,
    detail          TEXT NOT NULL DEFAULT '',
    worktime        TEXT NOT NULL,
    email           TEXT NOT NULL,
    password_digest TEXT NOT NULL,
    approval_status TEXT NOT NULL DEFAULT 'Pending',
    reviewed_at     INTEGER,
    review_note     TEXT
);
CREATE TABLE IF NOT EXISTS job_posting (
    recruit_id    TEXT PRIMARY KEY,
    company_id    TEXT NOT NULL REFERENCES company(company_id),
    position_id   TEXT NOT NULL,
    education_id  TEXT NOT NULL REFERENCES education_level(education_id),
    linkman_name  TEXT NOT NULL,
    linkman_email TEXT NOT NULL,
    company_type  TEXT NOT NULL,
    place         TEXT NOT NULL,
    city          TEXT NOT NULL,
    number        INTEGER NOT NULL,
    salary        INTEGER NOT NULL,
    recruit_type  INTEGER NOT NULL,
    experience    TEXT NOT NULL DEFAULT '',
    time          TEXT NOT NULL DEFAULT '',
    deadline      INTEGER NOT NULL,
    detail        TEXT NOT NULL DEFAULT '',
    withdrawn     INTEGER NOT NULL DEFAULT 0
);
CREATE TABLE IF NOT EXISTS resume_application (
    resume_id    TEXT PRIMARY KEY,
    recruit_id   TEXT NOT NULL REFERENCES job_posting(recruit_id),
    student_id   TEXT NOT NULL REFERENCES student(student_id),
    student_name TEXT NOT NULL,
    education_id TEXT NOT NULL REFERENCES education_level(education_id),
    major_id     TEXT NOT NULL REFERENCES major(major_id),
    experience   TEXT NOT NULL DEFAULT '',
    skill        TEXT NOT NULL DEFAULT '',
    email        TEXT NOT NULL,
    phone        TEXT NOT NULL,
    accessory    TEXT,
    submitted_at INTEGER NOT NULL,
    viewed_at    INTEGER,
    result       TEXT,
    UNIQUE (recruit_id, student_id)
);
CREATE TABLE IF NOT EXISTS presentation_application (
    application_id             TEXT PRIMARY KEY,
    company_id                 TEXT NOT NULL REFERENCES company(company_id),
    requested_start            INTEGER NOT NULL,
    requested_duration_minutes INTEGER NOT NULL,
    theme                      TEXT NOT NULL,
    expected_attendance        INTEGER NOT NULL,
    status                     TEXT NOT NULL DEFAULT 'Pending'
);
CREATE TABLE IF NOT EXISTS arrangement (
    arrangement_id   TEXT PRIMARY KEY,
    application_id   TEXT NOT NULL UNIQUE REFERENCES presentation_application(application_id),
    company_id       TEXT NOT NULL REFERENCES company(company_id),
    start_time       INTEGER NOT NULL,
    duration_minutes INTEGER NOT NULL,
    place            TEXT NOT NULL,
    max_participants INTEGER NOT NULL,
    theme            TEXT NOT NULL,
    updated_at       INTEGER
);
CREATE TABLE IF NOT EXISTS registration (
    id             INTEGER PRIMARY KEY AUTOINCREMENT,
    student_id     TEXT NOT NULL REFERENCES student(student_id),
    arrangement_id TEXT NOT NULL REFERENCES arrangement(arrangement_id) ON DELETE CASCADE,
    registered_at  INTEGER NOT NULL,
    UNIQUE (student_id, arrangement_id)
);
CREATE TABLE IF NOT EXISTS notification (
    id         INTEGER PRIMARY KEY AUTOINCREMENT,
    student_id TEXT NOT NULL REFERENCES student(student_id),
    resume_id  TEXT NOT NULL REFERENCES resume_application(resume_id),
    result     TEXT NOT NULL,
    created_at INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS id_sequence (
    kind       TEXT PRIMARY KEY,
    next_value INTEGER NOT NULL
);
"""


def spec_for(kind: str) -> EntitySpec:
    spec = SPECS.get(kind)
    if spec is None:
        raise QueryError(f"unknown entity kind: {kind}")
    return spec


def kind_of(entity: Any) -> str:
    kind = _KIND_BY_ENTITY.get(type(entity))
    if kind is None:
        raise QueryError(f"unknown entity type: {type(entity).__name__}")
    return kind


# ---------------------------------------------------------------------------
# Row / record conversion
# ---------------------------------------------------------------------------


def entity_to_row(kind: str, entity: Any) -> dict[str, Any]:
    row: dict[str, Any] = {}
    for name, col_kind in spec_for(kind).columns:
        value = getattr(entity, name)
        if isinstance(value, Enum):
            value = value.value
        elif col_kind == "bool":
            value = int(bool(value))
        row[name] = value
    return row


def row_to_entity(kind: str, row: Mapping[str, Any]) -> Any:
    spec = spec_for(kind)
    kwargs: dict[str, Any] = {}
    for name, col_kind in spec.columns:
        value = row[name]
        if value is not None:
            if col_kind == "bool":
                value = bool(value)
            elif col_kind == "enum":
                value = _ENUMS[(kind, name)](value)
        kwargs[name] = value
    return spec.entity(**kwargs)


def entity_to_record(entity: Any) -> dict[str, Any]:
    """JSON projection: snake_case fields, ISO-8601 timestamps, enum values."""
    kind = kind_of(entity)
    record: dict[str, Any] = {}
    for name, col_kind in spec_for(kind).columns:
        value = getattr(entity, name)
        if value is None:
            record[name] = None
        elif col_kind == "ts":
            record[name] = models.format_timestamp(value)
        elif isinstance(value, Enum):
            record[name] = value.value
        elif col_kind == "bool":
            record[name] = bool(value)
        else:
            record[name] = value
    return record


def record_to_entity(kind: str, record: Mapping[str, Any]) -> Any:
    spec = spec_for(kind)
    kwargs: dict[str, Any] = {}
    for name, col_kind in spec.columns:
        value = record.get(name)
        if value is not None and col_kind == "ts":
            value = models.parse_timestamp(value)
        kwargs[name] = value
    return spec.entity(**kwargs)


def _map_write_error(exc: sqlite3.IntegrityError) -> Exception:
    msg = str(exc)
    if "UNIQUE" in msg:
        return DuplicateKey(f"uniqueness violated: {msg.split(':')[-1].strip()}")
    if "FOREIGN KEY" in msg:
        return ForeignKeyViolation("foreign reference does not resolve")
    if "NOT NULL" in msg:
        return ValidationError(f"missing required value: {msg.split(':')[-1].strip()}")
    return ValidationError(msg)


# ---------------------------------------------------------------------------
# Transactions
# ---------------------------------------------------------------------------


class TransactionHandle:
    """Single unit of work; unusable after commit or rollback."""

    OPEN = "Open"
    COMMITTED = "Committed"
    ROLLED_BACK = "RolledBack"

    def __init__(self, store: "Store", conn: sqlite3.Connection):
        self._store = store
        self._conn = conn
        self.state = self.OPEN

    def _cursor(self) -> sqlite3.Cursor:
        if self.state != self.OPEN:
            raise StoreUnavailable(f"transaction already {self.state.lower()}")
        return self._conn.cursor()

    # -- writes ------------------------------------------------------------

    def save(self, entity: Any) -> Any:
        """Insert a validated entity; assigns the id when the caller left it
        unset.  Raises DuplicateKey / ForeignKeyViolation at write time."""
        kind = kind_of(entity)
        spec = SPECS[kind]
        cur = self._cursor()
        if getattr(entity, spec.pk) is None and spec.id_prefix:
            setattr(entity, spec.pk, self._next_text_id(cur, kind, spec.id_prefix))
        row = entity_to_row(kind, entity)
        if spec.auto_pk and row[spec.pk] is None:
            del row[spec.pk]
        columns = ", ".join(row)
        placeholders = ", ".join("?" for _ in row)
        try:
            cur.execute(
                f"INSERT INTO {kind} ({columns}) VALUES ({placeholders})",
                tuple(row.values()),
            )
        except sqlite3.IntegrityError as exc:
            raise _map_write_error(exc) from None
        if spec.auto_pk and getattr(entity, spec.pk) is None:
            setattr(entity, spec.pk, cur.lastrowid)
        return entity

    def update(self, kind: str, entity_id: Any, changes: Mapping[str, Any]) -> int:
        """Set the given columns on one row; returns affected row count."""
        spec = spec_for(kind)
        valid = {name for name, _ in spec.columns}
        unknown = set(changes) - valid
        if unknown:
            raise QueryError(f"unknown fields for {kind}: {sorted(unknown)}")
        if not changes:
            return 0
        values = []
        for name in changes:
            value = changes[name]
            if isinstance(value, Enum):
                value = value.value
            elif isinstance(value, bool):
                value = int(value)
            values.append(value)
        assignments = ", ".join(f"{name} = ?" for name in changes)
        cur = self._cursor()
        try:
            cur.execute(
                f"UPDATE {kind} SET {assignments} WHERE {spec.pk} = ?",
                (*values, entity_id),
            )
        except sqlite3.IntegrityError as exc:
            raise _map_write_error(exc) from None
        return cur.rowcount

    def delete(self, kind: str, entity_id: Any) -> int:
        """Remove one row; restrict policy — dependents block the delete
        (registrations cascade with their arrangement)."""
        spec = spec_for(kind)
        cur = self._cursor()
        try:
            cur.execute(f"DELETE FROM {kind} WHERE {spec.pk} = ?", (entity_id,))
        except sqlite3.IntegrityError as exc:
            if "FOREIGN KEY" in str(exc):
                raise RestrictViolation(
                    f"{kind} {entity_id!r} still has dependent rows"
                ) from None
            raise _map_write_error(exc) from None
        return cur.rowcount

    def _next_text_id(self, cur: sqlite3.Cursor, kind: str, prefix: str) -> str:
        spec = SPECS[kind]
        while True:
            cur.execute("SELECT next_value FROM id_sequence WHERE kind = ?", (kind,))
            row = cur.fetchone()
            if row is None:
                n = 1
                cur.execute(
                    "INSERT INTO id_sequence (kind, next_value) VALUES (?, ?)", (kind, 2)
                )
            else:
                n = row[0]
                cur.execute(
                    "UPDATE id_sequence SET next_value = ? WHERE kind = ?", (n + 1, kind)
                )
            candidate = f"{prefix}{n}"
            cur.execute(f"SELECT 1 FROM {kind} WHERE {spec.pk} = ?", (candidate,))
            if cur.fetchone() is None:
                return candidate

    # -- reads inside the transaction ---------------------------------------

    def find_by_id(self, kind: str, entity_id: Any) -> Any | None:
        return self._store._find(self._cursor(), kind, entity_id)

    def query(self, kind: str, filters=None, order=None, offset: int = 0, limit=None):
        return self._store._query(self._cursor(), kind, filters, order, offset, limit)

    def count(self, kind: str, filters=None) -> int:
        return self._store._count(self._cursor(), kind, filters)


# ---------------------------------------------------------------------------
# Store
# ---------------------------------------------------------------------------


class Store:
    """Relational store over one SQLite database (file path or ':memory:')."""

    def __init__(self, location: str | Path = ":memory:", busy_timeout_ms: int = 5000):
        if busy_timeout_ms < 0:
            raise ValidationError("busy_timeout_ms must be >= 0")
        self.location = str(location)
        self.busy_timeout_ms = busy_timeout_ms
        self._memory = self.location == ":memory:"
        self._local = threading.local()
        self._lock = threading.RLock()
        if self._memory:
            # one shared connection; the lock serializes all access
            self._shared_conn = self._connect()
        else:
            self._shared_conn = None

    # -- connections ---------------------------------------------------------

    def _connect(self) -> sqlite3.Connection:
        try:
            conn = sqlite3.connect(
                self.location,
                timeout=self.busy_timeout_ms / 1000.0,
                isolation_level=None,  # explicit BEGIN in transaction()
                check_same_thread=False,
            )
        except sqlite3.OperationalError as exc:
            raise StoreUnavailable(f"cannot open store at {self.location}: {exc}") from None
        conn.row_factory = sqlite3.Row
        conn.execute("PRAGMA foreign_keys = ON")
        conn.execute(f"PRAGMA busy_timeout = {int(self.busy_timeout_ms)}")
        if not self._memory:
            conn.execute("PRAGMA journal_mode = WAL")
        return conn

    def _connection(self) -> sqlite3.Connection:
        if self._memory:
            return self._shared_conn
        conn = getattr(self._local, "conn", None)
        if conn is None:
            conn = self._connect()
            self._local.conn = conn
        return conn

    def _guard(self):
        # memory stores share one connection; serialize every operation
        return self._lock if self._memory else nullcontext()

    def close(self) -> None:
        if self._memory:
            self._shared_conn.close()
        else:
            conn = getattr(self._local, "conn", None)
            if conn is not None:
                conn.close()
                self._local.conn = None

    # -- schema ----------------------------------------------------------------

    def migrate(self) -> None:
        """Create any missing tables; idempotent."""
        with self._guard():
            try:
                self._connection().executescript(SCHEMA_SQL)
            except sqlite3.OperationalError as exc:
                raise StoreUnavailable(f"migration failed: {exc}") from None

    # -- transactions ------------------------------------------------------------

    @contextmanager
    def transaction(self) -> Iterator[TransactionHandle]:
        """Open a write transaction; commits on clean exit, rolls back on
        error.  Writers across threads/processes serialize on the database."""
        conn = self._connection()
        if self._memory:
            self._lock.acquire()
        try:
            try:
                conn.execute("BEGIN IMMEDIATE")
            except sqlite3.OperationalError as exc:
                raise StoreUnavailable(f"cannot begin transaction: {exc}") from None
            tx = TransactionHandle(self, conn)
            try:
                yield tx
            except BaseException:
                if tx.state == TransactionHandle.OPEN:
                    conn.execute("ROLLBACK")
                    tx.state = TransactionHandle.ROLLED_BACK
                raise
            else:
                if tx.state == TransactionHandle.OPEN:
                    try:
                        conn.execute("COMMIT")
                    except sqlite3.OperationalError as exc:
                        conn.execute("ROLLBACK")
                        tx.state = TransactionHandle.ROLLED_BACK
                        raise StoreUnavailable(f"commit failed: {exc}") from None
                    tx.state = TransactionHandle.COMMITTED
        finally:
            if self._memory:
                self._lock.release()

    # -- reads -------------------------------------------------------------------

    def find_by_id(self, kind: str, entity_id: Any) -> Any | None:
        with self._guard():
            return self._find(self._connection().cursor(), kind, entity_id)

    def query(
        self,
        kind: str,
        filters: Mapping[str, Any] | None = None,
        order: Sequence[str | tuple[str, str]] | None = None,
        offset: int = 0,
        limit: int | None = None,
    ) -> list[Any]:
        """Equality-conjunction filter, explicit ordering, then primary key
        ascending; equals a naive full scan on the same predicates."""
        with self._guard():
            return self._query(self._connection().cursor(), kind, filters, order, offset, limit)

    def count(self, kind: str, filters: Mapping[str, Any] | None = None) -> int:
        with self._guard():
            return self._count(self._connection().cursor(), kind, filters)

    def dump_rows(self, kind: str) -> list[dict[str, Any]]:
        """Raw rows ordered by primary key; feed for oracles and sweeps."""
        spec = spec_for(kind)
        with self._guard():
            cur = self._connection().cursor()
            cur.execute(f"SELECT * FROM {kind} ORDER BY {spec.pk} ASC")
            return [dict(row) for row in cur.fetchall()]

    # -- shared read implementations ----------------------------------------------

    def _find(self, cur: sqlite3.Cursor, kind: str, entity_id: Any) -> Any | None:
        spec = spec_for(kind)
        try:
            cur.execute(f"SELECT * FROM {kind} WHERE {spec.pk} = ?", (entity_id,))
        except sqlite3.OperationalError as exc:
            raise StoreUnavailable(str(exc)) from None
        row = cur.fetchone()
        return row_to_entity(kind, row) if row is not None else None

    def _build_where(self, spec: EntitySpec, filters) -> tuple[str, list]:
        if not filters:
            return "", []
        valid = {name for name, _ in spec.columns}
        clauses, params = [], []
        for name, value in filters.items():
            if name not in valid:
                raise QueryError(f"unknown field for {spec.kind}: {name}")
            if isinstance(value, Enum):
                value = value.value
            elif isinstance(value, bool):
                value = int(value)
            if value is None:
                clauses.append(f"{name} IS NULL")
            else:
                clauses.append(f"{name} = ?")
                params.append(value)
        return " WHERE " + " AND ".join(clauses), params

    def _query(self, cur, kind, filters, order, offset, limit) -> list[Any]:
        spec = spec_for(kind)
        where, params = self._build_where(spec, filters)
        valid = {name for name, _ in spec.columns}
        order_terms = []
        for term in order or []:
            if isinstance(term, str):
                name, direction = term, "asc"
            else:
                name, direction = term
            if name not in valid:
                raise QueryError(f"unknown field for {kind}: {name}")
            if direction.lower() not in ("asc", "desc"):
                raise QueryError(f"bad sort direction: {direction}")
            order_terms.append(f"{name} {direction.upper()}")
        order_terms.append(f"{spec.pk} ASC")
        sql = f"SELECT * FROM {kind}{where} ORDER BY {', '.join(order_terms)}"
        if limit is not None or offset:
            sql += " LIMIT ? OFFSET ?"
            params = [*params, -1 if limit is None else int(limit), int(offset)]
        try:
            cur.execute(sql, params)
        except sqlite3.OperationalError as exc:
            raise StoreUnavailable(str(exc)) from None
        return [row_to_entity(kind, row) for row in cur.fetchall()]

    def _count(self, cur, kind, filters) -> int:
        spec = spec_for(kind)
        where, params = self._build_where(spec, filters)
        cur.execute(f"SELECT COUNT(*) FROM {kind}{where}", params)
        return int(cur.fetchone()[0])


# ---------------------------------------------------------------------------
# Seed fixture
# ---------------------------------------------------------------------------

#: fixture key -> entity kind, in dependency order
FIXTURE_ORDER: tuple[tuple[str, str], ...] = (
    ("colleges", "college"),
    ("majors", "major"),
    ("class_groups", "class_group"),
    ("education_levels", "education_level"),
    ("industries", "industry"),
    ("students", "student"),
    ("administrators", "administrator"),
    ("companies", "company"),
    ("job_postings", "job_posting"),
    ("resume_applications", "resume_application"),
    ("presentation_applications", "presentation_application"),
    ("arrangements", "arrangement"),
    ("registrations", "registration"),
)


def load_default_fixture() -> dict:
    text = resources.files("campus_recruit.fixtures").joinpath("seed.json").read_text()
    return json.loads(text)


def seed_store(store: Store, fixture: Mapping[str, Any] | None = None) -> int:
    """Load a fixture document; idempotent by primary key.  Returns the
    number of rows inserted."""
    data = fixture if fixture is not None else load_default_fixture()
    inserted = 0
    with store.transaction() as tx:
        for key, kind in FIXTURE_ORDER:
            spec = SPECS[kind]
            for record in data.get(key, []):
                entity = record_to_entity(kind, record)
                pk_value = getattr(entity, spec.pk)
                if pk_value is not None and tx.find_by_id(kind, pk_value) is not None:
                    continue
                tx.save(entity)
                inserted += 1
    return inserted


def dump_store(store: Store) -> dict:
    """Fixture-shaped JSON projection of the whole store."""
    out: dict[str, list] = {}
    for key, kind in FIXTURE_ORDER:
        out[key] = [entity_to_record(e) for e in store.query(kind)]
    return out
