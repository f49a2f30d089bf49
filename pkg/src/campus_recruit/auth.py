"""Credential verification, session issuance/expiry, and RBAC decisions.

Passwords are stored as salted PBKDF2 digests only; no operation returns or
logs a password or digest.  Login failure for an unknown id and for a wrong
password is deliberately byte-identical at the surface.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
import threading
import time
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .errors import (
    CompanyNotApproved,
    Forbidden,
    InvalidCredentials,
    Unauthorized,
    ValidationError,
)
from .models import ApprovalStatus, Role, Session
from .store import Store

_LOGIN_FAILED = "login failed: unknown id or wrong password"

#: role -> (entity kind, digest column lives on the same row)
ROLE_TABLES: dict[Role, str] = {
    Role.STUDENT: "student",
    Role.COMPANY: "company",
    Role.ADMIN: "administrator",
}


def now_epoch() -> int:
    return int(time.time())


@dataclass(frozen=True)
class Principal:
    """Outcome of a successful authorization check."""

    principal_id: str
    role: Role


class PasswordChangeOutcome(str, Enum):
    CHANGED = "Changed"
    MISMATCH = "Mismatch"
    WRONG_OLD = "WrongOld"


class PasswordHasher:
    """Salted PBKDF2-HMAC-SHA256; the digest string self-describes its
    iteration count so stored digests stay verifiable across config changes."""

    ALGORITHM = "pbkdf2_sha256"

    def __init__(self, iterations: int = 100_000):
        if iterations < 1:
            raise ValidationError("iterations must be >= 1")
        self.iterations = iterations

    def digest(self, password: str, *, salt: bytes | None = None) -> str:
        if not password:
            raise ValidationError("password must be non-empty")
        salt = salt if salt is not None else secrets.token_bytes(16)
        raw = hashlib.pbkdf2_hmac("sha256", password.encode(), salt, self.iterations)
        return f"{self.ALGORITHM}${self.iterations}${salt.hex()}${raw.hex()}"

    def verify(self, password: str, stored: str) -> bool:
        try:
            algorithm, iterations, salt_hex, hash_hex = stored.split("$")
            if algorithm != self.ALGORITHM:
                return False
            raw = hashlib.pbkdf2_hmac(
                "sha256", password.encode(), bytes.fromhex(salt_hex), int(iterations)
            )
            return hmac.compare_digest(raw.hex(), hash_hex)
        except (ValueError, AttributeError):
            return False


class SessionManager:
    """In-memory session table; tokens are 256-bit URL-safe values, unique
    for the process lifetime, and expired entries authorize nothing."""

    def __init__(self, ttl_minutes: int = 30, clock: Callable[[], int] = now_epoch):
        if ttl_minutes < 1:
            raise ValidationError("session TTL must be >= 1 minute")
        self.ttl_minutes = ttl_minutes
        self._clock = clock
        self._sessions: dict[str, Session] = {}
        self._lock = threading.RLock()

    def issue(self, role: Role, principal_id: str) -> Session:
        session = Session(
            token=secrets.token_urlsafe(32),
            role=role,
            principal_id=principal_id,
            expires_at=self._clock() + self.ttl_minutes * 60,
        )
        with self._lock:
            self._sessions[session.token] = session
        return session

    def get(self, token: str | None) -> Session | None:
        if not token:
            return None
        with self._lock:
            session = self._sessions.get(token)
            if session is None:
                return None
            if session.expires_at <= self._clock():
                del self._sessions[token]
                return None
            return session

    def revoke(self, token: str | None) -> None:
        if not token:
            return
        with self._lock:
            self._sessions.pop(token, None)


class AuthService:
    """Login, logout, password change, and the authorize() gate every
    role-restricted operation goes through."""

    def __init__(
        self,
        store: Store,
        sessions: SessionManager,
        hasher: PasswordHasher | None = None,
        clock: Callable[[], int] = now_epoch,
    ):
        self.store = store
        self.sessions = sessions
        self.hasher = hasher or PasswordHasher()
        self._clock = clock
        self._principal_locks: dict[tuple[Role, str], threading.Lock] = defaultdict(
            threading.Lock
        )
        self._locks_guard = threading.Lock()

    def _principal_lock(self, role: Role, principal_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._principal_locks[(role, principal_id)]

    @staticmethod
    def _coerce_role(role) -> Role:
        try:
            return Role(role)
        except ValueError:
            raise ValidationError(f"unknown role: {role!r}") from None

    def login(self, role: Role | str, principal_id: str, password: str) -> Session:
        role = self._coerce_role(role)
        if not principal_id or not password:
            raise InvalidCredentials(_LOGIN_FAILED)
        with self._principal_lock(role, principal_id):
            row = self.store.find_by_id(ROLE_TABLES[role], principal_id)
            if row is None or not self.hasher.verify(password, row.password_digest):
                raise InvalidCredentials(_LOGIN_FAILED)
            if role is Role.COMPANY and row.approval_status is not ApprovalStatus.APPROVED:
                raise CompanyNotApproved("company registration is not approved")
            return self.sessions.issue(role, principal_id)

    def logout(self, token: str | None) -> None:
        """Invalidate the token; idempotent, unknown tokens are a no-op."""
        self.sessions.revoke(token)

    def authorize(self, token: str | None, allowed_roles: Iterable[Role]) -> Principal:
        allowed = frozenset(Role(r) for r in allowed_roles)
        if not allowed:
            raise ValidationError("role requirement must not be empty")
        session = self.sessions.get(token)
        if session is None:
            raise Unauthorized("missing or expired session")
        if session.role not in allowed:
            raise Forbidden(f"requires role: {', '.join(sorted(r.value for r in allowed))}")
        return Principal(session.principal_id, session.role)

    def change_password(
        self, token: str | None, old: str, new: str, confirm: str
    ) -> PasswordChangeOutcome:
        principal = self.authorize(token, tuple(Role))
        if not new or new != confirm:
            return PasswordChangeOutcome.MISMATCH
        kind = ROLE_TABLES[principal.role]
        with self._principal_lock(principal.role, principal.principal_id):
            row = self.store.find_by_id(kind, principal.principal_id)
            if row is None:
                raise Unauthorized("principal no longer exists")
            if not self.hasher.verify(old, row.password_digest):
                return PasswordChangeOutcome.WRONG_OLD
            new_digest = self.hasher.digest(new)
            with self.store.transaction() as tx:
                tx.update(kind, principal.principal_id, {"password_digest": new_digest})
        return PasswordChangeOutcome.CHANGED
