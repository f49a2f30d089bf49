"""Error taxonomy shared by all modules.

Every raisable condition carries a stable machine code and the HTTP status
the API layer maps it to.  The set of codes is closed: handlers must not
invent ad-hoc codes, and responses never carry stack traces or credentials.
"""

from __future__ import annotations


class AppError(Exception):
    """Base class for every expected failure the service can signal."""

    code = "INTERNAL_ERROR"
    http_status = 500

    def __init__(self, message: str = "", details: list[dict] | None = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        self.details = details or []

    def envelope(self) -> dict:
        body: dict = {"code": self.code, "message": self.message}
        if self.details:
            body["details"] = self.details
        return body


class ValidationError(AppError):
    code = "VALIDATION_ERROR"
    http_status = 422


class InputError(AppError):
    """Unrecognized routing token (e.g. an unknown search type)."""

    code = "INPUT_ERROR"
    http_status = 422


class QueryError(AppError):
    """Query referencing a field or kind the store does not know."""

    code = "QUERY_ERROR"
    http_status = 422


class ForeignKeyViolation(AppError):
    code = "FOREIGN_KEY_VIOLATION"
    http_status = 422


class Unauthorized(AppError):
    code = "UNAUTHORIZED"
    http_status = 401


class InvalidCredentials(AppError):
    """Wrong id or wrong password; deliberately indistinguishable."""

    code = "INVALID_CREDENTIALS"
    http_status = 401


class CompanyNotApproved(AppError):
    """Company credentials are valid but the registration is not approved."""

    code = "COMPANY_NOT_APPROVED"
    http_status = 401


class Forbidden(AppError):
    code = "FORBIDDEN"
    http_status = 403


class NotOwner(Forbidden):
    """Authenticated, but the target belongs to another company."""

    code = "NOT_OWNER"


class NotFound(AppError):
    code = "NOT_FOUND"
    http_status = 404


class NoAccessory(AppError):
    code = "NO_ACCESSORY"
    http_status = 404


class DuplicateKey(AppError):
    code = "DUPLICATE_KEY"
    http_status = 409


class RestrictViolation(AppError):
    """Delete refused because dependent rows still reference the target."""

    code = "RESTRICT_VIOLATION"
    http_status = 409


class InvalidTransition(AppError):
    code = "INVALID_TRANSITION"
    http_status = 409


class AlreadyApplied(AppError):
    code = "ALREADY_APPLIED"
    http_status = 409


class Full(AppError):
    code = "FULL"
    http_status = 409


class Closed(AppError):
    code = "CLOSED"
    http_status = 409


class Expired(AppError):
    code = "EXPIRED"
    http_status = 409


class NotViewed(AppError):
    code = "NOT_VIEWED"
    http_status = 409


class AlreadyResponded(AppError):
    code = "ALREADY_RESPONDED"
    http_status = 409


class PayloadTooLarge(AppError):
    code = "PAYLOAD_TOO_LARGE"
    http_status = 413


class StoreUnavailable(AppError):
    code = "STORE_UNAVAILABLE"
    http_status = 503


#: The closed, published set of envelope codes.
ERROR_CODES = frozenset(
    cls.code
    for cls in [
        AppError,
        ValidationError,
        InputError,
        QueryError,
        ForeignKeyViolation,
        Unauthorized,
        InvalidCredentials,
        CompanyNotApproved,
        Forbidden,
        NotOwner,
        NotFound,
        NoAccessory,
        DuplicateKey,
        RestrictViolation,
        InvalidTransition,
        AlreadyApplied,
        Full,
        Closed,
        Expired,
        NotViewed,
        AlreadyResponded,
        PayloadTooLarge,
        StoreUnavailable,
    ]
)
