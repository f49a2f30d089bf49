"""HTTP surface: routing, session carriage (HttpOnly cookie or bearer
header), request validation, and the uniform error envelope.

Every domain error maps 1:1 onto an HTTP status through the AppError
hierarchy; handlers authorize before they parse, and responses never leak
internals, credentials, or stack traces.
"""

from __future__ import annotations

import mimetypes
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import store as storage
from .admin import DirectoryAdminService
from .attachments import AttachmentStore
from .auth import AuthService, PasswordHasher, SessionManager, now_epoch
from .companies import CompanyService
from .config import ServiceConfig
from .errors import AppError, ValidationError
from .models import Role, format_timestamp
from .presentations import PresentationService
from .recruitment import RecruitmentService
from .search import SearchService
from .store import Store

SESSION_COOKIE = "session"

#: fields never exposed through the API
_SECRET_FIELDS = frozenset({"password_digest"})

PUBLIC = None
ANY_ROLE = frozenset(Role)
ADMIN = frozenset({Role.ADMIN})
COMPANY = frozenset({Role.COMPANY})
STUDENT = frozenset({Role.STUDENT})


@dataclass(frozen=True)
class RouteSpec:
    """One row of the documented route table; `access` is None for public
    routes or the set of roles allowed through."""

    method: str
    path: str
    access: frozenset[Role] | None
    op: str


ROUTE_TABLE: tuple[RouteSpec, ...] = (
    RouteSpec("POST", "/api/login", PUBLIC, "auth.login"),
    RouteSpec("POST", "/api/logout", PUBLIC, "auth.logout"),
    RouteSpec("POST", "/api/password", ANY_ROLE, "auth.change_password"),
    RouteSpec("POST", "/api/students", ADMIN, "admin.add_student"),
    RouteSpec("GET", "/api/students/{student_id}", ADMIN, "admin.find_student"),
    RouteSpec("PATCH", "/api/students/{student_id}", ADMIN, "admin.update_student"),
    RouteSpec("DELETE", "/api/students/{student_id}", ADMIN, "admin.delete_student"),
    RouteSpec("POST", "/api/companies", PUBLIC, "companies.register"),
    RouteSpec("GET", "/api/companies", ADMIN, "admin.list_companies"),
    RouteSpec("POST", "/api/companies/{company_id}/review", ADMIN, "admin.review_company"),
    RouteSpec("GET", "/api/companies/me", COMPANY, "companies.get_profile"),
    RouteSpec("PATCH", "/api/companies/me", COMPANY, "companies.update_profile"),
    RouteSpec("GET", "/api/dict/{kind}", PUBLIC, "admin.list_dictionary"),
    RouteSpec("POST", "/api/dict/{kind}", ADMIN, "admin.manage_dictionary.create"),
    RouteSpec("PATCH", "/api/dict/{kind}/{entity_id}", ADMIN, "admin.manage_dictionary.update"),
    RouteSpec("DELETE", "/api/dict/{kind}/{entity_id}", ADMIN, "admin.manage_dictionary.delete"),
    RouteSpec("GET", "/api/jobs", ANY_ROLE, "recruitment.list_jobs"),
    RouteSpec("POST", "/api/jobs", COMPANY, "recruitment.post_job"),
    RouteSpec("GET", "/api/jobs/{recruit_id}", ANY_ROLE, "recruitment.get_job"),
    RouteSpec("PATCH", "/api/jobs/{recruit_id}", COMPANY, "recruitment.edit_job"),
    RouteSpec("DELETE", "/api/jobs/{recruit_id}", COMPANY, "recruitment.delete_job"),
    RouteSpec("POST", "/api/jobs/{recruit_id}/resumes", STUDENT, "recruitment.submit_resume"),
    RouteSpec("GET", "/api/jobs/{recruit_id}/match", COMPANY, "recruitment.match_candidates"),
    RouteSpec("GET", "/api/resumes/mine", STUDENT, "recruitment.list_my_applications"),
    RouteSpec("GET", "/api/resumes/received", COMPANY, "recruitment.list_received_resumes"),
    RouteSpec("GET", "/api/resumes/{resume_id}", COMPANY, "recruitment.view_resume_detail"),
    RouteSpec("GET", "/api/resumes/{resume_id}/accessory", COMPANY, "recruitment.download_accessory"),
    RouteSpec("POST", "/api/resumes/{resume_id}/result", COMPANY, "recruitment.respond_to_resume"),
    RouteSpec("POST", "/api/presentations", COMPANY, "presentations.apply_for_presentation"),
    RouteSpec("GET", "/api/presentations", ADMIN, "presentations.list_applications"),
    RouteSpec("GET", "/api/presentations/mine", COMPANY, "presentations.application_status"),
    RouteSpec("POST", "/api/presentations/{application_id}/review", ADMIN, "presentations.review_presentation"),
    RouteSpec("GET", "/api/arrangements", ANY_ROLE, "presentations.list_arrangements"),
    RouteSpec("GET", "/api/arrangements/mine", STUDENT, "presentations.list_my_registrations"),
    RouteSpec("GET", "/api/arrangements/{arrangement_id}", ANY_ROLE, "presentations.arrangement_detail"),
    RouteSpec("PATCH", "/api/arrangements/{arrangement_id}", ADMIN, "presentations.update_arrangement"),
    RouteSpec("POST", "/api/arrangements/{arrangement_id}/register", STUDENT, "presentations.register_for_arrangement"),
    RouteSpec("GET", "/api/search", ANY_ROLE, "search.search"),
)


def record(entity: Any) -> dict:
    """JSON projection of an entity with credential material stripped."""
    data = storage.entity_to_record(entity)
    for secret in _SECRET_FIELDS & set(data):
        del data[secret]
    return data


@dataclass
class Services:
    config: ServiceConfig
    store: Store
    sessions: SessionManager
    auth: AuthService
    admin: DirectoryAdminService
    companies: CompanyService
    recruitment: RecruitmentService
    presentations: PresentationService
    search: SearchService


def build_services(
    config: ServiceConfig,
    store: Store | None = None,
    clock: Callable[[], int] = now_epoch,
) -> Services:
    store = store or Store(config.store_path, busy_timeout_ms=config.busy_timeout_ms)
    store.migrate()
    hasher = PasswordHasher(config.password_iterations)
    sessions = SessionManager(ttl_minutes=config.session_ttl_minutes, clock=clock)
    auth = AuthService(store, sessions, hasher, clock)
    attachments = AttachmentStore(
        config.attachments_dir,
        max_bytes=config.upload_max_bytes,
        allowed_extensions=tuple(config.allowed_extensions),
    )
    return Services(
        config=config,
        store=store,
        sessions=sessions,
        auth=auth,
        admin=DirectoryAdminService(store, auth, hasher, clock),
        companies=CompanyService(store, auth, hasher),
        recruitment=RecruitmentService(store, auth, attachments, clock),
        presentations=PresentationService(
            store, auth, clock, enforce_capacity=config.enforce_capacity
        ),
        search=SearchService(store, auth, clock),
    )


def _token(request: Request) -> str | None:
    header = request.headers.get("authorization", "")
    if header.lower().startswith("bearer "):
        return header[7:].strip()
    return request.cookies.get(SESSION_COOKIE)


async def _json_body(request: Request) -> dict:
    try:
        payload = await request.json()
    except Exception:
        raise ValidationError("request body must be a JSON object") from None
    if not isinstance(payload, dict):
        raise ValidationError("request body must be a JSON object")
    return payload


def create_app(
    config: ServiceConfig | None = None,
    store: Store | None = None,
    clock: Callable[[], int] = now_epoch,
) -> FastAPI:
    config = config or ServiceConfig()
    svc = build_services(config, store=store, clock=clock)
    app = FastAPI(title="campus-recruit", docs_url=None, redoc_url=None, openapi_url=None)
    app.state.services = svc

    @app.exception_handler(AppError)
    async def on_app_error(request: Request, exc: AppError):
        return JSONResponse(status_code=exc.http_status, content=exc.envelope())

    @app.exception_handler(RequestValidationError)
    async def on_request_validation(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"code": "VALIDATION_ERROR", "message": "invalid request"},
        )

    @app.exception_handler(StarletteHTTPException)
    async def on_http_exception(request: Request, exc: StarletteHTTPException):
        # unmatched routes / bad methods still answer with the envelope
        if exc.status_code in (404, 405):
            return JSONResponse(
                status_code=404, content={"code": "NOT_FOUND", "message": "no such route"}
            )
        return JSONResponse(
            status_code=exc.status_code,
            content={"code": "VALIDATION_ERROR", "message": str(exc.detail)},
        )

    @app.exception_handler(Exception)
    async def on_unexpected(request: Request, exc: Exception):
        return JSONResponse(
            status_code=500,
            content={"code": "INTERNAL_ERROR", "message": "internal error"},
        )

    def require(request: Request, access: frozenset[Role] | None) -> str | None:
        # authorization comes before body parsing on every protected route
        token = _token(request)
        if access is not None:
            svc.auth.authorize(token, access)
        return token

    # -- auth ---------------------------------------------------------------

    @app.post("/api/login")
    async def login(request: Request, response: Response):
        payload = await _json_body(request)
        session = svc.auth.login(
            payload.get("role", ""), payload.get("id", ""), payload.get("password", "")
        )
        response.set_cookie(
            SESSION_COOKIE,
            session.token,
            httponly=True,
            samesite="lax",
            max_age=config.session_ttl_minutes * 60,
        )
        return {
            "token": session.token,
            "role": session.role.value,
            "principal_id": session.principal_id,
            "expires_at": format_timestamp(session.expires_at),
        }

    @app.post("/api/logout")
    async def logout(request: Request, response: Response):
        svc.auth.logout(_token(request))
        response.delete_cookie(SESSION_COOKIE)
        return {"outcome": "LoggedOut"}

    @app.post("/api/password")
    async def change_password(request: Request):
        token = require(request, ANY_ROLE)
        payload = await _json_body(request)
        outcome = svc.auth.change_password(
            token,
            payload.get("old", ""),
            payload.get("new", ""),
            payload.get("confirm", ""),
        )
        return {"outcome": outcome.value}

    # -- students (admin) ------------------------------------------------------

    @app.post("/api/students", status_code=201)
    async def add_student(request: Request):
        token = require(request, ADMIN)
        payload = await _json_body(request)
        return record(svc.admin.add_student(token, payload))

    @app.get("/api/students/{student_id}")
    async def find_student(request: Request, student_id: str):
        token = require(request, ADMIN)
        student = svc.admin.find_student(token, student_id)
        if student is None:
            return JSONResponse(
                status_code=404,
                content={"code": "NOT_FOUND", "message": "student does not exist"},
            )
        return record(student)

    @app.patch("/api/students/{student_id}")
    async def update_student(request: Request, student_id: str):
        token = require(request, ADMIN)
        payload = await _json_body(request)
        return record(svc.admin.update_student(token, student_id, payload))

    @app.delete("/api/students/{student_id}")
    async def delete_student(request: Request, student_id: str, confirmed: bool = False):
        token = require(request, ADMIN)
        outcome = svc.admin.delete_student(token, student_id, confirmed)
        return {"outcome": outcome.value}

    # -- companies ---------------------------------------------------------------

    @app.post("/api/companies", status_code=201)
    async def register_company(request: Request):
        payload = await _json_body(request)
        return record(svc.companies.register(payload))

    @app.get("/api/companies")
    async def list_companies(request: Request, status: str | None = None):
        token = require(request, ADMIN)
        return [record(c) for c in svc.admin.list_companies(token, status)]

    @app.post("/api/companies/{company_id}/review")
    async def review_company(request: Request, company_id: str):
        token = require(request, ADMIN)
        payload = await _json_body(request)
        company = svc.admin.review_company(
            token, company_id, payload.get("decision", ""), payload.get("note", "")
        )
        return record(company)

    @app.get("/api/companies/me")
    async def company_profile(request: Request):
        token = require(request, COMPANY)
        return record(svc.companies.get_profile(token))

    @app.patch("/api/companies/me")
    async def update_company_profile(request: Request):
        token = require(request, COMPANY)
        payload = await _json_body(request)
        return record(svc.companies.update_profile(token, payload))

    # -- dictionary -----------------------------------------------------------------

    @app.get("/api/dict/{kind}")
    async def list_dictionary(kind: str):
        return [record(e) for e in svc.admin.list_dictionary(kind)]

    @app.post("/api/dict/{kind}", status_code=201)
    async def create_dictionary(request: Request, kind: str):
        token = require(request, ADMIN)
        payload = await _json_body(request)
        return record(svc.admin.manage_dictionary(token, kind, "create", payload))

    @app.patch("/api/dict/{kind}/{entity_id}")
    async def update_dictionary(request: Request, kind: str, entity_id: str):
        token = require(request, ADMIN)
        payload = await _json_body(request)
        return record(
            svc.admin.manage_dictionary(token, kind, "update", payload, entity_id)
        )

    @app.delete("/api/dict/{kind}/{entity_id}")
    async def delete_dictionary(request: Request, kind: str, entity_id: str):
        token = require(request, ADMIN)
        svc.admin.manage_dictionary(token, kind, "delete", {}, entity_id)
        return {"outcome": "Deleted"}

    # -- jobs --------------------------------------------------------------------

    @app.get("/api/jobs")
    async def list_jobs(
        request: Request,
        city: str | None = None,
        education_id: str | None = None,
        recruit_type: int | None = None,
        offset: int = 0,
        limit: int | None = None,
        mine: bool = False,
    ):
        token = require(request, ANY_ROLE)
        if mine:
            postings = svc.recruitment.list_my_jobs(token)
        else:
            postings = svc.recruitment.list_jobs(
                token, city, education_id, recruit_type, offset, limit
            )
        return [record(p) for p in postings]

    @app.post("/api/jobs", status_code=201)
    async def post_job(request: Request):
        token = require(request, COMPANY)
        payload = await _json_body(request)
        return record(svc.recruitment.post_job(token, payload))

    @app.get("/api/jobs/{recruit_id}")
    async def get_job(request: Request, recruit_id: str):
        token = require(request, ANY_ROLE)
        return record(svc.recruitment.get_job(token, recruit_id))

    @app.patch("/api/jobs/{recruit_id}")
    async def edit_job(request: Request, recruit_id: str):
        token = require(request, COMPANY)
        payload = await _json_body(request)
        return record(svc.recruitment.edit_job(token, recruit_id, payload))

    @app.delete("/api/jobs/{recruit_id}")
    async def delete_job(request: Request, recruit_id: str):
        token = require(request, COMPANY)
        svc.recruitment.delete_job(token, recruit_id)
        return {"outcome": "Deleted"}

    @app.get("/api/jobs/{recruit_id}/match")
    async def match_candidates(request: Request, recruit_id: str):
        token = require(request, COMPANY)
        return [record(a) for a in svc.recruitment.match_candidates(token, recruit_id)]

    @app.post("/api/jobs/{recruit_id}/resumes", status_code=201)
    async def submit_resume(request: Request, recruit_id: str):
        token = require(request, STUDENT)
        content_type = request.headers.get("content-type", "")
        accessory = None
        if content_type.startswith("multipart/form-data"):
            form = await request.form()
            fields = {k: v for k, v in form.items() if isinstance(v, str)}
            upload = form.get("accessory")
            if upload is not None and not isinstance(upload, str):
                accessory = (upload.filename or "", await upload.read())
        else:
            fields = await _json_body(request)
        application = svc.recruitment.submit_resume(
            token,
            recruit_id,
            experience=fields.get("experience", ""),
            skill=fields.get("skill", ""),
            email=fields.get("email") or None,
            phone=fields.get("phone") or None,
            accessory=accessory,
        )
        body = record(application)
        body["status"] = storage.models.derive_application_status(application).value
        return body

    # -- resumes --------------------------------------------------------------------

    @app.get("/api/resumes/mine")
    async def my_applications(request: Request):
        token = require(request, STUDENT)
        rows = svc.recruitment.list_my_applications(token)
        return [
            {
                "application": record(row["application"]),
                "status": row["status"],
                "posting": row["posting"],
            }
            for row in rows
        ]

    @app.get("/api/resumes/received")
    async def received_resumes(request: Request, recruit_id: str | None = None):
        token = require(request, COMPANY)
        apps = svc.recruitment.list_received_resumes(token, recruit_id)
        return [record(a) for a in apps]

    @app.get("/api/resumes/{resume_id}")
    async def resume_detail(request: Request, resume_id: str):
        token = require(request, COMPANY)
        return record(svc.recruitment.view_resume_detail(token, resume_id))

    @app.get("/api/resumes/{resume_id}/accessory")
    async def download_accessory(request: Request, resume_id: str):
        token = require(request, COMPANY)
        name, data = svc.recruitment.download_accessory(token, resume_id)
        media_type = mimetypes.guess_type(name)[0] or "application/octet-stream"
        quoted = name.replace("\\", "\\\\").replace('"', '\\"')
        return Response(
            content=data,
            media_type=media_type,
            headers={"Content-Disposition": f'attachment; filename="{quoted}"'},
        )

    @app.post("/api/resumes/{resume_id}/result")
    async def respond_to_resume(request: Request, resume_id: str):
        token = require(request, COMPANY)
        payload = await _json_body(request)
        application = svc.recruitment.respond_to_resume(
            token, resume_id, payload.get("result", "")
        )
        body = record(application)
        body["status"] = storage.models.derive_application_status(application).value
        return body

    # -- presentations -------------------------------------------------------------------

    @app.post("/api/presentations", status_code=201)
    async def apply_presentation(request: Request):
        token = require(request, COMPANY)
        payload = await _json_body(request)
        return record(svc.presentations.apply_for_presentation(token, payload))

    @app.get("/api/presentations")
    async def list_presentation_applications(request: Request, status: str | None = None):
        token = require(request, ADMIN)
        return [record(a) for a in svc.presentations.list_applications(token, status)]

    @app.get("/api/presentations/mine")
    async def my_presentations(request: Request):
        token = require(request, COMPANY)
        rows = svc.presentations.application_status(token)
        return [
            {
                "application": record(row["application"]),
                "arrangement": record(row["arrangement"]) if row["arrangement"] else None,
            }
            for row in rows
        ]

    @app.post("/api/presentations/{application_id}/review")
    async def review_presentation(request: Request, application_id: str):
        token = require(request, ADMIN)
        payload = await _json_body(request)
        application, arrangement = svc.presentations.review_presentation(
            token, application_id, payload.get("decision", ""), payload.get("schedule")
        )
        return {
            "application": record(application),
            "arrangement": record(arrangement) if arrangement else None,
        }

    @app.get("/api/arrangements")
    async def list_arrangements(request: Request):
        token = require(request, ANY_ROLE)
        rows = svc.presentations.list_arrangements(token)
        return [
            {**record(row["arrangement"]), "company_name": row["company_name"]}
            for row in rows
        ]

    @app.get("/api/arrangements/mine")
    async def my_registrations(request: Request):
        token = require(request, STUDENT)
        rows = svc.presentations.list_my_registrations(token)
        return [
            {
                **record(row["arrangement"]),
                "company_name": row["company_name"],
                "registered_at": format_timestamp(row["registered_at"]),
            }
            for row in rows
        ]

    @app.get("/api/arrangements/{arrangement_id}")
    async def arrangement_detail(request: Request, arrangement_id: str):
        token = require(request, ANY_ROLE)
        view = svc.presentations.arrangement_detail(token, arrangement_id)
        return {
            **record(view["arrangement"]),
            "company": view["company"],
            "apply_count": view["apply_count"],
            "has_applied": view["has_applied"],
        }

    @app.patch("/api/arrangements/{arrangement_id}")
    async def update_arrangement(request: Request, arrangement_id: str):
        token = require(request, ADMIN)
        payload = await _json_body(request)
        return record(svc.presentations.update_arrangement(token, arrangement_id, payload))

    @app.post("/api/arrangements/{arrangement_id}/register", status_code=201)
    async def register_for_arrangement(request: Request, arrangement_id: str):
        token = require(request, STUDENT)
        registration = svc.presentations.register_for_arrangement(token, arrangement_id)
        return record(registration)

    # -- search ---------------------------------------------------------------------------

    @app.get("/api/search")
    async def search(
        request: Request, type: str = "", keyword: str = "", city: str | None = None
    ):
        token = require(request, ANY_ROLE)
        result = svc.search.search(token, type, keyword, city)
        return {"type": result["type"], "items": [record(e) for e in result["items"]]}

    if config.static_dir and Path(config.static_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="static")

    return app
