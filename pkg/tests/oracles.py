"""Independent brute-force oracles for the test suite.

Everything here works on plain dicts (raw store rows or fixture records)
and reimplements the contracts naively: full scans, repeated stable sorts,
and explicit foreign-key walks.  Nothing imports the production query,
listing, matching, or status code paths.
"""

from __future__ import annotations

from datetime import datetime


def iso_to_epoch(value):
    if value is None or isinstance(value, int):
        return value
    return int(datetime.fromisoformat(value.replace("Z", "+00:00")).timestamp())


# -- generic query oracle -----------------------------------------------------


def scan_query(rows, pk, filters=None, order=None, offset=0, limit=None):
    """Naive filter + multi-key sort with SQLite NULL placement (NULLs first
    ascending, last descending), then primary key ascending."""
    out = [r for r in rows if all(r.get(f) == v for f, v in (filters or {}).items())]
    out.sort(key=lambda r: r[pk])
    for term in reversed(list(order or [])):
        if isinstance(term, str):
            field, direction = term, "asc"
        else:
            field, direction = term
        reverse = direction.lower() == "desc"
        out.sort(
            key=lambda r: ((r[field] is not None), _orderable(r[field])),
            reverse=reverse,
        )
    end = None if limit is None else offset + max(limit, 0)
    return out[offset:end]


def _orderable(value):
    if value is None:
        return 0  # position handled by the is-not-None component
    return value


# -- listing / search / matching oracles ---------------------------------------


def visible_jobs(postings, now, city=None, education_id=None, recruit_type=None):
    """Student-facing job listing: unexpired, not withdrawn, time text
    descending then recruit_id ascending."""
    out = []
    for p in postings:
        if p["withdrawn"] in (1, True):
            continue
        if iso_to_epoch(p["deadline"]) < now:
            continue
        if city is not None and p["city"] != city:
            continue
        if education_id is not None and p["education_id"] != education_id:
            continue
        if recruit_type is not None and p["recruit_type"] != recruit_type:
            continue
        out.append(p)
    out.sort(key=lambda p: p["recruit_id"])
    out.sort(key=lambda p: p["time"], reverse=True)
    return out


def search_recruit(postings, companies, now, keyword, city=None):
    base = visible_jobs(postings, now, city=city)
    needle = keyword.casefold()
    names = {c["company_id"]: c["company_name"] for c in companies}
    return [
        p
        for p in base
        if any(
            needle in (value or "").casefold()
            for value in (p["place"], p["city"], p["detail"], names.get(p["company_id"]))
        )
    ]


def sorted_arrangements(arrangements):
    out = sorted(arrangements, key=lambda a: a["arrangement_id"])
    out.sort(key=lambda a: iso_to_epoch(a["start_time"]))
    return out


def search_application(arrangements, companies, keyword):
    needle = keyword.casefold()
    names = {c["company_id"]: c["company_name"] for c in companies}
    return [
        a
        for a in sorted_arrangements(arrangements)
        if any(
            needle in (value or "").casefold()
            for value in (a["theme"], a["place"], names.get(a["company_id"]))
        )
    ]


def match_candidates(applications, education_levels, required_education_id, implied_major_id=None):
    ranks = {e["education_id"]: e["rank"] for e in education_levels}
    required = ranks[required_education_id]
    out = [a for a in applications if ranks[a["education_id"]] >= required]
    out.sort(
        key=lambda a: (
            0 if implied_major_id is not None and a["major_id"] == implied_major_id else 1,
            -ranks[a["education_id"]],
            iso_to_epoch(a["submitted_at"]),
            a["resume_id"],
        )
    )
    return out


def derive_status(application) -> str:
    if application.get("result") is not None:
        return "Responded"
    if application.get("viewed_at") is not None:
        return "Viewed"
    return "Submitted"


# -- integrity sweep ---------------------------------------------------------------

#: kind -> [(fk field, referenced kind, referenced pk)]
FOREIGN_KEYS = {
    "major": [("college_id", "college", "college_id")],
    "class_group": [("major_id", "major", "major_id")],
    "student": [
        ("college_id", "college", "college_id"),
        ("major_id", "major", "major_id"),
        ("class_id", "class_group", "class_id"),
        ("education_id", "education_level", "education_id"),
    ],
    "company": [("industry_id", "industry", "industry_id")],
    "job_posting": [
        ("company_id", "company", "company_id"),
        ("education_id", "education_level", "education_id"),
    ],
    "resume_application": [
        ("recruit_id", "job_posting", "recruit_id"),
        ("student_id", "student", "student_id"),
        ("education_id", "education_level", "education_id"),
        ("major_id", "major", "major_id"),
    ],
    "presentation_application": [("company_id", "company", "company_id")],
    "arrangement": [
        ("application_id", "presentation_application", "application_id"),
        ("company_id", "company", "company_id"),
    ],
    "registration": [
        ("student_id", "student", "student_id"),
        ("arrangement_id", "arrangement", "arrangement_id"),
    ],
    "notification": [
        ("student_id", "student", "student_id"),
        ("resume_id", "resume_application", "resume_id"),
    ],
}

UNIQUE_SETS = {
    "resume_application": [("recruit_id", "student_id")],
    "registration": [("student_id", "arrangement_id")],
    "arrangement": [("application_id",)],
    "education_level": [("education_name",), ("rank",)],
    "industry": [("industry_name",)],
}

PRIMARY_KEYS = {
    "college": "college_id",
    "major": "major_id",
    "class_group": "class_id",
    "education_level": "education_id",
    "industry": "industry_id",
    "student": "student_id",
    "administrator": "admin_id",
    "company": "company_id",
    "job_posting": "recruit_id",
    "resume_application": "resume_id",
    "presentation_application": "application_id",
    "arrangement": "arrangement_id",
    "registration": "id",
    "notification": "id",
}


def integrity_sweep(tables: dict[str, list[dict]]) -> list[str]:
    """Full structural check over a raw dump: primary keys unique, every
    foreign reference resolves, declared unique sets hold, the student
    hierarchy is consistent, and every employer result follows a view.
    Returns a list of violations (empty means the sweep passes)."""
    problems: list[str] = []
    ids: dict[str, set] = {}
    for kind, pk in PRIMARY_KEYS.items():
        rows = tables.get(kind, [])
        seen = set()
        for row in rows:
            value = row[pk]
            if value in seen:
                problems.append(f"{kind}: duplicate primary key {value!r}")
            seen.add(value)
        ids[kind] = seen

    for kind, refs in FOREIGN_KEYS.items():
        for row in tables.get(kind, []):
            for field, target, _target_pk in refs:
                value = row.get(field)
                if value is not None and value not in ids.get(target, set()):
                    problems.append(f"{kind}: {field}={value!r} does not resolve")

    for kind, groups in UNIQUE_SETS.items():
        for group in groups:
            seen = set()
            for row in tables.get(kind, []):
                key = tuple(row[f] for f in group)
                if key in seen:
                    problems.append(f"{kind}: duplicate {group} = {key!r}")
                seen.add(key)

    majors = {m["major_id"]: m for m in tables.get("major", [])}
    classes = {k["class_id"]: k for k in tables.get("class_group", [])}
    for s in tables.get("student", []):
        cls = classes.get(s["class_id"])
        major = majors.get(s["major_id"])
        if cls is None or major is None:
            continue  # dangling FKs already reported
        if cls["major_id"] != s["major_id"] or major["college_id"] != s["college_id"]:
            problems.append(f"student {s['student_id']}: inconsistent hierarchy")

    for app in tables.get("resume_application", []):
        if app.get("result") is not None and app.get("viewed_at") is None:
            problems.append(f"application {app['resume_id']}: result without view")

    # one arrangement per approved application, none otherwise
    arrangements_by_app = {}
    for a in tables.get("arrangement", []):
        arrangements_by_app.setdefault(a["application_id"], []).append(a)
    for app in tables.get("presentation_application", []):
        n = len(arrangements_by_app.get(app["application_id"], []))
        status = app["status"]
        if status == "Approved" and n != 1:
            problems.append(f"presentation {app['application_id']}: approved with {n} arrangements")
        if status != "Approved" and n != 0:
            problems.append(f"presentation {app['application_id']}: {status} with {n} arrangements")

    return problems
