"""Regenerate src/campus_recruit/fixtures/seed.json.

Fixture credentials follow one scheme: the password for any principal is
"<id lowercased>-pass" (e.g. S1 -> "s1-pass", CO1 -> "co1-pass",
A1 -> "a1-pass").  Digests are salted PBKDF2 at 50k iterations, so
regenerating changes the digest strings but not the accepted passwords.
"""

from __future__ import annotations

import json
from pathlib import Path

from campus_recruit.auth import PasswordHasher

OUT = Path(__file__).resolve().parents[1] / "src" / "campus_recruit" / "fixtures" / "seed.json"

hasher = PasswordHasher(iterations=50_000)


def pw(principal_id: str) -> str:
    return hasher.digest(f"{principal_id.lower()}-pass")


FAR_FUTURE = "2099-12-31T23:59:59Z"

students = [
    # id, name, sex, birthday, class/major/college, education
    ("S1", "Zhao Min", "F", "2003-05-14", "K1", "M1", "C1", "E3"),
    ("S2", "Qian Hao", "M", "2002-11-02", "K1", "M1", "C1", "E4"),
    ("S3", "Sun Li", "F", "2004-01-23", "K2", "M2", "C1", "E2"),
    ("S4", "Li Jun", "M", "2001-08-30", "K2", "M2", "C1", "E5"),
    ("S5", "Zhou Yan", "F", "2003-03-09", "K3", "M3", "C2", "E3"),
    ("S6", "Wu Kai", "M", "2004-06-17", "K3", "M3", "C2", "E2"),
    ("S7", "Zheng Rui", "F", "2002-12-05", "K4", "M4", "C2", "E4"),
    ("S8", "Wang Bo", "M", "2003-09-21", "K4", "M4", "C2", "E3"),
]

fixture = {
    "colleges": [
        {"college_id": "C1", "college_name": "Engineering College"},
        {"college_id": "C2", "college_name": "Business College"},
    ],
    "majors": [
        {"major_id": "M1", "major_name": "Software Engineering", "college_id": "C1"},
        {"major_id": "M2", "major_name": "Computer Science", "college_id": "C1"},
        {"major_id": "M3", "major_name": "Accounting", "college_id": "C2"},
        {"major_id": "M4", "major_name": "Marketing", "college_id": "C2"},
    ],
    "class_groups": [
        {"class_id": "K1", "class_name": "SE-2024-1", "major_id": "M1"},
        {"class_id": "K2", "class_name": "CS-2024-1", "major_id": "M2"},
        {"class_id": "K3", "class_name": "ACC-2024-1", "major_id": "M3"},
        {"class_id": "K4", "class_name": "MKT-2024-1", "major_id": "M4"},
    ],
    "education_levels": [
        {"education_id": "E1", "education_name": "Vocational", "rank": 1},
        {"education_id": "E2", "education_name": "Associate", "rank": 2},
        {"education_id": "E3", "education_name": "Bachelor", "rank": 3},
        {"education_id": "E4", "education_name": "Master", "rank": 4},
        {"education_id": "E5", "education_name": "Doctorate", "rank": 5},
    ],
    "industries": [
        {"industry_id": "I1", "industry_name": "Software & Internet"},
        {"industry_id": "I2", "industry_name": "Finance"},
    ],
    "students": [
        {
            "student_id": sid,
            "name": name,
            "sex": sex,
            "birthday": birthday,
            "phone": f"1380000000{i}",
            "email": f"{sid.lower()}@campus.edu",
            "password_digest": pw(sid),
            "college_id": college,
            "major_id": major,
            "class_id": cls,
            "education_id": edu,
        }
        for i, (sid, name, sex, birthday, cls, major, college, edu) in enumerate(students)
    ],
    "administrators": [
        {
            "admin_id": "A1",
            "name": "Lin Wei",
            "phone": "075512345",
            "sex": "F",
            "email": "admin@campus.edu",
            "password_digest": pw("A1"),
        }
    ],
    "companies": [
        {
            "company_id": "CO1",
            "company_name": "NovaSoft",
            "industry_id": "I1",
            "phone": "0571-88001234",
            "scale": "500-1000",
            "address": "88 Binjiang Ave, Hangzhou",
            "established": "2012-04-18",
            "capital": "50M CNY",
            "detail": "NovaSoft builds campus SaaS platforms and developer tools.",
            "worktime": "9:00-18:00, Mon-Fri",
            "email": "hr@novasoft.cn",
            "password_digest": pw("CO1"),
            "approval_status": "Approved",
            "reviewed_at": "2026-01-10T08:30:00Z",
            "review_note": None,
        },
        {
            "company_id": "CO2",
            "company_name": "Harbor Capital",
            "industry_id": "I2",
            "phone": "021-66008800",
            "scale": "100-500",
            "address": "1 Lujiazui Ring, Shanghai",
            "established": "2008-09-01",
            "capital": "200M CNY",
            "detail": "Harbor Capital provides asset management and campus finance programs.",
            "worktime": "9:30-18:30, Mon-Fri",
            "email": "jobs@harborcap.cn",
            "password_digest": pw("CO2"),
            "approval_status": "Approved",
            "reviewed_at": "2026-01-12T09:00:00Z",
            "review_note": None,
        },
        {
            "company_id": "CO3",
            "company_name": "BlueLeaf Tech",
            "industry_id": "I1",
            "phone": "010-55667788",
            "scale": "50-100",
            "address": "9 Zhongguancun St, Beijing",
            "established": "2021-03-15",
            "capital": "8M CNY",
            "detail": "BlueLeaf Tech is an early-stage AI tooling startup.",
            "worktime": "10:00-19:00, Mon-Fri",
            "email": "talent@blueleaf.cn",
            "password_digest": pw("CO3"),
            "approval_status": "Pending",
            "reviewed_at": None,
            "review_note": None,
        },
    ],
    "job_postings": [
        {
            "recruit_id": "J1",
            "company_id": "CO1",
            "position_id": "P-BE01",
            "education_id": "E3",
            "linkman_name": "Chen Jia",
            "linkman_email": "hr@novasoft.cn",
            "company_type": "Private",
            "place": "Binjiang District",
            "city": "Hangzhou",
            "number": 3,
            "salary": 15000,
            "recruit_type": 0,
            "experience": "0-1 years",
            "time": "2026-07-01",
            "deadline": FAR_FUTURE,
            "detail": "Backend developer on the campus recruitment platform team.",
            "withdrawn": False,
        },
        {
            "recruit_id": "J2",
            "company_id": "CO1",
            "position_id": "P-FE02",
            "education_id": "E2",
            "linkman_name": "Chen Jia",
            "linkman_email": "hr@novasoft.cn",
            "company_type": "Private",
            "place": "Xuhui Campus Hub",
            "city": "Shanghai",
            "number": 2,
            "salary": 6000,
            "recruit_type": 1,
            "experience": "none",
            "time": "2026-07-03",
            "deadline": FAR_FUTURE,
            "detail": "Frontend internship: dashboards and form tooling.",
            "withdrawn": False,
        },
        {
            "recruit_id": "J3",
            "company_id": "CO2",
            "position_id": "P-AN01",
            "education_id": "E3",
            "linkman_name": "Gao Lan",
            "linkman_email": "jobs@harborcap.cn",
            "company_type": "Private",
            "place": "Riverside Tower 12F",
            "city": "Hangzhou",
            "number": 5,
            "salary": 12000,
            "recruit_type": 0,
            "experience": "0-2 years",
            "time": "2026-07-02",
            "deadline": FAR_FUTURE,
            "detail": "Financial analyst rotation program for fresh graduates.",
            "withdrawn": False,
        },
        {
            "recruit_id": "J4",
            "company_id": "CO2",
            "position_id": "P-QR01",
            "education_id": "E4",
            "linkman_name": "Gao Lan",
            "linkman_email": "jobs@harborcap.cn",
            "company_type": "Private",
            "place": "Financial Street 35",
            "city": "Beijing",
            "number": 1,
            "salary": 30000,
            "recruit_type": 0,
            "experience": "1-3 years",
            "time": "2026-06-20",
            "deadline": FAR_FUTURE,
            "detail": "Quantitative researcher: statistics or CS master preferred.",
            "withdrawn": False,
        },
        {
            "recruit_id": "J5",
            "company_id": "CO2",
            "position_id": "P-OP03",
            "education_id": "E1",
            "linkman_name": "Gao Lan",
            "linkman_email": "jobs@harborcap.cn",
            "company_type": "Private",
            "place": "Lujiazui Ring 1",
            "city": "Shanghai",
            "number": 4,
            "salary": 7000,
            "recruit_type": 1,
            "experience": "none",
            "time": "2026-07-05",
            "deadline": FAR_FUTURE,
            "detail": "Operations support internship, finance back office.",
            "withdrawn": False,
        },
        {
            "recruit_id": "J6",
            "company_id": "CO1",
            "position_id": "P-TS01",
            "education_id": "E2",
            "linkman_name": "Chen Jia",
            "linkman_email": "hr@novasoft.cn",
            "company_type": "Private",
            "place": "Binjiang District",
            "city": "Hangzhou",
            "number": 2,
            "salary": 9000,
            "recruit_type": 0,
            "experience": "0-1 years",
            "time": "2019-10-01",
            "deadline": "2020-01-01T00:00:00Z",
            "detail": "Test engineer for the 2019 autumn intake (closed).",
            "withdrawn": False,
        },
    ],
    "resume_applications": [
        {
            "resume_id": "R1",
            "recruit_id": "J1",
            "student_id": "S1",
            "student_name": "Zhao Min",
            "education_id": "E3",
            "major_id": "M1",
            "experience": "Campus lab assistant; two Django course projects.",
            "skill": "Python, SQL, Git",
            "email": "s1@campus.edu",
            "phone": "13800000000",
            "accessory": None,
            "submitted_at": "2026-07-02T10:00:00Z",
            "viewed_at": "2026-07-03T09:15:00Z",
            "result": "InterviewScheduled",
        },
        {
            "resume_id": "R2",
            "recruit_id": "J1",
            "student_id": "S2",
            "student_name": "Qian Hao",
            "education_id": "E4",
            "major_id": "M1",
            "experience": "Research assistant on distributed systems.",
            "skill": "Go, Kubernetes, MySQL",
            "email": "s2@campus.edu",
            "phone": "13800000001",
            "accessory": None,
            "submitted_at": "2026-07-02T14:30:00Z",
            "viewed_at": "2026-07-03T09:20:00Z",
            "result": None,
        },
        {
            "resume_id": "R3",
            "recruit_id": "J2",
            "student_id": "S3",
            "student_name": "Sun Li",
            "education_id": "E2",
            "major_id": "M2",
            "experience": "Built the class schedule mini-app.",
            "skill": "TypeScript, Vue",
            "email": "s3@campus.edu",
            "phone": "13800000002",
            "accessory": None,
            "submitted_at": "2026-07-04T08:45:00Z",
            "viewed_at": None,
            "result": None,
        },
        {
            "resume_id": "R4",
            "recruit_id": "J6",
            "student_id": "S4",
            "student_name": "Li Jun",
            "education_id": "E5",
            "major_id": "M2",
            "experience": "Teaching assistant, software testing course.",
            "skill": "JUnit, Selenium",
            "email": "s4@campus.edu",
            "phone": "13800000003",
            "accessory": None,
            "submitted_at": "2019-12-01T11:00:00Z",
            "viewed_at": "2019-12-05T10:00:00Z",
            "result": "NotSelected",
        },
        {
            "resume_id": "R5",
            "recruit_id": "J4",
            "student_id": "S1",
            "student_name": "Zhao Min",
            "education_id": "E3",
            "major_id": "M1",
            "experience": "Statistics minor; Kaggle bronze medal.",
            "skill": "Python, pandas, R",
            "email": "s1@campus.edu",
            "phone": "13800000000",
            "accessory": None,
            "submitted_at": "2026-07-05T16:20:00Z",
            "viewed_at": None,
            "result": None,
        },
        {
            "resume_id": "R6",
            "recruit_id": "J3",
            "student_id": "S5",
            "student_name": "Zhou Yan",
            "education_id": "E3",
            "major_id": "M3",
            "experience": "Accounting club treasurer; audit internship.",
            "skill": "Excel, SQL, CPA coursework",
            "email": "s5@campus.edu",
            "phone": "13800000004",
            "accessory": None,
            "submitted_at": "2026-07-03T13:10:00Z",
            "viewed_at": "2026-07-04T09:00:00Z",
            "result": None,
        },
        {
            "resume_id": "R7",
            "recruit_id": "J3",
            "student_id": "S6",
            "student_name": "Wu Kai",
            "education_id": "E2",
            "major_id": "M3",
            "experience": "Bookkeeping part-time for a campus cafe.",
            "skill": "Excel, bookkeeping",
            "email": "s6@campus.edu",
            "phone": "13800000005",
            "accessory": None,
            "submitted_at": "2026-07-04T18:05:00Z",
            "viewed_at": None,
            "result": None,
        },
    ],
    "presentation_applications": [
        {
            "application_id": "P1",
            "company_id": "CO1",
            "requested_start": "2099-03-01T09:00:00Z",
            "requested_duration_minutes": 90,
            "theme": "NovaSoft Campus Talk",
            "expected_attendance": 120,
            "status": "Approved",
        },
        {
            "application_id": "P2",
            "company_id": "CO2",
            "requested_start": "2099-04-15T14:00:00Z",
            "requested_duration_minutes": 60,
            "theme": "Careers in Finance",
            "expected_attendance": 80,
            "status": "Approved",
        },
        {
            "application_id": "P3",
            "company_id": "CO1",
            "requested_start": "2099-05-20T10:00:00Z",
            "requested_duration_minutes": 60,
            "theme": "Internship Openings",
            "expected_attendance": 60,
            "status": "Pending",
        },
    ],
    "arrangements": [
        {
            "arrangement_id": "A1",
            "application_id": "P1",
            "company_id": "CO1",
            "start_time": "2099-03-01T09:00:00Z",
            "duration_minutes": 90,
            "place": "Auditorium A",
            "max_participants": 100,
            "theme": "NovaSoft Campus Talk",
            "updated_at": None,
        },
        {
            "arrangement_id": "A2",
            "application_id": "P2",
            "company_id": "CO2",
            "start_time": "2099-04-15T14:00:00Z",
            "duration_minutes": 60,
            "place": "Hall 2",
            "max_participants": 2,
            "theme": "Careers in Finance",
            "updated_at": None,
        },
    ],
    "registrations": [
        {"id": 1, "student_id": "S1", "arrangement_id": "A1", "registered_at": "2026-07-01T08:00:00Z"},
        {"id": 2, "student_id": "S2", "arrangement_id": "A1", "registered_at": "2026-07-01T08:05:00Z"},
        {"id": 3, "student_id": "S3", "arrangement_id": "A1", "registered_at": "2026-07-01T09:30:00Z"},
        {"id": 4, "student_id": "S1", "arrangement_id": "A2", "registered_at": "2026-07-02T10:00:00Z"},
        {"id": 5, "student_id": "S4", "arrangement_id": "A2", "registered_at": "2026-07-02T11:45:00Z"},
    ],
}

if __name__ == "__main__":
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(fixture, indent=2) + "\n")
    print(f"wrote {OUT}")
