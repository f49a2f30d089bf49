"""Unified search: one endpoint routes a typed query to job postings
("Recruit") or presentation arrangements ("Application"); any other type is
an input error.  Matching is case-insensitive substring over the listed
fields, on top of the same base listings the browse endpoints serve."""

from __future__ import annotations

from typing import Callable

from .auth import AuthService, now_epoch
from .errors import InputError, ValidationError
from .models import Role
from .presentations import all_arrangements
from .recruitment import visible_postings
from .store import Store

SEARCH_TYPES = ("Recruit", "Application")
MAX_KEYWORD_LENGTH = 100


def _matches(keyword: str, *values: str | None) -> bool:
    needle = keyword.casefold()
    return any(needle in value.casefold() for value in values if value)


class SearchService:
    def __init__(self, store: Store, auth: AuthService, clock: Callable[[], int] = now_epoch):
        self.store = store
        self.auth = auth
        self._clock = clock

    def search(
        self,
        token: str | None,
        search_type: str,
        keyword: str = "",
        city: str | None = None,
    ) -> dict:
        self.auth.authorize(token, tuple(Role))
        if keyword is None:
            keyword = ""
        if len(keyword) > MAX_KEYWORD_LENGTH:
            raise ValidationError(f"keyword longer than {MAX_KEYWORD_LENGTH} characters")
        if search_type == "Recruit":
            companies = {c.company_id: c.company_name for c in self.store.query("company")}
            postings = visible_postings(self.store, self._clock(), city=city)
            items = [
                p
                for p in postings
                if _matches(keyword, p.place, p.city, p.detail, companies.get(p.company_id))
            ]
            return {"type": "Recruit", "items": items}
        if search_type == "Application":
            companies = {c.company_id: c.company_name for c in self.store.query("company")}
            items = [
                a
                for a in all_arrangements(self.store)
                if _matches(keyword, a.theme, a.place, companies.get(a.company_id))
            ]
            return {"type": "Application", "items": items}
        raise InputError(f"unknown search type: {search_type!r}")
