"""Service configuration: a single JSON document, with RECRUIT_-prefixed
environment variables overriding individual keys."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Mapping

from .attachments import DEFAULT_EXTENSIONS, DEFAULT_MAX_BYTES
from .errors import ValidationError

ENV_PREFIX = "RECRUIT_"


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    store_path: str = ":memory:"
    attachments_dir: str = "attachments"
    session_ttl_minutes: int = 30
    upload_max_bytes: int = DEFAULT_MAX_BYTES
    allowed_extensions: tuple[str, ...] = DEFAULT_EXTENSIONS
    enforce_capacity: bool = True
    busy_timeout_ms: int = 5000
    password_iterations: int = 100_000
    static_dir: str | None = None

    def __post_init__(self):
        if not 1 <= self.port <= 65535:
            raise ValidationError("port must be within [1, 65535]")
        if self.session_ttl_minutes < 1:
            raise ValidationError("session_ttl_minutes must be >= 1")
        if self.upload_max_bytes < 0 or self.busy_timeout_ms < 0:
            raise ValidationError("sizes and timeouts must be >= 0")


def _coerce(name: str, kind, raw: str):
    if kind in (int, "int"):
        return int(raw)
    if kind in (bool, "bool"):
        lowered = raw.strip().lower()
        if lowered in ("1", "true", "yes", "on"):
            return True
        if lowered in ("0", "false", "no", "off"):
            return False
        raise ValidationError(f"{name}: expected a boolean, got {raw!r}")
    if name == "allowed_extensions":
        return tuple(part.strip() for part in raw.split(",") if part.strip())
    return raw


def load_config(
    path: str | Path | None = None, env: Mapping[str, str] | None = None
) -> ServiceConfig:
    """Build the config from defaults <- file <- environment, in that order."""
    env = os.environ if env is None else env
    values: dict = {}
    if path is not None:
        try:
            document = json.loads(Path(path).read_text())
        except FileNotFoundError:
            raise ValidationError(f"config file not found: {path}") from None
        except json.JSONDecodeError as exc:
            raise ValidationError(f"config file is not valid JSON: {exc}") from None
        if not isinstance(document, dict):
            raise ValidationError("config document must be a JSON object")
        values.update(document)

    field_types = {f.name: f.type for f in fields(ServiceConfig)}
    unknown = set(values) - set(field_types)
    if unknown:
        raise ValidationError(f"unknown config keys: {sorted(unknown)}")
    if "allowed_extensions" in values and isinstance(values["allowed_extensions"], list):
        values["allowed_extensions"] = tuple(values["allowed_extensions"])

    for name in field_types:
        env_key = ENV_PREFIX + name.upper()
        if env_key in env:
            default = ServiceConfig.__dataclass_fields__[name].default
            if isinstance(default, bool):
                kind = bool
            elif isinstance(default, int):
                kind = int
            else:
                kind = str
            values[name] = _coerce(name, kind, env[env_key])

    try:
        return ServiceConfig(**values)
    except TypeError as exc:
        raise ValidationError(f"bad config: {exc}") from None
