"""Content-addressed attachment files (resume accessories).

Each upload lands under ``<root>/<key>/<original name>``; the 20-character
key is derived from name+content so identical uploads deduplicate and the
key fits the accessory column."""

from __future__ import annotations

import hashlib
import os
from pathlib import Path

from .errors import PayloadTooLarge, StoreUnavailable, ValidationError

DEFAULT_MAX_BYTES = 5 * 1024 * 1024
DEFAULT_EXTENSIONS = (".pdf", ".doc", ".docx")


class AttachmentStore:
    def __init__(
        self,
        root: str | Path,
        max_bytes: int = DEFAULT_MAX_BYTES,
        allowed_extensions: tuple[str, ...] = DEFAULT_EXTENSIONS,
    ):
        self.root = Path(root)
        self.max_bytes = max_bytes
        self.allowed_extensions = tuple(ext.lower() for ext in allowed_extensions)

    def put(self, filename: str, data: bytes) -> str:
        name = os.path.basename(filename or "").replace(os.sep, "_")
        if not name:
            raise ValidationError("attachment needs a file name")
        extension = os.path.splitext(name)[1].lower()
        if extension not in self.allowed_extensions:
            allowed = ", ".join(self.allowed_extensions)
            raise ValidationError(f"attachment type {extension or '(none)'} not in: {allowed}")
        if len(data) > self.max_bytes:
            raise PayloadTooLarge(f"attachment exceeds {self.max_bytes} bytes")
        key = hashlib.sha256(name.encode() + b"\x00" + data).hexdigest()[:20]
        target = self.root / key
        target.mkdir(parents=True, exist_ok=True)
        (target / name).write_bytes(data)
        return key

    def get(self, key: str) -> tuple[str, bytes]:
        """Return (original filename, bytes) for a stored key."""
        target = self.root / key
        if not target.is_dir():
            raise StoreUnavailable(f"attachment {key!r} is missing from storage")
        files = sorted(p for p in target.iterdir() if p.is_file())
        if not files:
            raise StoreUnavailable(f"attachment {key!r} is missing from storage")
        return files[0].name, files[0].read_bytes()
