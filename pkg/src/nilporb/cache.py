"""Disk cache for rendered CLI results.

Entries are keyed by (package version, type string, rank, operation) and
stored one file per key.  The payload is whatever JSON-serializable
structure the operation produced; a sha256 checksum over the canonical
JSON encoding guards against corruption and lets `verify --cache` audit
a cache directory without recomputing anything.  Canonical encoding
(sorted keys, fixed separators) keeps repeated writes byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError

ENV_CACHE_DIR = "NILPORB_CACHE_DIR"


def cache_dir() -> Path:
    override = os.environ.get(ENV_CACHE_DIR)
    if override:
        return Path(override)
    base = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
    return Path(base) / "nilporb"


def _canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def checksum(payload) -> str:
    return hashlib.sha256(_canonical(payload).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    key: tuple  # (version, type string, rank, operation)
    payload: object
    checksum: str

    def verify(self) -> bool:
        return checksum(self.payload) == self.checksum


def make_entry(version: str, type_name: str, rank: int, operation: str, payload) -> CacheEntry:
    return CacheEntry((version, type_name, rank, operation), payload, checksum(payload))


def _entry_path(root: Path, key: tuple) -> Path:
    version, type_name, rank, operation = key
    fname = "%s_%s%d_%s.json" % (version, type_name, rank, operation)
    return root / fname


def store(entry: CacheEntry, root: Path | None = None) -> Path:
    root = root or cache_dir()
    root.mkdir(parents=True, exist_ok=True)
    path = _entry_path(root, entry.key)
    body = _canonical(
        {"key": list(entry.key), "payload": entry.payload, "checksum": entry.checksum}
    )
    path.write_text(body + "\n", encoding="utf-8")
    return path


def load(version: str, type_name: str, rank: int, operation: str, root: Path | None = None):
    """Return the cached entry for a key, or None (missing or corrupt)."""
    root = root or cache_dir()
    path = _entry_path(root, (version, type_name, rank, operation))
    if not path.is_file():
        return None
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
        entry = CacheEntry(tuple(raw["key"]), raw["payload"], raw["checksum"])
    except (ValueError, KeyError, TypeError):
        return None
    if not entry.verify():
        return None
    return entry


def audit(root: Path | None = None) -> list[str]:
    """Check every entry in a cache directory; returns failure lines."""
    root = root or cache_dir()
    failures = []
    if not root.is_dir():
        return failures
    for path in sorted(root.glob("*.json")):
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
            entry = CacheEntry(tuple(raw["key"]), raw["payload"], raw["checksum"])
        except (ValueError, KeyError, TypeError) as exc:
            failures.append("%s: unreadable (%s)" % (path.name, exc))
            continue
        if not entry.verify():
            failures.append("%s: checksum mismatch" % path.name)
    return failures


def clear(root: Path | None = None) -> int:
    root = root or cache_dir()
    if not root.is_dir():
        return 0
    n = 0
    for path in root.glob("*.json"):
        path.unlink()
        n += 1
    return n


def require_writable(root: Path | None = None) -> Path:
    root = root or cache_dir()
    try:
        root.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError("cache directory %s is not writable: %s" % (root, exc))
    return root
