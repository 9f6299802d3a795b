"""Append-only JSONL cache of scan results, keyed by a stable profile hash."""

from __future__ import annotations

import hashlib
import json
import logging
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .scanner import ScanRecord
from .solver import PositionProfile

log = logging.getLogger(__name__)


def profile_hash(kind: str, profile: PositionProfile) -> str:
    return hashlib.sha256(f"{kind}|{profile.key()}".encode()).hexdigest()[:20]


@dataclass
class CacheEntry:
    profile_hash: str
    record: ScanRecord

    def to_json(self) -> str:
        return json.dumps({"profile_hash": self.profile_hash, "record": self.record.to_dict()}, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "CacheEntry":
        d = json.loads(line)
        return cls(d["profile_hash"], ScanRecord.from_dict(d["record"]))


def append_entries(path: Path, entries: Iterable[CacheEntry]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(entry.to_json() + "\n")


def read_entries(path: Path) -> list[CacheEntry]:
    """Load every valid line; a corrupt line is logged with its number and skipped."""
    path = Path(path)
    if not path.exists():
        return []
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                entries.append(CacheEntry.from_json(line))
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("%s:%d: skipping corrupt cache line (%s)", path, lineno, exc)
    return entries


def cache_roundtrip(entries: Iterable[CacheEntry], path: Path) -> list[CacheEntry]:
    """Append ``entries`` to ``path`` and read the whole file back."""
    append_entries(path, entries)
    return read_entries(path)


class ScanCache:
    """In-memory view of a JSONL cache; writes go through one lock-guarded writer."""

    def __init__(self, path: Optional[Path] = None):
        self.path = Path(path) if path is not None else None
        self._entries: dict[str, ScanRecord] = {}
        self._lock = threading.Lock()
        if self.path is not None:
            for entry in read_entries(self.path):
                self._entries[entry.profile_hash] = entry.record

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, kind: str, profile: PositionProfile) -> Optional[ScanRecord]:
        return self._entries.get(profile_hash(kind, profile))

    def put(self, profile: PositionProfile, record: ScanRecord) -> None:
        key = profile_hash(record.profile_kind, profile)
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = record
            if self.path is not None:
                append_entries(self.path, [CacheEntry(key, record)])
