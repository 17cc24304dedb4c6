"""
Memo cache for Murnaghan-Nakayama evaluations.

Keys are (sub-partition parts, remaining class parts) tuples and values
are exact integers. The cache can be attached to an append-only file so
that repeated runs share work.
"""

import logging
import threading
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from symchar.config import MEMO_FILE_HEADER, MEMO_MAX_ENTRIES

logger = logging.getLogger(__name__)

MemoKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _encode_parts(parts: Tuple[int, ...]) -> str:
    return ",".join(str(p) for p in parts)


def _decode_parts(text: str) -> Tuple[int, ...]:
    if not text:
        return ()
    parts = tuple(int(token) for token in text.split(","))
    if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"not a canonical partition: {text!r}")
    return parts


class MemoCache:
    """
    In-memory memo table with optional entry cap and file persistence.

    Readers never lock; writers take a lock. Two threads computing the
    same key write the same value, so duplicated work is harmless.
    """

    def __init__(self, max_entries: int = MEMO_MAX_ENTRIES):
        self._cache: Dict[MemoKey, int] = {}
        self._pending: Dict[MemoKey, int] = {}
        self._lock = threading.Lock()
        self._max_entries = max_entries
        self._path: Optional[Path] = None
        self._hits = 0
        self._misses = 0

    def get(self, key: MemoKey) -> Optional[int]:
        value = self._cache.get(key)
        if value is None:
            self._misses += 1
        else:
            self._hits += 1
        return value

    def set(self, key: MemoKey, value: int):
        with self._lock:
            if self._max_entries and len(self._cache) >= self._max_entries and key not in self._cache:
                # FIFO eviction; evicted values are simply recomputed
                oldest = next(iter(self._cache))
                del self._cache[oldest]
            self._cache[key] = value
            if self._path is not None:
                self._pending[key] = value

    def get_stats(self) -> Dict[str, Any]:
        return {
            "entries": len(self._cache),
            "hits": self._hits,
            "misses": self._misses,
            "max_entries": self._max_entries,
            "path": str(self._path) if self._path else None,
        }

    def attach(self, path: Path):
        """
        Load an existing memo file and append new entries to it on flush().

        A file with a wrong header or an unparsable record is discarded
        and rewritten from scratch.
        """
        path = Path(path)
        loaded: Dict[MemoKey, int] = {}
        if path.exists():
            try:
                loaded = self._read_file(path)
                logger.info(f"Loaded {len(loaded)} memo entries from {path}")
            except (OSError, ValueError) as e:
                logger.warning(f"Discarding corrupt memo cache {path}: {e}")
                loaded = {}
                self._write_header(path)
        else:
            path.parent.mkdir(parents=True, exist_ok=True)
            self._write_header(path)

        with self._lock:
            self._path = path
            for key, value in loaded.items():
                self._cache.setdefault(key, value)

    def flush(self) -> int:
        """Append entries computed since the last flush; returns how many."""
        if self._path is None:
            return 0
        with self._lock:
            pending, self._pending = self._pending, {}
        if not pending:
            return 0
        records = "".join(
            f"{_encode_parts(shape)}|{_encode_parts(rest)}\t{value}\n" for (shape, rest), value in pending.items()
        )
        with open(self._path, "a", encoding="utf-8") as f:
            f.write(records)
        logger.debug(f"Appended {len(pending)} memo entries to {self._path}")
        return len(pending)

    @staticmethod
    def _write_header(path: Path):
        with open(path, "w", encoding="utf-8") as f:
            f.write(MEMO_FILE_HEADER + "\n")

    @staticmethod
    def _read_file(path: Path) -> Dict[MemoKey, int]:
        entries: Dict[MemoKey, int] = {}
        with open(path, "r", encoding="utf-8") as f:
            header = f.readline()
            if header != MEMO_FILE_HEADER + "\n":
                raise ValueError(f"unexpected header {header!r}")
            for line_no, line in enumerate(f, start=2):
                # a record without its newline was cut off mid-append
                if not line.endswith("\n"):
                    raise ValueError(f"line {line_no}: truncated record {line!r}")
                line = line[:-1]
                if not line:
                    continue
                try:
                    key_text, value_text = line.split("\t")
                    shape_text, rest_text = key_text.split("|")
                    shape = _decode_parts(shape_text)
                    rest = _decode_parts(rest_text)
                    if sum(shape) != sum(rest):
                        raise ValueError("sizes differ")
                    entries[(shape, rest)] = int(value_text)
                except ValueError as e:
                    raise ValueError(f"line {line_no}: {e}") from e
        return entries


# Singleton instance
memo_cache = MemoCache()
