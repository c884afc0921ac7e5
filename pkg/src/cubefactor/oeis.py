"""OEIS b-file parsing, fetching with a disk cache, and sequence comparison.

b-files are the plain-text "index value" format; records keep the first
index as the offset. Offsets are never assumed: comparisons take an
explicit shift, and a shift scan discovers the alignment between a locally
generated sequence and a b-file whose initial terms follow a different
convention.
"""

from __future__ import annotations

import os
import re
import tempfile
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

__all__ = [
    "SequenceRecord",
    "MatchReport",
    "BFileError",
    "FetchError",
    "parse_bfile",
    "render_bfile",
    "cache_dir",
    "fetch_bfile",
    "compare",
    "scan_shifts",
    "best_match",
]

CACHE_ENV = "CUBEFACTOR_CACHE"
_ID_PATTERN = re.compile(r"^A\d{6}$")


class BFileError(ValueError):
    """Malformed b-file text (bad line or gap in the index column)."""


class FetchError(RuntimeError):
    """Network failure, non-200 response, or offline with a cold cache."""


@dataclass(frozen=True)
class SequenceRecord:
    id: str | None
    offset: int
    terms: tuple[int, ...]


def parse_bfile(text: str, id: str | None = None) -> SequenceRecord:
    """Parse b-file text: '#' comment lines, then "index value" data lines
    with consecutive indices. The offset is the first index seen."""
    offset: int | None = None
    expected: int | None = None
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
        if offset is None:
            offset = expected = index
        if index != expected:
            raise BFileError(f"line {lineno}: index {index}, expected {expected} (gap)")
        terms.append(value)
        expected = index + 1
    if offset is None:
        raise BFileError("no data lines found")
    return SequenceRecord(id, offset, tuple(terms))


def render_bfile(record: SequenceRecord) -> str:
    """Inverse of parse_bfile on the data lines."""
    return "".join(f"{record.offset + i} {t}\n" for i, t in enumerate(record.terms))


def cache_dir(override: str | os.PathLike | None = None) -> Path:
    """Cache directory: explicit override, then $CUBEFACTOR_CACHE, then
    ~/.cache/cubefactor."""
    if override is not None:
        return Path(override)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cubefactor"


def _normalize_id(id: str) -> str:
    candidate = id.strip().upper()
    if not candidate.startswith("A"):
        candidate = "A" + candidate
    candidate = "A" + candidate[1:].zfill(6)
    if not _ID_PATTERN.match(candidate):
        raise ValueError(f"not an OEIS id: {id!r}")
    return candidate


def fetch_bfile(
    id: str,
    *,
    offline: bool = False,
    cache: str | os.PathLike | None = None,
    timeout: float = 30.0,
) -> SequenceRecord:
    """b-file for an OEIS id, served from the disk cache when present.

    Cache entries never expire (b-files are effectively immutable) and are
    written atomically (temp file then rename). In offline mode a cold
    cache raises FetchError instead of touching the network.
    """
    oid = _normalize_id(id)
    directory = cache_dir(cache)
    path = directory / f"{oid}.txt"
    if path.exists():
        return parse_bfile(path.read_text(encoding="utf-8"), id=oid)
    if offline:
        raise FetchError(f"offline mode and {oid} is not in the cache ({directory})")
    url = f"https://oeis.org/{oid}/b{oid[1:]}.txt"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as response:
            if response.status != 200:
                raise FetchError(f"GET {url} returned HTTP {response.status}")
            text = response.read().decode("utf-8")
    except FetchError:
        raise
    except Exception as exc:
        raise FetchError(f"GET {url} failed: {exc}") from exc
    record = parse_bfile(text, id=oid)  # validate before caching
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=directory, prefix=f".{oid}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return record


@dataclass(frozen=True)
class MatchReport:
    shift: int
    overlap: int
    matched: bool
    first_mismatch: tuple[int, int, int] | None  # (local index, local, remote)


def compare(
    local_terms: Sequence[int],
    local_start: int,
    remote: SequenceRecord,
    shift: int,
) -> MatchReport:
    """Compare local index i against the remote term at index i + shift.

    Reports the overlap length and the first mismatch; an empty overlap is
    an error (there is nothing to compare).
    """
    local_lo = local_start
    local_hi = local_start + len(local_terms) - 1
    lo = max(local_lo, remote.offset - shift)
    hi = min(local_hi, remote.offset + len(remote.terms) - 1 - shift)
    if len(local_terms) == 0 or lo > hi:
        raise ValueError(f"empty overlap at shift {shift}")
    first = None
    for i in range(lo, hi + 1):
        a = local_terms[i - local_lo]
        b = remote.terms[i + shift - remote.offset]
        if a != b:
            first = (i, a, b)
            break
    return MatchReport(shift, hi - lo + 1, first is None, first)


def scan_shifts(
    local_terms: Sequence[int],
    local_start: int,
    remote: SequenceRecord,
    shifts: Sequence[int] = tuple(range(-5, 6)),
) -> list[MatchReport]:
    """Compare at every shift in the window, skipping empty overlaps."""
    reports = []
    for shift in shifts:
        try:
            reports.append(compare(local_terms, local_start, remote, shift))
        except ValueError:
            continue
    return reports


def best_match(reports: Sequence[MatchReport]) -> MatchReport | None:
    """Full-overlap match with the longest overlap; ties take the smaller
    shift. None when no shift matched."""
    matched = [r for r in reports if r.matched]
    if not matched:
        return None
    return min(matched, key=lambda r: (-r.overlap, r.shift))
