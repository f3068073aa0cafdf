"""OEIS b-file parsing, cached fetching, and table comparison.

The test suite runs against a vendored fixture; live fetching is only
exercised when a network (or local fixture server) is available. Base URL
and cache directory are configurable through the OEIS_BASE_URL and
OEIS_CACHE_DIR environment variables.
"""

from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path

import requests

from .core import FREE, CountTable

DEFAULT_BASE_URL = "https://oeis.org"
_ID_RE = re.compile(r"^A\d{6}$")


class BFileParseError(ValueError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class OeisFetchError(RuntimeError):
    pass


class OfflineCacheMissError(OeisFetchError):
    """No network and nothing cached for the requested sequence."""


def parse_bfile(text: str) -> CountTable:
    """Parse OEIS b-file text into a CountTable, preserving the offset."""
    terms: dict[int, int] = {}
    offset = None
    prev = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise BFileParseError(f"expected two fields, got {len(fields)}", line_number)
        try:
            idx, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {line!r}", line_number) from None
        if prev is not None and idx != prev + 1:
            raise BFileParseError(
                f"non-contiguous index {idx} after {prev}", line_number
            )
        if offset is None:
            offset = idx
        terms[idx] = value
        prev = idx
    return CountTable(
        k=0,
        variant=FREE,
        terms=terms,
        provenance="oeis",
        offset=offset if offset is not None else 1,
    )


def serialize_bfile(table: CountTable) -> str:
    return "".join(f"{i} {table[i]}\n" for i in sorted(table.terms))


def _cache_path(cache_dir: Path, sequence_id: str) -> Path:
    return Path(cache_dir) / f"{sequence_id}.txt"


def bfile_url(sequence_id: str, base_url: str | None = None) -> str:
    base = base_url or os.environ.get("OEIS_BASE_URL", DEFAULT_BASE_URL)
    return f"{base.rstrip('/')}/{sequence_id}/b{sequence_id[1:]}.txt"


def fetch_terms(
    sequence_id: str,
    cache_dir,
    *,
    refresh: bool = False,
    base_url: str | None = None,
) -> CountTable:
    """Return the cached b-file for the id, fetching it once if absent."""
    if not _ID_RE.match(sequence_id):
        raise ValueError(f"bad sequence id {sequence_id!r} (want A followed by 6 digits)")
    cache_dir = Path(cache_dir)
    path = _cache_path(cache_dir, sequence_id)
    if path.exists() and not refresh:
        return parse_bfile(path.read_text())
    try:
        resp = requests.get(bfile_url(sequence_id, base_url), timeout=30)
    except requests.RequestException as exc:
        if path.exists():
            return parse_bfile(path.read_text())
        raise OfflineCacheMissError(
            f"offline and no cached b-file for {sequence_id}"
        ) from exc
    if resp.status_code != 200:
        raise OeisFetchError(f"HTTP {resp.status_code} fetching {sequence_id}")
    cache_dir.mkdir(parents=True, exist_ok=True)
    # Write-to-temp plus atomic rename so concurrent fetches cannot
    # corrupt the cache.
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=f".{sequence_id}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(resp.text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return parse_bfile(path.read_text())


@dataclass(frozen=True)
class CompareReport:
    overlap_length: int
    first_mismatch: int | None  # index in a's convention, shift 0
    best_shift: int
    best_shift_match_length: int
    full_match_at_best_shift: bool


def _match_at_shift(a: CountTable, b: CountTable, shift: int) -> tuple[int, int | None]:
    """(overlap, first mismatch index in a's indexing) comparing a[i] with
    b[i + shift]."""
    lo = max(min(a.terms, default=0), min(b.terms, default=0) - shift)
    hi = min(max(a.terms, default=-1), max(b.terms, default=-1) - shift)
    overlap = max(0, hi - lo + 1)
    for i in range(lo, hi + 1):
        if a[i] != b[i + shift]:
            return overlap, i
    return overlap, None


def compare(a: CountTable, b: CountTable, shifts: range = range(-3, 4)) -> CompareReport:
    """Compare overlapping terms, then search small offset shifts for the
    longest leading agreement (reported, never silently applied)."""
    overlap0, mismatch0 = _match_at_shift(a, b, 0)
    best = (0, 0, overlap0, mismatch0 is None)  # (match_len, shift, overlap, full)
    best_len = -1
    for s in sorted(shifts, key=lambda s: (abs(s), s)):
        overlap, mismatch = _match_at_shift(a, b, s)
        if overlap == 0:
            match_len = 0
            full = a.terms == {} or b.terms == {} or overlap == 0
        elif mismatch is None:
            match_len = overlap
            full = True
        else:
            lo = max(min(a.terms), min(b.terms) - s)
            match_len = mismatch - lo
            full = False
        if match_len > best_len:
            best_len = match_len
            best = (match_len, s, overlap, full)
    return CompareReport(
        overlap_length=overlap0,
        first_mismatch=mismatch0,
        best_shift=best[1],
        best_shift_match_length=best[0],
        full_match_at_best_shift=best[3] and best[2] > 0,
    )
