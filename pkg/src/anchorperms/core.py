"""Core value types and validity predicates.

Permutations are stored in list notation, 1-indexed: entry i is the value
at position i. All counts are exact Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence


class LemmaViolationError(AssertionError):
    """A structural claim that should be mathematically impossible failed.

    Distinct from ValueError (caller bug): raising this means either the
    implementation is broken or a claimed structural property is false.
    The test suite treats it as fatal.
    """


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n} in list notation."""

    entries: tuple[int, ...]

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise ValueError("permutation must have at least one entry")
        if sorted(self.entries) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, position: int) -> int:
        """Value at 1-indexed position."""
        if not 1 <= position <= self.n:
            raise IndexError(f"position {position} out of range 1..{self.n}")
        return self.entries[position - 1]

    def reverse(self) -> "Permutation":
        return Permutation(self.entries[::-1])

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))


@dataclass(frozen=True)
class GapSpec:
    """Maximum absolute difference allowed between consecutive entries."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")


@dataclass(frozen=True)
class Variant:
    """Endpoint constraint on the permutations being counted.

    kind 'anchored' fixes the first entry to 1 and the last to n;
    'endpoints' fixes the first and last entries to given values;
    'free' leaves both ends unconstrained.
    """

    kind: str
    start: int | None = None
    end: int | None = None

    def __post_init__(self):
        if self.kind not in ("anchored", "endpoints", "free"):
            raise ValueError(f"unknown variant kind {self.kind!r}")
        if self.kind == "endpoints":
            if self.start is None or self.end is None:
                raise ValueError("endpoints variant requires start and end")
        elif self.start is not None or self.end is not None:
            raise ValueError(f"{self.kind} variant takes no endpoint values")

    def check_range(self, n: int) -> None:
        """Validate endpoint values against a concrete n."""
        if self.kind != "endpoints":
            return
        if not (1 <= self.start <= n and 1 <= self.end <= n):
            raise ValueError(f"endpoints {self.start},{self.end} out of range 1..{n}")
        if n > 1 and self.start == self.end:
            raise ValueError("start and end must differ when n > 1")

    def matches(self, p: Permutation) -> bool:
        if self.kind == "anchored":
            return p.entries[0] == 1 and p.entries[-1] == p.n
        if self.kind == "endpoints":
            return p.entries[0] == self.start and p.entries[-1] == self.end
        return True


ANCHORED = Variant("anchored")
FREE = Variant("free")


def endpoints(start: int, end: int) -> Variant:
    return Variant("endpoints", start, end)


@dataclass
class CountTable:
    """Exact counts indexed by n for a fixed (k, variant) pair."""

    k: int
    variant: Variant
    terms: dict[int, int] = field(default_factory=dict)
    provenance: str = "unknown"
    offset: int = 1

    def __post_init__(self):
        self._check()

    def _check(self) -> None:
        if self.terms:
            idx = sorted(self.terms)
            if idx != list(range(idx[0], idx[-1] + 1)):
                raise ValueError("term indices must be contiguous")
            if idx[0] != self.offset:
                raise ValueError(f"terms start at {idx[0]}, declared offset {self.offset}")
            if any(v < 0 for v in self.terms.values()):
                raise ValueError("counts must be nonnegative")

    def __getitem__(self, n: int) -> int:
        return self.terms[n]

    def __len__(self) -> int:
        return len(self.terms)

    def max_index(self) -> int:
        return max(self.terms) if self.terms else self.offset - 1

    def values(self) -> list[int]:
        """Terms in index order."""
        return [self.terms[i] for i in sorted(self.terms)]


def is_k_bounded(p: Permutation, k: GapSpec | int) -> bool:
    """True iff every consecutive absolute difference is at most k."""
    kk = k.k if isinstance(k, GapSpec) else k
    e = p.entries
    return all(abs(e[i + 1] - e[i]) <= kk for i in range(len(e) - 1))


def is_anchored(p: Permutation) -> bool:
    return p.entries[0] == 1 and p.entries[-1] == p.n


def gaps(p: Permutation | Sequence[int]) -> tuple[int, ...]:
    """Signed consecutive differences, in order. Empty for n = 1."""
    e = p.entries if isinstance(p, Permutation) else tuple(p)
    return tuple(e[i + 1] - e[i] for i in range(len(e) - 1))


def is_blocked(prefix: Sequence[int], k: GapSpec | int, n: int) -> bool:
    """True iff the last entry of the prefix has no unused continuation.

    Every candidate within gap k of the last entry is either outside 1..n
    or already used.
    """
    if not prefix:
        raise ValueError("empty prefix has no last entry")
    kk = k.k if isinstance(k, GapSpec) else k
    used = set(prefix)
    a = prefix[-1]
    for v in range(max(1, a - kk), min(n, a + kk) + 1):
        if v != a and v not in used:
            return False
    return True
