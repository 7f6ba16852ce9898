"""Golomb rulers and (v, k) modular Golomb rulers.

A ruler is a strictly increasing tuple of non-negative marks.  It is
Golomb when all positive pairwise differences are distinct, and a
(v, k) modular Golomb ruler (MGR) when all k(k-1) ordered differences
are distinct and nonzero mod v.  Circulant incidence matrices of cyclic
symmetric configurations are exactly the circulants whose first-row
support is an MGR, so everything downstream builds on this module.

The exhaustive search keeps a bitmask of used difference residues and a
bitmask of blocked candidate marks, updated incrementally on push/pop.
Only the translation normalization a_1 = 0 is imposed; no multiplier
symmetry breaking is used, so a ``not-found`` verdict is a proof of
non-existence for the given (v, k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    DeltaTooLarge,
    GcdNotOne,
    MarksExceedModulus,
    NotGolomb,
    NotModularGolomb,
    ParseError,
)

__all__ = [
    "Ruler",
    "SearchStatus",
    "SearchResult",
    "is_golomb",
    "is_modular_golomb",
    "modular_bound",
    "transform",
    "stretch",
    "truncate",
    "search_mgr",
    "orbit_search",
    "format_ruler",
    "parse_ruler",
]


@dataclass(frozen=True)
class Ruler:
    """Ordered marks, optionally tagged with the modulus they live in."""

    marks: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self):
        marks = tuple(self.marks)
        object.__setattr__(self, "marks", marks)
        if not marks:
            raise ValueError("a ruler needs at least one mark")
        if marks[0] < 0 or any(a >= b for a, b in zip(marks, marks[1:])):
            raise ValueError(f"marks must be strictly increasing and non-negative: {marks}")
        if self.modulus is not None:
            if self.modulus <= 0:
                raise ValueError(f"modulus must be positive: {self.modulus}")
            if marks[-1] >= self.modulus:
                raise MarksExceedModulus(f"mark {marks[-1]} >= modulus {self.modulus}")

    @property
    def order(self) -> int:
        """Number of marks k."""
        return len(self.marks)

    @property
    def length(self) -> int:
        """Ruler length L = a_k - a_1."""
        return self.marks[-1] - self.marks[0]


def difference_multiset(marks: Sequence[int], v: int) -> list[int]:
    """All k(k-1) ordered differences a_i - a_j mod v (i != j)."""
    return [(a - b) % v for a in marks for b in marks if a != b]


def is_golomb(r: Ruler) -> bool:
    """True iff all positive pairwise differences are distinct."""
    marks = r.marks
    seen: set[int] = set()
    for i in range(1, len(marks)):
        for j in range(i):
            d = marks[i] - marks[j]
            if d in seen:
                return False
            seen.add(d)
    return True


def _is_mgr(marks: Sequence[int], v: int) -> bool:
    seen: set[int] = set()
    for i in range(1, len(marks)):
        for j in range(i):
            d = (marks[i] - marks[j]) % v
            e = (v - d) % v
            if d == 0 or d == e or d in seen or e in seen:
                return False
            seen.add(d)
            seen.add(e)
    return True


def is_modular_golomb(r: Ruler, v: int) -> bool:
    """True iff all k(k-1) differences are distinct and nonzero mod v."""
    if r.marks[-1] >= v:
        raise MarksExceedModulus(f"mark {r.marks[-1]} >= modulus {v}")
    return _is_mgr(r.marks, v)


def modular_bound(r: Ruler) -> int:
    """Smallest modulus 2L + 1 from which r works for every larger one."""
    if not is_golomb(r):
        raise NotGolomb(f"{r.marks} is not a Golomb ruler")
    return 2 * r.length + 1


def transform(r: Ruler, v: int, m: int, b: int) -> Ruler:
    """The ruler (m * a_i + b mod v), sorted; an MGR again when r is one."""
    if math.gcd(m, v) != 1:
        raise GcdNotOne(f"gcd({m}, {v}) != 1")
    if not is_modular_golomb(r, v):
        raise NotModularGolomb(f"{r.marks} is not a ({v},{r.order}) modular Golomb ruler")
    marks = tuple(sorted((m * a + b) % v for a in r.marks))
    out = Ruler(marks, v)
    assert _is_mgr(marks, v), "affine image of an MGR must stay an MGR"
    return out


def stretch(r: Ruler, v: int, delta_max: int) -> list[int]:
    """Every delta in [1, delta_max] for which r is also a (v+delta, k) MGR."""
    if not is_modular_golomb(r, v):
        raise NotModularGolomb(f"{r.marks} is not a ({v},{r.order}) modular Golomb ruler")
    return [delta for delta in range(1, delta_max + 1) if _is_mgr(r.marks, v + delta)]


def truncate(r: Ruler, delta: int) -> Ruler:
    """Drop the delta largest marks (a subset of a Sidon set is Sidon)."""
    if not 0 <= delta < r.order:
        raise DeltaTooLarge(f"delta {delta} out of range for order {r.order}")
    return Ruler(r.marks[: r.order - delta], r.modulus)


class SearchStatus(str, Enum):
    FOUND = "found"
    NOT_FOUND = "not-found"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    ruler: Ruler | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def search_mgr(v: int, k: int, budget: int | None = None) -> SearchResult:
    """Exhaustive backtracking search for a (v, k) modular Golomb ruler.

    Returns the lexicographically first witness with a_1 = 0, a definitive
    ``not-found`` when the whole tree is exhausted, or ``budget-exceeded``
    after more than ``budget`` nodes (so truncated runs can never be
    mistaken for non-existence proofs).
    """
    if k < 2 or v < k:
        raise ValueError(f"need v >= k >= 2, got v={v}, k={k}")
    if v < k * (k - 1) + 1:
        # fewer than k(k-1) nonzero residues available: no MGR can exist
        return SearchResult(SearchStatus.NOT_FOUND, None, 0)

    mask = (1 << v) - 1
    limit = math.inf if budget is None else budget
    nodes = 0
    marks = [0]
    witness: list[int] | None = None
    exceeded = False

    def rot(x: int, s: int) -> int:
        if s == 0:
            return x
        return ((x << s) | (x >> (v - s))) & mask

    def extend(diffs: int, blocked: int) -> bool:
        """DFS one more mark; True once a witness is complete."""
        nonlocal nodes, witness, exceeded
        depth = len(marks)
        need = k - depth
        free = (~blocked) & mask & ~((1 << (marks[-1] + 1)) - 1)
        if free.bit_count() < need:
            return False
        cand = free
        while cand:
            low = cand & (-cand)
            cand ^= low
            m = low.bit_length() - 1
            # new differences created by m against the current marks
            new = 0
            ok = True
            for a in marks:
                d = (m - a) % v
                e = v - d
                if d == e:
                    ok = False
                    break
                bits = (1 << d) | (1 << e)
                if new & bits:
                    ok = False
                    break
                new |= bits
            if not ok:
                continue
            nodes += 1
            if nodes > limit:
                exceeded = True
                return False
            marks.append(m)
            if depth + 1 == k:
                witness = marks[:]
                marks.pop()
                return True
            diffs2 = diffs | new
            blocked2 = blocked | low | rot(diffs2, m)
            for a in marks[:-1]:
                blocked2 |= rot(new, a)
            if extend(diffs2, blocked2):
                marks.pop()
                return True
            marks.pop()
            if exceeded:
                return False
        return False

    found = extend(0, 1)
    if found and witness is not None:
        return SearchResult(SearchStatus.FOUND, Ruler(tuple(witness), v), nodes)
    if exceeded:
        return SearchResult(SearchStatus.BUDGET_EXCEEDED, None, nodes)
    return SearchResult(SearchStatus.NOT_FOUND, None, nodes)


def orbit_search(base: Ruler, v: int, targets: Iterable[int]) -> list[tuple[int, Ruler]]:
    """Hits (v', witness) where some affine image of base is a (v', k) MGR.

    Enumerates every multiplier m with gcd(m, v) = 1 and every shift
    b < v, then tests each transformed ruler against each target modulus
    v' > v.  Hits are deduplicated and sorted by (v', marks).
    """
    target_list = sorted(set(targets))
    if any(t <= v for t in target_list):
        raise ValueError(f"targets must exceed v={v}: {target_list}")
    if not is_modular_golomb(base, v):
        raise NotModularGolomb(f"{base.marks} is not a ({v},{base.order}) modular Golomb ruler")
    if not target_list:
        return []
    hits: set[tuple[int, tuple[int, ...]]] = set()
    for m in range(1, v):
        if math.gcd(m, v) != 1:
            continue
        for b in range(v):
            marks = tuple(sorted((m * a + b) % v for a in base.marks))
            for t in target_list:
                if (t, marks) not in hits and _is_mgr(marks, t):
                    hits.add((t, marks))
    return [(t, Ruler(marks, t)) for t, marks in sorted(hits)]


# -- text format ----------------------------------------------------------


def format_ruler(r: Ruler, v: int | None = None) -> str:
    """One line ``mgr v k: a1,a2,...,ak``."""
    modulus = v if v is not None else r.modulus
    if modulus is None:
        raise ValueError("ruler text format needs a modulus")
    return f"mgr {modulus} {r.order}: " + ",".join(str(a) for a in r.marks)


def parse_ruler(line: str) -> Ruler:
    """Parse the ``mgr v k: ...`` line format."""
    try:
        head, _, tail = line.strip().partition(":")
        tag, v_s, k_s = head.split()
        if tag != "mgr":
            raise ValueError(f"expected 'mgr' header, got {tag!r}")
        v, k = int(v_s), int(k_s)
        marks = tuple(int(tok) for tok in tail.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad ruler line {line!r}: {exc}") from None
    if len(marks) != k:
        raise ParseError(f"ruler line announces k={k} but has {len(marks)} marks")
    return Ruler(marks, v)
