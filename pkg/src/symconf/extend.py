"""Growing configurations: extending aggregates and the cloning step.

An extending aggregate of a verified M(v, k) is a set of k-1 rows of
pairwise disjoint lines plus k-1 columns of pairwise non-collinear
points whose intersection submatrix is a permutation matrix.  Cloning
its ones into a fresh row and column (and zeroing the originals) yields
a verified M(v+1, k); iterating with pairwise disjoint aggregates walks
v upward at fixed k.

The search is a depth-first scan over rows in increasing index order,
each row immediately paired with its partner column, maintaining
bitmasks of covered points and lines; the first aggregate found is
therefore lexicographically minimal in the (row, column) pair sequence.
``extend_chain`` backtracks across steps: if a greedy aggregate choice
leaves a later step stuck, earlier choices are revisited, so a chain
failure means no disjoint choice sequence of the requested length
exists within the node budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import ExtensionUnavailable, InvalidAggregate
from .matrix import IncidenceMatrix, verify
from .ruler import SearchStatus

__all__ = ["EAggregate", "AggregateResult", "find_aggregate", "extend_once", "extend_chain"]


@dataclass(frozen=True)
class EAggregate:
    """k-1 disjoint lines, k-1 non-collinear points, and their pairing.

    ``rows`` and ``cols`` are sorted; ``pi[u]`` is the index into
    ``cols`` of the unique one in row ``rows[u]``.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    pi: tuple[int, ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(r, self.cols[self.pi[u]]) for u, r in enumerate(self.rows)]


@dataclass(frozen=True)
class AggregateResult:
    status: SearchStatus
    aggregate: EAggregate | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


class _BudgetExhausted(Exception):
    pass


def _iter_aggregates(
    m: IncidenceMatrix,
    size: int,
    excluded_rows: int,
    excluded_cols: int,
    counter: list[int],
    budget: float,
) -> Iterator[EAggregate]:
    """All E-aggregates avoiding the excluded index masks, lexicographic
    in their (row, partner column) sequence."""
    rows = m.rows
    cols = m.cols
    v = m.v
    pairs: list[tuple[int, int]] = []

    def dfs(first_row: int, row_union: int, col_union: int, chosen_cols: int) -> Iterator[EAggregate]:
        if len(pairs) == size:
            row_idx = tuple(r for r, _ in pairs)
            col_sorted = tuple(sorted(c for _, c in pairs))
            pi = tuple(col_sorted.index(c) for _, c in pairs)
            yield EAggregate(row_idx, col_sorted, pi)
            return
        for r in range(first_row, v):
            bit = 1 << r
            if excluded_rows & bit:
                continue
            row = rows[r]
            # disjoint from chosen lines, no stray one in a chosen column
            if row & row_union or row & chosen_cols:
                continue
            cand = row & ~excluded_cols
            while cand:
                low = cand & (-cand)
                cand ^= low
                c = low.bit_length() - 1
                if cols[c] & col_union:
                    continue  # collinear with a chosen point
                counter[0] += 1
                if counter[0] > budget:
                    raise _BudgetExhausted
                pairs.append((r, c))
                yield from dfs(r + 1, row_union | row, col_union | cols[c], chosen_cols | low)
                pairs.pop()

    yield from dfs(0, 0, 0, 0)


def find_aggregate(
    m: IncidenceMatrix,
    exclude_rows: set[int] = frozenset(),
    exclude_cols: set[int] = frozenset(),
    budget: int | None = None,
) -> AggregateResult:
    """First E-aggregate of a verified M(v, k) avoiding the excluded indices.

    Three-way verdict: found / not-found (search space exhausted) /
    budget-exceeded (never mistakable for non-existence).
    """
    k = m.rows[0].bit_count()
    if k < 2:
        return AggregateResult(SearchStatus.NOT_FOUND, None, 0)
    excluded_rows = sum(1 << r for r in exclude_rows)
    excluded_cols = sum(1 << c for c in exclude_cols)
    counter = [0]
    limit = float("inf") if budget is None else budget
    try:
        agg = next(_iter_aggregates(m, k - 1, excluded_rows, excluded_cols, counter, limit))
    except StopIteration:
        return AggregateResult(SearchStatus.NOT_FOUND, None, counter[0])
    except _BudgetExhausted:
        return AggregateResult(SearchStatus.BUDGET_EXCEEDED, None, counter[0])
    return AggregateResult(SearchStatus.FOUND, agg, counter[0])


def _validate_aggregate(m: IncidenceMatrix, agg: EAggregate, k: int) -> None:
    size = k - 1
    if len(agg.rows) != size or len(agg.cols) != size or len(agg.pi) != size:
        raise InvalidAggregate(f"aggregate must have k-1={size} rows, columns, and pairings")
    if sorted(set(agg.rows)) != list(agg.rows) or sorted(set(agg.cols)) != list(agg.cols):
        raise InvalidAggregate("aggregate rows/cols must be sorted and distinct")
    if sorted(agg.pi) != list(range(size)):
        raise InvalidAggregate("pi is not a permutation")
    if agg.rows[-1] >= m.v or agg.cols[-1] >= m.v:
        raise InvalidAggregate("aggregate index out of range")
    for a in range(size):
        for b in range(a + 1, size):
            if m.rows[agg.rows[a]] & m.rows[agg.rows[b]]:
                raise InvalidAggregate(f"lines {agg.rows[a]} and {agg.rows[b]} share a point")
            if m.cols[agg.cols[a]] & m.cols[agg.cols[b]]:
                raise InvalidAggregate(f"points {agg.cols[a]} and {agg.cols[b]} are collinear")
    for u, r in enumerate(agg.rows):
        for w, c in enumerate(agg.cols):
            expected = 1 if w == agg.pi[u] else 0
            if m.entry(r, c) != expected:
                raise InvalidAggregate(f"intersection submatrix is not the permutation of pi at ({r},{c})")


def extend_once(m: IncidenceMatrix, agg: EAggregate) -> IncidenceMatrix:
    """Clone the aggregate's ones into a new point and line: M(v+1, k).

    Original indices are preserved; the new row and column take index v.
    The result is re-verified before being returned.
    """
    report = verify(m)
    v, k = report.v, report.k
    _validate_aggregate(m, agg, k)
    rows = list(m.rows)
    new_bit = 1 << v
    new_row = new_bit
    for c in agg.cols:
        new_row |= 1 << c
    for u, r in enumerate(agg.rows):
        cloned = 1 << agg.cols[agg.pi[u]]
        rows[r] = (rows[r] & ~cloned) | new_bit
    rows.append(new_row)
    out = IncidenceMatrix(rows)
    check = verify(out)
    assert (check.v, check.k) == (v + 1, k)
    return out


def extend_chain(m: IncidenceMatrix, theta: int, budget: int | None = None) -> IncidenceMatrix:
    """Apply theta extensions with pairwise disjoint aggregates.

    The row/column index sets consumed across the chain never intersect.
    Choices are explored depth-first with backtracking, so the chain
    fails only when no disjoint aggregate sequence of length theta exists
    (or the node budget runs out); either way ExtensionUnavailable
    reports the deepest step reached.
    """
    if theta < 0:
        raise ValueError(f"theta must be non-negative, got {theta}")
    if theta == 0:
        return m
    verify(m)
    k = m.rows[0].bit_count()
    counter = [0]
    limit = float("inf") if budget is None else budget
    deepest_failure = [1]

    def attempt(current: IncidenceMatrix, step: int, used_rows: int, used_cols: int) -> IncidenceMatrix | None:
        if step == theta:
            return current
        deepest_failure[0] = max(deepest_failure[0], step + 1)
        for agg in _iter_aggregates(current, k - 1, used_rows, used_cols, counter, limit):
            grown = extend_once(current, agg)
            rows_mask = used_rows
            for r in agg.rows:
                rows_mask |= 1 << r
            cols_mask = used_cols
            for c in agg.cols:
                cols_mask |= 1 << c
            result = attempt(grown, step + 1, rows_mask, cols_mask)
            if result is not None:
                return result
        return None

    try:
        result = attempt(m, 0, 0, 0)
    except _BudgetExhausted:
        raise ExtensionUnavailable(
            deepest_failure[0], f"search budget exhausted at step {deepest_failure[0]} of {theta}"
        ) from None
    if result is None:
        raise ExtensionUnavailable(deepest_failure[0], f"no disjoint extending aggregate at step {deepest_failure[0]} of {theta}")
    return result
