"""Incidence matrices of symmetric configurations.

A verified M(v, k) is a v x v 01-matrix with k ones in every row and
column and no 2x2 all-ones submatrix (equivalently: no two rows share
two common ones).  Rows are stored as v-bit integers, so the pairwise
intersection check is word-level AND + popcount.

Besides the verifier this module provides the Levi-graph girth, the
decomposition of a verified matrix into k disjoint permutation matrices
(cyclic-shift fast path for circulants, augmenting-path matching in
general), the k -> k - delta reduction, and the three interchange
formats: dense text, circulant text, and alist for LDPC tooling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ColumnWeightNotConstant,
    DeltaTooLarge,
    NotModularGolomb,
    ParseError,
    RowWeightNotConstant,
    TwoByTwoAllOnes,
)
from .ruler import Ruler, _is_mgr

__all__ = [
    "IncidenceMatrix",
    "CirculantSpec",
    "VerificationReport",
    "from_ruler",
    "verify",
    "girth",
    "decompose",
    "reduce",
    "format_dense",
    "parse_dense",
    "format_circulant",
    "parse_circulant",
    "format_alist",
    "parse_alist",
]


class IncidenceMatrix:
    """Square 01-matrix with rows packed into integers (bit j = column j).

    Instances are treated as immutable: operations return new matrices,
    so verified values can be shared freely across threads.
    """

    __slots__ = ("v", "rows", "_cols")

    def __init__(self, rows: Sequence[int]):
        rows = tuple(rows)
        v = len(rows)
        if v == 0:
            raise ValueError("empty matrix")
        top = 1 << v
        if any(r < 0 or r >= top for r in rows):
            raise ValueError("row bits out of range for a square matrix")
        self.v = v
        self.rows = rows
        self._cols: tuple[int, ...] | None = None

    @property
    def cols(self) -> tuple[int, ...]:
        """Column bitmasks (bit i = row i), built lazily."""
        if self._cols is None:
            cols = [0] * self.v
            for i, row in enumerate(self.rows):
                bit = 1 << i
                r = row
                while r:
                    low = r & (-r)
                    cols[low.bit_length() - 1] |= bit
                    r ^= low
            self._cols = tuple(cols)
        return self._cols

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IncidenceMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IncidenceMatrix(v={self.v})"


@dataclass(frozen=True)
class CirculantSpec:
    """Circulant incidence matrix in compact form: modulus + first-row support."""

    v: int
    support: tuple[int, ...]

    def __post_init__(self):
        support = tuple(sorted(self.support))
        object.__setattr__(self, "support", support)
        if len(set(support)) != len(support):
            raise ValueError(f"duplicate support elements: {support}")
        if support and not 0 <= support[0] <= support[-1] < self.v:
            raise ValueError(f"support out of range for modulus {self.v}")

    @property
    def k(self) -> int:
        return len(self.support)

    def dense(self) -> IncidenceMatrix:
        """Materialize: row i has ones at columns (i + d) mod v."""
        v = self.v
        mask = (1 << v) - 1
        row0 = 0
        for d in self.support:
            row0 |= 1 << d
        rows = []
        r = row0
        for _ in range(v):
            rows.append(r)
            r = ((r << 1) | (r >> (v - 1))) & mask
        return IncidenceMatrix(rows)


def from_ruler(r: Ruler, v: int) -> CirculantSpec:
    """Circulant whose first-row support is the given (v, k) MGR."""
    if r.marks[-1] >= v or not _is_mgr(r.marks, v):
        raise NotModularGolomb(f"{r.marks} is not a ({v},{r.order}) modular Golomb ruler")
    return CirculantSpec(v, r.marks)


@dataclass(frozen=True)
class VerificationReport:
    v: int
    k: int
    deficiency: int


def verify(m: IncidenceMatrix) -> VerificationReport:
    """Check the three defining conditions and report (v, k, deficiency).

    Raises RowWeightNotConstant / ColumnWeightNotConstant /
    TwoByTwoAllOnes naming the first offending index (pair).
    """
    rows = m.rows
    v = m.v
    k = rows[0].bit_count()
    for i, row in enumerate(rows):
        w = row.bit_count()
        if w != k:
            raise RowWeightNotConstant(i, w, k)
    counts = [0] * v
    for row in rows:
        r = row
        while r:
            low = r & (-r)
            counts[low.bit_length() - 1] += 1
            r ^= low
    for j, c in enumerate(counts):
        if c != k:
            raise ColumnWeightNotConstant(j, c, k)
    # two lines sharing >= 2 points is exactly a 2x2 all-ones submatrix
    for i in range(v - 1):
        ri = rows[i]
        for rj in rows[i + 1 :]:
            if (ri & rj).bit_count() > 1:
                other = next(j for j in range(i + 1, v) if (ri & rows[j]).bit_count() > 1)
                raise TwoByTwoAllOnes(i, other)
    return VerificationReport(v, k, v - (k * k - k + 1))


def girth(m: IncidenceMatrix) -> int | None:
    """Girth of the bipartite Levi graph (None when the graph is acyclic).

    BFS from every vertex, taking the shortest cycle seen; stops early at
    6, the minimum possible for a verified configuration (bipartite and
    4-cycle-free).
    """
    v = m.v
    # vertices: 0..v-1 points (columns), v..2v-1 lines (rows)
    adj: list[list[int]] = [[] for _ in range(2 * v)]
    for i, row in enumerate(m.rows):
        r = row
        while r:
            low = r & (-r)
            j = low.bit_length() - 1
            adj[v + i].append(j)
            adj[j].append(v + i)
            r ^= low
    best: int | None = None
    n = 2 * v
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if not adj[root]:
            continue
        for i in range(n):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best is not None and 2 * dist[u] >= best:
                continue
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
        if best == 6:
            return 6
    return best


def _circulant_shift(m: IncidenceMatrix) -> tuple[int, ...] | None:
    """Support of m when every row is the cyclic shift of the first, else None."""
    v = m.v
    mask = (1 << v) - 1
    r = m.rows[0]
    for i in range(1, v):
        r = ((r << 1) | (r >> (v - 1))) & mask
        if m.rows[i] != r:
            return None
    support = []
    r0 = m.rows[0]
    while r0:
        low = r0 & (-r0)
        support.append(low.bit_length() - 1)
        r0 ^= low
    return tuple(support)


def _perfect_matching(adj: list[list[int]], v: int) -> list[int]:
    """Hopcroft-Karp style maximum matching on a bipartite graph with v
    vertices per side; returns match_row[i] = column (must be perfect on
    the regular graphs we feed it)."""
    inf = v + 1
    match_row = [-1] * v
    match_col = [-1] * v
    dist = [0] * v

    def bfs() -> bool:
        queue = []
        for u in range(v):
            if match_row[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in adj[u]:
                nxt = match_col[w]
                if nxt < 0:
                    found = True
                elif dist[nxt] == inf:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        return found

    def dfs(u: int) -> bool:
        for w in adj[u]:
            nxt = match_col[w]
            if nxt < 0 or (dist[nxt] == dist[u] + 1 and dfs(nxt)):
                match_row[u] = w
                match_col[w] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in range(v):
            if match_row[u] < 0:
                dfs(u)
    if any(x < 0 for x in match_row):
        raise ValueError("bipartite matching is not perfect; input is not k-regular")
    return match_row


def decompose(m: IncidenceMatrix) -> list[tuple[int, ...]]:
    """Split a verified M(v, k) into k disjoint permutations summing to it.

    Circulants decompose into their k cyclic shifts directly; otherwise k
    rounds of perfect matching peel one permutation each (Koenig/Hall
    guarantee success on k-regular bipartite graphs).  The result is
    sorted lexicographically, each permutation given as the tuple
    perm[i] = column of the one in row i.
    """
    report = verify(m)
    v, k = report.v, report.k
    support = _circulant_shift(m)
    perms: list[tuple[int, ...]]
    if support is not None:
        perms = [tuple((i + d) % v for i in range(v)) for d in support]
    else:
        remaining = [list(_bits(row)) for row in m.rows]
        perms = []
        for _ in range(k):
            match = _perfect_matching(remaining, v)
            perms.append(tuple(match))
            for i, j in enumerate(match):
                remaining[i].remove(j)
    perms.sort()
    return perms


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & (-x)
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def reduce(m: IncidenceMatrix, delta: int) -> IncidenceMatrix:
    """Remove delta of the k permutations: a verified v_{k-delta}.

    The lexicographically first delta permutations of the decomposition
    are subtracted, so results are deterministic.
    """
    report = verify(m)
    if not 0 <= delta < report.k:
        raise DeltaTooLarge(f"delta {delta} out of range for k={report.k}")
    if delta == 0:
        return m
    perms = decompose(m)[:delta]
    rows = list(m.rows)
    for perm in perms:
        for i, j in enumerate(perm):
            rows[i] &= ~(1 << j)
    out = IncidenceMatrix(rows)
    check = verify(out)
    assert (check.v, check.k) == (report.v, report.k - delta)
    return out


# -- text formats -----------------------------------------------------------


def format_dense(m: IncidenceMatrix) -> str:
    """Line 1 ``v k``, then v lines of v 0/1 characters."""
    k = m.rows[0].bit_count()
    lines = [f"{m.v} {k}"]
    for row in m.rows:
        lines.append("".join("1" if (row >> j) & 1 else "0" for j in range(m.v)))
    return "\n".join(lines) + "\n"


def parse_dense(text: str) -> IncidenceMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        v_s, _k_s = lines[0].split()
        v = int(v_s)
    except (IndexError, ValueError):
        raise ParseError(f"bad dense header {lines[0]!r}" if lines else "empty dense matrix") from None
    if len(lines) != v + 1:
        raise ParseError(f"dense matrix announces v={v} but has {len(lines) - 1} rows")
    rows = []
    for ln in lines[1:]:
        ln = ln.strip()
        if len(ln) != v or set(ln) - {"0", "1"}:
            raise ParseError(f"bad dense row {ln!r}")
        rows.append(sum(1 << j for j, ch in enumerate(ln) if ch == "1"))
    return IncidenceMatrix(rows)


def format_circulant(c: CirculantSpec) -> str:
    """One line ``cyclic v k: d1,d2,...,dk``."""
    return f"cyclic {c.v} {c.k}: " + ",".join(str(d) for d in c.support) + "\n"


def parse_circulant(text: str) -> CirculantSpec:
    line = text.strip()
    try:
        head, _, tail = line.partition(":")
        tag, v_s, k_s = head.split()
        if tag != "cyclic":
            raise ValueError(f"expected 'cyclic' header, got {tag!r}")
        v, k = int(v_s), int(k_s)
        support = tuple(int(tok) for tok in tail.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"bad circulant line {line!r}: {exc}") from None
    if len(support) != k:
        raise ParseError(f"circulant line announces k={k} but has {len(support)} elements")
    return CirculantSpec(v, support)


def format_alist(m: IncidenceMatrix) -> str:
    """Standard alist layout for LDPC tooling, 1-based indices, LF endings.

    Line 1: ``v v``; line 2: ``k k`` (max column/row degree); then the v
    per-column degrees, the v per-row degrees, one line of 1-based row
    indices per column, and one line of 1-based column indices per row.
    """
    v = m.v
    cols = m.cols
    col_deg = [c.bit_count() for c in cols]
    row_deg = [r.bit_count() for r in m.rows]
    out = [
        f"{v} {v}",
        f"{max(col_deg)} {max(row_deg)}",
        " ".join(str(d) for d in col_deg),
        " ".join(str(d) for d in row_deg),
    ]
    for c in cols:
        out.append(" ".join(str(i + 1) for i in _bits(c)))
    for r in m.rows:
        out.append(" ".join(str(j + 1) for j in _bits(r)))
    return "\n".join(out) + "\n"


def parse_alist(text: str) -> IncidenceMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        n, m_rows = (int(t) for t in lines[0].split())
        _max_c, _max_r = (int(t) for t in lines[1].split())
        col_deg = [int(t) for t in lines[2].split()]
        row_deg = [int(t) for t in lines[3].split()]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"bad alist header: {exc}") from None
    if n != m_rows:
        raise ParseError(f"alist matrix is {m_rows}x{n}, expected square")
    v = n
    if len(col_deg) != v or len(row_deg) != v:
        raise ParseError("alist degree lists have the wrong length")
    if len(lines) != 4 + 2 * v:
        raise ParseError(f"alist has {len(lines)} lines, expected {4 + 2 * v}")
    rows = [0] * v
    for j in range(v):
        entries = [int(t) for t in lines[4 + j].split()]
        if len(entries) != col_deg[j]:
            raise ParseError(f"column {j} lists {len(entries)} entries, degree says {col_deg[j]}")
        for i in entries:
            if not 1 <= i <= v:
                raise ParseError(f"alist row index {i} out of range")
            rows[i - 1] |= 1 << j
    for i in range(v):
        entries = [int(t) for t in lines[4 + v + i].split()]
        if sorted(j - 1 for j in entries) != _bits(rows[i]):
            raise ParseError(f"alist row {i} disagrees with its column lists")
        if len(entries) != row_deg[i]:
            raise ParseError(f"row {i} lists {len(entries)} entries, degree says {row_deg[i]}")
    return IncidenceMatrix(rows)
