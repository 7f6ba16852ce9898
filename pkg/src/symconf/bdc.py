"""Block double-circulant (BDC) forms of incidence matrices.

A BDC matrix is a t x t grid of d x d circulant blocks whose block
weights depend only on the block diagonal (j - i) mod t, so the t x t
weight matrix is itself circulant.  Splitting a circulant M(v, k) by the
residue classes of Z_v mod t (t | v) produces such a form; the class
weights are the counts of the support mod t.

Blocks below the main block diagonal carry an extra +1 inner shift
relative to the ones above it: that is what makes the materialized grid
an exact simultaneous row/column permutation of the original circulant
(permutation x -> (x mod t) * d + x div t), not merely a matrix with the
same weights.  Supports are therefore stored per block, and only the
weights are required to be constant along diagonals.

Three derivations produce smaller configurations from a BDC form:

* :func:`reduce_weights` - drop support elements per diagonal class
  (v stays, k drops);
* :func:`shift_truncate` - rotate block columns so class j leads, floor
  every other class to the minimum remaining weight, keep the top-left
  c x c grid: v' = c d, k' = w_j + (c-1) w_min;
* :func:`alternate_truncate` - even t only; floor odd/even classes
  separately and keep 2f x 2f blocks: v' = 2 f d,
  k' = w_j + w_odd + (f-1)(w_even + w_odd).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import is_square, prime_power
from .errors import (
    ConstraintViolated,
    DeltaExceedsWeight,
    IndexOutOfRange,
    NotDivisor,
    OddBlockCount,
    ParseError,
)
from .matrix import CirculantSpec, IncidenceMatrix, VerificationReport, verify

__all__ = [
    "BdcSpec",
    "BdcParams",
    "split",
    "reduce_weights",
    "shift_truncate",
    "alternate_truncate",
    "family_bdc_params",
    "format_bdc",
    "parse_bdc",
]


@dataclass(frozen=True)
class BdcSpec:
    """t x t grid of circulant supports over Z_d plus the weight vector."""

    t: int
    d: int
    blocks: tuple[tuple[tuple[int, ...], ...], ...]
    weight_vector: tuple[int, ...]

    def __post_init__(self):
        t, d = self.t, self.d
        blocks = tuple(tuple(tuple(sorted(b)) for b in row) for row in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "weight_vector", tuple(self.weight_vector))
        if t < 1 or d < 1:
            raise ValueError(f"invalid grid t={t}, d={d}")
        if len(blocks) != t or any(len(row) != t for row in blocks):
            raise ValueError("block grid is not t x t")
        if len(self.weight_vector) != t:
            raise ValueError("weight vector length differs from t")
        for i, row in enumerate(blocks):
            for j, support in enumerate(row):
                if len(set(support)) != len(support) or (support and not 0 <= support[0] <= support[-1] < d):
                    raise ValueError(f"bad support {support} in block ({i},{j})")
                w = self.weight_vector[(j - i) % t]
                if len(support) != w:
                    raise ValueError(
                        f"block ({i},{j}) has weight {len(support)}, diagonal class {(j - i) % t} requires {w}"
                    )

    @property
    def v(self) -> int:
        return self.t * self.d

    @property
    def k(self) -> int:
        return sum(self.weight_vector)

    def dense(self) -> IncidenceMatrix:
        """Materialize the full t*d x t*d 01-matrix."""
        t, d = self.t, self.d
        mask = (1 << d) - 1
        rows = []
        for r in range(t):
            base = [sum(1 << m for m in self.blocks[r][s]) for s in range(t)]
            for i in range(d):
                acc = 0
                for s in range(t):
                    bm = base[s]
                    if i and bm:
                        bm = ((bm << i) | (bm >> (d - i))) & mask
                    acc |= bm << (s * d)
                rows.append(acc)
        return IncidenceMatrix(rows)

    def verify(self) -> VerificationReport:
        """Materialize and run the full incidence-matrix verifier."""
        return verify(self.dense())


def split(c: CirculantSpec, t: int) -> BdcSpec:
    """Rewrite a circulant as a BDC grid over the residue classes mod t.

    Point x maps to (x mod t, x div t); the class weights are the counts
    of the circulant support mod t, and blocks below the main diagonal
    get the +1 inner shift that keeps the grid an exact permutation of
    the input (asserted cheap here; materialization equality is covered
    by the test suite).
    """
    v = c.v
    if t < 1 or v % t != 0:
        raise NotDivisor(f"{t} does not divide v={v}")
    d = v // t
    raw: list[list[int]] = [[] for _ in range(t)]
    for delta in c.support:
        raw[delta % t].append(delta // t)
    weights = tuple(len(s) for s in raw)
    grid = []
    for r in range(t):
        row = []
        for s in range(t):
            h = (s - r) % t
            if s >= r:
                row.append(tuple(sorted(raw[h])))
            else:
                row.append(tuple(sorted((m + 1) % d for m in raw[h])))
        grid.append(tuple(row))
    return BdcSpec(t, d, tuple(grid), weights)


def reduce_weights(b: BdcSpec, deltas: tuple[int, ...]) -> BdcSpec:
    """Drop the delta_h largest support elements from every class-h block.

    New weights w_h - delta_h; v unchanged, k drops by sum(deltas).
    """
    if len(deltas) != b.t:
        raise IndexOutOfRange(f"need {b.t} deltas, got {len(deltas)}")
    for h, (delta, w) in enumerate(zip(deltas, b.weight_vector)):
        if not 0 <= delta <= w:
            raise DeltaExceedsWeight(f"delta_{h}={delta} exceeds weight {w}")
    if not any(deltas):
        return b
    grid = []
    for r in range(b.t):
        row = []
        for s in range(b.t):
            h = (s - r) % b.t
            keep = b.weight_vector[h] - deltas[h]
            row.append(tuple(sorted(b.blocks[r][s])[:keep]))
        grid.append(tuple(row))
    weights = tuple(w - delta for w, delta in zip(b.weight_vector, deltas))
    return BdcSpec(b.t, b.d, tuple(grid), weights)


def _shift_block_columns(b: BdcSpec, j: int) -> BdcSpec:
    """Rotate every block row left by j positions: class u takes weight w_{u+j}."""
    if j == 0:
        return b
    grid = tuple(tuple(row[(s + j) % b.t] for s in range(b.t)) for row in b.blocks)
    weights = tuple(b.weight_vector[(u + j) % b.t] for u in range(b.t))
    return BdcSpec(b.t, b.d, grid, weights)


def _check_shift_args(b: BdcSpec, j: int) -> None:
    if not 0 <= j < b.t:
        raise IndexOutOfRange(f"block shift j={j} out of range for t={b.t}")


def shift_truncate(b: BdcSpec, j: int, c: int) -> BdcSpec:
    """Lead with class j, floor the rest, keep the top-left c x c blocks.

    Result: v' = c*d, k' = w_j + (c-1) * min(w_h : h != j), weight vector
    (w_j, w_min, ..., w_min) of length c.
    """
    _check_shift_args(b, j)
    if not 1 <= c <= b.t:
        raise IndexOutOfRange(f"kept block count c={c} out of range for t={b.t}")
    shifted = _shift_block_columns(b, j)
    if b.t == 1:
        return shifted
    w = shifted.weight_vector
    w_min = min(w[1:])
    deltas = (0,) + tuple(wh - w_min for wh in w[1:])
    reduced = reduce_weights(shifted, deltas)
    grid = tuple(tuple(reduced.blocks[r][s] for s in range(c)) for r in range(c))
    weights = (w[0],) + (w_min,) * (c - 1)
    return BdcSpec(c, b.d, grid, weights)


def alternate_truncate(b: BdcSpec, j: int, f: int) -> BdcSpec:
    """Even-t variant alternating two floor weights, keeping 2f x 2f blocks.

    Odd classes floor to w_odd, even classes >= 2 to w_even; the result
    has v' = 2*f*d and k' = w_j + w_odd + (f-1)(w_even + w_odd), with
    weight vector (w_j, w_odd, w_even, w_odd, ..., w_even, w_odd).
    """
    if b.t % 2:
        raise OddBlockCount(f"t={b.t} must be even")
    _check_shift_args(b, j)
    if not 1 <= f <= b.t // 2:
        raise IndexOutOfRange(f"kept pair count f={f} out of range for t={b.t}")
    shifted = _shift_block_columns(b, j)
    w = shifted.weight_vector
    w_odd = min(w[h] for h in range(1, b.t, 2))
    evens = [w[h] for h in range(2, b.t, 2)]
    w_even = min(evens) if evens else 0
    deltas = [0] * b.t
    for h in range(1, b.t):
        deltas[h] = w[h] - (w_odd if h % 2 else w_even)
    reduced = reduce_weights(shifted, tuple(deltas))
    size = 2 * f
    grid = tuple(tuple(reduced.blocks[r][s] for s in range(size)) for r in range(size))
    weights = (w[0],) + tuple(w_odd if u % 2 else w_even for u in range(1, size))
    return BdcSpec(size, b.d, grid, weights)


@dataclass(frozen=True)
class BdcParams:
    """Formula-level parameters of a BDC family member (no matrix built)."""

    family: str
    q: int
    v: int
    k: int
    d: int


def family_bdc_params(
    family: str,
    q: int,
    t: int | None = None,
    c: int | None = None,
    f: int | None = None,
) -> BdcParams:
    """Closed-form (v, k, d) for the two BDC families, catalog use only.

    ``proj``   : projective-plane split with t prime, q an even prime
    power whose base prime generates the units mod t; d = (q^2+q+1)/t,
    optional c (default 1) keeps c blocks.
    ``affine`` : punctured-affine pairs family for odd square q with
    d = (sqrt(q)-1)(q+1), v = 2 f d, k = (2f-1) sqrt(q).
    """
    if family == "proj":
        if t is None:
            raise ConstraintViolated("projective BDC family needs t")
        c = 1 if c is None else c
        pe = prime_power(q)
        if pe is None or pe[1] % 2:
            raise ConstraintViolated(f"q={q} is not an even prime power p^(2m)")
        p = pe[0]
        if prime_power(t) is None or prime_power(t)[1] != 1:
            raise ConstraintViolated(f"t={t} is not prime")
        if _order_mod(p, t) != t - 1:
            raise ConstraintViolated(f"p={p} mod {t} does not generate the units of Z_{t}")
        plane = q * q + q + 1
        if plane % t:
            raise ConstraintViolated(f"t={t} does not divide q^2+q+1={plane}")
        if not 1 <= c <= t:
            raise ConstraintViolated(f"c={c} out of range 1..{t}")
        s = math.isqrt(q)
        d = plane // t
        for sign in (1, -1):
            if (q + 1 + sign * s) % t == 0:
                w0 = (q + 1 + sign * (1 - t) * s) // t
                winc = (q + 1 + sign * s) // t
                if w0 >= 0:
                    return BdcParams("proj", q, c * d, w0 + (c - 1) * winc, d)
        raise ConstraintViolated(f"no integral weight split for q={q}, t={t}")
    if family == "affine":
        if f is None:
            raise ConstraintViolated("affine BDC family needs f")
        pe = prime_power(q)
        if pe is None or not is_square(q) or q % 2 == 0:
            raise ConstraintViolated(f"q={q} is not an odd square prime power")
        s = math.isqrt(q)
        if not 1 <= f <= (s + 1) // 2:
            raise ConstraintViolated(f"f={f} out of range 1..{(s + 1) // 2}")
        d = (s - 1) * (q + 1)
        return BdcParams("affine", q, 2 * f * d, (2 * f - 1) * s, d)
    raise ConstraintViolated(f"unknown BDC family {family!r}")


def _order_mod(a: int, n: int) -> int:
    a %= n
    if math.gcd(a, n) != 1:
        return 0
    order, acc = 1, a
    while acc != 1:
        acc = acc * a % n
        order += 1
    return order


# -- text format -------------------------------------------------------------


def format_bdc(b: BdcSpec) -> str:
    """Header ``bdc t d k``, the t weights, then ``i j: support`` lines
    for every nonzero block."""
    lines = [f"bdc {b.t} {b.d} {b.k}"]
    lines.extend(str(w) for w in b.weight_vector)
    for i in range(b.t):
        for j in range(b.t):
            support = b.blocks[i][j]
            if support:
                lines.append(f"{i} {j}: " + ",".join(str(m) for m in support))
    return "\n".join(lines) + "\n"


def parse_bdc(text: str) -> BdcSpec:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    try:
        tag, t_s, d_s, k_s = lines[0].split()
        if tag != "bdc":
            raise ValueError(f"expected 'bdc' header, got {tag!r}")
        t, d, k = int(t_s), int(d_s), int(k_s)
        weights = tuple(int(lines[1 + h]) for h in range(t))
    except (IndexError, ValueError) as exc:
        raise ParseError(f"bad bdc header: {exc}") from None
    if sum(weights) != k:
        raise ParseError(f"bdc weights sum to {sum(weights)}, header says k={k}")
    grid = [[() for _ in range(t)] for _ in range(t)]
    for ln in lines[1 + t :]:
        try:
            head, _, tail = ln.partition(":")
            i, j = (int(x) for x in head.split())
            support = tuple(int(x) for x in tail.replace(",", " ").split())
        except ValueError as exc:
            raise ParseError(f"bad bdc block line {ln!r}: {exc}") from None
        if not (0 <= i < t and 0 <= j < t):
            raise ParseError(f"block index ({i},{j}) out of range")
        grid[i][j] = support
    try:
        return BdcSpec(t, d, tuple(tuple(row) for row in grid), weights)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
