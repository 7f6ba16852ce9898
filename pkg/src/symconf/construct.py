"""The three explicit cyclic families: Singer, Bose, and Ruzsa rulers.

Each builder returns a modular Golomb ruler whose circulant is the
incidence matrix of a cyclic symmetric configuration:

* ``singer_ruler(q)``  -> (q^2+q+1, q+1), a perfect difference set (the
  cyclic projective plane of order q);
* ``bose_ruler(q)``    -> (q^2-1, q), the cyclic punctured affine plane;
* ``ruzsa_ruler(p)``   -> (p^2-p, p-1).

Different modulus/primitive-element conventions give affinely equivalent
difference sets; this module pins the deterministic conventions of
:mod:`symconf.gf`, so outputs are reproducible bit-for-bit.  Every
construction is re-checked against the difference-multiset predicate
before it is returned; a failure would be a bug, never a data issue.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, prime_power, primitive_root
from .errors import FieldTooLarge, NotPrime, NotPrimePower
from .gf import field_new
from .ruler import Ruler, _is_mgr, truncate

__all__ = [
    "ConstructionReceipt",
    "singer_ruler",
    "bose_ruler",
    "ruzsa_ruler",
    "build",
    "FAMILIES",
]

# largest field order the eager log tables support
_MAX_ORDER = 2**24


def singer_ruler(q: int) -> Ruler:
    """Perfect difference set of the cyclic projective plane PG(2, q).

    Works inside GF(q^3): with gamma its primitive element, the points of
    the plane are the subgroup classes gamma^i mod scalars, and the marks
    are the i in [0, q^2+q+1) for which gamma^i falls in the 2-dimensional
    GF(q)-subspace spanned by {1, gamma}.  The q+1 marks form a
    (q^2+q+1, q+1) modular Golomb ruler of deficiency 0.
    """
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, n = pe
    if q**3 > _MAX_ORDER:
        raise FieldTooLarge(f"GF({q}^3) exceeds the supported order {_MAX_ORDER}")
    field = field_new(p, 3 * n)
    v = q * q + q + 1
    group = field.order - 1  # q^3 - 1
    gamma = field.exp(1)
    # GF(q) sits inside GF(q^3) as {0} plus the order-(q-1) subgroup
    subfield = [0] + [field.exp((j * v) % group) for j in range(q - 1)]
    span = {field.add(a, field.mul(b, gamma)) for a in subfield for b in subfield}
    marks = tuple(i for i in range(v) if field.exp(i) in span)
    assert len(marks) == q + 1, f"line of PG(2,{q}) must have {q + 1} points, got {len(marks)}"
    assert marks[0] == 0  # gamma^0 = 1 lies in the span, so no translation needed
    out = Ruler(marks, v)
    assert _is_mgr(marks, v), f"Singer set for q={q} failed the difference check"
    return out


def bose_ruler(q: int) -> Ruler:
    """Difference set of the cyclic punctured affine plane AG(2, q).

    With theta the primitive element of GF(q^2), the marks are the
    discrete logs of theta + a over a in GF(q), translated so the
    smallest mark is 0.  The q marks form a (q^2-1, q) modular Golomb
    ruler; their residues mod q+1 occupy q distinct classes and miss
    exactly one, which is what makes Bose splits extendable.
    """
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePower(f"{q} is not a prime power")
    p, n = pe
    if q**2 > _MAX_ORDER:
        raise FieldTooLarge(f"GF({q}^2) exceeds the supported order {_MAX_ORDER}")
    field = field_new(p, 2 * n)
    v = field.order - 1  # q^2 - 1
    theta = field.exp(1)
    subfield = [0] + [field.exp((j * (q + 1)) % v) for j in range(q - 1)]
    logs = sorted(field.log(field.add(theta, a)) for a in subfield)
    assert len(set(logs)) == q
    base = logs[0]
    marks = tuple((d - base) % v for d in logs)
    out = Ruler(marks, v)
    assert _is_mgr(marks, v), f"Bose set for q={q} failed the difference check"
    return out


def ruzsa_ruler(p: int, g: int | None = None) -> Ruler:
    """Ruzsa sequence p*u + (p-1)*g**u mod (p^2 - p), u = 1..p-1.

    ``g`` must be a primitive root mod p (the smallest one when omitted).
    Marks are returned exactly as the formula produces them, sorted.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 3:
        raise ValueError("the Ruzsa sequence needs a prime p >= 3")
    g = primitive_root(p, g)
    v = p * p - p
    # (p-1)*x mod p(p-1) only depends on x mod p, so reduce g^u mod p first
    marks = tuple(sorted((p * u + (p - 1) * pow(g, u, p)) % v for u in range(1, p)))
    assert len(set(marks)) == p - 1, f"Ruzsa marks collide for p={p}, g={g}"
    out = Ruler(marks, v)
    assert _is_mgr(marks, v), f"Ruzsa sequence for p={p} failed the difference check"
    return out


@dataclass(frozen=True)
class ConstructionReceipt:
    """What was built, from which parameter, and the resulting ruler."""

    family: str
    parameter: int
    v: int
    k: int
    ruler: Ruler


FAMILIES = {
    "singer": (singer_ruler, lambda q: (q * q + q + 1, q + 1)),
    "bose": (bose_ruler, lambda q: (q * q - 1, q)),
    "ruzsa": (ruzsa_ruler, lambda p: (p * p - p, p - 1)),
}


def build(family: str, parameter: int, delta: int = 0) -> ConstructionReceipt:
    """Build a family ruler, optionally truncated by delta marks."""
    if family not in FAMILIES:
        raise ValueError(f"unknown construction family {family!r}")
    builder, params = FAMILIES[family]
    base = builder(parameter)
    v, k = params(parameter)
    assert (base.modulus, base.order) == (v, k)
    out = truncate(base, delta) if delta else base
    return ConstructionReceipt(family, parameter, v, k - delta, out)
