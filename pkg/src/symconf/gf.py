"""Deterministic finite-field arithmetic GF(p**n).

Field elements are polynomials over Z_p of degree < n, reduced modulo a
monic irreducible polynomial of degree n.  Construction is reproducible
bit-for-bit: the modulus is the lexicographically smallest monic
irreducible polynomial (coefficients compared constant term first) and
the distinguished primitive element is the lexicographically smallest
element of full multiplicative order.

Two representations coexist:

* packed integers ``sum(c_i * p**i)`` — the working representation; all
  :class:`FiniteField` methods (:meth:`add`, :meth:`mul`, ...) take and
  return these, and exp/log tables are built eagerly at construction so
  multiplicative arithmetic is table lookup;
* :class:`FieldElement` — a thin wrapper exposing the coefficient vector
  (constant term first) with overloaded operators, for callers that
  prefer values over raw ints.

Fields are immutable after construction; every operation is pure, so
shared field objects are safe under concurrent use.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterator

from .arith import factorize, is_prime
from .errors import (
    DegreeOutOfRange,
    FieldMismatch,
    NotPrime,
    NotPrimitiveRoot,
    ZeroArgument,
    ZeroInverse,
)

__all__ = ["FiniteField", "FieldElement", "field_new", "primitive_element", "discrete_log"]

# Log tables are built eagerly at field creation; larger orders are out of scope.
MAX_FIELD_ORDER = 2**24


def _poly_mulmod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Product of two degree-<n polynomials, reduced mod (modulus, p).

    Coefficient tuples are constant term first; modulus is monic of
    degree n == len(a) == len(b).
    """
    n = len(a)
    prod = [0] * (2 * n - 1) if n > 1 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce: modulus is monic, so eliminate leading coefficients top down
    for deg in range(len(prod) - 1, n - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for j in range(n):
                prod[deg - n + j] = (prod[deg - n + j] - c * modulus[j]) % p
    return tuple(prod[:n])


def _poly_divisible(f: list[int], g: list[int], p: int) -> bool:
    """True iff monic g divides f over Z_p (dense coefficient lists)."""
    r = f[:]
    dg = len(g) - 1
    for deg in range(len(r) - 1, dg - 1, -1):
        c = r[deg]
        if c:
            for j in range(dg + 1):
                r[deg - dg + j] = (r[deg - dg + j] - c * g[j]) % p
    return not any(r)


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division of a monic polynomial by all monic
    polynomials of degree <= n // 2 (sufficient and cheap at our sizes)."""
    n = len(coeffs) - 1
    if coeffs[0] == 0 and n > 1:
        return False  # divisible by x
    f = list(coeffs)
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]  # monic of degree d
            if _poly_divisible(f, g, p):
                return False
    return True


class FieldElement:
    """An element of a :class:`FiniteField`, shown as its coefficient vector."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        if len(coeffs) != field.n or any(not 0 <= c < field.p for c in coeffs):
            raise ValueError(f"coefficient vector {coeffs} invalid for GF({field.p}^{field.n})")
        self.field = field
        self.coeffs = tuple(coeffs)

    def _packed(self) -> int:
        return self.field.pack(self.coeffs)

    def _binop_other(self, other: FieldElement) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch(f"elements of GF({self.field.p}^{self.field.n}) and GF({other.field.p}^{other.field.n})")
        return other._packed()

    def __add__(self, other: FieldElement) -> FieldElement:
        return self.field.from_packed(self.field.add(self._packed(), self._binop_other(other)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self.field.from_packed(self.field.sub(self._packed(), self._binop_other(other)))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return self.field.from_packed(self.field.mul(self._packed(), self._binop_other(other)))

    def __pow__(self, e: int) -> FieldElement:
        return self.field.from_packed(self.field.pow(self._packed(), e))

    def inverse(self) -> FieldElement:
        return self.field.from_packed(self.field.inv(self._packed()))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.coeffs == other.coeffs
            and self.field == other.field
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.n, self.coeffs))

    def __repr__(self) -> str:
        return f"FieldElement(GF({self.field.p}^{self.field.n}), {self.coeffs})"


class FiniteField:
    """GF(p**n) with the lexicographically smallest irreducible modulus.

    Use :func:`field_new` rather than the constructor; it validates the
    parameters and caches the instance so repeated requests share tables.
    """

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = self._find_modulus()
        self._build_tables()

    # -- construction -------------------------------------------------

    def _find_modulus(self) -> tuple[int, ...]:
        # scan monic degree-n candidates in lex order, constant term first
        for tail in itertools.product(range(self.p), repeat=self.n):
            cand = tuple(tail) + (1,)
            if _is_irreducible(cand, self.p):
                return cand
        raise DegreeOutOfRange(f"no irreducible polynomial of degree {self.n} over Z_{self.p}")  # unreachable

    def _find_primitive(self) -> tuple[int, ...]:
        group = self.order - 1
        if group == 1:
            return (1,) * self.n  # GF(2): the only nonzero element
        prime_divisors = list(factorize(group))
        for coeffs in itertools.product(range(self.p), repeat=self.n):
            if not any(coeffs):
                continue
            if all(self._poly_pow(coeffs, group // ell) != self._one_t for ell in prime_divisors):
                return coeffs
        raise NotPrimitiveRoot(f"no primitive element in GF({self.p}^{self.n})")  # unreachable

    def _poly_pow(self, base: tuple[int, ...], e: int) -> tuple[int, ...]:
        result = self._one_t
        acc = base
        while e:
            if e & 1:
                result = _poly_mulmod(result, acc, self.modulus, self.p)
            acc = _poly_mulmod(acc, acc, self.modulus, self.p)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        self._one_t = (1,) + (0,) * (self.n - 1)
        g = self._find_primitive()
        self._primitive_coeffs = g
        size = self.order - 1
        exp = [0] * size
        log = [-1] * self.order
        cur = self._one_t
        for i in range(size):
            packed = self.pack(cur)
            exp[i] = packed
            log[packed] = i
            cur = _poly_mulmod(cur, g, self.modulus, self.p)
        if cur != self._one_t:
            raise NotPrimitiveRoot(f"primitive element search failed in GF({self.p}^{self.n})")
        self._exp = exp
        self._log = log

    # -- packed-integer kernel ----------------------------------------

    def pack(self, coeffs: tuple[int, ...]) -> int:
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + c
        return x

    def unpack(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        x = 0
        mul = 1
        for _ in range(self.n):
            a, ca = divmod(a, self.p)
            b, cb = divmod(b, self.p)
            x += ((ca + cb) % self.p) * mul
            mul *= self.p
        return x

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        x = 0
        mul = 1
        for _ in range(self.n):
            a, ca = divmod(a, self.p)
            b, cb = divmod(b, self.p)
            x += ((ca - cb) % self.p) * mul
            mul *= self.p
        return x

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        size = self.order - 1
        return self._exp[(self._log[a] + self._log[b]) % size]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        size = self.order - 1
        return self._exp[(-self._log[a]) % size]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroInverse("zero cannot be raised to a negative power")
        size = self.order - 1
        return self._exp[(self._log[a] * e) % size]

    def exp(self, i: int) -> int:
        """Packed value of g**i for the field's distinguished primitive g."""
        return self._exp[i % (self.order - 1)]

    def log(self, x: int) -> int:
        """Discrete log base the distinguished primitive element."""
        if x == 0:
            raise ZeroArgument("discrete log of zero")
        return self._log[x]

    # -- element API ---------------------------------------------------

    def element(self, coeffs) -> FieldElement:
        return FieldElement(self, tuple(coeffs))

    def from_packed(self, x: int) -> FieldElement:
        return FieldElement(self, self.unpack(x))

    def scalar(self, c: int) -> FieldElement:
        return FieldElement(self, (c % self.p,) + (0,) * (self.n - 1))

    @property
    def zero(self) -> FieldElement:
        return self.scalar(0)

    @property
    def one(self) -> FieldElement:
        return self.scalar(1)

    def elements(self) -> Iterator[FieldElement]:
        """All field elements, lexicographic on coefficient vectors."""
        for coeffs in itertools.product(range(self.p), repeat=self.n):
            yield FieldElement(self, coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, n={self.n}, modulus={self.modulus})"


@functools.lru_cache(maxsize=None)
def field_new(p: int, n: int) -> FiniteField:
    """The field GF(p**n) with deterministic modulus and tables.

    Cached: repeated calls return the same instance (and therefore
    byte-identical moduli and primitive elements).
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not isinstance(n, int) or n < 1:
        raise DegreeOutOfRange(f"degree {n} out of range")
    if p**n > MAX_FIELD_ORDER:
        raise DegreeOutOfRange(f"field order {p}^{n} exceeds {MAX_FIELD_ORDER}")
    return FiniteField(p, n)


def primitive_element(field: FiniteField) -> FieldElement:
    """Smallest element (lex on coefficient vectors) of order p**n - 1."""
    return field.element(field._primitive_coeffs)


def discrete_log(field: FiniteField, base: FieldElement, x: FieldElement) -> int:
    """The exponent e in [0, p**n - 1) with base**e == x.

    ``base`` must be primitive; ``x`` must be nonzero.
    """
    if not x:
        raise ZeroArgument("discrete log of zero")
    if not base:
        raise ZeroArgument("discrete log base zero")
    size = field.order - 1
    lb = field.log(base._packed())
    if size > 1 and math.gcd(lb, size) != 1:
        raise NotPrimitiveRoot("discrete log base is not a primitive element")
    lx = field.log(x._packed())
    if size == 1:
        return 0
    return (lx * pow(lb, -1, size)) % size
