"""Small number-theory helpers used across the package.

Everything here is deterministic trial-division arithmetic; the operands
involved stay well below 2**31, so no fast primality machinery is needed.
"""

from __future__ import annotations

import math
from typing import Iterator

from .errors import NotPrime, NotPrimitiveRoot

__all__ = [
    "is_prime",
    "factorize",
    "prime_power",
    "is_square",
    "primes",
    "prime_powers",
    "primitive_root",
    "is_sum_of_two_squares",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{p: exponent}`` by trial division (n >= 1)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` and p prime, or None."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    ((p, e),) = fac.items()
    return p, e


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def primes(limit: int) -> Iterator[int]:
    """All primes <= limit, ascending (simple sieve)."""
    if limit < 2:
        return
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    for p in range(2, limit + 1):
        if sieve[p]:
            yield p


def prime_powers(limit: int) -> Iterator[int]:
    """All prime powers p**e <= limit (e >= 1), ascending."""
    out = []
    for p in primes(limit):
        q = p
        while q <= limit:
            out.append(q)
            q *= p
    yield from sorted(out)


def primitive_root(p: int, candidate: int | None = None) -> int:
    """Smallest primitive root mod p, or validate a given candidate.

    Raises NotPrime for composite p and NotPrimitiveRoot when the
    candidate's multiplicative order is below p - 1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        if candidate not in (None, 1):
            raise NotPrimitiveRoot(f"{candidate} is not a primitive root mod 2")
        return 1
    prime_divisors = list(factorize(p - 1))

    def ok(g: int) -> bool:
        return all(pow(g, (p - 1) // ell, p) != 1 for ell in prime_divisors)

    if candidate is not None:
        if not 1 <= candidate % p or not ok(candidate % p):
            raise NotPrimitiveRoot(f"{candidate} is not a primitive root mod {p}")
        return candidate % p
    for g in range(2, p):
        if ok(g):
            return g
    raise NotPrimitiveRoot(f"no primitive root found mod {p}")  # unreachable for prime p


def is_sum_of_two_squares(n: int) -> bool:
    """True iff n = a**2 + b**2 for integers a, b.

    Holds iff every prime factor congruent to 3 mod 4 occurs to an even
    power (n = 0 counts as 0**2 + 0**2).
    """
    if n < 0:
        return False
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorize(n).items() if p % 4 == 3)
