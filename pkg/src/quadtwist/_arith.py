"""Small integer helpers: primality, trial-division factorization, valuations."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class UnsupportedError(DomainError):
    """Input is well-formed but outside the supported scope (dyadic, cube levels, ...)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n >= 1`` as a sorted list of ``(p, e)``."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise DomainError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def totient_prime_power(p: int, m: int) -> int:
    if m == 0:
        return 1
    return p ** (m - 1) * (p - 1)


def next_prime(n: int) -> int:
    """Least prime strictly greater than n."""
    n += 1
    while not is_prime(n):
        n += 1
    return n


@lru_cache(maxsize=None)
def canonical_primitive_root(p: int) -> int:
    """Least positive primitive root mod p that stays primitive mod p**2.

    Such a root generates (Z/p^m)^x for every m >= 1.
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    qs = [q for q, _ in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs) and pow(g, p - 1, p * p) != 1:
            return g
    raise AssertionError("unreachable: a primitive root always exists")


def frac_str(x: Fraction | int) -> str:
    """Render an exact rational as "num/den" in lowest terms."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str | int) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(s)
