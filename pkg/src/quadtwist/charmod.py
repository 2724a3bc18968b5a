"""Characters of (Z/p^m)^x and of Q_p^x for odd primes p.

A character of (Z/p^m)^x is stored by its exponent ``k`` against the
canonical primitive root ``g``: chi(g) = exp(2 pi i k / N), N = phi(p^m).
Characters of Q_p^x add a rational phase (the value at the uniformizer p)
and an integer multiple of one symbolic unitary parameter |.|^s, s in iR.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._arith import (
    DomainError,
    UnsupportedError,
    canonical_primitive_root,
    frac_str,
    is_prime,
    totient_prime_power,
    valuation,
)

__all__ = [
    "UnitCharacter",
    "PadicCharacter",
    "conductor_exponent_char",
    "char_arith",
    "quadratic_character",
    "quadratic_padic",
    "unramified_quadratic",
    "enumerate_unit_characters",
    "count_primitive_characters",
    "gauss_sum",
    "gauss_sum_table",
    "jacobi_symbol",
    "char_to_dict",
    "char_from_dict",
]


def _check_odd_prime(p: int) -> None:
    if p == 2:
        raise UnsupportedError("p = 2 is dyadic; there is no quadratic character modulo 2")
    if not is_prime(p):
        raise DomainError(f"{p} is not a prime")


@dataclass(frozen=True, eq=False)
class UnitCharacter:
    p: int
    m: int
    k: int = 0

    def __post_init__(self):
        _check_odd_prime(self.p)
        if self.m < 0:
            raise DomainError("level must be nonnegative")
        if not 0 <= self.k < self.order_of_group:
            raise DomainError(f"exponent {self.k} outside [0, {self.order_of_group})")

    @property
    def order_of_group(self) -> int:
        return totient_prime_power(self.p, self.m)

    @property
    def conductor(self) -> int:
        return conductor_exponent_char(self)

    @property
    def order(self) -> int:
        return self.order_of_group // math.gcd(self.k, self.order_of_group)

    def is_trivial(self) -> bool:
        return self.k == 0

    def at_level(self, m: int) -> UnitCharacter:
        """Re-present the character at a level ``m`` at least its conductor."""
        if m >= self.m:
            scale = totient_prime_power(self.p, m) // self.order_of_group
            return UnitCharacter(self.p, m, self.k * scale)
        c = self.conductor
        if m < c:
            raise DomainError(f"cannot present a character of conductor {c} at level {m}")
        scale = self.order_of_group // totient_prime_power(self.p, m)
        return UnitCharacter(self.p, m, self.k // scale)

    def primitive(self) -> UnitCharacter:
        """The same character presented at its conductor level."""
        return self.at_level(self.conductor)

    def _key(self):
        prim = self.primitive()
        return (prim.p, prim.m, prim.k)

    def __eq__(self, other):
        if not isinstance(other, UnitCharacter):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __mul__(self, other: UnitCharacter) -> UnitCharacter:
        return char_arith(self, other, "multiply")

    def inverse(self) -> UnitCharacter:
        return char_arith(self, None, "inverse")

    def __pow__(self, n: int) -> UnitCharacter:
        return char_arith(self, None, "power", n)

    def phase_at(self, u: int) -> Fraction:
        """chi(u) = exp(2 pi i * phase)."""
        if u % self.p == 0:
            raise DomainError(f"{u} is not a unit mod {self.p}")
        if self.m == 0:
            return Fraction(0)
        log = _dlog_table(self.p, self.m)[u % self.p ** self.m]
        return Fraction(self.k * log % self.order_of_group, self.order_of_group)

    def __call__(self, u: int) -> complex:
        return cmath.exp(2j * math.pi * float(self.phase_at(u)))


@lru_cache(maxsize=64)
def _dlog_table(p: int, m: int) -> dict[int, int]:
    g = canonical_primitive_root(p)
    mod = p ** m
    table = {}
    x = 1
    for i in range(totient_prime_power(p, m)):
        table[x] = i
        x = x * g % mod
    return table


def conductor_exponent_char(chi: UnitCharacter) -> int:
    """Least f with chi trivial on 1 + p^f, from the exponent's valuation."""
    if chi.k == 0:
        return 0
    v = valuation(chi.k, chi.p)
    if v >= chi.m - 1:
        return 1
    return chi.m - v


def char_arith(a: UnitCharacter, b: UnitCharacter | None, op: str, n: int = 1) -> UnitCharacter:
    """Group operations on unit characters; ``op`` is multiply, inverse or power.

    Arguments are promoted to the larger level; the result keeps that level.
    """
    if op == "multiply":
        if b is None:
            raise DomainError("multiply needs two characters")
        if a.p != b.p:
            raise DomainError(f"characters at different primes {a.p} and {b.p}")
        m = max(a.m, b.m)
        a, b = a.at_level(m), b.at_level(m)
        return UnitCharacter(a.p, m, (a.k + b.k) % a.order_of_group)
    if op == "inverse":
        return UnitCharacter(a.p, a.m, -a.k % a.order_of_group)
    if op == "power":
        return UnitCharacter(a.p, a.m, a.k * n % a.order_of_group)
    raise DomainError(f"unknown character operation {op!r}")


def quadratic_character(p: int) -> UnitCharacter:
    """The unique nontrivial character of (Z/p)^x whose square is trivial."""
    _check_odd_prime(p)
    return UnitCharacter(p, 1, (p - 1) // 2)


def trivial_character(p: int) -> UnitCharacter:
    return UnitCharacter(p, 0, 0)


def enumerate_unit_characters(p: int, m: int, only_primitive: bool = False) -> list[UnitCharacter]:
    """All characters at level m (or only those of conductor exactly m)."""
    _check_odd_prime(p)
    if m < 1:
        raise DomainError("level must be at least 1")
    chars = [UnitCharacter(p, m, k) for k in range(totient_prime_power(p, m))]
    if only_primitive:
        chars = [c for c in chars if conductor_exponent_char(c) == m]
    return chars


def count_primitive_characters(p: int, m: int) -> int:
    return totient_prime_power(p, m) - totient_prime_power(p, m - 1) if m >= 1 else 1


def gauss_sum(chi: UnitCharacter) -> complex:
    """tau(conj chi) = sum over u mod p^c of conj(chi)(u) e^{2 pi i u / p^c}.

    ``chi`` must be primitive at its presentation level c >= 1.
    """
    c = chi.m
    if c < 1 or conductor_exponent_char(chi) != c:
        raise DomainError("Gauss sum requires a character primitive at its level")
    mod = chi.p ** c
    total = 0j
    for u in range(1, mod):
        if u % chi.p == 0:
            continue
        phase = -chi.phase_at(u) + Fraction(u, mod)
        total += cmath.exp(2j * math.pi * float(phase % 1))
    return total


def gauss_sum_table(p: int, m: int) -> dict[int, complex]:
    """Gauss sums of every primitive character at level m, keyed by exponent k.

    Along n -> g^n the sum over k is a DFT, so one FFT gives all of them.
    """
    _check_odd_prime(p)
    if m < 1:
        raise DomainError("level must be at least 1")
    mod = p ** m
    g = canonical_primitive_root(p)
    N = totient_prime_power(p, m)
    powers = np.empty(N, dtype=np.int64)
    x = 1
    for n in range(N):
        powers[n] = x
        x = x * g % mod
    taus = np.fft.fft(np.exp(2j * np.pi * powers / mod))
    return {k: complex(taus[k]) for k in range(N)
            if conductor_exponent_char(UnitCharacter(p, m, k)) == m}


def jacobi_symbol(a: int, n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class PadicCharacter:
    """Unitary character of Q_p^x: unit part, value at p, symbolic |.|^s power.

    ``spectral`` counts copies of a single generic parameter s in iR; it is
    carried through products and inverses but never affects conductors.
    """

    unit: UnitCharacter
    phase: Fraction = Fraction(0)
    spectral: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phase", Fraction(self.phase) % 1)

    @property
    def p(self) -> int:
        return self.unit.p

    @property
    def generic(self) -> bool:
        return self.spectral != 0

    @property
    def conductor(self) -> int:
        return conductor_exponent_char(self.unit)

    def is_trivial(self) -> bool:
        return self.unit.is_trivial() and self.phase == 0 and self.spectral == 0

    def is_unramified(self) -> bool:
        return self.unit.is_trivial()

    def is_quadratic(self) -> bool:
        return ((self.unit ** 2).is_trivial() and self.phase in (0, Fraction(1, 2))
                and not self.generic)

    def __mul__(self, other: PadicCharacter) -> PadicCharacter:
        return PadicCharacter(self.unit * other.unit, self.phase + other.phase,
                              self.spectral + other.spectral)

    def inverse(self) -> PadicCharacter:
        return PadicCharacter(self.unit.inverse(), -self.phase, -self.spectral)

    def __pow__(self, n: int) -> PadicCharacter:
        return PadicCharacter(self.unit ** n, self.phase * n, self.spectral * n)

    def sort_key(self):
        prim = self.unit.primitive()
        return (prim.m, prim.k, self.phase, self.spectral)


def padic(unit: UnitCharacter, phase=0, spectral: int = 0) -> PadicCharacter:
    return PadicCharacter(unit, Fraction(phase), spectral)


def trivial_padic(p: int) -> PadicCharacter:
    return PadicCharacter(trivial_character(p))


def quadratic_padic(p: int, phase=0) -> PadicCharacter:
    """beta_Quad (phase 0) or beta_Quad times the order-2 unramified character."""
    return PadicCharacter(quadratic_character(p), Fraction(phase))


def unramified_quadratic(p: int) -> PadicCharacter:
    return PadicCharacter(trivial_character(p), Fraction(1, 2))


def char_to_dict(chi: PadicCharacter | UnitCharacter) -> dict:
    if isinstance(chi, UnitCharacter):
        chi = PadicCharacter(chi)
    d = {"p": chi.p, "m": chi.unit.m, "k": chi.unit.k,
         "phase": frac_str(chi.phase), "generic": chi.generic}
    if chi.spectral not in (0, 1):
        d["spectral"] = chi.spectral
    return d


def char_from_dict(d: dict) -> PadicCharacter:
    try:
        unit = UnitCharacter(int(d["p"]), int(d.get("m", 0)), int(d.get("k", 0)))
        spectral = int(d.get("spectral", 1 if d.get("generic") else 0))
        return PadicCharacter(unit, Fraction(d.get("phase", "0/1")), spectral)
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed character {d!r}: {exc}") from None
