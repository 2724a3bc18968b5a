"""Global consequences over Q: twist-pair densities, multiplicity bounds,
the n0 predictor for distinguishing newforms, and Gamma_1(p^m) multiplicities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from ._arith import DomainError, UnsupportedError, factorize, frac_str, is_prime, next_prime
from .charmod import jacobi_symbol

__all__ = [
    "LevelFactorization",
    "DensityReport",
    "MultiplicityReport",
    "N0Prediction",
    "density",
    "density_factor",
    "multiplicity_bound",
    "n0_prediction",
    "gamma1_multiplicity",
    "quadratic_character_mod",
]


@dataclass(frozen=True)
class LevelFactorization:
    q: int
    factors: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, q: int) -> LevelFactorization:
        return cls(q, tuple(factorize(q)))

    def __post_init__(self):
        if prod(p ** e for p, e in self.factors) != self.q:
            raise DomainError(f"factors {self.factors} do not multiply to {self.q}")

    @property
    def square_primes(self) -> list[int]:
        """Odd primes p with p^2 | q."""
        return [p for p, e in self.factors if p != 2 and e >= 2]

    @property
    def s(self) -> int:
        return len(self.square_primes)

    @property
    def qprime_max(self) -> int:
        return prod(self.square_primes)

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def density_factor(p: int) -> Fraction:
    """Proportion surviving at a prime with p^2 || q: 1 - p/(p^2 - p - 1)."""
    return 1 - Fraction(p, p * p - p - 1)


def quadratic_character_mod(qprime: int):
    """The primitive quadratic character modulo an odd squarefree q' > 1."""
    _check_qprime(qprime)
    return lambda n: jacobi_symbol(n, qprime)


def _check_qprime(qprime: int) -> None:
    if qprime <= 1 or qprime % 2 == 0:
        raise DomainError(f"q' must be odd and > 1, got {qprime}")
    if not all(e == 1 for _, e in factorize(qprime)):
        raise DomainError(f"q' = {qprime} is not squarefree")


@dataclass(frozen=True)
class DensityReport:
    q: int
    qprime: int
    feasible: bool
    density: Fraction
    factors: tuple[tuple[int, Fraction], ...] = ()
    intersection_note: bool = True

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "qprime": self.qprime,
            "feasible": self.feasible,
            "density": frac_str(self.density),
            "factors": [{"p": p, "factor": frac_str(f)} for p, f in self.factors],
            "intersection_note": self.intersection_note,
        }


def density(q: int, qprime: int) -> DensityReport:
    """Asymptotic proportion of level-q newforms whose twist by the quadratic
    character mod q' is a different newform of level q.

    The same proportion holds for the intersection over all q* | q', q* > 1,
    and for holomorphic newforms as the weight grows over even integers.
    """
    if q < 1:
        raise DomainError(f"level must be positive, got {q}")
    _check_qprime(qprime)
    lf = LevelFactorization.of(q)
    primes = [p for p, _ in factorize(qprime)]
    if any(lf.exponent(p) < 2 for p in primes):
        return DensityReport(q, qprime, False, Fraction(0), (), True)
    factors = tuple((p, density_factor(p) if lf.exponent(p) == 2 else Fraction(1)) for p in primes)
    return DensityReport(q, qprime, True, prod((f for _, f in factors), start=Fraction(1)),
                         factors, True)


@dataclass(frozen=True)
class MultiplicityReport:
    q: int
    s: int
    bound: int
    density: Fraction

    def to_dict(self) -> dict:
        return {"q": self.q, "s": self.s, "bound": self.bound, "density": frac_str(self.density)}


def multiplicity_bound(q: int) -> MultiplicityReport:
    """Eigenvalues of multiplicity >= 2^s(q) occur with the returned density."""
    if q < 1:
        raise DomainError(f"level must be positive, got {q}")
    lf = LevelFactorization.of(q)
    dens = prod((density_factor(p) for p, e in lf.factors if p != 2 and e == 2),
                start=Fraction(1))
    return MultiplicityReport(q, lf.s, 2 ** lf.s, dens)


@dataclass(frozen=True)
class N0Prediction:
    q: int
    value: int
    branch: str
    qprime: int = 1
    witnesses: tuple[tuple[int, int], ...] = field(default=())

    def to_dict(self) -> dict:
        d = {"q": self.q, "value": self.value, "branch": self.branch}
        if self.branch == "nonsquarefree":
            d["qprime"] = self.qprime
            d["witnesses"] = [{"qstar": qs, "least_prime": p} for qs, p in self.witnesses]
        return d


def _least_inert_prime(qstar: int, q: int) -> int:
    cap = 2 * qstar * qstar
    p = 2
    while p <= cap:
        if q % p and jacobi_symbol(p, qstar) == -1:
            return p
        p = next_prime(p)
    raise RuntimeError(f"no prime p <= {cap} with (p/{qstar}) = -1 and p not dividing {q}")


def n0_prediction(q: int) -> N0Prediction:
    """Conjectural number of Hecke eigenvalues needed to tell newforms of level q apart."""
    if q < 1 or q % 2 == 0:
        raise UnsupportedError(f"the predictor is stated for odd positive q, got {q}")
    lf = LevelFactorization.of(q)
    if lf.squarefree:
        p = 2
        while q % p == 0:
            p = next_prime(p)
        return N0Prediction(q, p, "squarefree")
    qprime = lf.qprime_max
    primes = lf.square_primes
    witnesses = []
    for r in range(1, len(primes) + 1):
        for combo in combinations(primes, r):
            qstar = prod(combo)
            witnesses.append((qstar, _least_inert_prime(qstar, q)))
    witnesses.sort()
    value = max(p for _, p in witnesses)
    return N0Prediction(q, value, "nonsquarefree", qprime, tuple(witnesses))


def gamma1_multiplicity(p: int, m: int) -> int:
    """Multiplicity p^(floor(m/2)-2) (p-1)^2 of some new eigenvalues on Gamma_1(p^m)."""
    if p == 2 or not is_prime(p):
        raise UnsupportedError(f"p must be an odd prime, got {p}")
    if m < 4:
        raise DomainError("the multiplicity statement needs m >= 4")
    return p ** (m // 2 - 2) * (p - 1) ** 2
