"""Monomial (CM) spectral parameters for real quadratic fields over Q.

For E = Q(sqrt D) real, the units of O_E force the spectral parameters of
monomial representations into translates of a one-dimensional lattice with
spacing pi / log(eps0). The count up to height T therefore grows linearly,
against T^2 in the Weyl law.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isqrt

from ._arith import DomainError, is_squarefree


@dataclass(frozen=True)
class RealQuadraticField:
    D: int
    a: int
    b: int

    @property
    def disc(self) -> int:
        return self.D if self.D % 4 == 1 else 4 * self.D

    @property
    def unit_norm(self) -> int:
        return (self.a * self.a - self.D * self.b * self.b) // 4

    @property
    def fundamental_unit(self) -> tuple[int, int]:
        """eps0 = (a + b sqrt D) / 2."""
        return (self.a, self.b)

    @property
    def regulator(self) -> float:
        a, b, D = self.a, self.b, self.D
        # int/int true division stays accurate for units far beyond float range
        return math.log(a) + math.log1p(math.sqrt(D * b * b / (a * a))) - math.log(2)


def _check_D(D: int) -> None:
    if D <= 1 or not is_squarefree(D):
        raise DomainError(f"D must be a squarefree integer > 1, got {D}")


def fundamental_unit(D: int) -> RealQuadraticField:
    """Fundamental unit of the maximal order of Q(sqrt D) by continued fractions.

    Expands (P0 + sqrt D)/Q0 with (P0, Q0) = (1, 2) when D = 1 mod 4 and
    (0, 1) otherwise; the first convergent whose complete quotient returns
    to Q0 gives G^2 - D B^2 = +-Q0^2.
    """
    _check_D(D)
    P0, Q0 = (1, 2) if D % 4 == 1 else (0, 1)
    r = isqrt(D)
    P, Q = P0, Q0
    G_prev, G = -P0, Q0
    B_prev, B = 1, 0
    while True:
        a_i = (P + r) // Q  # Q stays positive along this expansion
        G_prev, G = G, a_i * G + G_prev
        B_prev, B = B, a_i * B + B_prev
        P = a_i * Q - P
        Q = (D - P * P) // Q
        if Q == Q0 and B > 0:
            break
    scale = 2 // Q0
    field = RealQuadraticField(D, G * scale, B * scale)
    if abs(field.a ** 2 - D * field.b ** 2) != 4:
        raise AssertionError(f"continued fraction produced a non-unit for D={D}")
    return field


@dataclass(frozen=True)
class MonomialLatticeReport:
    D: int
    field: RealQuadraticField
    phi_epsilon0: float
    spacing: float
    rank: int = 1

    def count_bound(self, T: float, cosets: int = 1) -> int:
        return cosets * (math.floor(2 * T / self.spacing) + 1)


def monomial_spacing(D: int) -> MonomialLatticeReport:
    """Lattice of admissible spectral parameters t attached to Q(sqrt D)."""
    field = fundamental_unit(D)
    # |sigma(eps0)| = 1/eps0, so log(|eps0|_w1 / |eps0|_w2) = 2 log eps0
    phi = 2 * field.regulator
    return MonomialLatticeReport(D, field, phi, 2 * math.pi / phi)


def monomial_count_bound(D: int, T: float, cosets: int = 1) -> int:
    """Upper bound on monomial spectral parameters |t| <= T over ``cosets`` character cosets."""
    if T <= 0:
        raise DomainError("T must be positive")
    if cosets < 1:
        raise DomainError("need at least one coset")
    return monomial_spacing(D).count_bound(T, cosets)


def monomial_to_dict(report: MonomialLatticeReport, T: float | None = None, cosets: int = 1) -> dict:
    f = report.field
    d = {
        "D": report.D,
        "disc": f.disc,
        "fundamental_unit": {"a": str(f.a), "b": str(f.b), "denominator": 2},
        "unit_norm": f.unit_norm,
        "regulator": float(f"{f.regulator:.12g}"),
        "phi_epsilon0": float(f"{report.phi_epsilon0:.12g}"),
        "spacing": float(f"{report.spacing:.12g}"),
        "rank": report.rank,
    }
    if T is not None:
        d["T"] = T
        d["cosets"] = cosets
        d["count_bound"] = report.count_bound(T, cosets)
    return d
