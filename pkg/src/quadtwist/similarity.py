"""Similarity classes of local representations and their Weyl-law constants.

Two representations are similar when they agree up to the unramified
order-two twist |.|^{pi i / log p} (special and supercuspidal), or, for
principal series, when the unit parts agree up to swap and the sums of
unramified exponents agree. Each class carries the local constant that
weights it in the Weyl law for newforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ._arith import DomainError, UnsupportedError, factorize, frac_str, is_prime
from .charmod import (
    PadicCharacter,
    enumerate_unit_characters,
    quadratic_padic,
    trivial_padic,
)
from .replocal import (
    LocalRep,
    PrincipalSeries,
    Special,
    Supercuspidal,
    central_character,
    is_level_invariant,
    rep_to_dict,
)

_HALF = Fraction(1, 2)


def _kind(rep: LocalRep) -> str:
    if isinstance(rep, PrincipalSeries):
        return "ps"
    if isinstance(rep, Special):
        return "special"
    return "sc"


def _mod_unramified_quadratic(chi: PadicCharacter) -> PadicCharacter:
    return PadicCharacter(chi.unit, chi.phase % _HALF, chi.spectral)


def canonical_representative(rep: LocalRep) -> LocalRep:
    """A fixed member of the similarity class of ``rep``."""
    if isinstance(rep, PrincipalSeries):
        central = central_character(rep)
        u1, u2 = sorted([rep.chi1.unit, rep.chi2.unit], key=lambda u: u._key())
        return PrincipalSeries(PadicCharacter(u1, central.phase, central.spectral),
                               PadicCharacter(u2))
    if isinstance(rep, Special):
        return Special(_mod_unramified_quadratic(rep.omega))
    return Supercuspidal(
        central=rep.central, c=rep.c, sc_type=rep.sc_type, dim_rho=rep.dim_rho,
        tag=rep.tag, twist=_mod_unramified_quadratic(rep.twist), exact=rep.exact,
    )


def same_class(a: LocalRep, b: LocalRep) -> bool:
    if a.p != b.p:
        raise DomainError(f"representations at different primes {a.p} and {b.p}")
    if _kind(a) != _kind(b):
        return False
    if central_character(a) != central_character(b):
        return False
    return canonical_representative(a) == canonical_representative(b)


@dataclass(frozen=True)
class SimilarityClass:
    p: int
    representative: LocalRep
    constant: Fraction
    label: str = ""

    @property
    def kind(self) -> str:
        return _kind(self.representative)


def local_constant_of(rep: LocalRep) -> Fraction:
    q = rep.p
    if isinstance(rep, Special):
        return Fraction(q - 1)
    if isinstance(rep, Supercuspidal):
        if rep.sc_type == "I":
            return Fraction(rep.dim_rho)
        return Fraction(q + 1, 2) * rep.dim_rho
    c = (rep.chi1 * rep.chi2.inverse()).conductor
    if c == 0:
        return Fraction(1)
    return Fraction(2 * (q ** c + q ** (c - 1)), q ** (c // 2) + 1)


def similarity_class(rep: LocalRep, label: str = "") -> SimilarityClass:
    rep = canonical_representative(rep)
    return SimilarityClass(rep.p, rep, local_constant_of(rep), label)


def local_constant(cls: SimilarityClass | LocalRep) -> Fraction:
    if isinstance(cls, SimilarityClass):
        return local_constant_of(cls.representative)
    return local_constant_of(cls)


@dataclass(frozen=True)
class ClassInventory:
    p: int
    c: int
    classes: tuple[SimilarityClass, ...]

    @property
    def sum_constants(self) -> Fraction:
        return sum((cls.constant for cls in self.classes), Fraction(0))


def _check_p(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise UnsupportedError(f"p must be an odd prime, got {p}")


def enumerate_classes(p: int, c: int) -> ClassInventory:
    """Similarity classes with trivial central character and conductor exponent c <= 2."""
    _check_p(p)
    triv = trivial_padic(p)
    if c == 0:
        classes = [similarity_class(PrincipalSeries(triv, triv), "unramified ps")]
    elif c == 1:
        classes = [similarity_class(Special(triv), "steinberg")]
    elif c == 2:
        quad = quadratic_padic(p)
        classes = [
            similarity_class(Special(quad), "special quad"),
            similarity_class(PrincipalSeries(quad, quad), "ps quad+quad"),
        ]
        seen = set()
        for beta in enumerate_unit_characters(p, 1):
            if (beta ** 2).is_trivial():
                continue
            pair = frozenset([beta, beta.inverse()])
            if pair in seen:
                continue
            seen.add(pair)
            rep = PrincipalSeries(PadicCharacter(beta), PadicCharacter(beta.inverse()))
            classes.append(similarity_class(rep, f"ramified ps k={beta.k}"))
        # conductor p^2 supercuspidals with trivial central character: (p-1)/2 classes,
        # all of type I with dim rho = p - 1
        for j in range((p - 1) // 2):
            rep = Supercuspidal(central=triv, c=2, sc_type="I", dim_rho=p - 1, tag=f"sc{j}")
            classes.append(similarity_class(rep, f"supercuspidal {j}"))
    else:
        raise UnsupportedError("class census is only available for conductor exponent 0, 1, 2")
    return ClassInventory(p, c, tuple(classes))


class ClassSums(NamedTuple):
    total: int
    invariant_total: int


def class_sums_closed_form(p: int) -> ClassSums:
    return ClassSums(p * p - p - 1, p * p - 2 * p - 1)


def class_sums(p: int) -> ClassSums:
    """Sum of constants over conductor-p^2 classes, and over the twist-invariant ones."""
    inv = enumerate_classes(p, 2)
    total = inv.sum_constants
    invariant = sum((cls.constant for cls in inv.classes
                     if is_level_invariant(cls.representative)), Fraction(0))
    result = ClassSums(int(total), int(invariant))
    if result != class_sums_closed_form(p) or total.denominator != 1:
        raise RuntimeError(f"class census at p={p} disagrees with closed form: {result}")
    return result


def newform_weyl_constant(q: int) -> Fraction:
    """Leading T^2 coefficient counting weight-0 newforms of level q, trivial character."""
    if q < 1 or q % 2 == 0:
        raise UnsupportedError("level must be odd and positive")
    const = Fraction(1, 12)
    for p, e in factorize(q):
        if e > 2:
            raise UnsupportedError(f"{p}^{e} divides {q}; only cube-free levels are supported")
        const *= enumerate_classes(p, e).sum_constants
    return const


def class_to_dict(cls: SimilarityClass) -> dict:
    return {
        "kind": cls.kind,
        "label": cls.label,
        "constant": frac_str(cls.constant),
        "representative": rep_to_dict(cls.representative),
    }


def inventory_to_dict(inv: ClassInventory) -> dict:
    return {
        "p": inv.p,
        "c": inv.c,
        "count": len(inv.classes),
        "classes": [class_to_dict(cls) for cls in inv.classes],
        "sum_constants": frac_str(inv.sum_constants),
    }
