"""Generic unitary representations of GL2(Q_p), p odd, and their twists.

Representations are principal series ``PrincipalSeries(chi1, chi2)``, special
representations ``Special(omega)`` (omega times Steinberg), or opaque
supercuspidals. Only the data the conductor calculus needs is modelled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ._arith import DomainError
from .charmod import (
    PadicCharacter,
    char_from_dict,
    char_to_dict,
    quadratic_character,
    quadratic_padic,
    trivial_padic,
    unramified_quadratic,
)

EXACT = "exact"
BOUND = "bound"


@dataclass(frozen=True)
class PrincipalSeries:
    chi1: PadicCharacter
    chi2: PadicCharacter

    def __post_init__(self):
        if self.chi1.p != self.chi2.p:
            raise DomainError("inducing characters live at different primes")
        # unitary parameters only, so chi1/chi2 = |.|^{+-1} (the reducible case) cannot occur
        if self.chi2.sort_key() < self.chi1.sort_key():
            a, b = self.chi1, self.chi2
            object.__setattr__(self, "chi1", b)
            object.__setattr__(self, "chi2", a)

    @property
    def p(self) -> int:
        return self.chi1.p


@dataclass(frozen=True)
class Special:
    omega: PadicCharacter

    @property
    def p(self) -> int:
        return self.omega.p


@dataclass(frozen=True)
class Supercuspidal:
    """Opaque supercuspidal: ``tag`` names a base representation, ``twist`` the
    character it has been twisted by since. ``c`` is an upper bound when
    ``exact`` is false."""

    central: PadicCharacter
    c: int
    sc_type: str = "I"
    dim_rho: int = 1
    tag: str = "sc"
    twist: PadicCharacter | None = field(default=None)
    exact: bool = True

    def __post_init__(self):
        if self.c < 2:
            raise DomainError("supercuspidal conductor exponent is at least 2")
        if self.sc_type not in ("I", "II"):
            raise DomainError(f"supercuspidal type must be I or II, got {self.sc_type!r}")
        if self.dim_rho < 1:
            raise DomainError("dim rho must be positive")
        if self.twist is None:
            object.__setattr__(self, "twist", trivial_padic(self.p))

    @property
    def p(self) -> int:
        return self.central.p


LocalRep = Union[PrincipalSeries, Special, Supercuspidal]


@dataclass(frozen=True)
class TwistResult:
    rep: LocalRep
    conductor: int
    exactness: str = EXACT


def _same_prime(rep: LocalRep, omega: PadicCharacter) -> None:
    if rep.p != omega.p:
        raise DomainError(f"representation at p={rep.p} twisted by character at p={omega.p}")


def conductor_exponent(rep: LocalRep) -> int:
    if isinstance(rep, PrincipalSeries):
        return rep.chi1.conductor + rep.chi2.conductor
    if isinstance(rep, Special):
        c = rep.omega.conductor
        return 1 if c == 0 else 2 * c
    return rep.c


def central_character(rep: LocalRep) -> PadicCharacter:
    if isinstance(rep, PrincipalSeries):
        return rep.chi1 * rep.chi2
    if isinstance(rep, Special):
        return rep.omega ** 2
    return rep.central


def atkin_li_bound(c_pi: int, c_omega: int, c_central: int) -> int:
    """Upper bound for c(pi (x) omega) given c(pi), c(omega), c(omega_pi)."""
    if min(c_pi, c_omega, c_central) < 0:
        raise DomainError("conductor exponents are nonnegative")
    return max(c_pi, c_omega + c_central, 2 * c_omega)


def twist(rep: LocalRep, omega: PadicCharacter) -> TwistResult:
    _same_prime(rep, omega)
    if isinstance(rep, PrincipalSeries):
        new = PrincipalSeries(rep.chi1 * omega, rep.chi2 * omega)
        return TwistResult(new, conductor_exponent(new))
    if isinstance(rep, Special):
        new = Special(rep.omega * omega)
        return TwistResult(new, conductor_exponent(new))

    central = rep.central
    exact = rep.exact and (
        omega.is_unramified()
        or (central.is_trivial() and omega.unit == quadratic_character(rep.p))
    )
    if exact:
        c = rep.c
    else:
        c = atkin_li_bound(rep.c, omega.conductor, central.conductor)
    new = Supercuspidal(
        central=omega ** 2 * central,
        c=c,
        sc_type=rep.sc_type,
        dim_rho=rep.dim_rho,
        tag=rep.tag,
        twist=rep.twist * omega,
        exact=exact,
    )
    return TwistResult(new, c, EXACT if exact else BOUND)


def classify_conductor_one(p: int) -> list[Special]:
    """Every representation with conductor exponent 1 and trivial central character."""
    return [Special(trivial_padic(p)), Special(unramified_quadratic(p))]


def is_level_invariant(rep: LocalRep) -> bool:
    """Whether twisting by the ramified quadratic character keeps the conductor."""
    if not central_character(rep).is_trivial():
        raise DomainError("level invariance is classified for trivial central character only")
    return twist(rep, quadratic_padic(rep.p)).conductor == conductor_exponent(rep)


def rep_to_dict(rep: LocalRep) -> dict:
    if isinstance(rep, PrincipalSeries):
        return {"kind": "ps", "chi1": char_to_dict(rep.chi1), "chi2": char_to_dict(rep.chi2)}
    if isinstance(rep, Special):
        return {"kind": "special", "omega": char_to_dict(rep.omega)}
    return {
        "kind": "sc",
        "central": char_to_dict(rep.central),
        "c": rep.c,
        "sc_type": rep.sc_type,
        "dim_rho": rep.dim_rho,
        "tag": rep.tag,
        "twist": char_to_dict(rep.twist),
        "exact": rep.exact,
    }


def rep_from_dict(d: dict) -> LocalRep:
    kind = d.get("kind")
    try:
        if kind == "ps":
            return PrincipalSeries(char_from_dict(d["chi1"]), char_from_dict(d["chi2"]))
        if kind == "special":
            return Special(char_from_dict(d["omega"]))
        if kind == "sc":
            tw = d.get("twist")
            return Supercuspidal(
                central=char_from_dict(d["central"]),
                c=int(d["c"]),
                sc_type=d.get("sc_type", "I"),
                dim_rho=int(d.get("dim_rho", 1)),
                tag=str(d.get("tag", "sc")),
                twist=char_from_dict(tw) if tw is not None else None,
                exact=bool(d.get("exact", True)),
            )
    except KeyError as exc:
        raise DomainError(f"representation missing field {exc}") from None
    raise DomainError(f"unknown representation kind {kind!r}")


def twist_to_dict(result: TwistResult) -> dict:
    return {"rep": rep_to_dict(result.rep), "conductor": result.conductor,
            "exactness": result.exactness}
