"""Brute-force ground truth for character and twist computations.

Everything here works from explicit discrete-log tables of (Z/p^m)^x and
exhaustive searches; it shares no conductor logic with ``charmod`` or
``replocal`` and exists to audit them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from ._arith import DomainError
from .charmod import PadicCharacter, UnitCharacter, quadratic_padic
from .replocal import (
    PrincipalSeries,
    Special,
    atkin_li_bound,
    central_character,
    conductor_exponent,
    twist,
)


@dataclass(frozen=True)
class GroupTable:
    p: int
    m: int
    g: int
    dlog: dict = field(repr=False)

    @property
    def N(self) -> int:
        return len(self.dlog)

    @property
    def modulus(self) -> int:
        return self.p ** self.m


def _orbit(g: int, mod: int) -> list[int]:
    seen = [1]
    x = g % mod
    while x != 1:
        seen.append(x)
        x = x * g % mod
    return seen


@lru_cache(maxsize=None)
def _root(p: int) -> int:
    # least g whose powers exhaust (Z/p^2)^x
    units = p * (p - 1)
    for g in range(2, p):
        if len(_orbit(g, p * p)) == units:
            return g
    raise DomainError(f"no primitive root found for {p}")


@lru_cache(maxsize=None)
def group_table(p: int, m: int) -> GroupTable:
    """Discrete-log table of (Z/p^m)^x against the canonical root.

    Construction is idempotent, so concurrent first calls at worst build
    identical tables twice.
    """
    if m < 0:
        raise DomainError("level must be nonnegative")
    g = _root(p)
    if m == 0:
        return GroupTable(p, 0, g, {0: 0})
    powers = _orbit(g, p ** m)
    return GroupTable(p, m, g, {u: i for i, u in enumerate(powers)})


def char_eval(chi: UnitCharacter, u: int) -> Fraction:
    """Phase of chi(u) in [0, 1)."""
    if u % chi.p == 0:
        raise DomainError(f"{u} is not coprime to {chi.p}")
    if chi.m == 0:
        return Fraction(0)
    t = group_table(chi.p, chi.m)
    return Fraction(chi.k * t.dlog[u % t.modulus] % t.N, t.N)


def product_phase(chars: Iterable[UnitCharacter]) -> Callable[[int], Fraction]:
    """Pointwise product of characters, as a phase function on units."""
    chars = tuple(chars)
    return lambda u: sum((char_eval(c, u) for c in chars), Fraction(0)) % 1


def conductor_of(p: int, m: int, phase: Callable[[int], Fraction]) -> int:
    """Least f such that ``phase`` vanishes on every unit u = 1 mod p^f (mod p^m)."""
    mod = p ** m
    for f in range(m + 1):
        step = p ** f
        if all(phase(u) == 0 for u in range(1, mod, step) if u % p):
            return f
    raise AssertionError("phase function is not trivial on the trivial subgroup")


def conductor_by_search(chi: UnitCharacter | Iterable[UnitCharacter]) -> int:
    if isinstance(chi, UnitCharacter):
        chi = (chi,)
    chars = tuple(chi)
    p = chars[0].p
    m = max(c.m for c in chars)
    return conductor_of(p, m, product_phase(chars))


def _all_characters(p: int, m: int) -> list[UnitCharacter]:
    t = group_table(p, m)
    return [UnitCharacter(p, m, k) for k in range(t.N)]


def _is_square_trivial(beta: UnitCharacter) -> bool:
    return conductor_by_search((beta, beta)) == 0


@dataclass
class AuditReport:
    p: int
    m_max: int
    checked: int = 0
    discrepancies: list = field(default_factory=list)
    atkin_li_violations: int = 0
    zero_conductor_twists: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m_max": self.m_max,
            "checked": self.checked,
            "discrepancies": self.discrepancies,
            "atkin_li_violations": self.atkin_li_violations,
            "zero_conductor_twists": self.zero_conductor_twists,
        }


def _note(report: AuditReport, what: str, rep, expected, got) -> None:
    report.discrepancies.append({"check": what, "rep": repr(rep), "oracle": expected, "library": got})


def exhaustive_twist_audit(p: int, m_max: int) -> AuditReport:
    """Twist every trivial-central principal series and special representation
    built from characters of conductor <= m_max by the ramified quadratic
    character, and compare conductors with brute-force values."""
    if m_max > 4 or m_max < 1:
        raise DomainError("audit is limited to 1 <= m_max <= 4")
    report = AuditReport(p, m_max)
    eta = quadratic_padic(p)
    eta_u = eta.unit
    c_eta = conductor_by_search(eta_u)

    for beta in _all_characters(p, m_max):
        beta_inv = UnitCharacter(p, m_max, -beta.k % beta.order_of_group)
        c_beta = conductor_by_search(beta)
        if c_beta != beta.conductor:
            _note(report, "character conductor", beta, c_beta, beta.conductor)

        # principal series beta |.|^s + beta^-1 |.|^-s
        rep = PrincipalSeries(PadicCharacter(beta, spectral=1), PadicCharacter(beta_inv, spectral=-1))
        c_pi = c_beta + conductor_by_search(beta_inv)
        c_tw = conductor_by_search((beta, eta_u)) + conductor_by_search((beta_inv, eta_u))
        _compare(report, rep, eta, c_pi, c_tw, c_eta, central_cond=0)
        if c_tw == 0:
            report.zero_conductor_twists.append({"k": beta.k, "m": beta.m})
        if c_beta >= 1:
            expected = 0 if c_beta == 1 and conductor_by_search((beta, eta_u)) == 0 else c_pi
            if c_tw != expected:
                _note(report, "ramified principal series twist rule", rep, expected, c_tw)

        if not _is_square_trivial(beta):
            continue
        for phase in (Fraction(0), Fraction(1, 2)):
            rep = Special(PadicCharacter(beta, phase))
            c_om = conductor_by_search(beta)
            c_pi = 1 if c_om == 0 else 2 * c_om
            c_twom = conductor_by_search((beta, eta_u))
            c_tw = 1 if c_twom == 0 else 2 * c_twom
            _compare(report, rep, eta, c_pi, c_tw, c_eta, central_cond=0)
            expected = c_pi + 1 if c_om == 0 else c_pi - 1
            if c_tw != expected:
                _note(report, "special twist rule", rep, expected, c_tw)
    return report


def _compare(report, rep, omega, c_pi, c_tw, c_omega, central_cond) -> None:
    report.checked += 1
    if conductor_exponent(rep) != c_pi:
        _note(report, "conductor", rep, c_pi, conductor_exponent(rep))
    res = twist(rep, omega)
    if res.conductor != c_tw:
        _note(report, "twisted conductor", rep, c_tw, res.conductor)
    if res.exactness != "exact":
        _note(report, "exactness", rep, "exact", res.exactness)
    if c_tw > atkin_li_bound(c_pi, c_omega, central_cond):
        report.atkin_li_violations += 1
        _note(report, "atkin-li bound", rep, atkin_li_bound(c_pi, c_omega, central_cond), c_tw)
    back = twist(res.rep, omega.inverse()).rep
    if back != rep or conductor_exponent(back) != c_pi:
        _note(report, "untwist", rep, repr(rep), repr(back))
    if central_character(res.rep) != omega ** 2 * central_character(rep):
        _note(report, "central character", rep, "omega^2 * central", repr(central_character(res.rep)))


def general_twist_audit(p: int, level: int = 1) -> AuditReport:
    """Twist every principal series chi1 + chi2 (characters at ``level``) by every
    character at ``level``, comparing with brute force and the Atkin-Li bound."""
    report = AuditReport(p, level)
    chars = _all_characters(p, level)
    conds = {c.k: conductor_by_search(c) for c in chars}
    for a in chars:
        for b in chars:
            if b.k < a.k:
                continue
            rep = PrincipalSeries(PadicCharacter(a), PadicCharacter(b))
            c_pi = conds[a.k] + conds[b.k]
            c_central = conductor_by_search((a, b))
            for w in chars:
                c_tw = conductor_by_search((a, w)) + conductor_by_search((b, w))
                _compare(report, rep, PadicCharacter(w), c_pi, c_tw, conds[w.k], c_central)
    return report
