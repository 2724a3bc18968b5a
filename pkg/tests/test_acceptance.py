"""Acceptance criteria, one test per criterion, tolerances pinned below.

Each criterion prints a PASS/FAIL line in the pytest terminal summary.
"""

from fractions import Fraction
from functools import lru_cache
from math import prod

import pytest

from quadtwist._arith import is_prime
from quadtwist.charmod import (
    PadicCharacter,
    UnitCharacter,
    enumerate_unit_characters,
    gauss_sum,
    gauss_sum_table,
    trivial_padic,
)
from quadtwist.cli import run
from quadtwist.monomial import fundamental_unit, monomial_count_bound
from quadtwist.multiplicity import (
    density,
    density_factor,
    gamma1_multiplicity,
    multiplicity_bound,
    n0_prediction,
)
from quadtwist.oracle import exhaustive_twist_audit, group_table
from quadtwist.replocal import PrincipalSeries, Special, conductor_exponent, is_level_invariant
from quadtwist.similarity import class_sums, enumerate_classes

GAUSS_TOL = 1e-9
GAUSS_MAX_MODULUS = 2401
MONOMIAL_RATIO_AT_1E3 = 1e-2
MONOMIAL_RATIO_AT_1E4 = 1e-3
AUDIT_PRIMES = (3, 5, 7, 11, 13)
AUDIT_MMAX = 3

criterion = pytest.mark.criterion


@lru_cache(maxsize=None)
def audit(p):
    return exhaustive_twist_audit(p, AUDIT_MMAX)


@criterion(1, "headline density: q=9, q'=3 gives exactly 2/5")
def test_headline_ratio(capsys):
    r = density(9, 3)
    assert r.feasible and r.density == Fraction(2, 5)
    assert run(["density", "--q", "9", "--qprime", "3"]) == 0
    assert '"density": "2/5"' in capsys.readouterr().out


@criterion(2, "class sums equal (p^2-p-1, p^2-2p-1) for p = 3..19")
def test_class_sum_identities():
    for p in (3, 5, 7, 11, 13, 17, 19):
        assert tuple(class_sums(p)) == (p * p - p - 1, p * p - 2 * p - 1), p


@criterion(3, "twist audit clean to m_max=3 and level invariance trichotomy")
def test_trichotomy_audit():
    for p in AUDIT_PRIMES:
        r = audit(p)
        assert r.discrepancies == [], (p, r.discrepancies[:3])
        # conductor p: never invariant
        assert not is_level_invariant(Special(trivial_padic(p)))
        assert not is_level_invariant(Special(PadicCharacter(UnitCharacter(p, 0, 0), Fraction(1, 2))))
        # conductor p^2: exactly the special and quad+quad principal series classes drop out
        excluded = [c.label for c in enumerate_classes(p, 2).classes
                    if not is_level_invariant(c.representative)]
        assert excluded == ["special quad", "ps quad+quad"]
        # conductor >= p^3: every principal series with trivial central character
        for beta in enumerate_unit_characters(p, AUDIT_MMAX):
            rep = PrincipalSeries(PadicCharacter(beta), PadicCharacter(beta.inverse()))
            if conductor_exponent(rep) >= 3:
                assert is_level_invariant(rep), (p, beta)


@criterion(4, "no twist exceeds the Atkin-Li bound over the audit range")
def test_atkin_li_property():
    for p in AUDIT_PRIMES:
        r = audit(p)
        assert r.checked > 0 and r.atkin_li_violations == 0, p


@criterion(5, f"|tau|^2 = p^c within {GAUSS_TOL:g} for every primitive chi, p^c <= {GAUSS_MAX_MODULUS}")
def test_gauss_sum_modulus():
    checked = 0
    for p in range(3, GAUSS_MAX_MODULUS + 1):
        if not is_prime(p):
            continue
        c = 1
        while p ** c <= GAUSS_MAX_MODULUS:
            table = gauss_sum_table(p, c)
            assert len(table) == (p - 1) * p ** (c - 1) - ((p - 1) * p ** (c - 2) if c > 1 else 1)
            for k, tau in table.items():
                assert abs(abs(tau) ** 2 - p ** c) <= GAUSS_TOL, (p, c, k)
            checked += len(table)
            c += 1
    # the batch agrees with the direct sum
    for p, c in ((3, 7), (7, 4), (47, 2), (2399, 1)):
        table = gauss_sum_table(p, c)
        for k in list(table)[:: max(1, len(table) // 5)]:
            tau = gauss_sum(UnitCharacter(p, c, k))
            assert abs(tau - table[k]) <= GAUSS_TOL
            assert abs(abs(tau) ** 2 - p ** c) <= GAUSS_TOL
    assert checked > 400_000


@criterion(6, "multiplicity 2^s(q) and density at q in {9, 27, 45, 225, 2025}")
def test_multiplicity_corollary():
    two_fifths, fourteen_19ths = Fraction(2, 5), Fraction(14, 19)
    expected = {
        9: (2, two_fifths),
        27: (2, Fraction(1)),
        45: (2, two_fifths),
        225: (4, two_fifths * fourteen_19ths),
        2025: (4, fourteen_19ths),
    }
    for q, (bound, dens) in expected.items():
        r = multiplicity_bound(q)
        assert (r.bound, r.density) == (bound, dens), q


def primitive_count_by_table(p, m):
    # chi_k is primitive iff it is nontrivial on 1 + p^(m-1)
    t = group_table(p, m)
    if m == 1:
        return t.N - 1
    sub = [t.dlog[u] for u in range(1, t.modulus, p ** (m - 1))]
    return sum(1 for k in range(t.N) if any(k * d % t.N for d in sub))


@criterion(7, "Gamma_1(p^m) multiplicity matches primitive-character counts")
def test_gamma1():
    for p in (3, 5, 7):
        for m in range(4, 10):
            assert gamma1_multiplicity(p, m) == primitive_count_by_table(p, m // 2), (p, m)


@criterion(8, "n0 prediction: q=49 gives 3, squarefree q give least non-divisor")
def test_stability_predictor():
    assert n0_prediction(49).value == 3
    for q in (1, 3, 5, 7, 15, 21, 35, 105, 1155, 15015):
        least = next(p for p in range(2, 100) if is_prime(p) and q % p)
        r = n0_prediction(q)
        assert r.branch == "squarefree" and r.value == least, q


@criterion(9, "monomial count is o(T^2) and units satisfy the Pell identity")
def test_monomial_density_zero():
    for D in (2, 3, 5, 13):
        f = fundamental_unit(D)
        assert f.a * f.a - D * f.b * f.b in (4, -4)
        assert (f.a * f.a - D * f.b * f.b) // 4 == f.unit_norm
        assert monomial_count_bound(D, 1e3, 1) / 1e6 < MONOMIAL_RATIO_AT_1E3
        assert monomial_count_bound(D, 1e4, 1) / 1e8 < MONOMIAL_RATIO_AT_1E4


@criterion(10, "density factor equals invariant/total class-sum ratio for p = 3..13")
def test_cross_module_density():
    for p in AUDIT_PRIMES:
        sums = class_sums(p)
        assert density_factor(p) == Fraction(sums.invariant_total, sums.total), p
    assert density(225, 15).density == prod(
        (Fraction(class_sums(p).invariant_total, class_sums(p).total) for p in (3, 5)), start=Fraction(1))
