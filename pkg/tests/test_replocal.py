from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quadtwist._arith import DomainError
from quadtwist.charmod import (
    PadicCharacter,
    UnitCharacter,
    padic,
    quadratic_padic,
    trivial_padic,
    unramified_quadratic,
)
from quadtwist.oracle import conductor_by_search
from quadtwist.replocal import (
    BOUND,
    EXACT,
    PrincipalSeries,
    Special,
    Supercuspidal,
    atkin_li_bound,
    central_character,
    classify_conductor_one,
    conductor_exponent,
    is_level_invariant,
    rep_from_dict,
    rep_to_dict,
    twist,
)


def test_conductor_examples():
    q3 = quadratic_padic(3)
    assert conductor_exponent(PrincipalSeries(q3, q3)) == 2
    assert conductor_exponent(Special(trivial_padic(5))) == 1
    assert conductor_exponent(Special(unramified_quadratic(5))) == 1
    assert conductor_exponent(PrincipalSeries(trivial_padic(3), trivial_padic(3))) == 0
    assert conductor_exponent(Special(padic(UnitCharacter(5, 2, 10)))) == 2
    assert conductor_exponent(Supercuspidal(trivial_padic(7), 5)) == 5


def test_central_character():
    q3 = quadratic_padic(3)
    assert central_character(PrincipalSeries(q3, q3)).unit.is_trivial()
    assert central_character(Special(q3)).is_trivial()
    chi, psi = padic(UnitCharacter(5, 1, 1)), padic(UnitCharacter(5, 2, 1))
    prod = central_character(PrincipalSeries(chi, psi))
    assert prod.conductor == 2
    assert conductor_by_search((chi.unit, psi.unit)) == 2


@pytest.mark.parametrize("args, expected", [((2, 1, 0), 2), ((0, 1, 0), 2), ((5, 0, 0), 5), ((1, 3, 2), 6)])
def test_atkin_li_bound(args, expected):
    assert atkin_li_bound(*args) == expected


def test_atkin_li_rejects_negative():
    with pytest.raises(DomainError):
        atkin_li_bound(-1, 0, 0)


def test_twist_quad_quad_drops_to_zero():
    q3 = quadratic_padic(3)
    res = twist(PrincipalSeries(q3, q3), q3)
    triv = trivial_padic(3)
    assert res.rep == PrincipalSeries(triv, triv)
    assert res.conductor == 0 and res.exactness == EXACT


def test_twist_steinberg_gains_one():
    res = twist(Special(trivial_padic(3)), quadratic_padic(3))
    assert res.rep == Special(quadratic_padic(3)) and res.conductor == 2


def test_twist_supercuspidal_quadratic_is_exact():
    sc = Supercuspidal(trivial_padic(3), 2)
    res = twist(sc, quadratic_padic(3))
    assert isinstance(res.rep, Supercuspidal)
    assert res.conductor == 2 and res.exactness == EXACT
    assert twist(sc, unramified_quadratic(3)).exactness == EXACT


def test_twist_supercuspidal_general_is_bound():
    sc = Supercuspidal(trivial_padic(3), 2, dim_rho=2)
    omega = padic(UnitCharacter(3, 2, 2))
    res = twist(sc, omega)
    assert res.exactness == BOUND
    assert res.conductor == atkin_li_bound(2, 2, 0) == 4
    assert res.rep.dim_rho == 2


def test_twist_order_three_mod_seven():
    beta = padic(UnitCharacter(7, 1, 2))
    assert beta.unit.order == 3
    res = twist(PrincipalSeries(beta, beta.inverse()), quadratic_padic(7))
    assert res.conductor == 2


def test_twist_mismatched_prime():
    with pytest.raises(DomainError):
        twist(Special(trivial_padic(3)), quadratic_padic(5))


def test_classify_conductor_one():
    for p in (3, 5, 11):
        reps = classify_conductor_one(p)
        assert len(reps) == 2
        assert {r.omega.phase for r in reps} == {Fraction(0), Fraction(1, 2)}
        assert all(conductor_exponent(r) == 1 and central_character(r).is_trivial() for r in reps)


def test_level_invariance_examples():
    q3 = quadratic_padic(3)
    for p in (3, 5, 7):
        assert not is_level_invariant(Special(trivial_padic(p)))
    assert is_level_invariant(Supercuspidal(trivial_padic(3), 2))
    assert not is_level_invariant(PrincipalSeries(q3, q3))
    assert is_level_invariant(Supercuspidal(trivial_padic(3), 3))


def test_level_invariance_needs_trivial_central():
    with pytest.raises(DomainError):
        is_level_invariant(Special(padic(UnitCharacter(5, 1, 1))))


def test_supercuspidal_validation():
    with pytest.raises(DomainError):
        Supercuspidal(trivial_padic(3), 1)
    with pytest.raises(DomainError):
        Supercuspidal(trivial_padic(3), 2, sc_type="III")


def test_principal_series_is_unordered():
    a, b = padic(UnitCharacter(5, 1, 1)), padic(UnitCharacter(5, 1, 3))
    assert PrincipalSeries(a, b) == PrincipalSeries(b, a)


def test_rep_roundtrip():
    reps = [
        PrincipalSeries(PadicCharacter(UnitCharacter(5, 2, 3), spectral=1),
                        PadicCharacter(UnitCharacter(5, 2, 17), spectral=-1)),
        Special(unramified_quadratic(7)),
        Supercuspidal(trivial_padic(3), 3, sc_type="II", dim_rho=2, tag="x"),
    ]
    for rep in reps:
        assert rep_from_dict(rep_to_dict(rep)) == rep
    with pytest.raises(DomainError):
        rep_from_dict({"kind": "nope"})


chars = st.builds(
    lambda p, m, k, ph: PadicCharacter(UnitCharacter(p, m, k % ((p - 1) * p ** (m - 1))), Fraction(ph, 4)),
    st.just(5), st.integers(1, 2), st.integers(0, 100), st.integers(0, 3),
)


@settings(max_examples=150, deadline=None)
@given(chars, chars, chars)
def test_twist_central_character_law(a, b, omega):
    rep = PrincipalSeries(a, b)
    res = twist(rep, omega)
    assert central_character(res.rep) == omega ** 2 * central_character(rep)
    assert res.conductor == conductor_exponent(res.rep)
    assert res.conductor <= atkin_li_bound(conductor_exponent(rep), omega.conductor,
                                           central_character(rep).conductor)
