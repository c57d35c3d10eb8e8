import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aode.kernel.numberfield import AlgebraicNumber
from aode.kernel.poly import Poly
from aode.kernel.ratfunc import ParamRational
from aode.newton import expand, local_equation
from aode.oracle import verify_truncation
from aode.parser import parse_system
from aode.puiseux import (branches_at, critical_values, family_truncation, linear_solutions,
                          pole_branches, puiseux_solve_system, solve_at_point,
                          specialize_family)
from aode.series import INFINITY, PuiseuxPoly

from conftest import TWO_CHAIN_SYSTEM, corpus_systems


def _sys(text):
    return parse_system(text).parsed


@pytest.fixture(scope="module")
def example():
    return puiseux_solve_system(_sys(TWO_CHAIN_SYSTEM), 3, at_infinity=True)


def test_family_coefficients(example):
    fam, = example.families
    y0 = ParamRational.param("y0")
    expected = [y0, 1 / y0, -1 / (2 * y0 ** 3), 1 / (2 * y0 ** 5)]
    assert [e for e, _ in fam.terms] == [0, 1, 2, 3]
    assert [c for _, c in fam.terms] == expected
    assert [str(p) for p in fam.constraints] == ["u0"]


def test_family_specializations_verify(example):
    fam, = example.families
    system = _sys(TWO_CHAIN_SYSTEM)
    for y0 in (Fraction(1), Fraction(-3, 2), Fraction(7)):
        t, = specialize_family(fam, y0)
        assert t.terms[0] == (0, y0)
        assert verify_truncation(system, t).ok
    with pytest.raises(ValueError):
        specialize_family(fam, 0)


def test_critical_branches(example):
    assert len(example.critical) == 2
    signs = set()
    for t in example.critical:
        (e, c), = t.terms
        assert e == Fraction(1, 2) and t.exact and t.unique_extension
        assert isinstance(c, AlgebraicNumber) and c * c == 2
        signs.add(float(c.approx(15)) > 0)
    assert signs == {True, False}


def test_no_pole_branches(example):
    assert example.poles == []


def test_no_linear_solutions(example):
    assert example.linear == []


def test_every_check_passes(example):
    assert example.checks and all(c.ok for c in example.checks.values())


def test_infinity_branches(example):
    assert example.infinity
    for t in example.infinity:
        assert t.point == INFINITY
        assert t.terms[0][0] == Fraction(-1, 2)


def test_pole_branch_of_riccati():
    h = Poly.var(1, 2) + Poly.var(0, 2) ** 2
    br, = pole_branches(h, 3)
    assert br.terms == [(-1, 1)] and br.exact


def test_linear_solutions():
    assert [lin.alpha for lin in linear_solutions(_sys("y'^2 = 4"))] == [-2, 2]
    assert linear_solutions(_sys("y' = y")) == []


def test_ramified_branch_through_zero():
    h = Poly.var(1, 2) ** 2 - 4 * Poly.var(0, 2)
    crit = critical_values(h)
    assert crit == [0]
    brs = branches_at(h, 0, 3)
    assert any(b.terms == [(2, 1)] and b.exact for b in brs)


@settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=7),
       st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_solve_at_point(x0, y0):
    system = _sys(TWO_CHAIN_SYSTEM)
    out = solve_at_point(system, x0, y0, 3)
    assert out
    for t in out:
        assert t.center == x0
        assert verify_truncation(system, t).ok
        if y0 != 0:
            assert t.terms[0] == (0, y0)
        else:
            assert t.ramification == 2


def _solved_indicial_root(cert):
    a_z, a_w = cert["a_z"], cert["a_w"]
    if a_w == 0:
        return None
    r = -a_z / a_w
    if isinstance(r, ParamRational):
        return r.constant_value() if r.is_constant() else None
    if isinstance(r, AlgebraicNumber):
        return r.to_rational() if r.is_rational() else None
    return Fraction(r)


@pytest.mark.parametrize("text", corpus_systems())
def test_uniqueness_certificates(text):
    sols = puiseux_solve_system(_sys(text), at_infinity=True)
    for t in sols.truncations():
        if not t.unique_extension:
            continue
        cert = t.certificate
        if "a_w" not in cert:
            assert t.exact
            continue
        root = _solved_indicial_root(cert)
        assert root == cert["root"]
        assert root is None or root <= cert["goal"]


def test_local_equation_shift():
    u0, u1 = Poly.var(0, 2), Poly.var(1, 2)
    F = local_equation(u0 * u1 - 1, 2)
    brs = expand(F, Fraction(3))
    assert len(brs) == 1 and brs[0].terms[0] == (1, Fraction(1, 2))


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.fractions(min_value=0, max_value=3, max_denominator=3),
                       st.integers(-4, 4), max_size=4),
       st.dictionaries(st.fractions(min_value=0, max_value=3, max_denominator=3),
                       st.integers(-4, 4), max_size=4))
def test_series_product_rule(a, b):
    p, q = PuiseuxPoly(a), PuiseuxPoly(b)
    lhs = (p * q).derivative()
    rhs = p.derivative() * q + p * q.derivative()
    assert (lhs - rhs).is_zero()
