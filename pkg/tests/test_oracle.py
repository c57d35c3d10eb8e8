from fractions import Fraction

from aode.kernel.numberfield import NumberField
from aode.oracle import verify_truncation
from aode.parser import parse_series, parse_system

from conftest import TWO_CHAIN_SYSTEM

SQRT2 = NumberField([-2, 0, 1], ("real", Fraction(1), Fraction(2))).gen


def _sys(text):
    return parse_system(text).parsed


def test_true_truncation_accepted():
    res = verify_truncation(_sys(TWO_CHAIN_SYSTEM), parse_series("1 + x - 1/2*x^2 + 1/2*x^3", 3))
    assert res.ok
    assert res.residual_valuations == [3, 2]
    assert res.bounds == [2, 1]


def test_wrong_coefficient_rejected():
    res = verify_truncation(_sys(TWO_CHAIN_SYSTEM), parse_series("1 + x - 1/2*x^2 + x^3", 3))
    assert not res.ok


def test_exact_solution_residual_vanishes():
    t = parse_series("a*x^(1/2)", 10, generator=SQRT2, exact=True)
    res = verify_truncation(_sys(TWO_CHAIN_SYSTEM), t)
    assert res.ok and res.residual_valuations == [None, None]


def test_wrong_slope_rejected():
    res = verify_truncation(_sys("y' = 1"), parse_series("1 + 2*x", 1))
    assert not res.ok and res.residual_valuations == [0]


def test_truncating_a_longer_series():
    system = _sys("y*y' = 1")
    t = parse_series("1 + x - 1/2*x^2 + 1/2*x^3 - 5/8*x^4", 4)
    assert verify_truncation(system, t, 2).ok
    assert verify_truncation(system, t, 4).ok


def test_series_at_infinity():
    # y = sqrt(2x) at infinity: t = 1/x, y = sqrt2 * t^(-1/2)
    t = parse_series("a*x^(1/2)", 3, at_infinity=True, generator=SQRT2, exact=True)
    assert verify_truncation(_sys("y*y' = 1"), t).ok
    t = parse_series("x^(1/2)", 3, at_infinity=True, exact=True)
    assert not verify_truncation(_sys("y*y' = 1"), t).ok
