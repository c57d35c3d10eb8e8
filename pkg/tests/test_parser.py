from fractions import Fraction

import pytest

from aode.errors import AutonomyError, OrderLimit, ParseError
from aode.kernel.poly import Poly
from aode.parser import parse_series, parse_system, parse_upoly, serialize

from conftest import TWO_CHAIN_SYSTEM, DIM_TWO_EQUATION, corpus_systems


@pytest.mark.parametrize("text", corpus_systems() + [DIM_TWO_EQUATION])
def test_round_trip(text):
    first = parse_system(text)
    again = parse_system(serialize(first.parsed))
    assert again.parsed == first.parsed
    assert serialize(again.parsed) == serialize(first.parsed)


def test_worked_example_shape():
    s = parse_system(TWO_CHAIN_SYSTEM)
    assert s.max_order == 2 and s.equation_count == 2 and s.variable == "y"
    u = [Poly.var(i, 3) for i in range(3)]
    assert s.parsed.equations[1] == u[0] * u[1] - 1 - u[1] ** 2 - u[0] * u[2]


def test_derivative_notations():
    a = parse_system("y'''' + y^(4) - 2*y^4 = 0").parsed
    u = [Poly.var(i, 5) for i in range(5)]
    assert a.equations[0] == 2 * u[4] - 2 * u[0] ** 4


def test_rational_literals_and_implicit_products():
    a = parse_system("1/2 y y' = 3/4").parsed
    assert a.equations[0] == Poly.var(0, 2) * Poly.var(1, 2) * Fraction(1, 2) - Fraction(3, 4)


def test_newlines_and_comments():
    s = parse_system("# header\ny' = 1\n\ny'' = 0  # trailing\n")
    assert s.equation_count == 2


def test_autonomy_error():
    with pytest.raises(AutonomyError):
        parse_system("x^2*y' - y + x = 0")


@pytest.mark.parametrize("text, line, col", [
    ("y' = = 1", 1, 6),
    ("y' = 1;\ny'' + z = 0", 2, 7),
    ("y' + (y", 1, 8),
    ("y'/y = 1", 1, 3),
])
def test_parse_error_positions(text, line, col):
    with pytest.raises(ParseError) as exc:
        parse_system(text)
    assert (exc.value.line, exc.value.column) == (line, col)


def test_order_limit(monkeypatch):
    monkeypatch.setenv("AODE_MAX_ORDER", "3")
    parse_system("y^(3) = y")
    with pytest.raises(OrderLimit):
        parse_system("y^(4) = y")


def test_not_differential():
    with pytest.raises(ParseError):
        parse_system("y^2 = 1")


def test_series_and_upoly():
    t = parse_series("1 + x - 1/2*x^2 + 3*x^(5/2)", 3)
    assert t.terms == [(0, 1), (1, 1), (2, Fraction(-1, 2)), (Fraction(5, 2), 3)]
    t = parse_series("2*x + 1/x", 2, at_infinity=True)
    assert t.terms == [(-1, 2), (1, 1)]
    assert parse_upoly("t^2 - 2") == [-2, 0, 1]
