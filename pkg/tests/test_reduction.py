import random

import pytest

from aode.errors import DimensionError, TrivialSystem
from aode.kernel.factor import factor_poly
from aode.kernel.gcd import normalize, squarefree_part, strip_univariate_factors
from aode.kernel.poly import Poly
from aode.parser import parse_system
from aode.reduction import compute_B, invert_poly, reduce_system, ritt_split, total_derivative
from aode.system import DiffSystem

from conftest import TWO_CHAIN_SYSTEM, DIM_TWO_EQUATION, random_poly


def _sys(text):
    return parse_system(text).parsed


def test_worked_example_reduces_to_yy_minus_one():
    red = reduce_system(_sys(TWO_CHAIN_SYSTEM))
    u0, u1 = Poly.var(0, 3), Poly.var(1, 3)
    assert red.H == u0 * u1 - 1
    gcds = sorted(str(cr.H_chain) for cr in red.per_chain)
    assert gcds == ["1", "u0*u1 - 1"]


def test_chain_with_y_minus_two_contributes_one():
    red = reduce_system(_sys(TWO_CHAIN_SYSTEM))
    cr = next(c for c in red.per_chain if c.H_chain.is_constant())
    assert str(cr.chain[0]) == "u1 - 1"
    assert [str(h) for h in cr.H_list] == ["u1 - 1", "u0 - 2"]


def test_dimension_two_rejected():
    with pytest.raises(DimensionError) as exc:
        reduce_system(_sys(DIM_TWO_EQUATION))
    assert exc.value.exit_code == 2


def test_only_constants():
    red = reduce_system(_sys("y' = 0"))
    assert red.H.is_constant() and red.constant_solutions == "all"
    with pytest.raises(TrivialSystem):
        reduce_system(_sys("y^2 - 4 = 0; y' = y"))


def test_total_derivative_and_ritt_split():
    u = [Poly.var(i, 4) for i in range(4)]
    g = u[0] * u[1] - 1
    assert total_derivative(g, 4) == u[1] ** 2 + u[0] * u[2]
    sep, r = ritt_split(g.extend(2), 3)
    assert sep == Poly.var(0, 4)
    # d^2/dx^2 (y y' - 1) = 3 y' y'' + y y'''
    assert r == 3 * u[1] * u[2]


def test_b_coefficients_solve_the_derivatives():
    u0, u1 = Poly.var(0, 2), Poly.var(1, 2)
    bs = compute_B(u0 * u1 - 1, 3)
    # y y' = 1 gives y'' = -y'^2 / y
    b2 = bs[0]
    assert b2.exp >= 1
    num = b2.num.extend(3)
    sep = Poly.var(0, 3)
    lhs = num
    rhs = -(Poly.var(1, 3) ** 2) * sep ** (b2.exp - 1)
    assert lhs == rhs


def test_invert_poly():
    u0, u1 = Poly.var(0, 2), Poly.var(1, 2)
    # y = 1/z turns y' + y^2 into (1 - z')/z^2 and y y' - 1 into -(z' + z^3)/z^3
    assert invert_poly(u1 + u0 ** 2, 2).extend(3) == normalize(u1 - 1).extend(3)
    assert invert_poly(u0 * u1 - 1, 2).extend(3) == (u1 + u0 ** 3).extend(3)


def _random_g1(rng):
    while True:
        g = random_poly(rng, 2, rng.randint(2, 4), rng.randint(2, 5))
        if g.degree(0) < 1 or g.degree(1) < 1:
            continue
        g = normalize(squarefree_part(g))
        stripped, yf, ypf = strip_univariate_factors(g)
        if yf.is_constant() and ypf.is_constant():
            return g


@pytest.mark.parametrize("seed", range(10))
def test_single_equation_identity(seed):
    g = _random_g1(random.Random(seed))
    red = reduce_system(DiffSystem((g,), 1))
    assert red.H == g
