"""Regular-chain membership, regularity and coverage on random small systems."""
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from aode.chains import (RegularChain, chain_dimension, characteristic_set, is_regular_chain,
                         reduce_by_chain, res_against_chain, triangularize)
from aode.kernel.poly import Poly

from conftest import random_poly

CASES = settings(max_examples=200, deadline=None,
                 suppress_health_check=[HealthCheck.too_slow])


def _vanishing_at(rng, nvars, degree, point, nterms=3):
    p = random_poly(rng, nvars, degree, nterms)
    return p - p.evaluate(point)


@st.composite
def systems(draw):
    rng = random.Random(draw(st.integers(0, 2 ** 32 - 1)))
    nvars = draw(st.integers(2, 3))
    degree = draw(st.integers(1, 6 if nvars == 2 else 3))
    point = [Fraction(rng.randint(-3, 3)) for _ in range(nvars)]
    eqs = [_vanishing_at(rng, nvars, degree, point) for _ in range(draw(st.integers(1, 2)))]
    eqs = [p for p in eqs if not p.is_zero()]
    if not eqs:
        eqs = [Poly.var(0, nvars) - point[0]]
    return eqs, point


def _in_quasi_component(point, chain):
    return (all(t.evaluate(point) == 0 for t in chain)
            and all(i.evaluate(point) != 0 for i in chain.initials))


@CASES
@given(systems())
def test_triangularize_sound_and_covering(case):
    eqs, point = case
    n = len(point)
    chains = triangularize(eqs, n)
    for c in chains:
        assert is_regular_chain(c)
        # membership: every input equation vanishes on the quasi-component
        for f in eqs:
            assert reduce_by_chain(f, c).is_zero()
    # the known zero lies in some quasi-component (possibly a redundant one)
    chains_all = triangularize(eqs, n, keep_redundant=True)
    assert any(_in_quasi_component(point, c) for c in chains_all)


@CASES
@given(systems())
def test_characteristic_set_reduces_input(case):
    eqs, point = case
    cs = characteristic_set(eqs)
    assert cs is not None  # the system has a zero
    for f in eqs:
        assert reduce_by_chain(f, cs).is_zero()


def test_inconsistent_system_has_no_chains():
    x = Poly.var(0, 2)
    assert triangularize([x, x - 1], 2) == []


def test_example_chains():
    u0, u1, u2 = (Poly.var(i, 3) for i in range(3))
    f1 = u0 * u1 * u2 + u1 ** 3 - u0 * u2 - u1 ** 2
    f2 = u0 * u1 - 1 - u1 ** 2 - u0 * u2
    chains = triangularize([f1, f2], 3)
    assert all(chain_dimension(c, 3) == 1 for c in chains)
    assert {c[0] for c in chains} == {u1 - 1, u0 * u1 - 1}


def test_iterated_resultant():
    u0, u1 = Poly.var(0, 2), Poly.var(1, 2)
    t = RegularChain((u0 * u1 - 1,), 2)
    assert res_against_chain(u0 * u1 - 1, t).is_zero()
    assert not res_against_chain(u1, t).is_zero()


def test_dimension_of_single_equation():
    u = [Poly.var(i, 3) for i in range(3)]
    c = triangularize([u[2] * u[0] + u[1] ** 2 - 1], 3)
    # u0 = 0 splits off the lower-dimensional components u0 = 0, u1 = +-1
    assert sorted(chain_dimension(x, 3) for x in c) == [1, 1, 2]
