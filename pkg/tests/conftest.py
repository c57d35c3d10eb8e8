import os
import random
from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from hypothesis import settings
from hypothesis import strategies as st

from aode.kernel.poly import Poly

# reproducible by default; HYPOTHESIS_PROFILE=explore draws fresh examples
settings.register_profile("repro", derandomize=True, deadline=None)
settings.register_profile("explore", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repro"))

CORPUS = Path(__file__).parent / "corpus"

TWO_CHAIN_SYSTEM = "y*y'*y'' + y'^3 - y*y'' - y'^2 = 0; y*y' - 1 - y'^2 - y*y'' = 0"
DIM_TWO_EQUATION = ("y'' + y''^2*y^2 - y''*y' + 4*y''*y'*y - y'^2 - 2*y''*y'^2*y"
              " - 4*y'^3*y + y'^4 = 0")


def corpus_systems(name="systems.txt"):
    out = []
    for line in (CORPUS / name).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def gens(n):
    return sympy.symbols(f"u0:{n}")


def to_sympy(p, n=None):
    n = n or p.nvars
    g = gens(n)
    return sympy.Poly.from_dict({e: sympy.Rational(c.numerator, c.denominator)
                                 for e, c in p.terms.items()} or {(0,) * n: 0}, *g, domain="QQ")


def from_sympy(sp, n):
    return Poly({e: Fraction(int(c.p), int(c.q)) for e, c in sp.as_dict().items()}, n)


def same_up_to_unit(a, b):
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    (ea, ca), = [max(a.terms.items())]
    cb = b.terms.get(ea)
    return cb is not None and a * Fraction(cb) == b * Fraction(ca)


def random_poly(rng, nvars, degree, nterms=4, coeff=5):
    terms = {}
    for _ in range(nterms):
        e = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(nvars)] += 1
        terms[tuple(e)] = Fraction(rng.randint(-coeff, coeff))
    return Poly(terms, nvars)


@st.composite
def polys(draw, nvars=2, degree=6, max_terms=5, nonconstant=False):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    rng = random.Random(seed)
    nterms = draw(st.integers(1, max_terms))
    p = random_poly(rng, nvars, degree, nterms)
    if nonconstant and p.is_constant():
        p = p + Poly.var(rng.randrange(nvars), nvars)
    return p


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE = {}


def record(number, ok, detail):
    ACCEPTANCE[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
