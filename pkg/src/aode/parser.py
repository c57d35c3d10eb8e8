"""Text input: differential systems and Puiseux truncations.

Grammar (whitespace-insensitive)::

    system := eq ((";" | newline) eq)*
    eq     := expr ["=" expr]
    expr   := ["+" | "-"] term (("+" | "-") term)*
    term   := unary (["*" | "/"] unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ["^" exponent]
    atom   := number | name | "(" expr ")"

In a system, y, y', y'', ... and y^(k) denote derivatives while y^k is a
power.  A bare expression means expr = 0.  '#' starts a comment.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import AutonomyError, OrderLimit, ParseError
from .kernel.numberfield import AlgebraicNumber
from .kernel.poly import Poly
from .series import INFINITY, ZERO, PuiseuxPoly, PuiseuxTruncation
from .system import DiffSystem

DEFAULT_MAX_ORDER = 16

_TOKEN = re.compile(r"(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)(?P<primes>'*)"
                    r"|(?P<op>[-+*/^()=;,])|(?P<nl>\n)|(?P<ws>[ \t\r]+)|(?P<comment>#[^\n]*)")


def max_order():
    raw = os.environ.get("AODE_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_ORDER


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int
    primes: int = 0


def tokenize(text):
    out = []
    pos, line, start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = next(k for k in ("num", "name", "op", "nl", "ws", "comment") if m.group(k) is not None)
        if kind == "num":
            out.append(Token("num", m.group("num"), line, col))
        elif kind == "name":
            out.append(Token("name", m.group("name"), line, col, len(m.group("primes"))))
        elif kind == "op":
            out.append(Token("sep" if m.group() == ";" else "op", m.group(), line, col))
        elif kind == "nl":
            out.append(Token("sep", "\n", line, col))
            line += 1
            start = m.end()
        pos = m.end()
    out.append(Token("end", "", line, pos - start + 1))
    return out


class _Parser:
    """Recursive descent over a token list; subclasses supply the value domain."""

    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            got = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {got!r}")

    def expr(self):
        if self.accept("-"):
            val = -self.term()
        else:
            self.accept("+")
            val = self.term()
        while True:
            if self.accept("+"):
                val = val + self.term()
            elif self.accept("-"):
                val = val - self.term()
            else:
                return val

    def _starts_atom(self):
        t = self.tok
        return t.kind in ("num", "name") or (t.kind == "op" and t.text == "(")

    def term(self):
        val = self.unary()
        while True:
            if self.accept("*"):
                val = val * self.unary()
            elif self.tok.kind == "op" and self.tok.text == "/":
                tok = self.tok
                self.i += 1
                val = self.divide(val, self.unary(), tok)
            elif self._starts_atom():
                val = val * self.unary()
            else:
                return val

    def unary(self):
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            tok = self.tok
            self.i += 1
            return self.raise_to(base, self.exponent(), tok)
        return base

    def exponent(self):
        if self.accept("("):
            e = self.signed_rational()
            self.expect(")")
            return e
        return self.signed_rational()

    def signed_rational(self):
        sign = -1 if self.accept("-") else 1
        if self.tok.kind != "num":
            raise self.error("expected a number in the exponent")
        num = int(self.tok.text)
        self.i += 1
        den = 1
        if self.accept("/"):
            if self.tok.kind != "num":
                raise self.error("expected a denominator")
            den = int(self.tok.text)
            self.i += 1
            if den == 0:
                raise self.error("zero denominator")
        return sign * Fraction(num, den)

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return self.number(int(t.text))
        if t.kind == "name":
            self.i += 1
            return self.name(t)
        if self.accept("("):
            val = self.expr()
            self.expect(")")
            return val
        raise self.error(f"unexpected {t.text or 'end of input'!r}")


class _SystemParser(_Parser):
    def __init__(self, text, var="y", cap=None):
        super().__init__(text)
        self.var = var
        self.cap = max_order() if cap is None else cap
        self.n = self.cap + 1

    def number(self, k):
        return Poly.const(k, self.n)

    def name(self, t):
        if t.text == "x":
            raise AutonomyError("the independent variable x must not occur "
                                "(only autonomous equations are supported)", t.line, t.col)
        if t.text != self.var:
            raise ParseError(f"unknown symbol {t.text!r}", t.line, t.col)
        order = t.primes
        if (not order and self.tok.kind == "op" and self.tok.text == "^"
                and self.peek().text == "(" and self.peek(2).kind == "num"
                and self.peek(3).text == ")"):
            order = int(self.peek(2).text)
            self.i += 4
        if order > self.cap:
            raise OrderLimit(f"derivative order {order} exceeds the limit {self.cap} "
                             f"(line {t.line}, column {t.col})")
        return Poly.var(order, self.n)

    def raise_to(self, base, e, tok):
        if e.denominator != 1 or e < 0:
            raise ParseError("exponents must be non-negative integers", tok.line, tok.col)
        return base ** int(e)

    def divide(self, a, b, tok):
        if not b.is_constant() or b.is_zero():
            raise ParseError("division only by non-zero numbers", tok.line, tok.col)
        return a / b.constant_value()

    def system(self):
        eqs = []
        while True:
            while self.tok.kind == "sep":
                self.i += 1
            if self.tok.kind == "end":
                break
            start = self.tok
            lhs = self.expr()
            rhs = self.expr() if self.accept("=") else Poly.const(0, self.n)
            if self.tok.kind not in ("sep", "end"):
                raise self.error(f"unexpected {self.tok.text!r}")
            p = lhs - rhs
            if p.is_zero():
                raise ParseError("equation is identically zero", start.line, start.col)
            eqs.append(p)
        if not eqs:
            raise self.error("no equations")
        return eqs


@dataclass
class SourceSystem:
    raw_text: str
    parsed: DiffSystem
    variable: str
    max_order: int
    equation_count: int


def _shrink(p, n):
    return Poly({e[:n]: c for e, c in p.terms.items()}, n)


def parse_system(text, var="y"):
    """SourceSystem for the input text."""
    eqs = _SystemParser(text, var).system()
    order = max(max(p.lv(), 0) for p in eqs)
    if order == 0:
        raise ParseError("no derivative occurs: the input is not a differential equation")
    n = order + 1
    system = DiffSystem(tuple(_shrink(p, n) for p in eqs), order, var)
    return SourceSystem(text, system, var, order, len(eqs))


def serialize(system):
    return system.format()


# -- truncations ----------------------------------------------------------------

class _SeriesParser(_Parser):
    def __init__(self, text, point, generator=None, gen_name="a"):
        super().__init__(text)
        self.point = point
        self.gen = generator
        self.gen_name = gen_name

    def number(self, k):
        return PuiseuxPoly.const(Fraction(k), self.point)

    def name(self, t):
        if t.text == "x":
            e = Fraction(-1) if self.point == INFINITY else Fraction(1)
            return PuiseuxPoly({e: Fraction(1)}, self.point)
        if self.gen is not None and t.text == self.gen_name:
            return PuiseuxPoly.const(self.gen, self.point)
        raise ParseError(f"unknown symbol {t.text!r}", t.line, t.col)

    def raise_to(self, base, e, tok):
        if e.denominator == 1 and e >= 0:
            return base ** int(e)
        if len(base.terms) == 1:
            (ex, c), = base.terms.items()
            if c == 1:
                return PuiseuxPoly({ex * e: Fraction(1)}, self.point)
        raise ParseError("fractional powers apply to x only", tok.line, tok.col)

    def divide(self, a, b, tok):
        if len(b.terms) != 1:
            raise ParseError("division only by a single term", tok.line, tok.col)
        (e, c), = b.terms.items()
        inv = 1 / c if isinstance(c, AlgebraicNumber) else Fraction(1) / c
        return a * PuiseuxPoly({-e: inv}, self.point)

    def series(self):
        while self.tok.kind == "sep":
            self.i += 1
        val = self.expr()
        if self.tok.kind not in ("sep", "end"):
            raise self.error(f"unexpected {self.tok.text!r}")
        return val


def parse_series(text, order, at_infinity=False, generator=None, gen_name="a", exact=False):
    """PuiseuxTruncation from a finite sum such as '1 + x - 1/2*x^2' or 'a*x^(1/2)'."""
    point = INFINITY if at_infinity else ZERO
    poly = _SeriesParser(text, point, generator, gen_name).series()
    terms = sorted(poly.terms.items())
    return PuiseuxTruncation(point, terms, Fraction(order), False, {}, exact,
                             field=generator.field if generator is not None else None,
                             kind="input")


class _UPolyParser(_SeriesParser):
    def __init__(self, text, var):
        super().__init__(text, ZERO)
        self.var = var

    def name(self, t):
        if t.text == self.var:
            return PuiseuxPoly({1: Fraction(1)})
        raise ParseError(f"unknown symbol {t.text!r}", t.line, t.col)


def parse_upoly(text, var="t"):
    """Dense coefficient list (constant first) of a univariate polynomial."""
    p = _UPolyParser(text, var).series()
    if any(e.denominator != 1 or e < 0 for e in p.terms):
        raise ParseError("polynomial exponents must be non-negative integers")
    if not p.terms:
        raise ParseError("zero polynomial")
    deg = int(max(p.terms))
    return [p.terms.get(Fraction(k), Fraction(0)) for k in range(deg + 1)]
