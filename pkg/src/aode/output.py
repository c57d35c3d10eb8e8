"""Rendering of results as line-oriented text or JSON-ready dictionaries."""
from __future__ import annotations

from fractions import Fraction

from .kernel.algfunc import AlgFunction
from .kernel.numberfield import AlgebraicNumber
from .kernel.ratfunc import ParamRational
from .series import INFINITY
from .system import var_names


# -- scalars ------------------------------------------------------------------------

def fmt_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_value(v):
    if isinstance(v, (int, Fraction)):
        return fmt_rational(v)
    if isinstance(v, AlgebraicNumber) and v.is_rational():
        return fmt_rational(v.to_rational())
    return str(v)


def field_json(fld):
    if fld is None:
        return None
    out = {"generator": fld.name, "minpoly": fld.minpoly_str()}
    if fld.selector and fld.selector[0] == "real":
        out["interval"] = [fmt_rational(fld.selector[1]), fmt_rational(fld.selector[2])]
    elif fld.selector:
        out["complex_root_index"] = fld.selector[1]
        out["approx"] = str(complex(fld.approx(15)))
    return out


def field_text(fld):
    if fld is None:
        return None
    return f"{fld.name} = root of {fld.minpoly_str()} {_selector(fld)}"


def _selector(fld):
    if fld.selector and fld.selector[0] == "real":
        return f"in [{fmt_rational(fld.selector[1])}, {fmt_rational(fld.selector[2])}]"
    approx = complex(fld.approx(15))
    return f"(complex root #{fld.selector[1]}, ~ {approx.real:.6g}{approx.imag:+.6g}i)"


def value_json(v):
    if isinstance(v, AlgebraicNumber) and not v.is_rational():
        out = {"value": str(v)}
        out.update(field_json(v.field))
        return out
    return fmt_value(v)


# -- series -------------------------------------------------------------------------

def _wrap(s):
    return f"({s})" if any(ch in s[1:] for ch in "+-/ ") else s


def _power(var, e):
    if e == 0:
        return ""
    if e == 1:
        return var
    if Fraction(e).denominator == 1:
        return f"{var}^{e}" if e > 0 else f"{var}^({e})"
    return f"{var}^({fmt_rational(e)})"


def _base(var, center):
    if center == 0:
        return var
    if center > 0:
        return f"({var} - {fmt_rational(center)})"
    return f"({var} + {fmt_rational(-center)})"


def format_series(terms, point="zero", center=Fraction(0), var="x"):
    if not terms:
        return "0"
    if point == INFINITY:
        base = var
        pairs = [(-e, c) for e, c in terms]
    else:
        base = _base(var, center)
        pairs = list(terms)
    parts = []
    for e, c in pairs:
        cs = fmt_value(c)
        mono = _power(base, e)
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        else:
            neg = cs.startswith("-") and not any(ch in cs[1:] for ch in "+-")
            body = cs[1:] if neg else cs
            parts.append(("-" if neg else "") + f"{_wrap(body)}*{mono}")
    s = parts[0]
    for p in parts[1:]:
        s += " - " + p[1:] if p.startswith("-") else " + " + p
    return s


def _big_o(base, e):
    return f"O({base}^{fmt_rational(e)})" if e.denominator == 1 and e > 0 \
        else f"O({base}^({fmt_rational(e)}))"


def _order_term(t):
    nxt = Fraction(t.truncation_order) + Fraction(1, t.ramification)
    if t.point == INFINITY:
        return _big_o("x", -nxt)
    return _big_o(_base("x", t.center), nxt)


def truncation_json(t, check=None):
    out = {
        "kind": t.kind,
        "expansion_point": t.point,
        "center": fmt_rational(t.center),
        "initial_value": value_json(t.initial_value) if t.initial_value is not None else None,
        "ramification": t.ramification,
        "terms": [[fmt_rational(e if t.point != INFINITY else -e), value_json(c)]
                  for e, c in t.terms],
        "truncation_order": fmt_rational(t.truncation_order),
        "unique_extension": t.unique_extension,
        "exact": t.exact,
        "coefficient_field": field_json(t.field),
        "parameters": list(t.parameters),
        "series": format_series(t.terms, t.point, t.center),
    }
    if t.point == INFINITY:
        out["exponent_variable"] = "x (descending)"
    if check is not None:
        out["verified"] = check.ok
        out["residual_valuations"] = [None if v is None else fmt_rational(v)
                                      for v in check.residual_valuations]
    return out


def truncation_text(t, check=None, indent="  "):
    lines = []
    series = format_series(t.terms, t.point, t.center)
    tail = "  (exact)" if t.exact else f" + {_order_term(t)}"
    lines.append(f"{indent}y = {series}{tail}")
    if t.field is not None:
        lines.append(f"{indent}  where {field_text(t.field)}")
    if t.parameters:
        lines.append(f"{indent}  free constants: {', '.join(t.parameters)}")
    pairs = " ".join(f"({fmt_rational(e if t.point != INFINITY else -e)}, {fmt_value(c)})"
                     for e, c in t.terms)
    lines.append(f"{indent}  terms: {pairs}")
    lines.append(f"{indent}  truncation order {fmt_rational(t.truncation_order)}, "
                 f"ramification {t.ramification}, unique extension: "
                 f"{'yes' if t.unique_extension else 'no'}")
    if check is not None:
        lines.append(f"{indent}  verified: {'yes' if check.ok else 'NO'}")
    return lines


# -- reduction ------------------------------------------------------------------

def reduced_json(red):
    names = red.system.names() if red.system else None
    n2 = var_names(2, red.system.var if red.system else "y")
    return {
        "H": red.H.format(n2 if red.H.nvars <= 2 else names),
        "chains": [{
            "chain": [p.format(names) for p in cr.chain],
            "G1": cr.g1_normalized.format(names),
            "H_j": [h.format(names) for h in cr.H_list],
            "gcd": cr.H_chain.format(names),
        } for cr in red.per_chain],
        "discarded": [{"chain": [p.format(names) for p in c], "reason": why}
                      for c, why in red.discarded],
        "constant_solutions": ("all" if red.constant_solutions == "all" else
                               [value_json(v) for v in red.constant_solutions or []]),
    }


def reduced_text(red):
    d = reduced_json(red)
    lines = [f"reduced equation: H = {d['H']}"]
    for i, ch in enumerate(d["chains"], 1):
        lines.append(f"chain {i}: {{{', '.join(ch['chain'])}}}")
        lines.append(f"  G1* = {ch['G1']}")
        for j, h in enumerate(ch["H_j"], 1):
            lines.append(f"  H_{j} = {h}")
        lines.append(f"  gcd = {ch['gcd']}")
    for dc in d["discarded"]:
        lines.append(f"discarded: {{{', '.join(dc['chain'])}}} ({dc['reason']})")
    cs = d["constant_solutions"]
    if cs == "all":
        lines.append("constant solutions: every constant")
    elif cs:
        lines.append("constant solutions: " + ", ".join(
            c if isinstance(c, str) else c["value"] + " (" + c["minpoly"] + ")" for c in cs))
    return lines


# -- solve ----------------------------------------------------------------------

def _constraint(p):
    return p.format(["y0", "y0'"]) + " != 0"


def family_json(fam, check=None):
    names = ["y0", "c"]
    slope = None
    if fam.slope_rational:
        slope = fmt_value(fam.terms[1][1]) if len(fam.terms) > 1 else "0"
    out = {
        "factor": fam.factor.format(["y", "y'"]),
        "parameter": "y0",
        "constraints": [_constraint(p) for p in fam.constraints],
        "slope": slope if slope is not None else
        f"c with {fam.factor.format(names)} = 0",
        "terms": [[fmt_rational(e), fmt_value(c)] for e, c in fam.terms],
        "series": format_series(fam.terms),
        "truncation_order": fmt_rational(fam.truncation_order),
        "unique_extension": fam.unique_extension,
    }
    if check is not None:
        out["verified"] = check.ok
    return out


def family_text(fam, i, check=None):
    d = family_json(fam, check)
    lines = [f"family {i}: solutions of {d['factor']} = 0 through generic y(0) = y0",
             "  constraints: " + (", ".join(d["constraints"]) or "none"),
             f"  slope: y'(0) = {d['slope']}",
             f"  y = {d['series']} + {_big_o('x', fam.truncation_order + 1)}",
             "  terms: " + " ".join(f"({e}, {c})" for e, c in d["terms"])]
    if check is not None:
        lines.append(f"  verified: {'yes' if check.ok else 'NO'}")
    return lines


def linear_json(lin):
    return {"alpha": value_json(lin.alpha) if lin.alpha != "free" else "free",
            "beta": "free" if lin.beta == "free" else value_json(lin.beta),
            "series": format_series(lin.truncation().terms)}


def solutions_json(sols):
    ch = sols.checks
    return {
        "reduced": reduced_json(sols.reduced),
        "H_star": sols.H_star.format(["y", "y'"]),
        "order": fmt_rational(sols.order),
        "families": [family_json(f, ch.get(("family", i))) for i, f in enumerate(sols.families)],
        "critical": [truncation_json(t, ch.get(("critical", i)))
                     for i, t in enumerate(sols.critical)],
        "pole_branches": [truncation_json(t, ch.get(("poles", i)))
                          for i, t in enumerate(sols.poles)],
        "infinity": [truncation_json(t, ch.get(("infinity", i)))
                     for i, t in enumerate(sols.infinity)],
        "linear": [linear_json(lin) for lin in sols.linear],
        "unresolved": [{"initial_value": value_json(v) if v != "infinity" else v, "reason": r}
                       for v, r in sols.unresolved],
        "has_non_constant_solutions": not sols.is_empty(),
    }


def solutions_text(sols, at_infinity=False):
    ch = sols.checks
    lines = [f"reduced equation: H* = {sols.H_star.format(['y', 'y' + chr(39)])}",
             f"order: {fmt_rational(sols.order)}"]
    for i, f in enumerate(sols.families):
        lines += family_text(f, i + 1, ch.get(("family", i)))
    if sols.critical:
        lines.append("critical branches:")
        for i, t in enumerate(sols.critical):
            lines.append(f"  branch {i + 1}: y(0) = {fmt_value(t.initial_value)}")
            lines += truncation_text(t, ch.get(("critical", i)), "    ")
    else:
        lines.append("critical branches: none")
    if sols.poles:
        lines.append("branches with y(0) = infinity:")
        for i, t in enumerate(sols.poles):
            lines += truncation_text(t, ch.get(("poles", i)))
    else:
        lines.append("branches with y(0) = infinity: none")
    if at_infinity:
        if sols.infinity:
            lines.append("expansions at x = infinity:")
            for i, t in enumerate(sols.infinity):
                lines += truncation_text(t, ch.get(("infinity", i)))
        else:
            lines.append("expansions at x = infinity: none")
    if sols.linear:
        lines.append("linear solutions:")
        for lin in sols.linear:
            lines.append("  y = " + format_series(lin.truncation().terms))
    else:
        lines.append("linear solutions: none")
    for v, r in sols.unresolved:
        lines.append(f"unresolved at y(0) = {fmt_value(v)}: {r}")
    return lines


# -- algebraic ----------------------------------------------------------------------

def _xy(p):
    return p.format(["x", "Y"])


def algebraic_family_json(fam):
    out = {"G": _xy(fam.G), "degree_x": fam.degree_x, "degree_Y": fam.degree_Y,
           "bounds": list(fam.bounds), "family": f"G(x + c, Y) with G = {_xy(fam.G)}",
           "source_factor": fam.source_factor.format(["y", "y'"]) if fam.source_factor else None,
           "checks": {k: v for k, v in fam.checks.items()}}
    kf = fam.k_form()
    if kf is not None:
        out["family"] = f"{_xy(fam.G)} - k" if kf[0] < 0 else f"{_xy(fam.G)} + k"
        out["k"] = f"{fmt_rational(abs(kf[0]))}*c"
    return out


def rational_json(r):
    from .kernel import upoly
    num = upoly.format_upoly(r.numerator, "x")
    den = upoly.format_upoly(r.denominator, "x")
    return {"numerator": num, "denominator": den, "degree": r.degree,
            "solution": f"y = ({num})/({den}) with x -> x + c" if den != "1"
            else f"y = {num} with x -> x + c"}


def algebraic_json(res, rational_only=False):
    out = {"reduced": reduced_json(res.reduced),
           "rational": [rational_json(r) for r in res.rational]}
    if not rational_only:
        out["families"] = [algebraic_family_json(f) for f in res.families]
        out["no_algebraic_solution"] = [g.format(["y", "y'"]) for g in res.no_solution_factors]
    return out


def algebraic_text(res, rational_only=False):
    d = algebraic_json(res, rational_only)
    lines = [f"reduced equation: H = {d['reduced']['H']}"]
    if not rational_only:
        if not d["families"]:
            lines.append("algebraic solutions: none")
        for i, f in enumerate(d["families"], 1):
            lines.append(f"family {i}: {f['family']} = 0"
                         + (f"  (k = {f['k']})" if "k" in f else ""))
            lines.append(f"  G = {f['G']}, (deg_x, deg_Y) = ({f['degree_x']}, {f['degree_Y']}),"
                         f" bounds ({f['bounds'][0]}, {f['bounds'][1]})")
            if f["source_factor"]:
                lines.append(f"  solves {f['source_factor']} = 0")
        for g in d["no_algebraic_solution"]:
            lines.append(f"no algebraic solution: {g} = 0")
    if d["rational"]:
        lines.append("rational solutions:")
        for r in d["rational"]:
            lines.append(f"  {r['solution']}  (degree {r['degree']})")
    else:
        lines.append("rational solutions: none")
    return lines
