#!/usr/bin/env python3
"""Writes tests/fixtures/*.json.

Expectations are computed here from closed forms (torus knot Alexander
polynomials, the twisted double formula, Litherland's lattice count for torus
signatures) and from resultants, never from the C++ library.
"""
import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

t = sp.symbols("t")
OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
SAMPLES = [Fraction(k, 20) for k in range(1, 20)]


def normalize(f):
    f = sp.Poly(sp.expand(f), t)
    coeffs = f.all_coeffs()[::-1]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    g = sp.Poly(list(reversed(coeffs)), t)
    if g.LC() < 0:
        g = -g
    return g


def render(g):
    """Same printing convention as the library: descending, 't' variable."""
    terms = []
    deg = g.degree()
    for i, c in enumerate(g.all_coeffs()):
        e = deg - i
        c = sp.Rational(c)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        coef = str(a) if (a != 1 or e == 0) else ""
        terms.append((sign, coef + mono))
    s = ""
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            s += ("-" if sign == "-" else "") + body
        else:
            s += sign + body
    return s or "0"


def cover_order(g, d):
    """|prod_{zeta^d = 1, zeta != 1} Delta(zeta)| via a resultant."""
    phi = sp.Poly(sum(t**i for i in range(d)), t)
    r = sp.resultant(phi.as_expr(), g.as_expr(), t)
    return int(abs(r))


def torus_alexander(p, q):
    p, q = abs(p), abs(q)
    return sp.cancel((t**(p * q) - 1) * (t - 1) / ((t**p - 1) * (t**q - 1)))


def torus_signature(p, q, x):
    """Litherland count; 0 marks a jump point. Positive torus knots have
    nonpositive signature."""
    sgn = 1 if p * q > 0 else -1
    p, q = abs(p), abs(q)
    inside = outside = 0
    for i in range(1, p):
        for j in range(1, q):
            s = Fraction(i, p) + Fraction(j, q)
            if s == x or s == x + 1:
                return None
            if x < s < x + 1:
                inside += 1
            else:
                outside += 1
    return -sgn * (inside - outside)


def sig_samples(fn):
    out = []
    for x in SAMPLES:
        v = fn(x)
        if v is not None:
            out.append({"t": f"{x.numerator}/{x.denominator}", "value": v})
    return out


def torus(p, q):
    return {"kind": "torus", "p": p, "q": q}


def td(a):
    return {"kind": "twisted_double", "a": a}


def order_two(i):
    comps = [{"kind": "sum", "summands": [{"knot": torus(2, 7), "sign": 1}] * i}] if i else []
    return {"kind": "order_two", "companions": comps}


def ssum(*parts):
    return {"kind": "sum", "summands": [{"knot": k, "sign": s} for k, s in parts]}


def fixture(name, knot, alex, sig_fn, source, extra=None):
    g = normalize(alex)
    exp = {
        "alexander": render(g),
        "cover_order": {str(d): cover_order(g, d) for d in (2, 3, 4)},
        "signature": sig_samples(sig_fn),
    }
    if extra:
        exp.update(extra)
    return {"name": name, "knot": knot, "source": source, "expect": exp}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    fx = []
    for a in range(1, 7):
        m = a * (a + 1)
        alex = m * t**2 - (2 * m + 1) * t + m
        extra = {"cover_order_literature": {"2": (2 * a + 1) ** 2}}
        p = 2 * a + 1
        if a >= 2 and sp.isprime(p):
            extra["twisted_double_coefficients"] = [
                {"j": j, "value": torus_signature(-a, a + 1, Fraction(j, p))} for j in range(1, p)]
        fx.append(fixture(f"twisted_double_a{a}", td(a), alex, lambda x: 0, "literature", extra))
    for i in range(0, 5):
        fx.append(fixture(f"order_two_T{i}", order_two(i), t**2 - 3 * t + 1, lambda x: 0, "literature"))
    for q in (3, 5, 7, 9, 11):
        fx.append(fixture(f"torus_2_{q}", torus(2, q), torus_alexander(2, q),
                          lambda x, q=q: torus_signature(2, q, x), "derived"))
    for a in range(2, 7):
        fx.append(fixture(f"torus_m{a}_{a + 1}", torus(-a, a + 1), torus_alexander(a, a + 1),
                          lambda x, a=a: torus_signature(-a, a + 1, x), "derived"))

    def add_sigs(*fns):
        def f(x):
            vals = [fn(x) for fn in fns]
            return None if any(v is None for v in vals) else sum(vals)
        return f

    fx.append(fixture("sum_2_twisted_double_a1", ssum((td(1), 1), (td(1), 1)),
                      (2 * t**2 - 5 * t + 2) ** 2, lambda x: 0, "derived"))
    fx.append(fixture("sum_3_twisted_double_a2", ssum((td(2), 1), (td(2), 1), (td(2), 1)),
                      (6 * t**2 - 13 * t + 6) ** 3, lambda x: 0, "derived"))
    fx.append(fixture("sum_T23_T25", ssum((torus(2, 3), 1), (torus(2, 5), 1)),
                      torus_alexander(2, 3) * torus_alexander(2, 5),
                      add_sigs(lambda x: torus_signature(2, 3, x), lambda x: torus_signature(2, 5, x)), "derived"))
    fx.append(fixture("sum_3_T23", ssum((torus(2, 3), 1), (torus(2, 3), 1), (torus(2, 3), 1)),
                      torus_alexander(2, 3) ** 3, lambda x: (None if torus_signature(2, 3, x) is None
                                                             else 3 * torus_signature(2, 3, x)), "derived"))
    fx.append(fixture("sum_T23_minus_T23", ssum((torus(2, 3), 1), (torus(2, 3), -1)),
                      torus_alexander(2, 3) ** 2, lambda x: (None if torus_signature(2, 3, x) is None else 0),
                      "trivial"))
    for i, j in [(1, 0), (2, 1), (1, 1), (4, 1)]:
        fx.append(fixture(f"sum_order_two_T{i}_T{j}", ssum((order_two(i), 1), (order_two(j), 1)),
                          (t**2 - 3 * t + 1) ** 2, lambda x: 0, "literature",
                          {"order_two_coefficient": 4 * (i - j)}))

    for f in fx:
        (OUT / f"{f['name']}.json").write_text(json.dumps(f, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(fx)} fixtures to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
