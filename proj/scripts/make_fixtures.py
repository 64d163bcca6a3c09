#!/usr/bin/env python3
"""Regenerate fixtures/q_zeta3_T5.case and its zeroed negative control.

H = Q(w), w^2 + w + 1 = 0, G = Gal(H/Q) = {1, c}, T = {5}, P = (3 + w) above 7.
All arithmetic is exact and done with sympy; the numbers written to the case
file are the ones checked here.
"""

import json
import pathlib
import sys

import sympy
from sympy import Poly, QQ, symbols

W = symbols("w")
MIN_POLY = Poly(W**2 + W + 1, W, domain=QQ)
ROOT = pathlib.Path(__file__).resolve().parent.parent


def reduce(p):
    return Poly(p, W, domain=QQ).rem(MIN_POLY)


def conj(p):
    # c: w -> w^2 = -1 - w
    return reduce(Poly(p, W, domain=QQ).as_expr().subs(W, -1 - W))


def norm(p):
    value = reduce(p * conj(p))
    assert value.degree() <= 0
    return value.as_expr()


def divide(a, b):
    # a / b = a * conj(b) / N(b)
    return reduce(a * conj(b)) * (sympy.Rational(1) / norm(b))


def coeffs(p):
    c = Poly(p, W, domain=QQ).all_coeffs()[::-1]
    return (c + [0, 0])[:2]


def is_one_mod(p, q):
    """p = 1 mod q O for a rational prime q: both coordinates of p - 1 are q-adically divisible by q."""
    a, b = coeffs(p)
    return all(sympy.Rational(x).q % q != 0 and sympy.Rational(x).p % q == 0 for x in (a - 1, b))


def is_integral(p):
    return all(sympy.Rational(x).q == 1 for x in coeffs(p))


def valuation_at(x, prime_gen):
    """ord at the prime ideal (prime_gen) of Z[w], which has prime norm."""
    q = int(norm(prime_gen))
    den = sympy.ilcm(*[sympy.Rational(c).q for c in coeffs(x)])
    num = reduce(x * den)
    v = 0
    while is_integral(divide(num, prime_gen)):
        num, v = divide(num, prime_gen), v + 1
    return v - sympy.multiplicity(q, den)


def brumer_stark_unit():
    p_gen = reduce(3 + W)
    assert norm(p_gen) == 7
    ratio = divide(p_gen, conj(p_gen))
    roots = [reduce(W**k * (-1) ** s) for k in range(3) for s in range(2)]
    choices = [reduce(z * ratio) for z in roots if is_one_mod(reduce(z * ratio), 5)]
    assert len(choices) == 1, "exactly one root of unity twist is 1 mod 5"
    u = choices[0]
    assert norm(u) == 1  # |u| = 1 at the complex place
    vals = [valuation_at(u, p_gen), valuation_at(u, conj(p_gen))]
    return u, vals


def ray_class_group_mod5():
    """Cl^T(H) = (O/5)^* / mu_6 since h(H) = 1; returns (order, k) with c(g) = g^k in the quotient."""

    def mul(x, y):
        a, b = x
        c_, d = y
        # (a + b w)(c + d w) with w^2 = -1 - w
        return ((a * c_ - b * d) % 5, (a * d + b * c_ - b * d) % 5)

    def power(x, k):
        out = (1, 0)
        for _ in range(k):
            out = mul(out, x)
        return out

    def order(x):
        k, y = 1, x
        while y != (1, 0):
            y, k = mul(y, x), k + 1
        return k

    units = [(a, b) for a in range(5) for b in range(5) if (a, b) != (0, 0)]
    gen = next(x for x in units if order(x) == 24)
    mu6 = {power((1, 1), k) for k in range(6)}  # 1 + w = -w^2 has order 6
    assert len(mu6) == 6
    quotient_order = 24 // len(mu6)
    conj_gen = ((gen[0] - gen[1]) % 5, (-gen[1]) % 5)  # a + b w^2 = (a - b) - b w
    for k in range(quotient_order):
        if mul(conj_gen, power(gen, (24 - k) % 24)) in mu6:
            return quotient_order, k
    raise AssertionError("conjugation does not preserve the cyclic quotient")


def minkowski_bound_below_two():
    # |d| = 3, n = 2, r2 = 1: (4/pi) * (2!/2^2) * sqrt(3) < 2, so every ideal class has a norm-1 representative.
    return sympy.Rational(4) / sympy.pi * sympy.Rational(1, 2) * sympy.sqrt(3) < 2


def ray_class_group_q_mod5():
    # (Z/5)^* / {+-1}
    return 4 // 2


def build():
    u, vals = brumer_stark_unit()
    cl_order, c_action = ray_class_group_mod5()
    assert minkowski_bound_below_two()
    plus = ray_class_group_q_mod5()
    tool = f"sympy {sympy.__version__} (scripts/make_fixtures.py)"
    a, b = coeffs(u)
    case = {
        "schema_version": 1,
        "label": "q_zeta3_T5",
        "group": {"invariants": [2], "c": [1]},
        "conductor": 3,
        "parameters": {"p": 2, "t": 0, "n": 1},
        "places": [
            {"label": "inf", "archimedean": True, "in_s": True},
            {"label": "3", "prime": 3, "ramified": True, "in_s": True},
            {"label": "5", "prime": 5, "frobenius": [1], "in_t": True},
            {"label": "7", "prime": 7, "frobenius": [0]},
        ],
        "bs_unit": {
            "provenance": f"{tool}: u = {a} + {b}*w, the twist of (3+w)/(3+w^2) by the unique root of unity with u = 1 mod 5",
            "prime_label": "7",
            "valuations": [{"sigma": [0], "ord": str(vals[0])}, {"sigma": [1], "ord": str(vals[1])}],
            "exponent": 0,
            "absolute_value_attested": {"inf": True},
            "t_congruence_attested": True,
        },
        "class_group": {
            "provenance": f"{tool}: h(Q(w)) = 1 by the Minkowski bound, Cl^T = F_25^*/mu_6, c acts as Frobenius at 5",
            "invariants": [str(cl_order)],
            "actions": [[[str(c_action)]]],
            "plus_invariants": [str(plus)],
        },
    }
    zeroed = json.loads(json.dumps(case))
    zeroed["label"] = "q_zeta3_T5_zeroed"
    for entry in zeroed["bs_unit"]["valuations"]:
        entry["ord"] = "0"
    zeroed["bs_unit"]["provenance"] += "; valuations zeroed as a negative control"
    return case, zeroed


def main():
    case, zeroed = build()
    out = ROOT / "fixtures"
    out.mkdir(exist_ok=True)
    (out / "q_zeta3_T5.case").write_text(json.dumps(case, indent=2) + "\n")
    (out / "q_zeta3_T5_zeroed.case").write_text(json.dumps(zeroed, indent=2) + "\n")
    print("valuations", [v["ord"] for v in case["bs_unit"]["valuations"]], file=sys.stderr)


if __name__ == "__main__":
    main()
