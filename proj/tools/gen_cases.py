#!/usr/bin/env python3
"""Generate closed-form manufactured-solution kernels for the verify module.

For each case the exact velocity u, Bernoulli pressure p and convecting field
beta are given; the scaled vorticity omega = sqrt(nu) rot u and the forcing

    f = sigma u + sqrt(nu) curl omega + nu^{-1/2} omega x beta + grad p

are derived symbolically together with every first derivative the solver and
the estimator need. Output: src/cases_generated.cpp.

Usage: python3 tools/gen_cases.py [output path]
"""

import sys

import sympy as sp

x, y, nu, sigma, p0 = sp.symbols("x y nu sigma p0", real=True)


def curl_scalar(s):
    return sp.Matrix([sp.diff(s, y), -sp.diff(s, x)])


def rot(v):
    return sp.diff(v[1], x) - sp.diff(v[0], y)


def cross_scalar_vec(w, b):
    # (0, 0, w) x (b1, b2, 0)
    return sp.Matrix([-w * b[1], w * b[0]])


def jacobian(v):
    return sp.Matrix([[sp.diff(v[i], x), sp.diff(v[i], y)] for i in range(2)])


def build(u, p, beta):
    u = sp.Matrix(u)
    beta = sp.Matrix(beta)
    omega = sp.sqrt(nu) * rot(u)
    f = (sigma * u + sp.sqrt(nu) * curl_scalar(omega)
         + cross_scalar_vec(omega, beta) / sp.sqrt(nu)
         + sp.Matrix([sp.diff(p, x), sp.diff(p, y)]))
    div_u = sp.simplify(sp.diff(u[0], x) + sp.diff(u[1], y))
    assert div_u == 0, div_u
    du = jacobian(u)
    db = jacobian(beta)
    df = jacobian(f)
    outputs = [
        ("omega", omega),
        ("omega_x", sp.diff(omega, x)),
        ("omega_y", sp.diff(omega, y)),
        ("p", p),
        ("p_x", sp.diff(p, x)),
        ("p_y", sp.diff(p, y)),
        ("u[0]", u[0]), ("u[1]", u[1]),
        ("du[0][0]", du[0, 0]), ("du[0][1]", du[0, 1]),
        ("du[1][0]", du[1, 0]), ("du[1][1]", du[1, 1]),
        ("beta[0]", beta[0]), ("beta[1]", beta[1]),
        ("dbeta[0][0]", db[0, 0]), ("dbeta[0][1]", db[0, 1]),
        ("dbeta[1][0]", db[1, 0]), ("dbeta[1][1]", db[1, 1]),
        ("f[0]", f[0]), ("f[1]", f[1]),
        ("df[0][0]", df[0, 0]), ("df[0][1]", df[0, 1]),
        ("df[1][0]", df[1, 0]), ("df[1][1]", df[1, 1]),
    ]
    return outputs


def ex1():
    e = sp.exp(x - 1)
    s = sp.sin(sp.pi * y)
    c = sp.cos(sp.pi * y)
    u = [(e - x) * (2 * sp.pi * s * c), -(e - 1) * s**2]
    beta = [sp.Rational(1, 6) * (e - x) * (sp.pi * sp.sin(2 * sp.pi * y)),
            -(e - 1) * s**2]
    p = x**4 - y**4
    # Published closed form of the scaled vorticity; must agree with sqrt(nu) rot u.
    omega_ref = -sp.sqrt(nu) * (e * s**2 + 2 * sp.pi**2 * (x - e) * (s**2 - c**2))
    assert sp.simplify(sp.sqrt(nu) * rot(sp.Matrix(u)) - omega_ref) == 0
    return build(u, p, beta)


def stream_case(phi, p):
    u = curl_scalar(phi)
    return build(u, p, u)


def ex2a():
    phi = x**2 * (1 - x)**2 * y**2 * (1 - y)**2
    return stream_case(phi, x**4 - y**4)


def ex2b():
    bump = sp.exp(-50 * (x - sp.Rational(1, 100))**2 - 50 * (y - sp.Rational(1, 100))**2)
    phi = x**2 * (1 - x)**2 * y**2 * (1 - y)**2 * bump
    p = (x**5 - y**5) * sp.exp(-25 * (x - sp.Rational(1, 100))**2
                               - 25 * (y - sp.Rational(1, 100))**2)
    return stream_case(phi, p)


def ex2c():
    phi = x**2 * (1 - x)**2 * y**2 * (1 - y)**2 * (1 - sp.tanh(150 * (sp.Rational(1, 2) - x)))
    p = sp.exp(-(x - sp.Rational(1, 2))**2) - p0
    return stream_case(phi, p)


def emit(name, outputs):
    exprs = [e for _, e in outputs]
    repl, reduced = sp.cse(exprs, symbols=sp.numbered_symbols("t"), optimizations="basic")
    lines = [f"void eval_{name}(double x, double y, double nu, double sigma, double p0, ExactPoint& o)",
             "{",
             "    (void)nu; (void)sigma; (void)p0;"]
    for sym, e in repl:
        lines.append(f"    const double {sym} = {sp.ccode(e)};")
    for (target, _), e in zip(outputs, reduced):
        lines.append(f"    o.{target} = {sp.ccode(e)};")
    lines.append("}")
    return "\n".join(lines)


HEADER = """// Generated by tools/gen_cases.py; do not edit by hand.

#include "oseenvb/cases.hpp"

#include <cmath>

namespace oseenvb::detail {

"""

FOOTER = """
} // namespace oseenvb::detail
"""


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "src/cases_generated.cpp"
    parts = []
    for name, fn in [("ex1", ex1), ("ex2a", ex2a), ("ex2b", ex2b), ("ex2c", ex2c)]:
        parts.append(emit(name, fn()))
    with open(out, "w") as fh:
        fh.write(HEADER + "\n\n".join(parts) + "\n" + FOOTER)


if __name__ == "__main__":
    main()
