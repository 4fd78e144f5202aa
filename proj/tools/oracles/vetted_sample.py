"""Independent oracle for the vetted sample surface.

Computes, with sympy and without the C++ library:
  * the discriminant of each fibre quartic as a polynomial in the base,
    its degree, the j-map degree and the rational singular fibres;
  * class orders of the fixture points via the Hankel criterion: for the
    Taylor coefficients z_k of sqrt(q) at the point, the class has order
    dividing n (n >= 2) iff det(z_{i+j+1})_{1<=i,j<=n-1} = 0. Over Q finite
    orders are at most 12, so no vanishing up to 12 means infinite order.

Usage: python3 vetted_sample.py tests/fixtures/vetted_sample.json > pins.json
"""

import json
import sys

import sympy as sp

x, y, t, s, h = sp.symbols("x y t s h")


def load_surface(path):
    doc = json.load(open(path))
    F = 0
    for i, j, k, c in doc["coeffs"]:
        F += sp.Rational(c) * x**i * y**j * t**k
    return sp.expand(F)


def branch(F):
    P = sp.Poly(F, y)
    A, B, C = (P.coeff_monomial(y**2), P.coeff_monomial(y), P.coeff_monomial(1))
    return A, B, C, sp.expand(B**2 - 4 * A * C)


def invariants(coeffs):
    a0, a1, a2, a3, a4 = coeffs
    I = 12 * a0 * a4 - 3 * a1 * a3 + a2**2
    J = 72 * a0 * a2 * a4 + 9 * a1 * a2 * a3 - 27 * a0 * a3**2 - 27 * a1**2 * a4 - 2 * a2**3
    return sp.expand(I), sp.expand(J)


def fibre_data(Q, fib, base):
    P = sp.Poly(Q, fib)
    coeffs = [P.coeff_monomial(fib**k) for k in (4, 3, 2, 1, 0)]
    # Generic degree-4 discriminant, so that a vanishing leading
    # coefficient still gives the homogeneous value.
    a = sp.symbols("a0:5")
    generic = sp.discriminant(sum(a[i] * s**(4 - i) for i in range(5)), s)
    disc = sp.expand(generic.subs(dict(zip(a, coeffs))))
    I, J = invariants(coeffs)
    num, den = sp.fraction(sp.cancel(1728 * 4 * I**3 / (4 * I**3 - J**2)))
    jdeg = max(sp.degree(num, base), sp.degree(den, base))
    dpoly = sp.Poly(disc, base)
    roots = sorted({r for r in sp.roots(dpoly, filter="Q").keys()})
    singular = [[f"{r.p}/{r.q}", "1/1"] for r in roots]
    if dpoly.degree() < 24:
        singular.append(["1/1", "0/1"])
    return {
        "delta_degree": dpoly.degree(),
        "d": int(jdeg) if jdeg > 0 else "infinity",
        "rational_singular_fibers": singular,
        "disc": disc,
        "coeffs": coeffs,
    }


def hankel_order(q_shift, z0):
    """q_shift: polynomial in h (q at s0 + h); z0: sqrt branch at h = 0."""
    if z0 == 0:
        return 1
    N = 24
    # Taylor coefficients of sqrt(q) with constant term z0.
    qc = [sp.Poly(q_shift, h).coeff_monomial(h**k) for k in range(N + 1)]
    z = [sp.Rational(z0)]
    for k in range(1, N + 1):
        acc = qc[k] - sum(z[i] * z[k - i] for i in range(1, k))
        z.append(sp.nsimplify(acc) / (2 * z0))
    for n in range(2, 13):
        M = sp.Matrix(n - 1, n - 1, lambda i, j: z[i + j + 3])
        if M.det() == 0:
            return n
    return "infinite"


def point_order(A, B, C, Q, fib, base, disc, P):
    bv = P[base]
    if sp.expand(disc.subs(base, bv)) == 0:
        return "undefined"
    s0 = P[fib]
    yv = P[y]
    z0 = sp.expand((2 * A * y + B).subs({x: P[x], t: P[t], y: yv}))
    q = sp.expand(Q.subs(base, bv).subs(fib, s0 + h))
    return hankel_order(q, z0)


def main():
    path = sys.argv[1]
    F = load_surface(path)
    A, B, C, Q = branch(F)
    out = {"surface": path.split("/")[-1], "axes": []}
    data = {}
    for axis, fib, base in ((1, x, t), (2, t, x)):
        d = fibre_data(Q, fib, base)
        data[axis] = d
        out["axes"].append({k: d[k] for k in ("delta_degree", "d", "rational_singular_fibers")} | {"axis": axis})
    points = {
        "dense_point": ("0", "-1/4", "-3"),
        "ramification_point": ("1", "-9/8", "1"),
        "singular_point": ("0", "0", "0"),
        "second_point": ("1", "-1/2", "0"),
        "third_point": ("3", "-3/2", "0"),
    }
    out["points"] = {}
    for name, (px, py, pt) in points.items():
        P = {x: sp.Rational(px), y: sp.Rational(py), t: sp.Rational(pt)}
        assert sp.expand(F.subs(P)) == 0, name
        orders = []
        for axis, fib, base in ((1, x, t), (2, t, x)):
            o = point_order(A, B, C, Q, fib, base, data[axis]["disc"], P)
            orders.append(o if isinstance(o, str) else int(o))
        out["points"][name] = {"point": [px, py, pt], "orders": orders}
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
