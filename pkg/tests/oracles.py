"""Independent oracles built on sympy; nothing here imports helixlab internals.

Numerical K_0 (tensor Q) of a Picard-rank-one threefold is Q[t]/(t-1)^4 with
t = [O(1)] = exp(H). chi of a class is the Hilbert polynomial applied
termwise, and the dual is t -> 1/t. This path never uses Todd classes.
"""

from fractions import Fraction

import sympy as sp

t, s, h = sp.symbols("t s h")


def hilbert_polynomial(values: dict):
    """Interpolate chi(O(m)) from four known values."""
    m = sp.symbols("m")
    poly = sp.interpolate(list(values.items()), m)
    return sp.Lambda(m, poly)


# chi(O(m)) from known facts only:
#   P^3: binomial(m+3, 3); quadric: h^0 of O(m) on a quadric in P^4;
#   V5 (k=2), V22 (k=1): chi(O) = 1, h^0(O(1)) = 7 / 14, Kodaira vanishing for
#   -k < m < 0 and Serre duality chi(O(m)) = -chi(O(-k-m)).
HILBERT = {
    "p3": hilbert_polynomial({0: 1, 1: 4, 2: 10, 3: 20}),
    "q3": hilbert_polynomial({0: 1, 1: 5, 2: 14, 3: 30}),
    "v5": hilbert_polynomial({0: 1, 1: 7, -1: 0, -2: -1}),
    "v22": hilbert_polynomial({0: 1, 1: 14, -1: -1, -2: -14}),
}
DEGREE = {"p3": 1, "q3": 2, "v5": 5, "v22": 22}


def _reduce(expr):
    """Expand expr (a function of t regular at t = 1) modulo (t-1)^4 as a polynomial in t."""
    series = sp.series(sp.sympify(expr).subs(t, 1 + s), s, 0, 4).removeO()
    return sp.Poly(sp.expand(series.subs(s, t - 1)), t)


def chi(variety: str, cls) -> Fraction:
    P = HILBERT[variety]
    poly = _reduce(cls)
    total = sum(c * P(m) for (m,), c in poly.terms())
    return Fraction(str(sp.nsimplify(total)))


def pair(variety: str, a, b) -> Fraction:
    return chi(variety, sp.sympify(a).subs(t, 1 / t) * b)


def chern_to_t(variety: str, r, a, b, c):
    """Class with ch = r + aH + bL + cP as a function of t, using H = log t and H^2 = dL."""
    d = DEGREE[variety]
    H = sp.log(t)
    return r + a * H + sp.Rational(b) / d * H ** 2 + sp.Rational(c) / d * H ** 3


def t_to_chern(variety: str, cls):
    """Inverse of chern_to_t: expand in H with t = exp(H)."""
    d = DEGREE[variety]
    series = sp.series(sp.sympify(cls).subs(t, sp.exp(h)), h, 0, 4).removeO()
    coeff = [sp.Rational(series.coeff(h, k)) for k in range(4)]
    return tuple(Fraction(str(x)) for x in (coeff[0], coeff[1], coeff[2] * d, coeff[3] * d))


SPINOR = 4 / (1 + t)  # from 0 -> S -> O^4 -> S(1) -> 0
