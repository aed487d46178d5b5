"""Covariants and invariants of the universal binary sextic.

The sextic is f = sum_i a_i x1^(6-i) x2^i.  Covariants are bihomogeneous
polynomials in (a0..a6, x1, x2), graded by degree (in the a's) and order
(in x1, x2).  New covariants are produced by transvection; the classical
invariants A..E of degrees 2, 4, 6, 10, 15 are built from transvectant
candidates (A printed in full; B, C, E solved against anchor coefficients;
D from the resultant of the partial derivatives) and each is normalized so
a fixed set of anchor monomial coefficients takes pinned integer values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import (
    NormalizationFailure,
    NotUnimodular,
    OrderTooSmall,
    UnknownName,
)
from .poly import SEXTIC_VARS, MultiPoly

A_VARS = SEXTIC_VARS[:7]
X_VARS = SEXTIC_VARS[7:]

# ord bound weights for the seven sextic coefficients
A11_WEIGHTS = (2, 1, 0, -1, 0, 1, 2)


class Covariant:
    """A bihomogeneous polynomial of declared degree (a's) and order (x's)."""

    __slots__ = ("poly", "degree", "order")

    def __init__(self, poly: MultiPoly, degree: int, order: int):
        if poly.vars != SEXTIC_VARS:
            raise ValueError("covariant polynomial must live in the sextic ring")
        if not poly.is_zero:
            if poly.homogeneous_degree_on(A_VARS) != degree:
                raise ValueError("polynomial is not homogeneous of the given degree")
            if poly.homogeneous_degree_on(X_VARS) != order:
                raise ValueError("polynomial is not homogeneous of the given order")
        self.poly = poly
        self.degree = degree
        self.order = order

    @property
    def is_zero(self):
        return self.poly.is_zero

    def __eq__(self, other):
        return (
            isinstance(other, Covariant)
            and self.degree == other.degree
            and self.order == other.order
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.degree, self.order, self.poly))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Covariant(self.poly.scale(other), self.degree, self.order)
        return Covariant(
            self.poly * other.poly,
            self.degree + other.degree,
            self.order + other.order,
        )

    __rmul__ = __mul__

    def __add__(self, other):
        if (self.degree, self.order) != (other.degree, other.order):
            raise ValueError("can only add covariants of equal bidegree")
        return Covariant(self.poly + other.poly, self.degree, self.order)

    def __sub__(self, other):
        return self + (-1) * other

    def scale(self, s):
        return Covariant(self.poly.scale(s), self.degree, self.order)

    def primitive(self) -> "Covariant":
        return Covariant(self.poly.primitive(), self.degree, self.order)

    def coefficient_of_a(self, exps: dict):
        """Coefficient of a pure a-monomial, e.g. {'a0': 1, 'a6': 1}."""
        return self.poly.coefficient(**exps)

    def evaluate_at_sextic(self, coeffs, x1=0, x2=0):
        """Evaluate at a concrete sextic (a0..a6) and point (x1, x2)."""
        values = dict(zip(A_VARS, coeffs))
        values["x1"] = x1
        values["x2"] = x2
        return self.poly.evaluate(values)

    def __repr__(self):
        return (
            f"Covariant(degree={self.degree}, order={self.order}, "
            f"poly={self.poly.to_text()})"
        )


def universal_sextic() -> Covariant:
    terms = {}
    for i in range(7):
        e = [0] * 9
        e[i] = 1
        e[7] = 6 - i
        e[8] = i
        terms[tuple(e)] = 1
    return Covariant(MultiPoly(SEXTIC_VARS, terms), 1, 6)


def transvectant(g: Covariant, h: Covariant, k: int) -> Covariant:
    """The k-th transvectant (g, h)_k with factorial normalization."""
    m, n = g.order, h.order
    if k > m or k > n:
        raise OrderTooSmall(f"transvectant index {k} exceeds order {min(m, n)}")
    if k == 0:
        return g * h

    def partials(p: MultiPoly):
        # row j holds d^k p / dx1^(k-j) dx2^j
        row = [p]
        for _ in range(k):
            row = [q.derivative("x1") for q in row] + [
                row[-1].derivative("x2")
            ]
        return row

    gp = partials(g.poly)
    hp = partials(h.poly)
    acc = MultiPoly.zero(SEXTIC_VARS)
    for j in range(k + 1):
        term = gp[j] * hp[k - j]
        acc = acc + term.scale((-1) ** j * math.comb(k, j))
    norm = Fraction(
        math.factorial(m - k) * math.factorial(n - k),
        math.factorial(m) * math.factorial(n),
    )
    return Covariant(acc.scale(norm), g.degree + h.degree, m + n - 2 * k)


def act_sl2(m, c: Covariant) -> Covariant:
    """Substitute the coefficients of f(a x1 + b x2, c x1 + d x2) for the a_i."""
    (p, q), (r, s) = m
    if p * s - q * r != 1:
        raise NotUnimodular("matrix must have determinant 1")
    x1 = MultiPoly.variable(SEXTIC_VARS, "x1")
    x2 = MultiPoly.variable(SEXTIC_VARS, "x2")
    u = x1.scale(p) + x2.scale(q)
    v = x1.scale(r) + x2.scale(s)
    g = universal_sextic().poly.substitute({"x1": u, "x2": v})
    # read off the transformed coefficient of x1^(6-i) x2^i as a poly in a's
    images = {name: MultiPoly.zero(SEXTIC_VARS) for name in A_VARS}
    for exps, coeff in g.terms.items():
        i = exps[8]
        a_part = exps[:7] + (0, 0)
        images[A_VARS[i]] = images[A_VARS[i]] + MultiPoly(
            SEXTIC_VARS, {a_part: coeff}
        )
    return Covariant(c.poly.substitute(images), c.degree, c.order)


def a11_order_bound(c: Covariant) -> int:
    """min over monomials of the weighted a-exponent sum with weights
    (2, 1, 0, -1, 0, 1, 2)."""
    if c.is_zero:
        raise ValueError("order bound of the zero covariant is undefined")
    return min(
        sum(e * w for e, w in zip(exps[:7], A11_WEIGHTS))
        for exps in c.poly.terms
    )


# -- catalog ------------------------------------------------------------------

def _canon(name: str) -> str:
    return name.replace("_", ",").replace(" ", "").upper()


@lru_cache(maxsize=None)
def grace_young(name: str) -> Covariant:
    key = _canon(name)
    f = universal_sextic()
    if key in ("C1,6", "F"):
        return f
    if key == "C2,0":
        return transvectant(f, f, 6)
    if key == "C2,4":
        return transvectant(f, f, 4)
    if key == "C3,2":
        return transvectant(f, grace_young("C2,4"), 4)
    if key in ("HESSIAN", "V10,2", "H"):
        return transvectant(f, f, 2).primitive()
    if key == "V8,4":
        return transvectant(f, f, 4).primitive()
    if key == "V6,6":
        return transvectant(f, f, 6).primitive()
    raise UnknownName(f"unknown covariant {name!r}")


def _a_monomial(**exps):
    e = [0] * 9
    for name, v in exps.items():
        e[SEXTIC_VARS.index(name)] = v
    return tuple(e)


def _solve_anchored(candidates, anchors, checks, label):
    """Linear combination of candidate covariants matching anchor
    coefficients exactly, verified against further pinned coefficients."""
    matrix = [
        [cand.poly.terms.get(mono, 0) for cand in candidates]
        for mono, _ in anchors
    ]
    rhs = [value for _, value in anchors]
    sol = linalg.solve_linear(matrix, rhs)
    if sol is None:
        raise NormalizationFailure(f"no anchored combination exists for {label}")
    acc = MultiPoly.zero(SEXTIC_VARS)
    for s, cand in zip(sol, candidates):
        if s:
            acc = acc + cand.poly.scale(s)
    result = Covariant(acc, candidates[0].degree, candidates[0].order)
    for mono, value in list(anchors) + list(checks):
        if result.poly.terms.get(mono, 0) != value:
            raise NormalizationFailure(
                f"{label}: coefficient check failed at exponents {mono}"
            )
    return result


def _poly_det(rows):
    """Determinant of a matrix of MultiPoly by memoized minor expansion."""
    n = len(rows)
    zero = MultiPoly.zero(SEXTIC_VARS)
    cache = {}

    def minor(cols):
        if not cols:
            return MultiPoly.const(SEXTIC_VARS, 1)
        if cols in cache:
            return cache[cols]
        row = rows[n - len(cols)]
        total = zero
        for k, c in enumerate(cols):
            entry = row[c]
            if not entry.is_zero:
                sub = entry * minor(cols[:k] + cols[k + 1 :])
                total = total + (sub if k % 2 == 0 else -sub)
        cache[cols] = total
        return total

    return minor(tuple(range(n)))


def _discriminant_resultant() -> MultiPoly:
    """Resultant of the dehomogenized partials of f (two quintics)."""
    # df/dx1 at x2=1 has coefficients (6-i) a_i, i=0..5 (degree 5 down)
    # df/dx2 at x2=1 has coefficients (j+1) a_{j+1}, j=0..5
    p = [
        MultiPoly.monomial(SEXTIC_VARS, _a_monomial(**{f"a{i}": 1}), 6 - i)
        for i in range(6)
    ]
    q = [
        MultiPoly.monomial(SEXTIC_VARS, _a_monomial(**{f"a{j + 1}": 1}), j + 1)
        for j in range(6)
    ]
    zero = MultiPoly.zero(SEXTIC_VARS)
    rows = []
    for shift in range(5):
        rows.append([zero] * shift + p + [zero] * (4 - shift))
    for shift in range(5):
        rows.append([zero] * shift + q + [zero] * (4 - shift))
    return _poly_det(rows)


@lru_cache(maxsize=None)
def invariant(name: str) -> Covariant:
    key = name.strip().upper()
    f = universal_sextic()
    if key == "A":
        terms = {
            _a_monomial(a0=1, a6=1): 120,
            _a_monomial(a1=1, a5=1): -20,
            _a_monomial(a2=1, a4=1): 8,
            _a_monomial(a3=2): -3,
        }
        return Covariant(MultiPoly(SEXTIC_VARS, terms), 2, 0)
    if key == "B":
        a = invariant("A")
        i4 = transvectant(grace_young("C2,4"), grace_young("C2,4"), 4)
        return _solve_anchored(
            [a * a, i4],
            anchors=[
                (_a_monomial(a0=1, a6=1, a3=2), 81),
                (_a_monomial(a1=1, a5=1, a3=2), 9),
            ],
            checks=[
                (_a_monomial(a0=1, a4=1, a5=1, a3=1), -45),
                (_a_monomial(a1=1, a2=1, a6=1, a3=1), -45),
                (_a_monomial(a1=1, a4=2, a3=1), -3),
                (_a_monomial(a2=2, a5=1, a3=1), -3),
                (_a_monomial(a2=2, a4=2), 1),
            ],
            label="invariant B",
        )
    if key == "C":
        a = invariant("A")
        b = invariant("B")
        c32 = grace_young("C3,2")
        i6 = transvectant(c32, c32, 2)
        return _solve_anchored(
            [a * a * a, a * b, i6],
            anchors=[
                (_a_monomial(a0=1, a6=1, a3=4), 162),
                (_a_monomial(a1=1, a5=1, a3=4), 72),
                (_a_monomial(a0=1, a4=1, a5=1, a3=3), -198),
                (_a_monomial(a1=1, a2=1, a6=1, a3=3), -198),
                (_a_monomial(a1=1, a4=2, a3=3), -24),
                (_a_monomial(a2=2, a5=1, a3=3), -24),
            ],
            checks=[],
            label="invariant C",
        )
    if key == "D":
        res = _discriminant_resultant()
        d = Covariant(res, 10, 0)
        anchor = _a_monomial(a0=2, a6=2, a3=6)
        lead = d.poly.terms.get(anchor, 0)
        if not lead:
            raise NormalizationFailure("discriminant anchor coefficient vanishes")
        d = d.scale(Fraction(729, lead))
        checks = [
            (_a_monomial(a0=2, a4=1, a5=1, a6=1, a3=5), -486),
            (_a_monomial(a0=2, a5=3, a3=5), 108),
            (_a_monomial(a0=1, a1=1, a2=1, a6=2, a3=5), -486),
            (_a_monomial(a1=3, a6=2, a3=5), 108),
        ]
        for mono, value in checks:
            if d.poly.terms.get(mono, 0) != value:
                raise NormalizationFailure(
                    f"invariant D: coefficient check failed at exponents {mono}"
                )
        return d
    if key == "E":
        e0 = skew_chain_invariant()
        anchor = _a_monomial(a0=2, a5=3, a3=10)
        lead = e0.poly.terms.get(anchor, 0)
        if not lead:
            raise NormalizationFailure("skew invariant anchor coefficient vanishes")
        e = e0.scale(Fraction(-729, lead))
        # mirror term under a_i <-> a_{6-i} (which negates E)
        check = _a_monomial(a1=3, a6=2, a3=10)
        if e.poly.terms.get(check, 0) != 729:
            raise NormalizationFailure(
                "invariant E: a1^3 a6^2 a3^10 coefficient check failed"
            )
        return e
    raise UnknownName(f"unknown invariant {name!r}")


def skew_chain_transvectants():
    """The transvectant chain producing the degree-15 skew invariant,
    as a list of (name, left, right, k) steps ending in an order-0 result."""
    return [
        ("i", "f", "f", 4),
        ("l", "f", "i", 4),
        ("m", "i", "l", 2),
        ("s", "i", "m", 2),
        ("t", "l", "m", 1),
        ("e0", "t", "s", 2),
    ]


@lru_cache(maxsize=None)
def skew_chain_invariant() -> Covariant:
    """Unnormalized degree-15 skew invariant via the transvectant chain."""
    built = {"f": universal_sextic()}
    for out, left, right, k in skew_chain_transvectants():
        built[out] = transvectant(built[left], built[right], k)
    e0 = built["e0"]
    assert (e0.degree, e0.order) == (15, 0)
    return e0


def combination_AB_minus_3C() -> Covariant:
    """Degree-6 invariant whose nu-image is the regular weight-6 form.

    Up to scale this is the unique point of the three-dimensional degree-6
    invariant space whose nu-image is holomorphic (divisible by the tenth
    power of the cusp form chi_10 with holomorphic quotient); the scale is
    pinned by the coefficient 1458 at a0*a6*a3^4.
    """
    a, b, c = invariant("A"), invariant("B"), invariant("C")
    combo = (a * b).scale(-8) - c.scale(3)
    assert combo.poly.coefficient(a0=1, a6=1, a3=4) == 1458
    assert combo.poly.coefficient(a0=1, a4=1, a5=1, a3=3) == -486
    assert combo.poly.coefficient(a1=1, a2=1, a6=1, a3=3) == -486
    return combo


def resolve(name: str) -> Covariant:
    """Catalog lookup covering invariants, generators and AB - 3C."""
    key = _canon(name)
    if key in ("A", "B", "C", "D", "E"):
        return invariant(key)
    if key in ("AB-3C", "AB−3C"):
        return combination_AB_minus_3C()
    return grace_young(name)
