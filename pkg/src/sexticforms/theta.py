"""Degree-2 theta constants and odd theta gradients; seed expansions.

Theta series with characteristic (mu', mu''), mu-entries in {0, 1/2}:

    theta[mu', mu''](tau, z)
        = sum_{n in Z^2} exp(pi*i (n+mu')^t tau (n+mu')
                             + 2*pi*i (n+mu')^t (z+mu''))

With q1 = e^(2 pi i tau11), q2 = e^(2 pi i tau22), r = e^(2 pi i tau12),
the n-term carries q1^((n1+mu1)^2/2) q2^((n2+mu2)^2/2) r^((n1+mu1)(n2+mu2)).
Exponents are stored in eighth units for q1, q2 and quarter units for r, so
everything is integer arithmetic.  Even constants have coefficients +-1;
odd gradients are stored with the z-derivative scaled by 2 (making them
integers) and the constant global phase (a fourth root of unity per
characteristic) dropped — all exposed forms are pinned by an explicit
normalization, so global phases are unobservable.

Seeds built here: chi_5 (product of the 10 even constants), chi_10
(= chi_5^2, pinned at its (1,1) coefficient), chi_6_3 (the Sym^6 product
of the six odd gradients) and chi_6_8 = chi_5 * chi_6_3 (pinned at (1,1)).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .arith import LaurentPoly
from .errors import (
    EvenCharacteristic,
    NormalizationFailure,
    OddCharacteristic,
    SupportViolation,
)
from .qexp import FourierExpansion


class ThetaCharacteristic:
    """Characteristic (mu', mu''); stored as doubled integer vectors in
    {0,1}^2 so mu = m/2."""

    __slots__ = ("m1", "m2")

    def __init__(self, m1, m2):
        if not all(x in (0, 1) for x in (*m1, *m2)):
            raise ValueError("characteristic entries must be 0 or 1 (doubled)")
        self.m1 = tuple(m1)
        self.m2 = tuple(m2)

    @property
    def parity(self) -> str:
        # 4 mu' . mu'' mod 2
        dot = self.m1[0] * self.m2[0] + self.m1[1] * self.m2[1]
        return "odd" if dot % 2 else "even"

    def __eq__(self, other):
        return (self.m1, self.m2) == (other.m1, other.m2)

    def __hash__(self):
        return hash((self.m1, self.m2))

    def __repr__(self):
        return f"ThetaCharacteristic(m1={self.m1}, m2={self.m2})"


def all_characteristics():
    """The 16 characteristics, lexicographic on (m1, m2)."""
    out = []
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    out.append(ThetaCharacteristic((a, b), (c, d)))
    return out


def even_characteristics():
    return [ch for ch in all_characteristics() if ch.parity == "even"]


def odd_characteristics():
    return [ch for ch in all_characteristics() if ch.parity == "odd"]


class EighthExpansion:
    """Sparse series in q1^(1/8), q2^(1/8), r^(1/4) with integer
    coefficients, complete for all q-exponents <= the bound (in eighth
    units, both variables)."""

    __slots__ = ("bound", "c")

    def __init__(self, bound, c=None):
        self.bound = bound
        self.c = {}
        if c:
            for key, v in c.items():
                if v and key[0] <= bound and key[1] <= bound:
                    self.c[key] = v

    def add(self, other):
        out = dict(self.c)
        for key, v in other.c.items():
            w = out.get(key, 0) + v
            if w:
                out[key] = w
            else:
                del out[key]
        return EighthExpansion(min(self.bound, other.bound), out)

    def scale(self, s):
        return EighthExpansion(self.bound, {k: v * s for k, v in self.c.items()})

    def mul(self, other):
        bound = min(self.bound, other.bound)
        out = {}
        for (a1, a2, ar), av in self.c.items():
            if a1 > bound or a2 > bound:
                continue
            for (b1, b2, br), bv in other.c.items():
                e1, e2 = a1 + b1, a2 + b2
                if e1 > bound or e2 > bound:
                    continue
                key = (e1, e2, ar + br)
                w = out.get(key, 0) + av * bv
                if w:
                    out[key] = w
                else:
                    del out[key]
        return EighthExpansion(bound, out)

    @property
    def is_zero(self):
        return not self.c


def _lattice_range(N):
    return math.isqrt(2 * N) + 2


def even_theta_constant(ch: ThetaCharacteristic, N: int) -> EighthExpansion:
    """Theta constant at z = 0, complete through q-exponent N."""
    if ch.parity != "even":
        raise OddCharacteristic("theta constant requested for an odd characteristic")
    bound = 8 * N
    M = _lattice_range(N)
    c = {}
    for n1 in range(-M, M + 1):
        t1 = 2 * n1 + ch.m1[0]
        if t1 * t1 > bound:
            continue
        for n2 in range(-M, M + 1):
            t2 = 2 * n2 + ch.m1[1]
            if t2 * t2 > bound:
                continue
            # phase exp(2 pi i (n + mu')^t mu'') = +-1 for even ch
            twice_dot = (2 * n1 + ch.m1[0]) * ch.m2[0] + (2 * n2 + ch.m1[1]) * ch.m2[1]
            if twice_dot % 2:
                raise AssertionError("even characteristic produced imaginary phase")
            sign = -1 if (twice_dot // 2) % 2 else 1
            key = (t1 * t1, t2 * t2, t1 * t2)
            w = c.get(key, 0) + sign
            if w:
                c[key] = w
            else:
                del c[key]
    return EighthExpansion(bound, c)


def odd_theta_gradient(ch: ThetaCharacteristic, N: int):
    """The two z-partials at z = 0, scaled by 2 (and the global phase
    dropped), as a pair of EighthExpansion."""
    if ch.parity != "odd":
        raise EvenCharacteristic("gradient requested for an even characteristic")
    bound = 8 * N
    M = _lattice_range(N)
    g1, g2 = {}, {}
    for n1 in range(-M, M + 1):
        t1 = 2 * n1 + ch.m1[0]
        if t1 * t1 > bound:
            continue
        for n2 in range(-M, M + 1):
            t2 = 2 * n2 + ch.m1[1]
            if t2 * t2 > bound:
                continue
            # exp(2 pi i (n+mu').mu'') = global (+-i) times this sign
            sign = -1 if (n1 * ch.m2[0] + n2 * ch.m2[1]) % 2 else 1
            key = (t1 * t1, t2 * t2, t1 * t2)
            for store, t in ((g1, t1), (g2, t2)):
                if t:
                    w = store.get(key, 0) + sign * t
                    if w:
                        store[key] = w
                    else:
                        del store[key]
    return EighthExpansion(bound, g1), EighthExpansion(bound, g2)


def _to_fourier(vec, weight, N, start_hint=0):
    """Convert coordinate EighthExpansions to a half-integral-lattice
    (denom 2) character FourierExpansion; validates the exponent lattice."""
    kN = 2 * N
    cells = {}
    for i, series in enumerate(vec):
        for (e1, e2, er), v in series.c.items():
            if e1 % 4 or e2 % 4 or er % 2:
                raise SupportViolation(
                    "theta product does not live on the half-integral lattice"
                )
            key = (e1 // 4, e2 // 4)
            if key[0] > kN or key[1] > kN:
                continue
            cell = cells.get(key)
            if cell is None:
                cell = [dict() for _ in range(len(vec))]
                cells[key] = cell
            cell[i][er // 2] = cell[i].get(er // 2, 0) + v
    built = {
        key: tuple(LaurentPoly(d) for d in cell)
        for key, cell in cells.items()
    }
    form = FourierExpansion(
        weight, True, kN, built, start_hint, denom=2, validate=False
    )
    return form


def _assert_cusp_start(vec, label):
    """Verify in-window that every coefficient with a zero q-exponent
    vanishes; the start offset 1 itself is certified by cuspidality."""
    for series in vec:
        for (e1, e2, _er), v in series.c.items():
            if (e1 == 0 or e2 == 0) and v:
                raise NormalizationFailure(
                    f"{label}: unexpected boundary coefficient"
                )


@lru_cache(maxsize=None)
def chi_5(N: int) -> FourierExpansion:
    """Product of the ten even theta constants: scalar weight 5 with
    character, on the half-integral lattice."""
    if N < 1:
        raise ValueError("truncation must be at least 1")
    prod = None
    for ch in even_characteristics():
        series = even_theta_constant(ch, N)
        prod = series if prod is None else prod.mul(series)
    _assert_cusp_start([prod], "chi_5")
    return _to_fourier([prod], (0, 5), N, start_hint=1)


@lru_cache(maxsize=None)
def chi_6_3(N: int) -> FourierExpansion:
    """Sym^6 product of the six odd theta gradients: weight (6,3) with
    character.  Coordinate i is the X1^(6-i) X2^i component of
    prod_i (G_i1 X1 + G_i2 X2)."""
    if N < 1:
        raise ValueError("truncation must be at least 1")
    coords = None
    for ch in odd_characteristics():
        g1, g2 = odd_theta_gradient(ch, N)
        if coords is None:
            coords = [g1, g2]
        else:
            new = []
            for i in range(len(coords) + 1):
                acc = None
                if i < len(coords):
                    acc = coords[i].mul(g1)
                if i > 0:
                    term = coords[i - 1].mul(g2)
                    acc = term if acc is None else acc.add(term)
                new.append(acc)
            coords = new
    _assert_cusp_start(coords, "chi_6_3")
    return _to_fourier(coords, (6, 3), N, start_hint=1)


_CHI10_PIN = LaurentPoly({1: 1, 0: -2, -1: 1})  # r - 2 + r^-1


@lru_cache(maxsize=None)
def chi_10(N: int) -> FourierExpansion:
    """chi_5 squared, rescaled so the (1,1) coefficient is r - 2 + r^-1."""
    x5 = chi_5(N)
    raw = x5.mul(x5)
    corner = raw.vec_at((1, 1))[0]
    ratio = _laurent_ratio(corner, _CHI10_PIN)
    if ratio is None:
        raise NormalizationFailure(
            "chi_10 corner coefficient is not a multiple of r - 2 + r^-1"
        )
    return raw.scale(Fraction(1) / ratio)


_CHI68_PIN = (
    LaurentPoly(),
    LaurentPoly(),
    LaurentPoly({-1: 1, 0: -2, 1: 1}),
    LaurentPoly({1: 2, -1: -2}),
    LaurentPoly({-1: 1, 0: -2, 1: 1}),
    LaurentPoly(),
    LaurentPoly(),
)


@lru_cache(maxsize=None)
def chi_6_8(N: int) -> FourierExpansion:
    """chi_5 * chi_6_3, rescaled so the (1,1) coefficient vector equals
    (0, 0, r^-1 - 2 + r, 2(r - r^-1), r^-1 - 2 + r, 0, 0)."""
    raw = chi_5(N).mul(chi_6_3(N))
    corner = raw.vec_at((1, 1))
    ratio = _laurent_ratio(corner[2], _CHI68_PIN[2])
    if ratio is None:
        raise NormalizationFailure(
            "chi_6_8 corner coordinate 2 is not a multiple of r - 2 + r^-1"
        )
    scaled = raw.scale(Fraction(1) / ratio)
    if scaled.vec_at((1, 1)) != _CHI68_PIN:
        raise NormalizationFailure(
            "chi_6_8 corner vector does not match the pinned normalization"
        )
    return scaled


def _laurent_ratio(a: LaurentPoly, b: LaurentPoly):
    """Constant c with a = c*b, or None."""
    if b.is_zero:
        return None
    e, v = next(iter(b.c.items()))
    c = Fraction(a.c.get(e, 0)) / Fraction(v)
    if a != b.scale(c) or c == 0:
        return None
    return c
