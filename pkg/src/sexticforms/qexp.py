"""Truncated Fourier expansions of degree-2 vector-valued modular forms.

A ``FourierExpansion`` stores, for index pairs (n1, n2) inside a window,
a vector of j+1 Laurent polynomials in r (the off-diagonal variable); the
triple (n1, n2, r-exponent rho) encodes the half-integral matrix
[n1, rho/2; rho/2, n2].  Two refinements over a plain truncation:

* ``denom`` in {1, 2}: character forms (chi_5, chi_6_3) live on the
  half-integral index lattice; their keys and r-exponents are stored
  doubled.  Products with trivial character are validated to be integral
  and re-indexed to denom 1.
* ``start``: a certified vanishing offset — every coefficient (stored or
  not) with min(n1, n2) < start/denom is zero.  Cusp forms justify start
  1 (singular matrices carry no cusp-form coefficients); products add
  starts; exact division by a form of start s subtracts s.  This is what
  keeps windows small and deep products (e.g. eleventh powers) honest.

Reliability contract: a stored window [start..kN]^2 is exact; operations
shrink kN so that the contract is preserved (mul: kN_out =
min(kN_a + start_b, kN_b + start_a)).
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import linalg
from .arith import LaurentPoly, frac_from_str, frac_to_str
from .errors import (
    BoundarySliceError,
    CharacterForm,
    NotDivisible,
    OrderTooSmall,
    SupportViolation,
    WeightMismatch,
)

_ZERO = LaurentPoly()


def _reindex(lp: LaurentPoly, num: int, den: int) -> LaurentPoly:
    """Multiply all exponents by num/den; exact or SupportViolation."""
    out = {}
    for e, c in lp.c.items():
        if (e * num) % den:
            raise SupportViolation("fractional r-exponent after re-indexing")
        out[e * num // den] = c
    return LaurentPoly(out)


def _graded(keys):
    return sorted(keys, key=lambda k: (k[0] + k[1], k))


class FourierExpansion:
    __slots__ = ("j", "k", "character", "denom", "kN", "start", "cells")

    def __init__(self, weight, character, kN, cells, start=0, denom=1, validate=True):
        self.j, self.k = weight
        self.character = bool(character)
        self.denom = denom
        self.kN = kN
        self.start = start
        store = {}
        for key, vec in cells.items():
            vec = tuple(vec)
            if len(vec) != self.j + 1:
                raise ValueError("coordinate vector has wrong length")
            if any(not isinstance(x, LaurentPoly) for x in vec):
                raise ValueError("coordinates must be LaurentPoly")
            if all(x.is_zero for x in vec):
                continue
            k1, k2 = key
            if not (start <= k1 <= kN and start <= k2 <= kN):
                raise ValueError(f"cell {key} outside window [{start},{kN}]")
            store[key] = vec
        self.cells = store
        if validate and not self.character and self.denom == 1:
            self._validate_support()

    def _validate_support(self):
        for (n1, n2), vec in self.cells.items():
            bound = 4 * n1 * n2
            for lp in vec:
                for e in lp.c:
                    if e * e > bound:
                        raise SupportViolation(
                            f"r-exponent {e} at ({n1},{n2}) violates "
                            f"positive semi-definiteness"
                        )

    # -- basics -------------------------------------------------------------
    @property
    def weight(self):
        return (self.j, self.k)

    @property
    def truncation(self):
        n = Fraction(self.kN, self.denom)
        return int(n) if n.denominator == 1 else n

    def vec_at(self, key):
        return self.cells.get(tuple(key), (_ZERO,) * (self.j + 1))

    def coefficient(self, n1, n2):
        """Coefficient vector at integer indices (logical units)."""
        return self.vec_at((n1 * self.denom, n2 * self.denom))

    @property
    def is_zero_window(self):
        return not self.cells

    def __eq__(self, other):
        return (
            isinstance(other, FourierExpansion)
            and self.weight == other.weight
            and self.character == other.character
            and self.denom == other.denom
            and self.kN == other.kN
            and self.start == other.start
            and self.cells == other.cells
        )

    def agrees_with(self, other) -> bool:
        """Exact equality of all coefficients on the common window."""
        if self.weight != other.weight or self.denom != other.denom:
            return False
        top = min(self.kN, other.kN)
        lo = min(self.start, other.start)
        for k1 in range(lo, top + 1):
            for k2 in range(lo, top + 1):
                if self.vec_at((k1, k2)) != other.vec_at((k1, k2)):
                    return False
        return True

    def _compatible(self, other):
        if self.weight != other.weight:
            raise WeightMismatch(
                f"weights {self.weight} and {other.weight} differ"
            )
        if self.character != other.character or self.denom != other.denom:
            raise WeightMismatch("character/lattice mismatch")

    # -- linear structure ----------------------------------------------------
    def add(self, other) -> "FourierExpansion":
        self._compatible(other)
        kN = min(self.kN, other.kN)
        start = min(self.start, other.start)
        cells = {}
        keys = set(self.cells) | set(other.cells)
        for key in keys:
            if max(key) > kN:
                continue
            a, b = self.vec_at(key), other.vec_at(key)
            cells[key] = tuple(x + y for x, y in zip(a, b))
        return FourierExpansion(
            self.weight, self.character, kN, cells, start, self.denom,
            validate=False,
        )

    def scale(self, c) -> "FourierExpansion":
        cells = {
            key: tuple(x.scale(c) for x in vec)
            for key, vec in self.cells.items()
        }
        return FourierExpansion(
            self.weight, self.character, self.kN, cells, self.start,
            self.denom, validate=False,
        )

    def sub(self, other) -> "FourierExpansion":
        return self.add(other.scale(-1))

    # -- multiplication --------------------------------------------------------
    def mul(self, other) -> "FourierExpansion":
        if self.denom != other.denom:
            raise WeightMismatch("index-lattice mismatch in product")
        j = self.j + other.j
        k = self.k + other.k
        character = self.character != other.character
        kN = min(self.kN + other.start, other.kN + self.start)
        start = self.start + other.start
        if kN < start:
            raise OrderTooSmall(
                "truncation too small: product window is empty"
            )
        cells = {}
        for (a1, a2), avec in self.cells.items():
            for (b1, b2), bvec in other.cells.items():
                key = (a1 + b1, a2 + b2)
                if key[0] > kN or key[1] > kN:
                    continue
                acc = cells.get(key)
                if acc is None:
                    acc = [_ZERO] * (j + 1)
                    cells[key] = acc
                for i, x in enumerate(avec):
                    if x.is_zero:
                        continue
                    for l, y in enumerate(bvec):
                        if not y.is_zero:
                            acc[i + l] = acc[i + l] + x * y
        denom = self.denom
        if denom == 2 and not character:
            # product landed back on the integral lattice; validate and halve
            half = {}
            for (k1, k2), vec in cells.items():
                if k1 % 2 or k2 % 2:
                    if any(not x.is_zero for x in vec):
                        raise SupportViolation(
                            "non-integral index survives in a trivial-character "
                            "product"
                        )
                    continue
                half[(k1 // 2, k2 // 2)] = tuple(
                    _reindex(x, 1, 2) for x in vec
                )
            cells, denom = half, 1
            kN //= 2
            start = (start + 1) // 2
        return FourierExpansion(
            (j, k), character, kN, cells, start, denom
        )

    def pow(self, n: int) -> "FourierExpansion":
        if n < 1:
            raise ValueError("positive powers only")
        result = self
        for _ in range(n - 1):
            result = result.mul(self)
        return result

    # -- division -----------------------------------------------------------------
    def exact_div(self, other: "FourierExpansion") -> "FourierExpansion":
        """Exact quotient by a scalar (j=0) expansion with a nonzero corner
        cell (s, s); graded two-variable series division.

        The quotient's start offset other.start lower is certified whenever
        the division is globally exact, which is the only case the result
        is meaningful for.
        """
        if other.j != 0 or other.character or other.denom != 1:
            raise WeightMismatch("divisor must be a scalar trivial-character form")
        if self.character or self.denom != 1:
            raise WeightMismatch("dividend must be on the integral lattice")
        s = other.start
        pivot = other.vec_at((s, s))[0]
        if pivot.is_zero:
            raise NotDivisible("divisor corner cell vanishes")
        if self.start < s:
            raise NotDivisible("dividend has smaller vanishing offset than divisor")
        q_start = self.start - s
        q_kN = self.kN - s
        if q_kN < q_start:
            raise OrderTooSmall("truncation too small for division")
        j = self.j
        q_cells = {}

        def q_at(key):
            if key in q_cells:
                return q_cells[key]
            return (_ZERO,) * (j + 1)

        keys = [
            (m1, m2)
            for m1 in range(q_start, q_kN + 1)
            for m2 in range(q_start, q_kN + 1)
        ]
        for m1, m2 in _graded(keys):
            rhs = list(self.vec_at((m1 + s, m2 + s)))
            for (t1, t2), bvec in other.cells.items():
                if (t1, t2) == (s, s):
                    continue
                u = (m1 + s - t1, m2 + s - t2)
                if u[0] < q_start or u[1] < q_start:
                    continue
                qv = q_at(u)
                b = bvec[0]
                for i in range(j + 1):
                    if not qv[i].is_zero:
                        rhs[i] = rhs[i] - b * qv[i]
            vec = tuple(x.exact_div(pivot) for x in rhs)
            if any(not x.is_zero for x in vec):
                q_cells[(m1, m2)] = vec
        return FourierExpansion(
            (j, self.k - other.k), False, q_kN, q_cells, q_start, 1
        )

    def exact_div_chi10(self) -> "FourierExpansion":
        from . import theta

        return self.exact_div(theta.chi_10(self.kN))

    # -- boundary operators ---------------------------------------------------------
    def siegel_phi(self) -> "EllipticExpansion":
        """Siegel operator: the (n, 0) slice of coordinate 0.

        Refuses character forms (undefined here); raises if any other
        coordinate survives on the slice.
        """
        if self.character or self.denom != 1:
            raise CharacterForm("Siegel operator is not defined for character forms")
        coeffs = {}
        for n in range(0, self.kN + 1):
            vec = self.vec_at((n, 0))
            for i in range(1, self.j + 1):
                if not vec[i].is_zero:
                    raise BoundarySliceError(
                        f"coordinate {i} does not vanish on the boundary slice"
                    )
            c = vec[0].c.get(0, 0)
            if set(vec[0].c) - {0}:
                raise BoundarySliceError(
                    "nonzero r-exponent on a singular index"
                )
            if c:
                coeffs[n] = c
        return EllipticExpansion(self.k, self.kN, coeffs)

    def restrict_to_a11(self):
        """Substitute r = 1; per coordinate, a map (n1, n2) -> value."""
        if self.character or self.denom != 1:
            raise CharacterForm("restriction requires a trivial character")
        out = [dict() for _ in range(self.j + 1)]
        for key, vec in self.cells.items():
            for i, lp in enumerate(vec):
                v = lp.eval_at_one()
                if v:
                    out[i][key] = v
        return out

    def a11_order(self):
        """(per-coordinate minima, overall minimum) of the vanishing order
        at r = 1 over all stored cells; empty coordinates give +infinity.

        Truncation caveat: a finite measured value is exact; an infinite
        one only certifies vanishing inside the window.
        """
        per = []
        for i in range(self.j + 1):
            best = math.inf
            for vec in self.cells.values():
                if not vec[i].is_zero:
                    best = min(best, vec[i].vanishing_order_at_one())
            per.append(best)
        overall = min(per) if per else math.inf
        return per, overall

    # -- symmetry probes -----------------------------------------------------
    def swap_symmetry_check(self) -> bool:
        """coefficient(n2, n1) equals the coordinate-reversal of
        coefficient(n1, n2) times (-1)^k (the tau11 <-> tau22,
        X1 <-> X2 swap; its det-factor contributes the sign)."""
        sign = -1 if self.k % 2 else 1
        for (k1, k2), vec in self.cells.items():
            want = tuple(lp.scale(sign) for lp in reversed(vec))
            if self.vec_at((k2, k1)) != want:
                return False
        return True

    def r_inversion_check(self) -> bool:
        """r -> 1/r multiplies coordinate i by (-1)^(i+k) (the action of
        diag(1,-1,1,-1): z2 and X2 change sign, det contributes (-1)^k)."""
        for vec in self.cells.values():
            for i, lp in enumerate(vec):
                want = lp if (i + self.k) % 2 == 0 else lp.scale(-1)
                if lp.invert_exponent() != want:
                    return False
        return True

    # -- serialization --------------------------------------------------------------
    def to_json(self) -> dict:
        coeffs = []
        for key in _graded(self.cells):
            vec = self.cells[key]
            coeffs.append(
                {"n": list(key), "vec": [lp.to_json() for lp in vec]}
            )
        data = {
            "weight": [self.j, self.k],
            "character": self.character,
            "truncation": self.kN if self.denom == 1 else str(Fraction(self.kN, self.denom)),
            "coeffs": coeffs,
        }
        if self.denom != 1:
            data["denominator"] = self.denom
        if self.start:
            data["start"] = self.start
        return data

    @classmethod
    def from_json(cls, data: dict) -> "FourierExpansion":
        denom = data.get("denominator", 1)
        t = data["truncation"]
        kN = int(Fraction(t) * denom) if isinstance(t, str) else t
        cells = {
            tuple(entry["n"]): tuple(
                LaurentPoly.from_json(v) for v in entry["vec"]
            )
            for entry in data["coeffs"]
        }
        return cls(
            tuple(data["weight"]), data["character"], kN, cells,
            data.get("start", 0), denom, validate=False,
        )

    def to_text(self) -> str:
        """Display style of the printed expansions: one line per index pair,
        coordinates as Laurent polynomials in r."""
        lines = [
            f"weight ({self.j},{self.k})"
            + (" with character" if self.character else "")
            + f", truncation {self.truncation}"
        ]
        for key in _graded(self.cells):
            vec = self.cells[key]
            if self.denom == 1:
                label = f"({key[0]},{key[1]})"
            else:
                label = f"({Fraction(key[0], self.denom)},{Fraction(key[1], self.denom)})"
            body = ", ".join(str(lp) for lp in vec)
            if self.j:
                body = "(" + body + ")"
            lines.append(f"{label}: {body}")
        return "\n".join(lines)

    def __repr__(self):
        return (
            f"FourierExpansion(weight=({self.j},{self.k}), "
            f"character={self.character}, window=[{self.start},{self.kN}], "
            f"cells={len(self.cells)})"
        )


def constant_one(N: int) -> FourierExpansion:
    return FourierExpansion(
        (0, 0), False, N, {(0, 0): (LaurentPoly({0: 1}),)}, 0, 1
    )


def proportionality(a: FourierExpansion, b: FourierExpansion):
    """The constant c with a = c*b on the common window, or None.

    Returns 0 when a vanishes on a window where b does not.
    """
    if a.weight != b.weight or a.denom != b.denom:
        return None
    top = min(a.kN, b.kN)
    lo = min(a.start, b.start)
    c = None
    for k1 in range(lo, top + 1):
        for k2 in range(lo, top + 1):
            av, bv = a.vec_at((k1, k2)), b.vec_at((k1, k2))
            for x, y in zip(av, bv):
                if y.is_zero:
                    if not x.is_zero:
                        return None
                    continue
                e, yc = next(iter(y.c.items()))
                ratio = Fraction(x.c.get(e, 0)) / Fraction(yc)
                if c is None:
                    c = ratio
                elif ratio != c:
                    return None
                if x != y.scale(c):
                    return None
    return Fraction(0) if c is None else c


def rank_of_span(forms) -> int:
    if not forms:
        return 0
    first = forms[0]
    for g in forms[1:]:
        if g.weight != first.weight or g.denom != first.denom:
            raise WeightMismatch("rank over mixed weights")
    top = min(g.kN for g in forms)
    support = set()
    for g in forms:
        for key, vec in g.cells.items():
            if max(key) > top:
                continue
            for i, lp in enumerate(vec):
                for e in lp.c:
                    support.add((key, i, e))
    columns = sorted(support, key=lambda t: (t[0][0] + t[0][1], t))
    matrix = [
        [Fraction(g.vec_at(key)[i].c.get(e, 0)) for (key, i, e) in columns]
        for g in forms
    ]
    return linalg.rank(matrix)


def in_span(forms, candidate) -> bool:
    base = rank_of_span(forms)
    return rank_of_span(list(forms) + [candidate]) == base


# -- elliptic (degree-1) expansions -------------------------------------------


class EllipticExpansion:
    __slots__ = ("k", "N", "coeffs")

    def __init__(self, k, N, coeffs):
        self.k = k
        self.N = N
        self.coeffs = {n: c for n, c in coeffs.items() if c and 0 <= n <= N}

    @property
    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, n):
        return self.coeffs.get(n, 0)

    def __eq__(self, other):
        return (
            isinstance(other, EllipticExpansion)
            and self.k == other.k
            and self.N == other.N
            and self.coeffs == other.coeffs
        )

    def add(self, other):
        if self.k != other.k:
            raise WeightMismatch("elliptic weights differ")
        N = min(self.N, other.N)
        return EllipticExpansion(
            self.k, N,
            {n: self[n] + other[n] for n in range(N + 1)},
        )

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, c):
        return EllipticExpansion(
            self.k, self.N, {n: v * c for n, v in self.coeffs.items()}
        )

    def mul(self, other):
        N = min(self.N, other.N)
        out = {}
        for n1, c1 in self.coeffs.items():
            for n2, c2 in other.coeffs.items():
                if n1 + n2 <= N:
                    out[n1 + n2] = out.get(n1 + n2, 0) + c1 * c2
        return EllipticExpansion(self.k + other.k, N, out)

    def pow(self, e):
        result = self
        for _ in range(e - 1):
            result = result.mul(self)
        return result

    def proportional_to(self, other):
        """Constant c with self = c*other on the common window, or None."""
        N = min(self.N, other.N)
        c = None
        for n in range(N + 1):
            if other[n] == 0:
                if self[n] != 0:
                    return None
                continue
            ratio = Fraction(self[n]) / Fraction(other[n])
            if c is None:
                c = ratio
            elif ratio != c:
                return None
        return Fraction(0) if c is None else c

    def __repr__(self):
        terms = ", ".join(
            f"{n}: {frac_to_str(c)}" for n, c in sorted(self.coeffs.items())
        )
        return f"EllipticExpansion(k={self.k}, N={self.N}, {{{terms}}})"


def _sigma(n, power):
    return sum(d ** power for d in range(1, n + 1) if n % d == 0)


def elliptic_form(name: str, N: int) -> EllipticExpansion:
    key = name.strip().lower()
    if key == "e4":
        coeffs = {0: 1}
        coeffs.update({n: 240 * _sigma(n, 3) for n in range(1, N + 1)})
        return EllipticExpansion(4, N, coeffs)
    if key == "e6":
        coeffs = {0: 1}
        coeffs.update({n: -504 * _sigma(n, 5) for n in range(1, N + 1)})
        return EllipticExpansion(6, N, coeffs)
    if key == "delta":
        # q * prod_{n>=1} (1 - q^n)^24
        poly = [1] + [0] * N
        for m in range(1, N + 1):
            for _ in range(24):
                # multiply by (1 - q^m)
                for idx in range(N, m - 1, -1):
                    poly[idx] -= poly[idx - m]
        coeffs = {n + 1: poly[n] for n in range(N) }
        return EllipticExpansion(12, N, coeffs)
    raise ValueError(f"unknown elliptic form {name!r}")
