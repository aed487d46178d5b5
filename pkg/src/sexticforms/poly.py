"""Sparse exact multivariate polynomials over Q, Z or F_p.

These carry the symbolic side of the package: covariants of the universal
binary sextic in a0..a6, x1, x2 and the characteristic-2 invariants in
a0..a3, b0..b6.  Monomials are exponent tuples parallel to the ``vars``
tuple; the monomial order is graded lexicographic with earlier variables
larger.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import frac_from_str, frac_to_str, _norm_coeff
from .errors import DomainMismatch, NotDivisible

SEXTIC_VARS = ("a0", "a1", "a2", "a3", "a4", "a5", "a6", "x1", "x2")
CHAR2_VARS = ("a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4", "b5", "b6")


def _grlex(exps):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("vars", "terms", "modulus")

    def __init__(self, vars, terms=None, modulus=None):
        self.vars = tuple(vars)
        out = {}
        if terms:
            for exps, c in terms.items():
                c = _norm_coeff(c, modulus)
                if c:
                    out[tuple(exps)] = c
        self.terms = out
        self.modulus = modulus

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, vars, modulus=None):
        return cls(vars, {}, modulus)

    @classmethod
    def const(cls, vars, c, modulus=None):
        return cls(vars, {(0,) * len(vars): c}, modulus)

    @classmethod
    def monomial(cls, vars, exps, c=1, modulus=None):
        return cls(vars, {tuple(exps): c}, modulus)

    @classmethod
    def variable(cls, vars, name, modulus=None):
        vars = tuple(vars)
        i = vars.index(name)
        e = [0] * len(vars)
        e[i] = 1
        return cls(vars, {tuple(e): 1}, modulus)

    # -- basics -----------------------------------------------------------
    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.vars != other.vars or self.modulus != other.modulus:
            raise DomainMismatch("polynomial rings differ")

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.vars == other.vars
            and self.modulus == other.modulus
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.vars, self.modulus, tuple(sorted(self.terms.items()))))

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out, self.modulus)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return MultiPoly(self.vars, out, self.modulus)

    def __neg__(self):
        return MultiPoly(
            self.vars, {e: -c for e, c in self.terms.items()}, self.modulus
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MultiPoly(self.vars, out, self.modulus)

    __rmul__ = __mul__

    def scale(self, s):
        if not s:
            return MultiPoly.zero(self.vars, self.modulus)
        return MultiPoly(
            self.vars, {e: c * s for e, c in self.terms.items()}, self.modulus
        )

    def __pow__(self, n: int):
        result = MultiPoly.const(self.vars, 1, self.modulus)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and substitution -----------------------------------------
    def derivative(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = out.get(tuple(ne), 0) + c * e[i]
        return MultiPoly(self.vars, out, self.modulus)

    def substitute(self, mapping: dict) -> "MultiPoly":
        """Substitute polynomials for variables.

        Unmapped variables must exist in the target ring and map to
        themselves.  All images must share one ring.
        """
        target = next(iter(mapping.values()))
        tvars, mod = target.vars, target.modulus
        images = []
        for name in self.vars:
            if name in mapping:
                img = mapping[name]
                if img.vars != tvars or img.modulus != mod:
                    raise DomainMismatch("substitution images in different rings")
                images.append(img)
            else:
                images.append(MultiPoly.variable(tvars, name, mod))
        cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                if e == 1:
                    cache[key] = images[i]
                else:
                    cache[key] = power(i, e - 1) * images[i]
            return cache[key]

        acc = MultiPoly.zero(tvars, mod)
        for exps, c in self.terms.items():
            term = MultiPoly.const(tvars, c, mod)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    def evaluate(self, values: dict):
        """Evaluate at scalars; every variable must be assigned."""
        vals = [values[name] for name in self.vars]
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                if e:
                    term *= v ** e
            total += term
        if self.modulus is not None:
            total %= self.modulus
        return total

    def extend_ring(self, newvars, modulus="same") -> "MultiPoly":
        """Re-embed into a larger ring containing all current variables."""
        newvars = tuple(newvars)
        mod = self.modulus if modulus == "same" else modulus
        idx = [newvars.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(newvars)
            for i, x in zip(idx, e):
                ne[i] = x
            out[tuple(ne)] = c
        return MultiPoly(newvars, out, mod)

    # -- structure ----------------------------------------------------------
    def coefficient(self, **exps) -> object:
        """Coefficient of the monomial with the given exponents (rest zero)."""
        e = [0] * len(self.vars)
        for name, v in exps.items():
            e[self.vars.index(name)] = v
        return self.terms.get(tuple(e), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_on(self, names) -> int:
        idx = [self.vars.index(n) for n in names]
        return max((sum(e[i] for i in idx) for e in self.terms), default=0)

    def homogeneous_degree_on(self, names):
        """Common degree on a variable group, or None if inhomogeneous."""
        idx = [self.vars.index(n) for n in names]
        degs = {sum(e[i] for i in idx) for e in self.terms}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def leading_term(self):
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def content(self) -> Fraction:
        """Positive rational content (gcd of coefficients); 1 in F_p."""
        if self.modulus is not None or self.is_zero:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            f = Fraction(c)
            num = math.gcd(num, f.numerator)
            den = den * f.denominator // math.gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self) -> "MultiPoly":
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero or self.modulus is not None:
            return self
        c = self.content()
        _, lead = self.leading_term()
        if lead < 0:
            c = -c
        return self.scale(Fraction(1) / c)

    def exact_div(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient by a single divisor; NotDivisible on failure."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return MultiPoly.zero(self.vars, self.modulus)
        rem = dict(self.terms)
        eb, cb = other.leading_term()
        q = {}
        while rem:
            ea = max(rem, key=_grlex)
            ca = rem[ea]
            eq = tuple(x - y for x, y in zip(ea, eb))
            if any(x < 0 for x in eq):
                raise NotDivisible("polynomial division leaves a remainder")
            if self.modulus is not None:
                cq = ca * pow(cb, -1, self.modulus) % self.modulus
            else:
                cq = Fraction(ca) / Fraction(cb)
            q[eq] = cq
            for et, ct in other.terms.items():
                k = tuple(x + y for x, y in zip(eq, et))
                nv = rem.get(k, 0) - cq * ct
                if self.modulus is not None:
                    nv %= self.modulus
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return MultiPoly(self.vars, q, self.modulus)

    def reduce_mod(self, p: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            out[e] = _norm_coeff(c, p)
        return MultiPoly(self.vars, out, p)

    # -- rendering ------------------------------------------------------------
    def _coeff_str(self, c):
        if self.modulus is not None:
            return str(c)
        return frac_to_str(c)

    def to_text(self) -> str:
        """Canonical text: graded-lex descending, '*'-separated monomials."""
        if self.is_zero:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[e]
            factors = []
            for name, exp in zip(self.vars, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            mono = "*".join(factors)
            neg = self.modulus is None and c < 0
            mag = -c if neg else c
            if not mono:
                body = self._coeff_str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{self._coeff_str(mag)}*{mono}"
            parts.append(("-" if neg else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        terms = [
            {"e": list(e), "c": self._coeff_str(self.terms[e])}
            for e in sorted(self.terms, key=_grlex, reverse=True)
        ]
        return {
            "vars": list(self.vars),
            "modulus": self.modulus,
            "terms": terms,
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        mod = data.get("modulus")
        terms = {
            tuple(t["e"]): frac_from_str(t["c"]) for t in data["terms"]
        }
        return cls(tuple(data["vars"]), terms, mod)

    def __repr__(self):
        return self.to_text()
