"""The substitution map from covariants of binary sextics to Siegel
modular forms.

A covariant of degree d and order j maps to a meromorphic form of weight
(j, d - j/2); poles along the product locus are cleared by powers of
chi_10.  The meromorphic coordinates are never materialized: we substitute
the holomorphic coordinates beta_i of chi_6_8 (beta_i = chi_10 * alpha_i)
for a_i, so

    nu_raw(c) = chi_10^d * nu(c),   weight (j, 11d - j/2),

and then divide by chi_10 as many times as requested.  A failing division
(NotDivisible) is the detection mechanism for genuine non-holomorphy.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .covariants import Covariant, a11_order_bound
from .errors import NotDivisible, OddOrder
from .qexp import FourierExpansion
from .theta import chi_6_8


class NuResult:
    __slots__ = (
        "expansion",
        "covariant_degree",
        "covariant_order",
        "chi10_power_applied",
        "holomorphic",
    )

    def __init__(self, expansion, d, j, m, holomorphic):
        self.expansion = expansion
        self.covariant_degree = d
        self.covariant_order = j
        self.chi10_power_applied = m
        self.holomorphic = holomorphic

    def __repr__(self):
        return (
            f"NuResult(weight={self.expansion.weight}, degree="
            f"{self.covariant_degree}, order={self.covariant_order}, "
            f"chi10_power={self.chi10_power_applied}, "
            f"holomorphic={self.holomorphic})"
        )


def weight_of_covariant(d: int, j: int):
    if j % 2:
        raise OddOrder("covariant order must be even")
    return (j, d - j // 2)


def _beta_coordinates(N: int):
    """The seven coordinates of chi_6_8 as scalar windowed series."""
    seed = chi_6_8(N)
    out = []
    for i in range(7):
        cells = {}
        for key, vec in seed.cells.items():
            if not vec[i].is_zero:
                cells[key] = (vec[i],)
        out.append(
            FourierExpansion(
                (0, 0), False, seed.kN, cells, seed.start, 1, validate=False
            )
        )
    return out


def nu_raw(c: Covariant, N: int) -> FourierExpansion:
    """Substitute coordinate i of chi_6_8 for a_i (and X_i for x_i)."""
    weight_of_covariant(c.degree, c.order)  # validates even order
    if c.is_zero:
        raise ValueError("cannot substitute into the zero covariant")
    d, j = c.degree, c.order
    if N < 1:
        raise ValueError("truncation must be at least 1")
    beta = _beta_coordinates(N)
    powers = {}

    def beta_power(i, e):
        key = (i, e)
        if key not in powers:
            if e == 1:
                powers[key] = beta[i]
            else:
                powers[key] = beta_power(i, e - 1).mul(beta[i])
        return powers[key]

    coords = [None] * (j + 1)
    for exps, coeff in c.poly.terms.items():
        series = None
        for i in range(7):
            if exps[i]:
                p = beta_power(i, exps[i])
                series = p if series is None else series.mul(p)
        series = series.scale(coeff)
        idx = exps[8]  # x2-exponent picks the coordinate
        coords[idx] = series if coords[idx] is None else coords[idx].add(series)
    kN = N + d - 1
    cells = {}
    for i, series in enumerate(coords):
        if series is None:
            continue
        for key, vec in series.cells.items():
            if max(key) > kN:
                continue
            cell = cells.get(key)
            if cell is None:
                cell = [None] * (j + 1)
                cells[key] = cell
            cell[i] = vec[0]
    from .arith import LaurentPoly

    zero = LaurentPoly()
    built = {
        key: tuple(zero if x is None else x for x in cell)
        for key, cell in cells.items()
    }
    return FourierExpansion(
        (j, 11 * d - j // 2), False, kN, built, d, 1
    )


def nu_normalized(c: Covariant, m: int, N: int) -> NuResult:
    """chi_10^m * nu(c): nu_raw divided (d - m) times by chi_10.

    Raises NotDivisible when chi_10^m * nu(c) is not holomorphic.
    """
    d, j = c.degree, c.order
    if not 0 <= m <= d:
        raise ValueError("chi_10 power must satisfy 0 <= m <= degree")
    e = nu_raw(c, N)
    for _ in range(d - m):
        e = e.exact_div_chi10()
    return NuResult(e, d, j, m, True)


def minimal_chi10_power(c: Covariant) -> int:
    """Least m with a11_order_bound(c) + 2m >= 0; certified sufficient
    (the actual minimum may be smaller, see measured_chi10_powers)."""
    bound = a11_order_bound(c)
    return max(0, -(bound // 2))


def measured_chi10_powers(c: Covariant, N: int):
    """(certified, measured) chi_10 powers: starting from the certified
    bound, keep dividing until a division fails."""
    certified = minimal_chi10_power(c)
    result = nu_normalized(c, certified, N)
    e = result.expansion
    measured = certified
    while measured > 0:
        try:
            e = e.exact_div_chi10()
        except NotDivisible:
            break
        measured -= 1
    return certified, measured


def transvectant_expansion(
    g: FourierExpansion, h: FourierExpansion, k: int
) -> FourierExpansion:
    """Transvectant of vector-valued expansions, differentiating the
    symbol variables X1, X2 only.  Matches the symbolic transvectant under
    substitution: scalar factors (powers of chi_10) pass through."""
    m, n = g.j, h.j
    if k > m or k > n:
        from .errors import OrderTooSmall

        raise OrderTooSmall(f"transvectant index {k} exceeds order {min(m, n)}")
    if k == 0:
        return g.mul(h)

    def dx1(a: FourierExpansion) -> FourierExpansion:
        order = a.j
        cells = {
            key: tuple(
                vec[i].scale(order - i) for i in range(order)
            )
            for key, vec in a.cells.items()
        }
        return FourierExpansion(
            (order - 1, a.k), a.character, a.kN, cells, a.start, a.denom,
            validate=False,
        )

    def dx2(a: FourierExpansion) -> FourierExpansion:
        order = a.j
        cells = {
            key: tuple(
                vec[i + 1].scale(i + 1) for i in range(order)
            )
            for key, vec in a.cells.items()
        }
        return FourierExpansion(
            (order - 1, a.k), a.character, a.kN, cells, a.start, a.denom,
            validate=False,
        )

    def partials(a):
        row = [a]
        for _ in range(k):
            row = [dx1(q) for q in row] + [dx2(row[-1])]
        return row

    gp = partials(g)
    hp = partials(h)
    acc = None
    for idx in range(k + 1):
        term = gp[idx].mul(hp[k - idx])
        term = term.scale((-1) ** idx * math.comb(k, idx))
        acc = term if acc is None else acc.add(term)
    norm = Fraction(
        math.factorial(m - k) * math.factorial(n - k),
        math.factorial(m) * math.factorial(n),
    )
    acc = acc.scale(norm)
    # the q-side transvectant raises the scalar weight by k
    return FourierExpansion(
        (m + n - 2 * k, g.k + h.k + k),
        acc.character,
        acc.kN,
        acc.cells,
        acc.start,
        acc.denom,
        validate=False,
    )
