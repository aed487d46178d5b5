from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sexticforms.errors import NotDivisible
from sexticforms.poly import CHAR2_VARS, SEXTIC_VARS, MultiPoly


def _mono(exps, c=1):
    return MultiPoly.monomial(SEXTIC_VARS, exps, c)


small_polys = st.dictionaries(
    st.tuples(*[st.integers(min_value=0, max_value=2) for _ in range(9)]),
    st.integers(min_value=-9, max_value=9),
    max_size=4,
).map(lambda terms: MultiPoly(SEXTIC_VARS, terms))


def test_constructors_prune_zeros():
    p = MultiPoly(SEXTIC_VARS, {(0,) * 9: 0, (1,) + (0,) * 8: 2})
    assert len(p.terms) == 1
    assert MultiPoly.zero(SEXTIC_VARS).is_zero


def test_derivative_and_substitute():
    a0 = MultiPoly.variable(SEXTIC_VARS, "a0")
    x1 = MultiPoly.variable(SEXTIC_VARS, "x1")
    p = a0 * x1**3
    assert p.derivative("x1") == a0.scale(3) * x1**2
    q = p.substitute({"x1": x1 + MultiPoly.variable(SEXTIC_VARS, "x2")})
    assert q.degree_on(["x1", "x2"]) == 3
    assert q.coefficient(a0=1, x1=1, x2=2) == 3


def test_homogeneity_and_content():
    p = _mono((2, 0, 0, 0, 0, 0, 0, 0, 0), 6) + _mono(
        (0, 1, 1, 0, 0, 0, 0, 0, 0), -9
    )
    assert p.homogeneous_degree_on(SEXTIC_VARS[:7]) == 2
    assert p.content() == 3
    prim = p.primitive()
    assert prim.content() == 1


def test_exact_div_and_failure():
    a0 = MultiPoly.variable(SEXTIC_VARS, "a0")
    a1 = MultiPoly.variable(SEXTIC_VARS, "a1")
    p = (a0 + a1) * (a0 - a1)
    assert p.exact_div(a0 + a1) == a0 - a1
    with pytest.raises(NotDivisible):
        (p + MultiPoly.const(SEXTIC_VARS, 1)).exact_div(a0 + a1)


def test_exact_div_mod2():
    a = MultiPoly.variable(CHAR2_VARS, "a0", 2) + MultiPoly.variable(
        CHAR2_VARS, "a1", 2
    )
    sq = a * a
    assert sq.exact_div(a) == a


def test_reduce_mod_and_evaluate():
    p = _mono((1, 0, 0, 0, 0, 0, 1, 0, 0), 120) + _mono(
        (0, 0, 0, 2, 0, 0, 0, 0, 0), -3
    )
    r = p.reduce_mod(3)
    assert r.coefficient(a0=1, a6=1) == 0
    env = {name: 1 for name in SEXTIC_VARS}
    assert p.evaluate(env) == 117


def test_to_text_canonical():
    p = (
        _mono((1, 0, 0, 0, 0, 0, 1, 0, 0), 120)
        + _mono((0, 1, 0, 0, 0, 1, 0, 0, 0), -20)
        + _mono((0, 0, 1, 0, 1, 0, 0, 0, 0), 8)
        + _mono((0, 0, 0, 2, 0, 0, 0, 0, 0), -3)
    )
    assert p.to_text() == "120*a0*a6 - 20*a1*a5 + 8*a2*a4 - 3*a3^2"


def test_json_round_trip():
    p = _mono((1, 2, 0, 0, 0, 0, 0, 1, 0), Fraction(7, 2))
    assert MultiPoly.from_json(p.to_json()) == p


@settings(max_examples=200, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero


@settings(max_examples=200, deadline=None)
@given(small_polys, small_polys)
def test_exact_div_inverts_mul(a, b):
    if b.is_zero:
        return
    assert (a * b).exact_div(b) == a
