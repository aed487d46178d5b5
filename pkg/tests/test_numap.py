import math

import pytest

from sexticforms import covariants as cv
from sexticforms import numap, qexp, theta
from sexticforms.errors import NotDivisible, OddOrder


def test_weight_bookkeeping():
    assert numap.weight_of_covariant(1, 6) == (6, -2)
    assert numap.weight_of_covariant(2, 0) == (0, 2)
    assert numap.weight_of_covariant(10, 0) == (0, 10)
    with pytest.raises(OddOrder):
        numap.weight_of_covariant(2, 3)


def test_nu_of_universal_sextic_is_seed(sextic, chi68_n2):
    # chi_10 * nu(f) as built from the coordinates reproduces chi_6_8
    out = numap.nu_raw(sextic, 2)
    assert (out.j, out.k) == (6, 8)
    assert out.agrees_with(chi68_n2)


def test_nu_raw_multiplicative():
    a, b = cv.invariant("A"), cv.invariant("B")
    lhs = numap.nu_raw(a * b, 2)
    rhs = numap.nu_raw(a, 2).mul(numap.nu_raw(b, 2))
    assert lhs.agrees_with(rhs)


def test_nu_raw_discriminant_proportional_chi10_11():
    nd = numap.nu_raw(cv.invariant("D"), 2)
    p11 = theta.chi_10(2).pow(11)
    assert qexp.proportionality(nd, p11) == 4096


def test_nu_normalized_A():
    a = cv.invariant("A")
    with pytest.raises(NotDivisible):
        numap.nu_normalized(a, 0, 2)
    res = numap.nu_normalized(a, 1, 2)
    assert (res.expansion.j, res.expansion.k) == (0, 12)
    assert res.expansion.siegel_phi().is_zero
    assert res.chi10_power_applied == 1


def test_minimal_chi10_powers():
    assert numap.minimal_chi10_power(cv.universal_sextic()) == 1
    assert numap.minimal_chi10_power(cv.invariant("A")) == 1
    assert numap.minimal_chi10_power(cv.invariant("D")) == 0
    assert numap.minimal_chi10_power(cv.invariant("E")) == 2


def test_transvectant_expansion_commutes(sextic):
    # q-side transvection of nu(f) with itself against the symbolic route
    nf = numap.nu_raw(sextic, 2)
    lhs = numap.transvectant_expansion(nf, nf, 6)
    rhs = numap.nu_raw(cv.grace_young("C2,0"), 2)
    assert qexp.proportionality(lhs, rhs) == 1


def test_measured_powers_at_most_certified():
    a = cv.invariant("A")
    certified, measured = numap.measured_chi10_powers(a, 2)
    assert measured <= certified
