import pytest

from sexticforms import qexp, ringlab
from sexticforms.errors import OddWeight, UnknownName


def test_registry_names():
    names = ringlab.registry_names()
    for expected in (
        "chi5",
        "chi6_3",
        "chi10",
        "chi6_8",
        "psi4",
        "psi6",
        "chi12",
        "chi8_8",
        "chi4_10",
        "chi35",
    ):
        assert expected in names


def test_unknown_name():
    with pytest.raises(UnknownName):
        ringlab.named_form("nosuch", 2)


def test_even_dimensions():
    dims = [ringlab.even_dimension(k) for k in range(0, 32, 2)]
    assert dims == [1, 0, 1, 1, 1, 2, 3, 2, 4, 4, 5, 6, 8, 7, 10, 11]
    with pytest.raises(OddWeight):
        ringlab.even_dimension(35)


def test_psi4_boundary():
    psi4 = ringlab.named_form("psi4", 3).expansion
    e4 = qexp.elliptic_form("E4", 3)
    assert psi4.siegel_phi().proportional_to(e4) == 1
    # restriction is the rank-1 product of two copies of E4
    slice0 = psi4.restrict_to_a11()[0]
    for (n1, n2), val in slice0.items():
        assert val == e4[n1] * e4[n2]


def test_psi6_boundary():
    psi6 = ringlab.named_form("psi6", 3).expansion
    e6 = qexp.elliptic_form("E6", 3)
    assert psi6.siegel_phi().proportional_to(e6) == 1


def test_chi12_is_cusp():
    chi12 = ringlab.named_form("chi12", 3).expansion
    assert (chi12.j, chi12.k) == (0, 12)
    assert chi12.siegel_phi().is_zero


def test_vector_valued_cusp_forms():
    for name, weight in (("chi8_8", (8, 8)), ("chi4_10", (4, 10))):
        form = ringlab.named_form(name, 2).expansion
        assert (form.j, form.k) == weight
        assert form.start >= 1


def test_chi35_shape():
    x35 = ringlab.named_form("chi35", 2).expansion
    assert (x35.j, x35.k) == (0, 35)
    assert x35.start == 2
    per, overall = x35.a11_order()
    assert overall == 1


def test_disk_cache_round_trip(tmp_path):
    first = ringlab.named_form("chi10", 2, str(tmp_path))
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    second = ringlab.named_form("chi10", 2, str(tmp_path))
    assert second.expansion == first.expansion


def test_even_generation_small():
    rows = ringlab.verify_even_generation(12, 3)
    assert all(r["status"] == "PASS" for r in rows)


def test_nu_consistency_report():
    rep = ringlab.nu_consistency_report(2)
    assert rep["status"] == "PASS"
    assert rep["constant"] == "4096"


def test_s68_probe():
    rep = ringlab.dim_s68_probe(2)
    assert rep["status"] == "PASS"
