import pytest

from sexticforms import covariants, theta


@pytest.fixture(scope="session")
def sextic():
    return covariants.universal_sextic()


@pytest.fixture(scope="session")
def chi68_n2():
    return theta.chi_6_8(2)


@pytest.fixture(scope="session")
def chi68_n3():
    return theta.chi_6_8(3)


@pytest.fixture(scope="session")
def chi10_n3():
    return theta.chi_10(3)
