"""Shared fixtures.  The deep windows are expensive enough to build once."""

import pytest

from grfilt.workbench import make
from grfilt.filtration import standard_filtration, weak_adic_filtration
from grfilt.graded import GradedTrunc


@pytest.fixture(scope="session")
def ring_r():
    # degcap 26 covers products of 12 generators (alpha has degree 2)
    return make("R_2x2", degcap=26)


@pytest.fixture(scope="session")
def filt12(ring_r):
    return standard_filtration(ring_r.pres, 12)


@pytest.fixture(scope="session")
def gr12(filt12):
    return GradedTrunc(filt12)


@pytest.fixture(scope="session")
def classes12(gr12, ring_r):
    return gr12.generator_classes(ring_r.pres)


@pytest.fixture(scope="session")
def rprime():
    return make("R_prime")


@pytest.fixture(scope="session")
def adic10(rprime):
    return weak_adic_filtration(rprime.pres, 10)


@pytest.fixture(scope="session")
def gr_adic(adic10):
    return GradedTrunc(adic10)


@pytest.fixture(scope="session")
def classes_adic(gr_adic, rprime):
    return gr_adic.generator_classes(rprime.pres)
