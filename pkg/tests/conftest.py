import pytest
from hypothesis import settings

from frobring import ring_matrix, ring_product, ring_zn
from frobring.catalog import (
    corpus_rings,
    cyclic_cayley,
    double_nil_ring,
    gf4,
    gf4_frobenius,
    gf4_skew_quotient,
    z2_quotient_x3_minus_1,
    z4_quotient_x2_minus_1,
)
from frobring.finring import ring_group_algebra

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def z2():
    return ring_zn(2)


@pytest.fixture(scope="session")
def z3():
    return ring_zn(3)


@pytest.fixture(scope="session")
def z4():
    return ring_zn(4)


@pytest.fixture(scope="session")
def z2xz4():
    return ring_product(ring_zn(2), ring_zn(4))


@pytest.fixture(scope="session")
def f4():
    return gf4()


@pytest.fixture(scope="session")
def f4_frob(f4):
    return gf4_frobenius(f4)


@pytest.fixture(scope="session")
def m2f2():
    return ring_matrix(ring_zn(2), 2)


@pytest.fixture(scope="session")
def dn8():
    return double_nil_ring()


@pytest.fixture(scope="session")
def z2c2():
    return ring_group_algebra(2, cyclic_cayley(2), label="Z2C2")


@pytest.fixture(scope="session")
def z3c3():
    return ring_group_algebra(3, cyclic_cayley(3), label="Z3C3")


@pytest.fixture(scope="session")
def q_gf4():
    return gf4_skew_quotient()


@pytest.fixture(scope="session")
def q_z4():
    return z4_quotient_x2_minus_1()


@pytest.fixture(scope="session")
def q_z2_cubic():
    return z2_quotient_x3_minus_1()


@pytest.fixture(scope="session")
def corpus():
    return corpus_rings()
