import pytest

from weylzip import ZipDatum, build_group


@pytest.fixture(scope="session")
def a2():
    return build_group("A2")


@pytest.fixture(scope="session")
def b2():
    return build_group("B2")


@pytest.fixture(scope="session")
def a3():
    return build_group("A3")


@pytest.fixture(scope="session")
def z_a2(a2):
    """The running example: (A2, I={1}, J={2}, psi: 1 -> 2)."""
    return ZipDatum(a2, {1}, {2}, {1: 2})
