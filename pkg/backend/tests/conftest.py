"""
Pytest configuration and shared fixtures.
"""
import json

import pytest
from hypothesis import HealthCheck, settings

from app.algebra.constructors import build_poly_quotient, build_zn, cyclic, dihedral, symmetric_group
from app.algebra.finite import FiniteMagma
from app.config import get_settings

settings.register_profile(
    "alglab",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("alglab")


@pytest.fixture(autouse=True)
def fresh_settings():
    """Drop cached settings so monkeypatched ALGLAB_* variables apply."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def z6():
    return build_zn(6)


@pytest.fixture
def z10():
    return build_zn(10)


@pytest.fixture
def z12():
    return build_zn(12)


@pytest.fixture
def z10_mul(z10):
    """(Z_10, *) as a semigroup."""
    return z10.multiplicative_magma()


@pytest.fixture
def gf8():
    """Z_2[x]/(x^3 + x + 1), coefficients constant term first."""
    return build_poly_quotient(2, [1, 1, 0, 1])


@pytest.fixture
def c6():
    return cyclic(6)


@pytest.fixture
def d3():
    return dihedral(3)


@pytest.fixture
def s3():
    return symmetric_group(3)


@pytest.fixture
def left_zero_band():
    """x*y = x on three elements: associative, no identity."""
    return FiniteMagma.from_table([[0, 0, 0], [1, 1, 1], [2, 2, 2]], name="L3")


@pytest.fixture
def write_descriptor(tmp_path):
    """Write a descriptor dict to a JSON file and return its path."""
    def write(data, name="structure.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write
