import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from viscobessel.errors import DomainError
from viscobessel.specfun import gamma_fn


def test_gamma_one():
    assert gamma_fn(1.0) == pytest.approx(1.0, rel=1e-14)


def test_gamma_half_is_sqrt_pi():
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)


def test_gamma_3p5_from_recurrence():
    # Gamma(3.5) = 2.5 * 1.5 * 0.5 * Gamma(0.5)
    expected = 2.5 * 1.5 * 0.5 * math.sqrt(math.pi)
    assert expected == pytest.approx(3.3233509704478426, rel=1e-15)
    assert gamma_fn(3.5) == pytest.approx(expected, rel=1e-12)


def test_gamma_against_stdlib_sweep():
    x = 0.013
    while x < 170.0:
        ref = math.gamma(x)
        assert gamma_fn(x) == pytest.approx(ref, rel=1e-12), f"x={x}"
        x *= 1.11


def test_gamma_small_arguments():
    for x in (1e-8, 1e-4, 0.1, 0.4999):
        assert gamma_fn(x) == pytest.approx(math.gamma(x), rel=1e-12)


@given(st.floats(min_value=0.1, max_value=80.0))
def test_gamma_recurrence_property(x):
    assert gamma_fn(x + 1.0) == pytest.approx(x * gamma_fn(x), rel=1e-12)


@pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.nan, math.inf])
def test_gamma_domain_errors(bad):
    with pytest.raises(DomainError):
        gamma_fn(bad)
