import math

import pytest

from oracles import erfc_quadrature
from viscobessel.errors import DomainError
from viscobessel.specfun import erfc, erfcx


def test_erfc_at_zero():
    assert erfc(0.0) == 1.0


def test_erfc_one_vs_quadrature_oracle():
    oracle = erfc_quadrature(1.0)
    assert oracle == pytest.approx(0.15729920705028513, rel=1e-12)
    assert erfc(1.0) == pytest.approx(oracle, rel=1e-12)


def test_erfcx_large_x_asymptote():
    # erfcx(x) ~ 1/(x sqrt(pi)) to leading order
    assert erfcx(50.0) == pytest.approx(1.0 / (50.0 * math.sqrt(math.pi)), rel=1e-3)


def test_erfcx_scaling_identity_on_0_5():
    for i in range(51):
        x = 0.1 * i
        assert erfcx(x) * math.exp(-x * x) == pytest.approx(erfc(x), rel=1e-12)


def test_erfc_against_stdlib():
    x = -6.0
    while x < 26.0:
        ref = math.erfc(x)
        if ref > 1e-290:
            assert erfc(x) == pytest.approx(ref, rel=2e-13), f"x={x}"
        x += 0.17


def test_erfc_negative_reflection():
    assert erfc(-1.0) == pytest.approx(2.0 - erfc(1.0), rel=1e-14)


def test_erfcx_strictly_decreasing():
    values = [erfcx(0.05 * i) for i in range(200)]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_erfcx_overflow_for_very_negative():
    with pytest.raises(OverflowError):
        erfcx(-27.0)


@pytest.mark.parametrize("bad", [math.nan, math.inf])
def test_non_finite_rejected(bad):
    with pytest.raises(DomainError):
        erfc(bad)
    with pytest.raises(DomainError):
        erfcx(bad)
