import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bisect_bessel_zero
from viscobessel.errors import DomainError
from viscobessel.specfun import (
    ZeroTable,
    bessel_j,
    bessel_j_zeros,
    cache_path,
    load_zero_table,
    save_zero_table,
    zero_table,
)
from viscobessel.specfun.zeros import CACHE_ENV_VAR, CACHE_FORMAT_HEADER


def test_first_three_zeros_of_j0_vs_bisection_oracle():
    oracle = [
        bisect_bessel_zero(0.0, 2.0, 3.0),
        bisect_bessel_zero(0.0, 5.0, 6.0),
        bisect_bessel_zero(0.0, 8.0, 9.0),
    ]
    assert oracle == pytest.approx(
        [2.404825557695773, 5.520078110286311, 8.653727912911013], abs=1e-12
    )
    table = bessel_j_zeros(0.0, 3)
    assert list(table.zeros) == pytest.approx(oracle, abs=1e-10)


def test_cosine_order_zeros():
    # J_{-1/2}(x) is proportional to cos(x)/sqrt(x)
    table = bessel_j_zeros(-0.5, 2)
    assert list(table.zeros) == pytest.approx([math.pi / 2, 3 * math.pi / 2], abs=1e-10)


def test_rayleigh_partial_sum_200():
    table = bessel_j_zeros(0.0, 200)
    partial = table.rayleigh_partial()
    tail = 0.25 - partial
    assert 0.0 < tail < 1.0 / (math.pi**2 * 200.0)


@pytest.mark.parametrize("nu", [-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0])
def test_table_invariants(nu):
    table = bessel_j_zeros(nu, 120)
    zs = table.zeros
    assert all(b > a for a, b in zip(zs, zs[1:]))
    # spacing approaches pi
    for a, b in zip(zs[49:], zs[50:]):
        assert abs((b - a) - math.pi) < 0.01
    # the tabulated zeros really are zeros of this package's J
    assert max(abs(bessel_j(nu, z)) for z in zs) <= 1e-9
    # Rayleigh partial sums approach the limit from below, within the bound
    gap = table.rayleigh_limit() - table.rayleigh_partial()
    assert 0.0 < gap <= table.rayleigh_tail_bound()


@pytest.mark.parametrize("nu", [0.0, 0.5, 2.0, 5.0])
def test_zeros_against_mpmath(nu):
    table = bessel_j_zeros(nu, 200)
    for n in (1, 3, 40, 200):
        ref = float(mpmath.besseljzero(nu, n))
        assert table.zeros[n - 1] == pytest.approx(ref, abs=1e-10)


def test_zero_table_validation():
    with pytest.raises(DomainError):
        ZeroTable(order=-1.5, zeros=(1.0,))
    with pytest.raises(DomainError):
        ZeroTable(order=0.0, zeros=(2.0, 1.0))
    with pytest.raises(DomainError):
        ZeroTable(order=0.0, zeros=())
    with pytest.raises(DomainError):
        bessel_j_zeros(0.0, 0)


def test_cache_round_trip_bit_exact(tmp_path):
    table = bessel_j_zeros(0.5, 25)
    path = tmp_path / "zeros.txt"
    save_zero_table(table, path)
    loaded = load_zero_table(path)
    assert loaded.order == table.order
    assert loaded.zeros == table.zeros  # bit-exact


def test_cache_file_format(tmp_path):
    table = bessel_j_zeros(-0.5, 2)
    path = save_zero_table(table, tmp_path / "z.txt")
    lines = path.read_text().splitlines()
    assert lines[0] == CACHE_FORMAT_HEADER == "viscobessel-zeros v1"
    assert lines[1] == "nu=-0.5 n=2"
    assert len(lines) == 4
    assert float(lines[2]) == table.zeros[0]


def test_cache_idempotent_bytes(tmp_path):
    p1 = save_zero_table(bessel_j_zeros(1.0, 10), tmp_path / "a.txt")
    first = p1.read_bytes()
    save_zero_table(bessel_j_zeros(1.0, 10), tmp_path / "a.txt")
    assert p1.read_bytes() == first


def test_zero_table_uses_cache_dir(tmp_path):
    t1 = zero_table(0.0, 12, cache_dir=tmp_path)
    path = cache_path(0.0, 12, tmp_path)
    assert path.exists()
    t2 = zero_table(0.0, 12, cache_dir=tmp_path)
    assert t2.zeros == t1.zeros


def test_cache_env_var_override(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    assert str(cache_path(0.0, 5)).startswith(str(tmp_path))


def test_load_rejects_foreign_file(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a zero table\n1.0\n")
    with pytest.raises(DomainError):
        load_zero_table(bad)


@given(
    st.lists(
        st.floats(min_value=1e-3, max_value=7.0, allow_nan=False), min_size=1, max_size=30
    )
)
def test_cache_round_trip_property(tmp_path_factory, increments):
    total = 0.0
    zeros = []
    for inc in increments:
        total += inc
        zeros.append(total)
    table = ZeroTable(order=0.25, zeros=tuple(zeros))
    path = tmp_path_factory.mktemp("zc") / "t.txt"
    save_zero_table(table, path)
    assert load_zero_table(path).zeros == table.zeros
