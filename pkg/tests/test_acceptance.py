"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
Tolerances are pinned here and nowhere else.
"""

import math

import numpy as np
import pytest

from oracles import erfc_quadrature
from viscobessel.cli import main as cli_main
from viscobessel.fracsim import LoadHistory, interconversion_check, simulate_asymptotic
from viscobessel.laplace import invert_talbot
from viscobessel.models import (
    ModelParams,
    asym_G_time,
    asym_J_time,
    bessel_G_time,
    bessel_J_time,
    eval_G_curve,
    eval_J_curve,
    glass_limits,
    laplace_sG,
    laplace_sJ,
    reciprocity_residual,
    short_time_agreement,
)
from viscobessel.specfun import (
    bessel_j,
    bessel_j_zeros,
    mittag_leffler_half,
    mittag_leffler_series,
)

RECIPROCITY_NUS = (-0.8, -0.5, 0.0, 0.5, 1.0)


def _report(number, name, passed, detail):
    status = "PASS" if passed else "FAIL"
    print(f"criterion {number:02d} [{name}]: {status} ({detail})")
    assert passed, f"criterion {number} [{name}] failed: {detail}"


def test_criterion_01_zero_tables():
    worst_residual = 0.0
    worst_gap_ratio = 0.0
    for nu in (-0.5, 0.0, 0.5, 1.0, 2.0, 3.0):
        table = bessel_j_zeros(nu, 200)
        worst_residual = max(
            worst_residual, max(abs(bessel_j(nu, z)) for z in table.zeros)
        )
        gap = table.rayleigh_limit() - table.rayleigh_partial()
        ok = 0.0 < gap <= table.rayleigh_tail_bound()
        worst_gap_ratio = max(worst_gap_ratio, gap / table.rayleigh_tail_bound())
        if not ok:
            worst_gap_ratio = math.inf
    passed = worst_residual <= 1e-9 and worst_gap_ratio <= 1.0
    _report(
        1,
        "zero tables",
        passed,
        f"max |J(j)| = {worst_residual:.2e} <= 1e-9, "
        f"Rayleigh gap/bound = {worst_gap_ratio:.3f} <= 1",
    )


def test_criterion_02_reciprocity():
    s_grid = [10.0**k for k in range(-2, 5)]
    families = [ModelParams("bessel", nu=nu) for nu in RECIPROCITY_NUS]
    families += [ModelParams("asymptotic", nu=nu) for nu in RECIPROCITY_NUS]
    families.append(ModelParams("fmax", a1=1.0, b1=1.0))
    worst = max(reciprocity_residual(p, s_grid) for p in families)
    _report(2, "reciprocity", worst <= 1e-10, f"max |sJ*sG - 1| = {worst:.2e} <= 1e-10")


def test_criterion_03_series_vs_laplace_oracle():
    ts = np.geomspace(0.05, 2.0, 20)
    worst = 0.0
    for nu in (-0.5, 0.0, 0.5, 1.0):
        params = ModelParams("bessel", nu=nu)
        j_direct = eval_J_curve(params, ts)
        g_direct = eval_G_curve(params, ts)
        for t, jv, gv in zip(ts, j_direct, g_direct):
            j_inv = invert_talbot(lambda s: laplace_sJ(params, s) / s, float(t), 64)
            g_inv = invert_talbot(lambda s: laplace_sG(params, s) / s, float(t), 64)
            worst = max(worst, abs(j_inv - jv) / abs(jv), abs(g_inv - gv) / abs(gv))
    _report(
        3,
        "series vs Talbot oracle",
        worst <= 1e-6,
        f"max relative gap = {worst:.2e} <= 1e-6",
    )


def test_criterion_04_glass_limits():
    families = [ModelParams("bessel", nu=nu) for nu in RECIPROCITY_NUS]
    families += [ModelParams("asymptotic", nu=nu) for nu in RECIPROCITY_NUS]
    families.append(ModelParams("fmax", a1=1.0, b1=1.0))
    worst = 0.0
    for p in families:
        jg, gg = glass_limits(p)
        worst = max(worst, abs(jg - 1.0), abs(gg - 1.0), abs(jg * gg - 1.0))
    _report(4, "glass limits", worst <= 1e-6, f"max |limit - 1| = {worst:.2e} <= 1e-6")


def test_criterion_05_mittag_leffler():
    worst = 0.0
    for z in np.linspace(-2.0, 0.0, 41):
        series = mittag_leffler_series(0.5, float(z), 60)
        worst = max(worst, abs(mittag_leffler_half(float(z)) - series))
    reference = math.e * erfc_quadrature(1.0)  # independent quadrature oracle
    point_err = abs(mittag_leffler_half(-1.0) - reference)
    assert abs(reference - 0.42758357615) < 1e-9
    passed = worst <= 1e-10 and point_err <= 1e-9
    _report(
        5,
        "Mittag-Leffler",
        passed,
        f"max |erfcx route - series| = {worst:.2e} <= 1e-10, "
        f"|E(-1) - oracle| = {point_err:.2e} <= 1e-9",
    )


def test_criterion_06_point_values():
    j_err = abs(bessel_J_time(0.0, 2.0) - 17.3333333)
    g_rel = abs(bessel_G_time(0.0, 2.0) - 6.54e-6) / 6.54e-6
    # the quoted 3.2567583 is 1 + 4/sqrt(pi) rounded to eight digits; the
    # criterion is checked against the full-precision derived value
    j_as_err = abs(asym_J_time(0.0, 1.0) - (1.0 + 4.0 / math.sqrt(math.pi)))
    passed = j_err <= 1e-6 and g_rel <= 0.01 and j_as_err <= 1e-9
    _report(
        6,
        "derived point values",
        passed,
        f"|J(2;0)-17.3333333| = {j_err:.2e} <= 1e-6, "
        f"G(2;0) off by {100 * g_rel:.2f}% <= 1%, "
        f"|J_as(1;0)-(1+4/sqrt(pi))| = {j_as_err:.2e} <= 1e-9",
    )


def test_criterion_07_short_time_agreement():
    grid = (0.01, 0.02, 0.05, 0.1, 0.2)
    all_consistent = True
    for nu in (-0.5, 0.0, 1.0):
        report = short_time_agreement(nu, grid)
        all_consistent = all_consistent and report.consistent
    _report(
        7,
        "short-time agreement",
        all_consistent,
        "r(t)/sqrt(t) decreases toward t -> 0 for nu in {-0.5, 0, 1}",
    )


def test_criterion_08_simulator_convergence():
    dts = (4e-3, 2e-3, 1e-3)
    # The creep branch converges at exactly first order (leading error
    # dt/sqrt(pi)), so the finite-refinement estimate approaches 1 from below
    # at the 1e-6 level; the slack covers that estimator resolution only.
    order_resolution = 0.01
    results = []
    for kind, target in (("strain", asym_G_time(0.0, 1.0)), ("stress", asym_J_time(0.0, 1.0))):
        errs = []
        for dt in dts:
            n = round(1.0 / dt) + 1
            load = LoadHistory(kind, dt, tuple([1.0] * n))
            response = simulate_asymptotic(0.0, load)
            errs.append(abs(response.samples[-1] - target))
        order = 0.5 * math.log2(errs[0] / errs[-1])
        results.append((kind, order, errs[-1]))
    passed = all(
        order >= 1.0 - order_resolution and final <= 5e-3 for _, order, final in results
    )
    detail = ", ".join(
        f"{kind}: order {order:.2f} >= 1, final {final:.1e} <= 5e-3"
        for kind, order, final in results
    )
    _report(8, "simulator convergence", passed, detail)


def test_criterion_09_interconversion():
    grid = (0.1, 0.25, 0.5, 1.0, 1.5, 2.0)
    families = [ModelParams("bessel", nu=nu) for nu in (-0.5, 0.0, 1.0)]
    families += [ModelParams("asymptotic", nu=nu) for nu in (-0.8, 0.5)]
    families.append(ModelParams("fmax", a1=1.0, b1=1.0))
    worst = max(interconversion_check(p, grid, 2000).max_error for p in families)
    _report(
        9,
        "interconversion",
        worst <= 1e-4,
        f"max |(J*G)(t) - t| = {worst:.2e} <= 1e-4",
    )


def test_criterion_10_figure_reproduction(tmp_path):
    import csv

    def load(fig):
        out = tmp_path / f"fig{fig}.csv"
        rc = cli_main(["eval", "--figure", str(fig), "--out", str(out)])
        assert rc == 0
        rows = list(csv.reader(out.open()))
        data = np.array([[float(v) for v in r] for r in rows[1:]])
        return rows[0], data

    monotone_ok = True
    for fig, fn in ((1, "J"), (2, "G"), (3, "J"), (4, "G")):
        header, data = load(fig)
        for col in range(1, data.shape[1]):
            diffs = np.diff(data[:, col])
            ok = np.all(diffs >= -1e-12) if fn == "J" else np.all(diffs <= 1e-12)
            monotone_ok = monotone_ok and bool(ok)

    _, fig1 = load(1)
    _, fig2 = load(2)
    _, fig3 = load(3)
    # column 2 is nu = 0 in every preset; last row of figs 1-2 is t = 2,
    # row 100 of figs 3-4 is t = 1
    spot1 = abs(fig1[-1, 2] - 17.3333333)
    spot2 = abs(fig2[-1, 2] - 6.54e-6) / 6.54e-6
    spot3 = abs(fig3[100, 2] - (1.0 + 4.0 / math.sqrt(math.pi)))
    passed = monotone_ok and spot1 <= 1e-6 and spot2 <= 0.01 and spot3 <= 1e-9
    _report(
        10,
        "figure reproduction",
        passed,
        f"monotone columns: {monotone_ok}, spot J(2;0) err {spot1:.1e}, "
        f"G(2;0) off {100 * spot2:.2f}%, J_as(1;0) err {spot3:.1e}",
    )
