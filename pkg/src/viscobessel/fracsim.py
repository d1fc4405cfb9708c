"""Time-domain simulation of the viscoelastic constitutive laws.

Two independent routes are implemented, both on uniform grids t_k = k dt:

Caputo-1/2 stepping (asymptotic family only)
    The constitutive law [1 + c D^{1/2}] sigma = c D^{1/2} eps with
    c = 1/(2(nu+1)) is discretized with the L1 scheme

        (D^{1/2} f)(t_k) ~ dt^{-1/2}/Gamma(3/2) *
                           sum_{j=0}^{k-1} w_j (f_{k-j} - f_{k-j-1}),
        w_j = sqrt(j+1) - sqrt(j),

    solved implicitly for the unknown variable at each step (for stress
    input the D^{1/2} eps term is isolated and the same triangular L1 system
    is solved for eps, i.e. discrete fractional integration).  Step-load
    responses converge to the closed-form material functions with empirical
    order ~1 (the t^{1/2} start-up singularity limits the nominal 1.5).

Hereditary convolution (all families)
    eps = J_g sigma + (dJ * sigma), sigma = G_g eps + (dG * eps).  The creep
    and relaxation rates diverge like t^{-1/2} at zero, so the trapezoidal
    rule is applied in Stieltjes form: the load is averaged over each panel
    against the *exact* kernel increment, and on the first panel against the
    exact first moment int_0^dt tau dJ = dt J(dt) - int_0^dt J (the family
    primitives are closed-form).  This keeps second-order convergence for
    smooth loads despite the singular kernel, and reproduces step-load
    responses exactly up to kernel accuracy.

Initial condition convention: a nonzero load sample at k = 0 is treated as an
instantaneous step mapped through the glass constants, response(0) = J_g *
load(0) (stress input) or G_g * load(0) (strain input).

Interconversion: since (s Jt)(s Gt) = 1, the material functions satisfy
int_0^t J(tau) G(t - tau) dtau = t.  ``interconversion_check`` verifies this
with a trapezoidal rule under the substitution tau = t sin^2(theta), which
clusters nodes at both endpoints and removes the sqrt(t) corner from the
integrand, leaving a smooth O(h^2) quadrature.
"""

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, GridError, SeriesRefusalError
from .models.evaluate import (
    creep_integral_curve,
    eval_G_any_time,
    eval_G_curve,
    eval_J_any_time,
    eval_J_curve,
    glass_compliance,
    glass_modulus,
    relax_integral_curve,
)
from .models.params import DEFAULT_POLICY, ModelParams

LOAD_KINDS = ("stress", "strain")
_GAMMA_3_2 = math.gamma(1.5)


@dataclass(frozen=True)
class LoadHistory:
    """Uniformly sampled stress or strain input, samples[k] at t = k dt."""

    kind: str
    dt: float
    samples: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in LOAD_KINDS:
            raise DomainError(f"kind must be one of {LOAD_KINDS}, got {self.kind!r}")
        if not (self.dt > 0.0 and math.isfinite(self.dt)):
            raise DomainError(f"dt must be finite and > 0, got {self.dt!r}")
        if len(self.samples) < 2:
            raise DomainError("a load history needs at least two samples")
        object.__setattr__(self, "samples", tuple(float(v) for v in self.samples))
        if not all(math.isfinite(v) for v in self.samples):
            raise DomainError("load samples must all be finite")

    @property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(len(self.samples))


@dataclass(frozen=True)
class ResponseHistory:
    """Conjugate variable on the same grid as the input that produced it."""

    kind: str
    dt: float
    samples: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "samples", tuple(float(v) for v in self.samples))

    @property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(len(self.samples))


def _conjugate(kind: str) -> str:
    return "strain" if kind == "stress" else "stress"


# ---------------------------------------------------------------------------
# Caputo derivative and stepping
# ---------------------------------------------------------------------------


def _l1_weights(n: int) -> np.ndarray:
    j = np.arange(n, dtype=float)
    return np.sqrt(j + 1.0) - np.sqrt(j)


def caputo_half(samples, dt: float) -> np.ndarray:
    """L1 discretization of the Caputo derivative of order 1/2.

    Entry k approximates (D^{1/2} f)(k dt) from the increments of f; the
    value at k = 0 is 0 (empty sum).  Exact for constants; O(dt^{1.5}) for
    smooth f, degrading near start-up singularities.
    """
    f = np.asarray(samples, dtype=float)
    if f.ndim != 1 or len(f) < 2:
        raise DomainError("caputo_half needs a 1-d history of >= 2 samples")
    if not (dt > 0.0 and math.isfinite(dt)):
        raise DomainError(f"dt must be finite and > 0, got {dt!r}")
    n = len(f)
    w = _l1_weights(n)
    d = np.diff(f)
    # (D f)_k = kappa * sum_{j=0}^{k-1} w_j d_{k-1-j}: a discrete convolution.
    conv = np.convolve(d, w)[: n - 1]
    out = np.zeros(n)
    out[1:] = conv / (math.sqrt(dt) * _GAMMA_3_2)
    return out


def simulate_asymptotic(nu: float, load: LoadHistory) -> ResponseHistory:
    """Step the Maxwell-like law [1 + c D^{1/2}] sigma = c D^{1/2} eps.

    Strain input solves implicitly for stress; stress input solves the L1
    triangular system for strain (discrete half-order integration).
    """
    nu = float(nu)
    if not math.isfinite(nu) or nu <= -1.0:
        raise DomainError(f"nu must be > -1, got {nu!r}")
    c = 1.0 / (2.0 * (nu + 1.0))
    dt = load.dt
    f = np.asarray(load.samples, dtype=float)
    n = len(f)
    w = _l1_weights(n)
    kappa = 1.0 / (math.sqrt(dt) * _GAMMA_3_2)
    out = np.zeros(n)

    if load.kind == "strain":
        eps_caputo = caputo_half(f, dt)
        out[0] = f[0]  # instantaneous step through the glass modulus G_g = 1
        denom = 1.0 + c * kappa * w[0]
        for k in range(1, n):
            inc = np.diff(out[:k])  # response increments up to sigma_{k-1}
            hist = float(np.dot(w[1:k], inc[::-1])) if k > 1 else 0.0
            out[k] = (c * eps_caputo[k] + c * kappa * (w[0] * out[k - 1] - hist)) / denom
        return ResponseHistory(kind="stress", dt=dt, samples=tuple(out))

    sigma_caputo = caputo_half(f, dt)
    out[0] = f[0]  # instantaneous step through the glass compliance J_g = 1
    for k in range(1, n):
        g_k = f[k] / c + sigma_caputo[k]
        inc = np.diff(out[:k])
        hist = float(np.dot(w[1:k], inc[::-1])) if k > 1 else 0.0
        out[k] = out[k - 1] + g_k / kappa - hist
    return ResponseHistory(kind="strain", dt=dt, samples=tuple(out))


# ---------------------------------------------------------------------------
# Hereditary convolution
# ---------------------------------------------------------------------------


def convolve_response(
    params: ModelParams, load: LoadHistory, policy=None
) -> ResponseHistory:
    """Hereditary-integral response for any family (product trapezoid).

    On each panel [j dt, (j+1) dt] the load is linearized between its two
    samples and integrated against the exact kernel measure dK, using the
    closed-form panel increments dK_j and first moments

        M_j = int (tau - j dt) dK(tau) = dt K((j+1)dt) - (P((j+1)dt) - P(j dt)),

    P being the family's kernel primitive.  The rule is exact for step loads
    and second-order for smooth ones, including the t^{-1/2} kernel-rate
    singularity at tau = 0.
    """
    policy = policy or DEFAULT_POLICY
    dt = load.dt
    if params.family == "bessel" and dt < policy.t_floor:
        raise SeriesRefusalError(
            f"convolution grid dt = {dt!r} dips below the Bessel-series floor "
            f"t_floor = {policy.t_floor!r}"
        )
    f = np.asarray(load.samples, dtype=float)
    n = len(f)
    grid = dt * np.arange(n)

    if load.kind == "stress":
        glass = glass_compliance(params)
        kernel = eval_J_curve(params, grid[1:], policy)
        primitive = creep_integral_curve(params, grid, policy)
    else:
        glass = glass_modulus(params)
        kernel = eval_G_curve(params, grid[1:], policy)
        primitive = relax_integral_curve(params, grid, policy)

    kernel = np.concatenate(([glass], kernel))  # kernel[j] = K(j dt)
    dk = np.diff(kernel)
    m1_over_h = kernel[1:] - np.diff(primitive) / dt  # M_j / dt
    # Load linear on panel j: f(t_k - tau) = f_{k-j} + (f_{k-j-1} - f_{k-j}) u
    # with u = (tau - j dt)/dt, so the panel integral against dK is
    # f_{k-j} (dK_j - M_j/dt) + f_{k-j-1} M_j/dt.
    coeff_near = dk - m1_over_h
    coeff_far = m1_over_h

    out = np.zeros(n)
    out[0] = glass * f[0]
    for k in range(1, n):
        acc = float(np.dot(f[1 : k + 1][::-1], coeff_near[:k]))
        acc += float(np.dot(f[0:k][::-1], coeff_far[:k]))
        out[k] = glass * f[k] + acc
    return ResponseHistory(kind=_conjugate(load.kind), dt=dt, samples=tuple(out))


# ---------------------------------------------------------------------------
# Interconversion check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InterconversionReport:
    params: ModelParams
    times: tuple[float, ...]
    errors: tuple[float, ...]
    max_error: float
    n_quad: int


def interconversion_check(
    params: ModelParams, t_grid, n_quad: int = 2000, policy=None
) -> InterconversionReport:
    """max_t | int_0^t J(tau) G(t-tau) dtau - t | over the grid."""
    policy = policy or DEFAULT_POLICY
    t_min_allowed = max(policy.t_floor, 0.05)
    times = sorted(float(t) for t in t_grid)
    if not times or times[0] < t_min_allowed:
        raise DomainError(
            f"interconversion grid must start at or above {t_min_allowed!r}"
        )
    if n_quad < 16:
        raise DomainError(f"n_quad too small: {n_quad!r}")
    h = 0.5 * math.pi / n_quad
    theta = h * np.arange(1, n_quad)  # integrand vanishes at both endpoints
    s2 = np.sin(theta) ** 2
    weights = h * np.sin(2.0 * theta)
    errors = []
    for t in times:
        tau = t * s2
        vals = eval_J_any_time(params, tau, policy) * eval_G_any_time(
            params, t - tau, policy
        )
        integral = t * float(np.dot(weights, vals))
        errors.append(abs(integral - t))
    return InterconversionReport(
        params=params,
        times=tuple(times),
        errors=tuple(errors),
        max_error=max(errors),
        n_quad=n_quad,
    )


# ---------------------------------------------------------------------------
# CSV interchange
# ---------------------------------------------------------------------------


def read_load_history(path, kind: str) -> LoadHistory:
    """Parse a `t,value` CSV on a uniform grid starting at t = 0."""
    path = Path(path)
    lines = path.read_text(encoding="ascii").splitlines()
    if not lines or lines[0] != "t,value":
        raise DomainError(f"{path}:1: expected header 't,value'")
    ts, vals = [], []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        try:
            if len(parts) != 2:
                raise ValueError("need exactly two columns")
            ts.append(float(parts[0]))
            vals.append(float(parts[1]))
        except ValueError as exc:
            raise DomainError(f"{path}:{lineno}: malformed row {line!r}") from exc
    if len(ts) < 2:
        raise DomainError(f"{path}: need at least two samples")
    dt = ts[1] - ts[0]
    if abs(ts[0]) > 1e-12 or dt <= 0.0:
        raise GridError(f"{path}: grid must start at t = 0 with positive spacing")
    for k, t in enumerate(ts):
        if abs(t - k * dt) > 1e-9 * max(1.0, abs(t)):
            raise GridError(
                f"{path}: non-uniform grid at row {k + 2} (t = {t!r}, "
                f"expected {k * dt!r})"
            )
    return LoadHistory(kind=kind, dt=dt, samples=tuple(vals))


def write_history(history, path) -> Path:
    """Write a Load/ResponseHistory as a `t,value` CSV (round-trip exact)."""
    path = Path(path)
    lines = ["t,value"]
    for k, v in enumerate(history.samples):
        lines.append(f"{k * history.dt!r},{v!r}")
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return path
