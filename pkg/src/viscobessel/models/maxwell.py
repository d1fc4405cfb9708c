"""Fractional Maxwell model of order 1/2 and its one-parameter asymptotic kin.

Fractional Maxwell (coefficients a1, b1 > 0), constitutive law
sigma + a1 D^{1/2} sigma = b1 D^{1/2} eps with Caputo derivatives:

    s Jt_M(s) = (1 + a1 sqrt(s)) / (b1 sqrt(s))
    s Gt_M(s) = b1 sqrt(s) / (1 + a1 sqrt(s))
    J_M(t) = (a1/b1) (1 + 2 sqrt(t) / (a1 sqrt(pi)))
    G_M(t) = (b1/a1) E_{1/2}(-sqrt(t)/a1)

Asymptotic Maxwell-like family (parameter nu > -1), defined by the creep
transform s Jt_as(s; nu) = 1 + 2(nu+1)/sqrt(s), which is the large-s
behaviour of the Bessel family:

    J_as(t; nu) = 1 + 4(nu+1) sqrt(t) / sqrt(pi)
    G_as(t; nu) = E_{1/2}(-2(nu+1) sqrt(t))

The two are the same object: a1 = b1 = 1/(2(nu+1)) turns the fractional
Maxwell expressions into the asymptotic ones exactly, a fact the test-suite
holds the implementations to.

Both creep rates behave like t^{-1/2} near zero, so besides the material
functions this module exposes their exact primitives int_0^T J and
int_0^T G (used by the convolution quadrature) and the relaxation memory
Phi = -dG/dt needed for the complete-monotonicity spot checks.  For
int G the antiderivative comes from (erfcx)'(u) = 2u erfcx(u) - 2/sqrt(pi):

    int_0^V v erfcx(v) dv = (erfcx(V) - 1)/2 + V/sqrt(pi).
"""

import math

from ..errors import DomainError
from ..specfun.erf import erfcx
from ..specfun.mittag import mittag_leffler_half

_SQRT_PI = math.sqrt(math.pi)


def _check_fmax(a1: float, b1: float):
    if not (a1 > 0.0 and math.isfinite(a1) and b1 > 0.0 and math.isfinite(b1)):
        raise DomainError(f"a1, b1 must be finite and > 0, got {a1!r}, {b1!r}")


def _check_nu(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu <= -1.0:
        raise DomainError(f"nu must be > -1, got {nu!r}")
    return nu


def _check_time(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise DomainError(f"time must be finite and >= 0, got {t!r}")
    return t


# -- fractional Maxwell of order 1/2 ----------------------------------------


def fmax_J_time(a1: float, b1: float, t: float) -> float:
    _check_fmax(a1, b1)
    t = _check_time(t)
    return (a1 / b1) * (1.0 + 2.0 * math.sqrt(t) / (a1 * _SQRT_PI))


def fmax_G_time(a1: float, b1: float, t: float) -> float:
    _check_fmax(a1, b1)
    t = _check_time(t)
    return (b1 / a1) * mittag_leffler_half(-math.sqrt(t) / a1)


def fmax_J_laplace(a1: float, b1: float, s):
    _check_fmax(a1, b1)
    if s == 0:
        raise DomainError("s = 0 is outside the transform domain")
    z = s**0.5
    return (1.0 + a1 * z) / (b1 * z)


def fmax_G_laplace(a1: float, b1: float, s):
    _check_fmax(a1, b1)
    if s == 0:
        raise DomainError("s = 0 is outside the transform domain")
    z = s**0.5
    return b1 * z / (1.0 + a1 * z)


def fmax_creep_integral(a1: float, b1: float, T: float) -> float:
    """int_0^T J_M dt = (a1/b1) (T + 4 T^{3/2} / (3 a1 sqrt(pi)))."""
    _check_fmax(a1, b1)
    T = _check_time(T)
    return (a1 / b1) * (T + 4.0 * T ** 1.5 / (3.0 * a1 * _SQRT_PI))


def fmax_relax_integral(a1: float, b1: float, T: float) -> float:
    """int_0^T G_M dt = a1 b1 (erfcx(sqrt(T)/a1) - 1) + 2 b1 sqrt(T)/sqrt(pi)."""
    _check_fmax(a1, b1)
    T = _check_time(T)
    root = math.sqrt(T)
    return a1 * b1 * (erfcx(root / a1) - 1.0) + 2.0 * b1 * root / _SQRT_PI


# -- asymptotic (Maxwell-like) family ----------------------------------------


def asym_J_time(nu: float, t: float) -> float:
    nu = _check_nu(nu)
    t = _check_time(t)
    return 1.0 + 4.0 * (nu + 1.0) * math.sqrt(t) / _SQRT_PI


def asym_G_time(nu: float, t: float) -> float:
    nu = _check_nu(nu)
    t = _check_time(t)
    return mittag_leffler_half(-2.0 * (nu + 1.0) * math.sqrt(t))


def asym_J_laplace(nu: float, s):
    nu = _check_nu(nu)
    if s == 0:
        raise DomainError("s = 0 is outside the transform domain")
    return 1.0 + 2.0 * (nu + 1.0) / s**0.5


def asym_G_laplace(nu: float, s):
    nu = _check_nu(nu)
    if s == 0:
        raise DomainError("s = 0 is outside the transform domain")
    z = s**0.5
    return z / (2.0 * (nu + 1.0) + z)


def asym_creep_integral(nu: float, T: float) -> float:
    nu = _check_nu(nu)
    T = _check_time(T)
    return T + 8.0 * (nu + 1.0) * T ** 1.5 / (3.0 * _SQRT_PI)


def asym_relax_integral(nu: float, T: float) -> float:
    nu = _check_nu(nu)
    T = _check_time(T)
    c = 1.0 / (2.0 * (nu + 1.0))
    root = math.sqrt(T)
    return c * c * (erfcx(root / c) - 1.0) + 2.0 * c * root / _SQRT_PI


def asym_relaxation_memory(nu: float, t: float) -> float:
    """Phi_as(t; nu) = -dG_as/dt = lam/sqrt(pi t) - lam^2 erfcx(lam sqrt(t)).

    Completely monotonic on t > 0 (lam = 2(nu+1)); diverges like t^{-1/2}
    at the origin, so t must be strictly positive.
    """
    nu = _check_nu(nu)
    t = float(t)
    if not (t > 0.0) or not math.isfinite(t):
        raise DomainError(f"memory function needs t > 0, got {t!r}")
    lam = 2.0 * (nu + 1.0)
    root = math.sqrt(t)
    return lam / (_SQRT_PI * root) - lam * lam * erfcx(lam * root)
