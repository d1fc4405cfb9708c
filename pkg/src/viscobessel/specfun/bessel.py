"""Bessel functions of real order nu > -1: J_nu, I_nu and contiguous ratios.

Evaluation regions
------------------
``bessel_j``:
    * x <= J_SERIES_MAX: ascending power series.  The series alternates, so
      roundoff grows like eps * I_nu(x) ~ eps * e^x; at the switchover this
      is ~2e-11 absolute, inside the 1e-10 budget.
    * x >  J_SERIES_MAX: Hankel's large-argument expansion
      J_nu(x) = sqrt(2/(pi x)) [P cos(w) - Q sin(w)], w = x - (nu/2 + 1/4) pi,
      truncated adaptively at its smallest term.  For the orders used here
      (nu <= ~5) the smallest term is < 1e-12 once x > 14.

``bessel_i``:
    * x <= I_SERIES_MAX: ascending series (all terms positive, no
      cancellation; relative error ~ a few eps).
    * x >  I_SERIES_MAX: the large-argument expansion
      I_nu(x) = e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k; the reflected
      e^{-x} series is dropped (it is below e^{-60} relative here).
      Arguments beyond ~705 would overflow e^x and raise
      UnscaledOverflowError pointing at the ratio evaluator.

``bessel_i_ratio``:
    Ratios of contiguous orders I_{mu+1}/I_mu via the Gauss continued
    fraction I_{mu+1}(z)/I_mu(z) = z/(2(mu+1) + z^2/(2(mu+2) + ...)),
    evaluated with the modified Lentz algorithm.  The fraction needs O(|z|)
    convergents, so for real z >= RATIO_ASYM_MIN the ratio is instead formed
    as the quotient of the two large-argument expansions (their exponential
    prefactors cancel exactly), which stays accurate out to arbitrarily large
    real arguments (Laplace-domain callers evaluate up to sqrt(s) ~ 1e8).

    The continued fraction is written in generic arithmetic: it accepts float,
    complex and mpmath scalars, which is how the Laplace-domain material
    functions are evaluated both on inversion contours and inside the
    high-precision Talbot oracle.
"""

import math

from mpmath import mp

from ..errors import DomainError, UnscaledOverflowError
from .gamma import gamma_fn

J_SERIES_MAX = 14.0
I_SERIES_MAX = 30.0
RATIO_ASYM_MIN = 100.0

_LENTZ_TINY = 1e-300


def _require_order(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu <= -1.0:
        raise DomainError(f"order must satisfy nu > -1, got {nu!r}")
    return nu


def _ascending_series(nu, x, signed):
    """sum_k s^k (x/2)^(nu+2k) / (k! Gamma(nu+k+1)), s = -1 (J) or +1 (I)."""
    q = 0.25 * x * x
    term = (0.5 * x) ** nu / gamma_fn(nu + 1.0)
    total = term
    sign = -1.0 if signed else 1.0
    for k in range(400):
        term *= sign * q / ((k + 1.0) * (nu + k + 1.0))
        total += term
        if abs(term) < 1e-18 * (abs(total) + 1e-300) and k >= 3:
            return total
    return total


def _hankel_pq(nu, x):
    """P and Q sums of Hankel's expansion, truncated at the smallest term."""
    mu = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    term = 1.0
    prev = math.inf
    for m in range(1, 60):
        term *= (mu - (2 * m - 1) ** 2) / (8.0 * m * x)
        if abs(term) >= prev or abs(term) < 1e-18:
            break
        prev = abs(term)
        # a_m/x^m enters P for even m, Q for odd m, with alternating signs
        # (-1)^(m//2) in each sub-series.
        if m % 2 == 0:
            p += term if m % 4 == 0 else -term
        else:
            q += term if m % 4 == 1 else -term
    return p, q


def bessel_j(nu: float, x: float) -> float:
    """Bessel function of the first kind J_nu(x), nu > -1, x >= 0.

    Absolute error is kept below 1e-10 out to x ~ 650 (beyond the 200th
    positive zero for every order used by the models).
    """
    nu = _require_order(nu)
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise DomainError(f"bessel_j requires finite x >= 0, got {x!r}")
    if x == 0.0:
        if nu == 0.0:
            return 1.0
        if nu > 0.0:
            return 0.0
        raise DomainError(f"J_nu(0) diverges for nu < 0 (nu = {nu!r})")
    if x <= J_SERIES_MAX:
        return _ascending_series(nu, x, signed=True)
    p, q = _hankel_pq(nu, x)
    w = x - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(w) - q * math.sin(w))


def bessel_i(nu: float, x: float) -> float:
    """Modified Bessel function I_nu(x), nu > -1, x > 0, unscaled.

    Raises UnscaledOverflowError once e^x would overflow; use
    ``bessel_i_ratio`` for the contiguous-order ratios that the Laplace-domain
    material functions need at large argument.
    """
    nu = _require_order(nu)
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"bessel_i requires finite x > 0, got {x!r}")
    if x <= I_SERIES_MAX:
        return _ascending_series(nu, x, signed=False)
    if x > 705.0:
        raise UnscaledOverflowError(
            f"I_nu({x!r}) overflows in unscaled form; use bessel_i_ratio "
            "for contiguous-order ratios instead"
        )
    mu = 4.0 * nu * nu
    total = 1.0
    term = 1.0
    prev = math.inf
    for m in range(1, 60):
        term *= -(mu - (2 * m - 1) ** 2) / (8.0 * m * x)
        if abs(term) >= prev or abs(term) < 1e-18:
            break
        prev = abs(term)
        total += term
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * total


def bessel_i_series_complex(nu: float, z: complex) -> complex:
    """Ascending series for I_nu at complex argument, restricted to |z| <= 30.

    Beyond |z| = 30 the alternating real/imaginary parts of the series lose
    more than 13 digits to cancellation, so larger arguments are refused; the
    inversion contours that need larger |z| go through ``bessel_i_ratio``.
    """
    nu = _require_order(nu)
    z = complex(z)
    if abs(z) > I_SERIES_MAX:
        raise DomainError(
            f"complex ascending series restricted to |z| <= {I_SERIES_MAX}, "
            f"got |z| = {abs(z):.3g}"
        )
    if z == 0:
        return complex(1.0 if nu == 0.0 else 0.0)
    q = 0.25 * z * z
    term = (0.5 * z) ** nu / gamma_fn(nu + 1.0)
    total = term
    for k in range(400):
        term *= q / ((k + 1.0) * (nu + k + 1.0))
        total += term
        if abs(term) < 1e-18 * (abs(total) + 1e-300) and k >= 3:
            break
    return total


def _is_mp(z) -> bool:
    return isinstance(z, (mp.mpf, mp.mpc))


def _ratio_up_cf(mu, z):
    """I_{mu+1}(z)/I_mu(z) by the Gauss continued fraction (generic scalar z)."""
    if _is_mp(z):
        tol = mp.mpf(10) ** (-(mp.dps + 5))
    else:
        tol = 1e-16
    z2 = z * z
    f = _LENTZ_TINY
    c = f
    d = 0.0 * z  # zero of the right arithmetic type
    n_max = int(8 * abs(z)) + 400
    for j in range(1, n_max):
        a = z if j == 1 else z2
        b = 2.0 * (mu + j)
        d = b + a * d
        if d == 0:
            d = _LENTZ_TINY
        c = b + a / c
        if c == 0:
            c = _LENTZ_TINY
        d = 1.0 / d
        delta = c * d
        f = f * delta
        if abs(delta - 1.0) < tol and j > 2:
            return f
    raise DomainError(
        f"continued fraction for I-ratio did not converge for |z| = {abs(z):.3g}"
    )


def _asym_sum(nu, x):
    """Adaptive large-argument sum A(nu, x) = sum_k (-1)^k a_k(nu)/x^k.

    Generic in x (float or mpf); truncated at the smallest term, which for
    x >= RATIO_ASYM_MIN is below 1e-15 relative.
    """
    mu = 4.0 * nu * nu
    total = 1.0 + 0.0 * x  # unit of the caller's scalar type
    term = total
    prev = math.inf
    for m in range(1, 60):
        term *= -(mu - (2 * m - 1) ** 2) / (8.0 * m * x)
        if abs(term) >= prev or abs(term) < 1e-19:
            break
        prev = abs(term)
        total += term
    return total


def bessel_i_ratio(nu_num: float, nu_den: float, z):
    """Ratio I_{nu_num}(z) / I_{nu_den}(z) for contiguous orders.

    Requires |nu_num - nu_den| = 1 and min(nu_num, nu_den) > -1.  Accepts
    real positive z, complex z off the negative real axis, and mpmath
    scalars; the result never goes through an overflowing intermediate.
    """
    nu_num = float(nu_num)
    nu_den = float(nu_den)
    if abs(abs(nu_num - nu_den) - 1.0) > 1e-12:
        raise DomainError(
            f"ratio orders must differ by exactly 1, got {nu_num!r}, {nu_den!r}"
        )
    if min(nu_num, nu_den) <= -1.0:
        raise DomainError(f"orders must exceed -1, got {nu_num!r}, {nu_den!r}")
    if isinstance(z, (int, float)) and not _is_mp(z):
        z = float(z)
        if not math.isfinite(z) or z <= 0.0:
            raise DomainError(f"real ratio argument must be > 0, got {z!r}")
        real_arg = True
    else:
        if z == 0:
            raise DomainError("ratio argument must be nonzero")
        real_arg = _is_mp(z) and isinstance(z, mp.mpf) and z > 0

    mu = min(nu_num, nu_den)
    if real_arg and abs(z) >= RATIO_ASYM_MIN:
        # quotient of the large-argument expansions; arithmetic stays in the
        # caller's scalar type (float or mpf)
        up = _asym_sum(mu + 1.0, z) / _asym_sum(mu, z)
    else:
        up = _ratio_up_cf(mu, z)
    if nu_num > nu_den:
        return up
    return 1.0 / up
