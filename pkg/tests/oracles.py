"""Independent oracles for derived expected values.

Everything here is deliberately written from first principles (ascending
series, bisection, quadrature, stdlib gamma) so the tests never validate the
package against its own code paths.
"""

import math

from scipy.integrate import quad


def bessel_j_series(nu: float, x: float, n_terms: int = 120) -> float:
    """Plain ascending series for J_nu(x); adequate for x up to ~25."""
    total = 0.0
    term = (0.5 * x) ** nu / math.gamma(nu + 1.0)
    for k in range(n_terms):
        total += term
        term *= -(0.25 * x * x) / ((k + 1.0) * (nu + k + 1.0))
    return total


def bisect_bessel_zero(nu: float, lo: float, hi: float, tol: float = 1e-13) -> float:
    """Bisection on the ascending series; [lo, hi] must bracket one zero."""
    flo = bessel_j_series(nu, lo)
    fhi = bessel_j_series(nu, hi)
    assert flo * fhi < 0.0, f"no sign change on [{lo}, {hi}]"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = bessel_j_series(nu, mid)
        if flo * fmid <= 0.0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def erfc_quadrature(x: float) -> float:
    """erfc(x) = (2/sqrt(pi)) * integral of exp(-u^2) over the tail.

    The truncated tail beyond x + 9 is below exp(-81), far under the
    quadrature's own error estimate.
    """
    value, err = quad(
        lambda u: math.exp(-u * u), x, x + 9.0, limit=200, epsabs=1e-14, epsrel=1e-13
    )
    assert err < 5e-13
    return 2.0 / math.sqrt(math.pi) * value


def mittag_leffler_series_oracle(alpha: float, z: float, n_terms: int) -> float:
    """Truncated E_alpha(z) Taylor sum via the stdlib gamma."""
    return math.fsum(z**n / math.gamma(alpha * n + 1.0) for n in range(n_terms))


def bessel_i_series(nu: float, x: float, n_terms: int = 60) -> float:
    """Ascending series for I_nu(x) (all positive terms)."""
    total = 0.0
    term = (0.5 * x) ** nu / math.gamma(nu + 1.0)
    for k in range(n_terms):
        total += term
        term *= (0.25 * x * x) / ((k + 1.0) * (nu + k + 1.0))
    return total
