"""Gamma function on the positive real axis.

Implemented with the Lanczos approximation (g = 7, 9 terms), which keeps the
relative error comfortably below 1e-13 for all positive arguments without
pulling in an external special-function dependency.
"""

import math

from ..errors import DomainError

# Lanczos coefficients for g = 7, n = 9.  This is Godfrey's classic double
# precision tabulation, the same set used by Numerical Recipes (3rd ed.) and
# many other libraries.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def gamma_fn(x: float) -> float:
    """Gamma(x) for real x > 0.

    Raises DomainError for non-finite or non-positive arguments.  Overflows
    (x >~ 171.6) propagate as OverflowError, since no caller in this package
    needs values that large.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"gamma_fn requires finite x > 0, got {x!r}")
    if x < 0.5:
        # One recurrence step keeps the Lanczos core in its accurate range.
        return gamma_fn(x + 1.0) / x
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    base = z + _LANCZOS_G + 0.5
    # base**(z+0.5) alone overflows before Gamma itself does; interleaving the
    # decaying exp(-base) factor keeps intermediates in range up to x ~ 171.6.
    half_pow = base ** (0.5 * (z + 0.5))
    return _SQRT_TWO_PI * acc * half_pow * (half_pow * math.exp(-base))
