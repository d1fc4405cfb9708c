"""viscobessel: special functions and material functions for Bessel-type and
fractional Maxwell viscoelastic models, with Laplace-inversion oracles, a
Caputo-1/2 constitutive simulator and a reproducibility-oriented CLI.

Everything here works in the non-dimensional convention: unit relaxation time
and unit glass moduli, so time, stress and strain are pure numbers.
"""

__version__ = "0.1.0"
