"""Material functions of the Bessel, fractional Maxwell and asymptotic families."""

from .bessel_family import (
    bessel_creep_integral,
    bessel_G_curve,
    bessel_G_laplace,
    bessel_G_short_time,
    bessel_G_time,
    bessel_J_curve,
    bessel_J_laplace,
    bessel_J_short_time,
    bessel_J_time,
    bessel_relax_integral,
    memory_phi,
    memory_phi_curve,
    memory_psi,
    memory_psi_curve,
)
from .checks import (
    GLASS_S_LARGE,
    ShortTimeAgreementReport,
    glass_limits,
    reciprocity_residual,
    short_time_agreement,
)
from .evaluate import (
    SHORT_TIME_CUTOFF,
    creep_integral,
    eval_G,
    eval_G_any_time,
    eval_G_curve,
    eval_J,
    eval_J_any_time,
    eval_J_curve,
    glass_compliance,
    glass_modulus,
    laplace_sG,
    laplace_sJ,
    relax_integral,
)
from .maxwell import (
    asym_creep_integral,
    asym_G_laplace,
    asym_G_time,
    asym_J_laplace,
    asym_J_time,
    asym_relax_integral,
    asym_relaxation_memory,
    fmax_creep_integral,
    fmax_G_laplace,
    fmax_G_time,
    fmax_J_laplace,
    fmax_J_time,
    fmax_relax_integral,
)
from .params import (
    CURVE_KINDS,
    DEFAULT_POLICY,
    FAMILIES,
    CurveSample,
    MaterialCurve,
    ModelParams,
    TruncationPolicy,
    read_material_curve,
    write_material_curve,
)

__all__ = [
    "CURVE_KINDS",
    "DEFAULT_POLICY",
    "FAMILIES",
    "GLASS_S_LARGE",
    "SHORT_TIME_CUTOFF",
    "CurveSample",
    "MaterialCurve",
    "ModelParams",
    "ShortTimeAgreementReport",
    "TruncationPolicy",
    "asym_creep_integral",
    "asym_G_laplace",
    "asym_G_time",
    "asym_J_laplace",
    "asym_J_time",
    "asym_relax_integral",
    "asym_relaxation_memory",
    "bessel_creep_integral",
    "bessel_G_curve",
    "bessel_G_laplace",
    "bessel_G_short_time",
    "bessel_G_time",
    "bessel_J_curve",
    "bessel_J_laplace",
    "bessel_J_short_time",
    "bessel_J_time",
    "bessel_relax_integral",
    "creep_integral",
    "eval_G",
    "eval_G_any_time",
    "eval_G_curve",
    "eval_J",
    "eval_J_any_time",
    "eval_J_curve",
    "fmax_creep_integral",
    "fmax_G_laplace",
    "fmax_G_time",
    "fmax_J_laplace",
    "fmax_J_time",
    "fmax_relax_integral",
    "glass_compliance",
    "glass_limits",
    "glass_modulus",
    "laplace_sG",
    "laplace_sJ",
    "memory_phi",
    "memory_phi_curve",
    "memory_psi",
    "memory_psi_curve",
    "read_material_curve",
    "reciprocity_residual",
    "relax_integral",
    "short_time_agreement",
    "write_material_curve",
]
