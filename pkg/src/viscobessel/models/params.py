"""Parameter and curve containers shared by the three model families.

Everything is non-dimensional: the relaxation time is 1 and the glass
compliance/modulus of the Bessel-type and asymptotic families are 1.  The
fractional Maxwell family keeps its two physical coefficients a1, b1 > 0
(glass compliance a1/b1); with a1 = b1 = 1/(2(nu+1)) it coincides exactly
with the asymptotic family of parameter nu.
"""

import math
from dataclasses import dataclass
from pathlib import Path

from ..errors import DomainError

FAMILIES = ("bessel", "fmax", "asymptotic")
CURVE_KINDS = ("J", "G", "Psi", "Phi")


@dataclass(frozen=True)
class ModelParams:
    """Family tag plus its parameters: nu for bessel/asymptotic, a1,b1 for fmax."""

    family: str
    nu: float | None = None
    a1: float | None = None
    b1: float | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected {FAMILIES}")
        if self.family in ("bessel", "asymptotic"):
            if self.nu is None or self.a1 is not None or self.b1 is not None:
                raise DomainError(f"family {self.family!r} takes exactly nu")
            if not math.isfinite(self.nu) or self.nu <= -1.0:
                raise DomainError(f"nu must be > -1, got {self.nu!r}")
        else:
            if self.a1 is None or self.b1 is None or self.nu is not None:
                raise DomainError("family 'fmax' takes exactly a1 and b1")
            if not (self.a1 > 0.0 and self.b1 > 0.0):
                raise DomainError(
                    f"a1 and b1 must be strictly positive, got {self.a1!r}, {self.b1!r}"
                )

    def label(self) -> str:
        if self.family == "fmax":
            return f"fmax[a1={self.a1:g};b1={self.b1:g}]"
        return f"{self.family}[nu={self.nu:g}]"


@dataclass(frozen=True)
class TruncationPolicy:
    """Controls Dirichlet-series truncation for the Bessel family.

    tol is the absolute series-tail target; n_min/n_max bound the number of
    retained terms; below t_floor series evaluation is refused outright (the
    Laplace-domain route is the accurate tool there).
    """

    tol: float = 1e-10
    n_min: int = 8
    n_max: int = 200
    t_floor: float = 1e-3

    def __post_init__(self):
        if not (self.tol > 0.0):
            raise DomainError(f"tol must be positive, got {self.tol!r}")
        if not 1 <= self.n_min <= self.n_max:
            raise DomainError(
                f"need 1 <= n_min <= n_max, got {self.n_min!r}, {self.n_max!r}"
            )
        if not (self.t_floor > 0.0):
            raise DomainError(f"t_floor must be positive, got {self.t_floor!r}")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class CurveSample:
    t: float
    value: float


@dataclass(frozen=True)
class MaterialCurve:
    """Samples of one material function with its provenance.

    Construction enforces a strictly increasing time grid and the defining
    monotonicity (J non-decreasing, G non-increasing) with 1e-12 slack.
    """

    kind: str
    params: ModelParams
    samples: tuple[CurveSample, ...]

    def __post_init__(self):
        if self.kind not in CURVE_KINDS:
            raise DomainError(f"kind must be one of {CURVE_KINDS}, got {self.kind!r}")
        ts = [s.t for s in self.samples]
        if any(t < 0.0 or not math.isfinite(t) for t in ts):
            raise DomainError("curve times must be finite and >= 0")
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise DomainError("curve times must be strictly increasing")
        values = [s.value for s in self.samples]
        slack = 1e-12
        if self.kind == "J":
            bad = any(b < a - slack for a, b in zip(values, values[1:]))
        elif self.kind == "G":
            bad = any(b > a + slack for a, b in zip(values, values[1:]))
        else:
            bad = False
        if bad:
            raise DomainError(f"{self.kind} samples violate monotonicity")

    @property
    def times(self) -> list[float]:
        return [s.t for s in self.samples]

    @property
    def values(self) -> list[float]:
        return [s.value for s in self.samples]


def write_material_curve(curve: MaterialCurve, path) -> Path:
    """Write `t,<kind>` CSV in shortest round-trip decimal form."""
    path = Path(path)
    lines = [f"t,{curve.kind}"]
    lines.extend(f"{s.t!r},{s.value!r}" for s in curve.samples)
    path.write_text("\n".join(lines) + "\n", encoding="ascii")
    return path


def read_material_curve(path, params: ModelParams) -> MaterialCurve:
    """Parse a `t,<kind>` CSV back into a MaterialCurve."""
    path = Path(path)
    lines = path.read_text(encoding="ascii").splitlines()
    if not lines:
        raise DomainError(f"{path}: empty curve file")
    header = lines[0].split(",")
    if len(header) != 2 or header[0] != "t" or header[1] not in CURVE_KINDS:
        raise DomainError(f"{path}: expected header 't,<J|G|Psi|Phi>', got {lines[0]!r}")
    samples = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        try:
            t, v = float(parts[0]), float(parts[1])
        except (ValueError, IndexError) as exc:
            raise DomainError(f"{path}:{lineno}: malformed row {line!r}") from exc
        samples.append(CurveSample(t, v))
    return MaterialCurve(kind=header[1], params=params, samples=tuple(samples))
