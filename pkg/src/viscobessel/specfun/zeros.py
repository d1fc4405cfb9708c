"""Positive zeros j_{nu,n} of the Bessel function J_nu, with a file cache.

Zeros are located from the McMahon asymptotic guess

    beta = (n + nu/2 - 1/4) pi,    j ~ beta - (4 nu^2 - 1) / (8 beta),

refined by Newton iteration on J_nu inside a sign-changing bracket; any Newton
step that leaves the bracket falls back to bisection.  Each zero is polished
to ~1e-12 so the tabulated values are good to well below the 1e-10 contract.

The Dirichlet series of the Bessel-family material functions consume these
tables through their squares, and the Rayleigh identity
sum_n j_{nu,n}^-2 = 1/(4(nu+1)) provides both a truncation-tail bound and an
end-to-end validation target.

Cache files are plain text (one zero per line in shortest round-trip decimal
form) under a user-configurable directory; see ``save_zero_table``.
"""

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from ..errors import DomainError, RootFindError
from .bessel import bessel_j

CACHE_ENV_VAR = "VISCOBESSEL_CACHE_DIR"
CACHE_FORMAT_HEADER = "viscobessel-zeros v1"

# Accuracy the finder targets; part of the cache key so a future retuning
# cannot silently reuse stale tables.
ZERO_ACCURACY_TAG = "acc1e-10"


@dataclass(frozen=True)
class ZeroTable:
    """Ordered positive zeros of J_nu for one order nu > -1."""

    order: float
    zeros: tuple[float, ...]
    squares: tuple[float, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not math.isfinite(self.order) or self.order <= -1.0:
            raise DomainError(f"zero table order must exceed -1, got {self.order!r}")
        if len(self.zeros) < 1:
            raise DomainError("zero table must hold at least one zero")
        prev = 0.0
        for z in self.zeros:
            if not (z > prev):
                raise DomainError("zeros must be positive and strictly increasing")
            prev = z
        object.__setattr__(self, "squares", tuple(z * z for z in self.zeros))

    def __len__(self) -> int:
        return len(self.zeros)

    def rayleigh_partial(self) -> float:
        """Partial sum of 1/j^2; approaches 1/(4(nu+1)) from below."""
        return math.fsum(1.0 / s for s in self.squares)

    def rayleigh_limit(self) -> float:
        return 1.0 / (4.0 * (self.order + 1.0))

    def rayleigh_tail_bound(self) -> float:
        """Analytic bound on the neglected tail of the Rayleigh sum.

        Uses j_{nu,n} >= (n + nu/2 - 3/4) pi (valid for the orders handled
        here) and the integral bound sum_{n>N} (n+c)^-2 <= 1/(N+c).
        """
        c = 0.5 * self.order - 0.75
        return 1.0 / (math.pi**2 * (len(self) + c))


def _mcmahon_guess(nu: float, n: int) -> float:
    beta = (n + 0.5 * nu - 0.25) * math.pi
    return beta - (4.0 * nu * nu - 1.0) / (8.0 * beta)


def _derivative(nu: float, x: float, jx: float) -> float:
    if nu > 0.0:
        return 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x))
    # For nu - 1 <= -1 the symmetric form is unavailable.
    return -bessel_j(nu + 1.0, x) + (nu / x) * jx


def _bracket(nu: float, guess: float, lo_bound: float, n: int):
    """Find [a, b] with a sign change of J_nu around the n-th zero."""
    half = 0.5
    a = max(guess - half, lo_bound)
    b = guess + half
    fa = bessel_j(nu, a)
    fb = bessel_j(nu, b)
    if fa == 0.0:
        return a, a, fa, fa
    if fb == 0.0:
        return b, b, fb, fb
    if fa * fb < 0.0:
        return a, b, fa, fb
    # Guess was poor (small n, order near -1): march from the previous zero.
    step = 0.05 * max(guess - lo_bound, 0.2)
    a = lo_bound
    fa = bessel_j(nu, a)
    x = a
    for _ in range(400):
        x = x + step
        fx = bessel_j(nu, x)
        if fa * fx < 0.0:
            return a, x, fa, fx
        a, fa = x, fx
    raise RootFindError(f"could not bracket zero {n} of J_{nu}", index=n)


def _refine(nu: float, n: int, a: float, b: float, fa: float, fb: float) -> float:
    if a == b:
        return a
    x = min(max(_mcmahon_guess(nu, n), a), b)
    for _ in range(60):
        fx = bessel_j(nu, x)
        if fx == 0.0:
            return x
        if fa * fx < 0.0:
            b, fb = x, fx
        else:
            a, fa = x, fx
        fp = _derivative(nu, x, fx)
        newton_ok = fp != 0.0 and math.isfinite(fp)
        if newton_ok:
            x_new = x - fx / fp
            newton_ok = a < x_new < b
        if not newton_ok:
            x_new = 0.5 * (a + b)
        if abs(x_new - x) <= 2e-14 * max(1.0, abs(x_new)) + 1e-13:
            return x_new
        x = x_new
    if b - a <= 1e-11 * max(1.0, b):
        return 0.5 * (a + b)
    raise RootFindError(
        f"zero {n} of J_{nu} did not converge (bracket [{a}, {b}])", index=n
    )


def bessel_j_zeros(nu: float, n_max: int) -> ZeroTable:
    """First n_max positive zeros of J_nu, each accurate to better than 1e-10."""
    nu = float(nu)
    if not math.isfinite(nu) or nu <= -1.0:
        raise DomainError(f"order must satisfy nu > -1, got {nu!r}")
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max!r}")
    zeros = []
    lo_bound = 1e-9
    for n in range(1, n_max + 1):
        guess = _mcmahon_guess(nu, n)
        a, b, fa, fb = _bracket(nu, guess, lo_bound, n)
        root = _refine(nu, n, a, b, fa, fb)
        zeros.append(root)
        lo_bound = root + 0.05
    return ZeroTable(order=nu, zeros=tuple(zeros))


@lru_cache(maxsize=None)
def _zero_table_mem(nu: float, n_max: int) -> ZeroTable:
    return bessel_j_zeros(nu, n_max)


# Process-wide default cache directory; None keeps tables purely in memory.
# The CLI points this at its --cache-dir so every curve evaluation in the
# process reuses (and refreshes) the same files.
_active_cache_dir = None


def configure_cache(cache_dir) -> None:
    """Set (or clear, with None) the process-wide zero-cache directory."""
    global _active_cache_dir
    _active_cache_dir = None if cache_dir is None else Path(cache_dir)


def zero_table(nu: float, n_max: int, cache_dir=None) -> ZeroTable:
    """Zero table via the in-process memo, optionally backed by a file cache."""
    nu = float(nu)
    cache_dir = cache_dir if cache_dir is not None else _active_cache_dir
    if cache_dir is None:
        return _zero_table_mem(nu, n_max)
    path = cache_path(nu, n_max, cache_dir)
    if path.exists():
        table = load_zero_table(path)
        if table.order == nu and len(table) == n_max:
            return table
    table = _zero_table_mem(nu, n_max)
    save_zero_table(table, path)
    return table


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "viscobessel"


def cache_path(nu: float, n_max: int, cache_dir=None) -> Path:
    base = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    return base / f"jzeros_nu{float(nu)!r}_n{n_max}_{ZERO_ACCURACY_TAG}.txt"


def save_zero_table(table: ZeroTable, path) -> Path:
    """Write a table in the versioned text format (bit-exact round trip).

    The write goes through a temporary file plus rename so concurrent CLI
    runs never observe a torn cache file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [CACHE_FORMAT_HEADER, f"nu={table.order!r} n={len(table)}"]
    lines.extend(repr(z) for z in table.zeros)
    tmp = path.with_name(path.name + f".tmp{os.getpid()}")
    tmp.write_text("\n".join(lines) + "\n", encoding="ascii")
    os.replace(tmp, path)
    return path


def load_zero_table(path) -> ZeroTable:
    path = Path(path)
    lines = path.read_text(encoding="ascii").splitlines()
    if not lines or lines[0] != CACHE_FORMAT_HEADER:
        raise DomainError(f"{path}: not a '{CACHE_FORMAT_HEADER}' file")
    try:
        fields = dict(item.split("=", 1) for item in lines[1].split())
        nu = float(fields["nu"])
        count = int(fields["n"])
        zeros = tuple(float(line) for line in lines[2 : 2 + count])
    except (KeyError, ValueError, IndexError) as exc:
        raise DomainError(f"{path}: malformed zero-cache file ({exc})") from exc
    if len(zeros) != count:
        raise DomainError(f"{path}: expected {count} zeros, found {len(zeros)}")
    return ZeroTable(order=nu, zeros=zeros)
