"""Ring geometry, decay kernels, and the circulant coupling matrix.

N emitters sit at angles phi_j = 2 pi (j-1)/N on a ring whose radius is
expressed through the dimensionless size parameter a (radius times the
transition wavenumber).  Pair separations are chords,

    x_jm = 2 a sin(|phi_j - phi_m| / 2),

and the pair decay rates, in units of the single-emitter linewidth, are
pure functions of that chord:

    scalar model:      x -> sin(x)/x
    aligned dipoles:   x -> (3/2) [sin^2(delta) j0(x)
                                   + (3 cos^2(delta) - 1) j1(x)/x]

with delta the common tilt of the dipoles out of the ring plane.  Both
kernels equal 1 at zero separation, which fixes the matrix diagonal
exactly.  At cos^2(delta) = 1/3 the j1 term cancels and the aligned
kernel reduces to the scalar one.

Because the rates depend only on (j - m) mod N, the full matrix is
circulant and is generated by its first row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "RingConfig",
    "ModelKind",
    "CouplingMatrix",
    "chord",
    "scalar_gamma_kernel",
    "scalar_omega_kernel",
    "vector_gamma_kernel",
    "coupling_matrix",
    "lattice_conversion",
]


@dataclass(frozen=True)
class RingConfig:
    """Ring of n_atoms emitters with size parameter a (radius x wavenumber)."""

    n_atoms: int
    size_parameter: float

    def __post_init__(self):
        if not isinstance(self.n_atoms, (int, np.integer)) or isinstance(self.n_atoms, bool):
            raise ValueError(f"n_atoms must be an integer, got {self.n_atoms!r}")
        if self.n_atoms < 2:
            raise ValueError(f"n_atoms must be >= 2, got {self.n_atoms}")
        a = float(self.size_parameter)
        if not math.isfinite(a) or a < 0.0:
            raise ValueError(f"size_parameter must be finite and >= 0, got {a!r}")
        object.__setattr__(self, "n_atoms", int(self.n_atoms))
        object.__setattr__(self, "size_parameter", a)

    def angle(self, j: int) -> float:
        """Angular position of atom j (1-based)."""
        if not 1 <= j <= self.n_atoms:
            raise IndexError(f"atom index {j} outside 1..{self.n_atoms}")
        return 2.0 * math.pi * (j - 1) / self.n_atoms

    def spacing_in_wavelengths(self) -> float:
        """Nearest-neighbour distance over the transition wavelength."""
        return (self.size_parameter / math.pi) * math.sin(math.pi / self.n_atoms)


@dataclass(frozen=True)
class ModelKind:
    """Light model selector: scalar, or aligned dipoles tilted by delta."""

    variant: str
    delta: float | None = None

    def __post_init__(self):
        if self.variant not in ("scalar", "vectorial"):
            raise ValueError(f"variant must be 'scalar' or 'vectorial', got {self.variant!r}")
        if self.variant == "scalar":
            if self.delta is not None:
                raise ValueError("scalar model takes no tilt angle")
        else:
            if self.delta is None:
                raise ValueError("vectorial model requires a tilt angle delta")
            d = float(self.delta)
            if not 0.0 <= d <= math.pi / 2:
                raise ValueError(f"delta must lie in [0, pi/2], got {d}")
            object.__setattr__(self, "delta", d)

    @classmethod
    def scalar(cls) -> "ModelKind":
        return cls(variant="scalar")

    @classmethod
    def vectorial(cls, delta: float) -> "ModelKind":
        return cls(variant="vectorial", delta=delta)

    @property
    def is_vectorial(self) -> bool:
        return self.variant == "vectorial"

    def label(self) -> str:
        if self.is_vectorial:
            return f"vectorial(delta={self.delta:.6g})"
        return "scalar"


def chord(config: RingConfig, j: int, m: int) -> float:
    """Dimensionless chord separation between atoms j and m (1-based).

    Zero iff j == m; maximal (2a) at antipodal positions.
    """
    n = config.n_atoms
    if not 1 <= j <= n:
        raise IndexError(f"atom index {j} outside 1..{n}")
    if not 1 <= m <= n:
        raise IndexError(f"atom index {m} outside 1..{n}")
    if j == m:
        return 0.0
    half = abs(config.angle(j) - config.angle(m)) / 2.0
    return 2.0 * config.size_parameter * math.sin(half)


def scalar_gamma_kernel(x):
    """Scalar pair decay rate sin(x)/x, continued to 1 at x = 0."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("separation must be finite")
    out = np.sinc(x / np.pi)
    return float(out) if out.ndim == 0 else out


def scalar_omega_kernel(x):
    """Scalar pair shift rate cos(x)/x; undefined at zero separation."""
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("separation must be finite")
    if np.any(x <= 0.0):
        raise ValueError("shift kernel undefined at zero separation")
    out = np.cos(x) / x
    return float(out) if out.ndim == 0 else out


# j1(x)/x = sum_m (-x^2/2)^m / (m! (2m+3)!!); five terms keep the error
# below 1e-19 for x < 0.1, where the direct form loses ~half its digits.
_J1X_COEFFS = (1.0 / 3.0, -1.0 / 30.0, 1.0 / 840.0, -1.0 / 45360.0, 1.0 / 3991680.0)


def _j1_over_x(x: np.ndarray) -> np.ndarray:
    small = x < 0.1
    xs = np.where(small, x, 1.0)  # placeholder keeps the large branch finite
    x2 = xs * xs
    series = _J1X_COEFFS[4]
    for c in reversed(_J1X_COEFFS[:4]):
        series = series * x2 + c
    xl = np.where(small, 1.0, x)
    direct = (np.sinc(xl / np.pi) - np.cos(xl)) / (xl * xl)
    return np.where(small, series, direct)


def vector_gamma_kernel(x, delta: float):
    """Aligned-dipole pair decay rate at tilt angle delta, 1 at x = 0."""
    delta = float(delta)
    if not 0.0 <= delta <= math.pi / 2:
        raise ValueError(f"delta must lie in [0, pi/2], got {delta}")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("separation must be finite")
    sin2 = math.sin(delta) ** 2
    cos2 = math.cos(delta) ** 2
    out = 1.5 * (sin2 * np.sinc(x / np.pi) + (3.0 * cos2 - 1.0) * _j1_over_x(x))
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class CouplingMatrix:
    """Circulant decay matrix in units of the linewidth.

    ``first_row`` generates the matrix and is the authoritative data;
    ``entries`` is the replicated N x N array kept for inspection.
    """

    n_atoms: int
    first_row: np.ndarray
    entries: np.ndarray


def _kernel_row(config: RingConfig, model: ModelKind) -> np.ndarray:
    n = config.n_atoms
    s = np.arange(n)
    # fold to min(s, N-s): keeps the row exactly palindromic, so the
    # assembled matrix is symmetric to the bit
    seps = 2.0 * config.size_parameter * np.sin(np.pi * np.minimum(s, n - s) / n)
    if model.is_vectorial:
        row = vector_gamma_kernel(seps, model.delta)
    else:
        row = scalar_gamma_kernel(seps)
    row = np.atleast_1d(row).astype(float)
    row[0] = 1.0  # diagonal is exactly the single-emitter rate
    return row


def coupling_matrix(config: RingConfig, model: ModelKind) -> CouplingMatrix:
    """Assemble the N x N decay matrix from its generating first row."""
    n = config.n_atoms
    row = _kernel_row(config, model)
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return CouplingMatrix(n_atoms=n, first_row=row, entries=row[idx])


def lattice_conversion(n_atoms: int, d_over_lambda: float) -> float:
    """Size parameter a for a given nearest-neighbour spacing d/lambda.

    Exact inverse of RingConfig.spacing_in_wavelengths.
    """
    if not isinstance(n_atoms, (int, np.integer)) or n_atoms < 2:
        raise ValueError(f"n_atoms must be an integer >= 2, got {n_atoms!r}")
    d = float(d_over_lambda)
    if not math.isfinite(d) or d <= 0.0:
        raise ValueError(f"d_over_lambda must be positive, got {d!r}")
    return math.pi * d / math.sin(math.pi / n_atoms)
