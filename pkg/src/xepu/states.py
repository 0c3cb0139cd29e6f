"""Two-qubit density matrices: validation, random sampling, spectra, purity.

Sampling uses the Ginibre-induced ensemble rho = G G^dag / tr(G G^dag) with
G a 4 x rank matrix of standard complex Gaussians. The generator is
``numpy.random.PCG64``; every sample owns its seed, so campaigns built from
``base_seed + sample_index`` are deterministic regardless of evaluation
order.

Basis-label convention: kets are numbered 1..4 and the Bell fixture is
|Phi+> = (|1> + |4>)/sqrt(2), putting its coherence in the outer corners of
the matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRank, NotHermitian, NotPSD, NotUnitTrace, OutOfRange
from .linalg import HERM_TOL, NEG_EIG_TOL, herm_residual, hermitian_eig

TRACE_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """4x4 Hermitian PSD unit-trace matrix (stored as complex128)."""

    mat: np.ndarray

    def __post_init__(self):
        m = np.array(self.mat, dtype=np.complex128)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)


@dataclass(frozen=True)
class Spectrum:
    """Four eigenvalues sorted descending, clipped at zero, summing to 1."""

    lam: np.ndarray

    def __post_init__(self):
        v = np.array(self.lam, dtype=np.float64)
        if v.shape != (4,):
            raise ValueError(f"expected 4 eigenvalues, got shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "lam", v)


class SweepFamily(enum.Enum):
    """State families recorded by the concurrence-versus-purity sweep."""

    GENERAL = "general"
    X_PAIRED = "x_paired"
    X_INTERLEAVED = "x_interleaved"
    MEMS = "mems"


@dataclass(frozen=True)
class SweepRecord:
    """One (family, rank, purity, concurrence, seed) scatter row."""

    family: SweepFamily
    rank: int
    purity: float
    concurrence: float
    seed: int


_BELL = np.zeros((4, 4), dtype=np.complex128)
_BELL[0, 0] = _BELL[0, 3] = _BELL[3, 0] = _BELL[3, 3] = 0.5


def bell_projector() -> DensityMatrix:
    """Projector onto |Phi+> = (|1> + |4>)/sqrt(2)."""
    return DensityMatrix(_BELL)


def validate(m) -> DensityMatrix:
    """Check Hermiticity, unit trace, and positivity of a candidate matrix.

    Eigenvalues in ``[-1e-10, 0)`` are treated as zero by the PSD check.
    Raises NotHermitian, NotUnitTrace, or NotPSD naming the violated
    invariant and its measured residual.
    """
    a = np.asarray(m, dtype=np.complex128)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {a.shape}")
    if not (np.isfinite(a.real).all() and np.isfinite(a.imag).all()):
        raise ValueError("matrix contains non-finite entries")
    res = herm_residual(a)
    if not res <= HERM_TOL:
        raise NotHermitian(res)
    tr_res = abs(np.trace(a).real - 1.0) + abs(np.trace(a).imag)
    if not tr_res <= TRACE_TOL:
        raise NotUnitTrace(tr_res)
    wmin = float(hermitian_eig(a).values[-1])
    if wmin < -NEG_EIG_TOL:
        raise NotPSD(wmin)
    return DensityMatrix(a)


def _sample_with_rng(rank: int, rng: np.random.Generator) -> DensityMatrix:
    g = (rng.standard_normal((4, rank)) + 1j * rng.standard_normal((4, rank)))
    g /= np.sqrt(2.0)
    m = g @ g.conj().T
    m /= np.trace(m).real
    return DensityMatrix(m)


def sample_random(rank: int, seed: int) -> DensityMatrix:
    """Random density matrix of the given rank from the Ginibre-induced
    ensemble; bit-identical for a fixed (rank, seed)."""
    if rank not in (1, 2, 3, 4):
        raise InvalidRank(rank)
    return _sample_with_rng(rank, np.random.Generator(np.random.PCG64(seed)))


def werner(p: float) -> DensityMatrix:
    """p |Phi+><Phi+| + (1 - p) I/4.

    Analytic fixture: spectrum ((1+3p)/4, (1-p)/4 x3), concurrence
    max(0, (3p-1)/2).
    """
    if not 0.0 <= p <= 1.0:
        raise OutOfRange("p", p, 0, 1)
    return DensityMatrix(p * _BELL + (1.0 - p) * np.eye(4) / 4.0)


def werner_concurrence(p: float) -> float:
    """Closed-form concurrence of ``werner(p)``."""
    return max(0.0, (3.0 * p - 1.0) / 2.0)


def spectrum_of(rho: DensityMatrix) -> Spectrum:
    """Descending eigenvalues, with negative dust clipped and the sum
    renormalized to 1 (error if the raw sum deviates by more than 1e-10)."""
    w = hermitian_eig(rho.mat).values.copy()
    if w[-1] < -NEG_EIG_TOL:
        raise NotPSD(float(w[-1]))
    np.maximum(w, 0.0, out=w)
    s = float(w.sum())
    if not abs(s - 1.0) <= TRACE_TOL:
        raise NotUnitTrace(abs(s - 1.0))
    w /= s
    return Spectrum(w)


def purity(rho: DensityMatrix) -> float:
    """tr(rho^2)."""
    return float(np.trace(rho.mat @ rho.mat).real)


def spectrum_from_hyperspherical(angles) -> Spectrum:
    """Spectrum from three squared-hypersphere angles in [0, pi/2].

    The map (c1^2, s1^2 c2^2, s1^2 s2^2 c3^2, s1^2 s2^2 s3^2) covers every
    unit-sum probability vector; the output is sorted descending.
    """
    t = np.asarray(angles, dtype=np.float64)
    if t.shape != (3,):
        raise ValueError(f"expected 3 angles, got shape {t.shape}")
    for tk in t:
        if not 0.0 <= tk <= np.pi / 2:
            raise OutOfRange("angle", float(tk), 0, np.pi / 2)
    c2 = np.cos(t) ** 2
    s2 = np.sin(t) ** 2
    lam = np.array(
        [c2[0], s2[0] * c2[1], s2[0] * s2[1] * c2[2], s2[0] * s2[1] * s2[2]]
    )
    lam[::-1].sort()
    s = float(lam.sum())
    lam /= s
    return Spectrum(lam)
