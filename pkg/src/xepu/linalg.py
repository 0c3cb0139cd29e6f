"""Fixed-size complex linear algebra: 4x4 Hermitian eigendecomposition,
PSD matrix square root, and unitarity checks.

Two interchangeable backends provide the eigenkernels. The compiled
cyclic-Jacobi extension is preferred; a pure-NumPy implementation is used
when the extension is not built. Set ``XEPU_BACKEND=python`` or
``XEPU_BACKEND=compiled`` to force one (the latter raises if unavailable).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import _pykernels
from .errors import ConvergenceFailure, NotHermitian, NotPSD

try:
    from . import _kernels
except ImportError:
    _kernels = None

_forced = os.environ.get("XEPU_BACKEND")
if _forced not in (None, "", "compiled", "python"):
    raise ImportError(f"XEPU_BACKEND must be 'compiled' or 'python', got {_forced!r}")
if _forced == "compiled" and _kernels is None:
    raise ImportError("XEPU_BACKEND=compiled but the extension is not built")

_impl = _pykernels if (_forced == "python" or _kernels is None) else _kernels

HERM_TOL = 1e-10
NEG_EIG_TOL = 1e-10


def backend_name() -> str:
    """Name of the eigenkernel backend active in this process."""
    return "compiled" if _impl is _kernels else "python"


@dataclass(frozen=True)
class HermEig:
    """Eigendecomposition result: ``values`` descending, ``vectors[:, k]``
    the unit eigenvector for ``values[k]``."""

    values: np.ndarray
    vectors: np.ndarray


def _as_c4(m) -> np.ndarray:
    a = np.ascontiguousarray(m, dtype=np.complex128)
    if a.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {a.shape}")
    return a


def herm_residual(m) -> float:
    """Frobenius norm of the anti-Hermitian part."""
    a = np.asarray(m)
    return float(np.linalg.norm(a - a.conj().T))


def hermitian_eig(m) -> HermEig:
    """Eigendecomposition of a Hermitian 4x4 matrix.

    Raises NotHermitian when ``||m - m^dag||_F > 1e-10`` and
    ConvergenceFailure if the iterative solver exhausts its budget.
    """
    a = _as_c4(m)
    res = herm_residual(a)
    if not res <= HERM_TOL:
        raise NotHermitian(res)
    h = 0.5 * (a + a.conj().T)
    try:
        w, v = _impl.eigh4(h)
    except RuntimeError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return HermEig(values=w, vectors=v)


def psd_sqrt(m) -> np.ndarray:
    """Hermitian PSD square root R with ``R @ R`` reproducing the input.

    Eigenvalues in ``[-1e-10, 0)`` are clipped to zero; anything more
    negative raises NotPSD.
    """
    a = _as_c4(m)
    res = herm_residual(a)
    if not res <= HERM_TOL:
        raise NotHermitian(res)
    h = 0.5 * (a + a.conj().T)
    try:
        return _impl.psd_sqrt4(h, NEG_EIG_TOL)
    except ValueError as exc:
        raise NotPSD(float(exc.args[0])) from exc
    except RuntimeError as exc:
        raise ConvergenceFailure(str(exc)) from exc


def unitarity_residual(m) -> float:
    """``||m^dag m - I||_F``."""
    a = np.asarray(m, dtype=np.complex128)
    return float(np.linalg.norm(a.conj().T @ a - np.eye(a.shape[0])))


def is_unitary(m, tol: float) -> bool:
    """True iff ``||m^dag m - I||_F <= tol``."""
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    return unitarity_residual(m) <= tol
