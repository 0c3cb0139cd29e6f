"""Entanglement quantification for two qubits.

``concurrence_general`` evaluates the Wootters concurrence of an arbitrary
state through the Hermitian route: the xi_k are the descending eigenvalues
of sqrt(sqrt(rho) rho_tilde sqrt(rho)), where rho_tilde is the spin-flipped
state. ``concurrence_x`` is the closed form valid for any X state. The
spectrum-level quantities ``mems_concurrence`` and ``preconcurrence`` bound
what any state of a given spectrum can achieve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotPSD, NotXState
from .linalg import NEG_EIG_TOL, hermitian_eig, psd_sqrt
from .states import DensityMatrix, Spectrum

XTOL_DEFAULT = 1e-10

# sigma_y (x) sigma_y: real, symmetric, squares to the identity
_YY = np.array(
    [
        [0, 0, 0, -1],
        [0, 0, 1, 0],
        [0, 1, 0, 0],
        [-1, 0, 0, 0],
    ],
    dtype=np.complex128,
)

_OFF_X = [(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (2, 3), (3, 1), (3, 2)]


@dataclass(frozen=True)
class ConcurrenceValue:
    """Concurrence ``c`` plus, for the general route, the descending xi_k."""

    c: float
    xis: np.ndarray | None = None


def spin_flip(rho: DensityMatrix) -> np.ndarray:
    """(sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)."""
    return _YY @ rho.mat.conj() @ _YY


def concurrence_general(rho: DensityMatrix) -> ConcurrenceValue:
    """Wootters concurrence of an arbitrary two-qubit state.

    max(0, xi_1 - xi_2 - xi_3 - xi_4), with xi_k the descending
    eigenvalues of sqrt(sqrt(rho) rho_tilde sqrt(rho)). Eigenvalue dust in
    [-1e-10, 0) is clipped before the square roots.
    """
    r = psd_sqrt(rho.mat)
    inner = r @ spin_flip(rho) @ r
    w = hermitian_eig(inner).values.copy()
    if w[-1] < -NEG_EIG_TOL:
        raise NotPSD(float(w[-1]))
    np.maximum(w, 0.0, out=w)
    xis = np.sqrt(w)
    c = max(0.0, float(xis[0] - xis[1] - xis[2] - xis[3]))
    return ConcurrenceValue(c=c, xis=xis)


def concurrence_x(rho: DensityMatrix, xtol: float = XTOL_DEFAULT) -> ConcurrenceValue:
    """Closed-form concurrence of an X state:
    2 max(0, |rho_32| - sqrt(rho_44 rho_11), |rho_41| - sqrt(rho_33 rho_22)).

    Raises NotXState when any off-X entry exceeds ``xtol`` in magnitude.
    """
    m = rho.mat
    largest = max(abs(m[i, j]) for i, j in _OFF_X)
    if largest > xtol:
        raise NotXState(largest, xtol)
    d = np.maximum(m.diagonal().real, 0.0)
    c = 2.0 * max(
        0.0,
        abs(m[2, 1]) - np.sqrt(d[3] * d[0]),
        abs(m[3, 0]) - np.sqrt(d[2] * d[1]),
    )
    return ConcurrenceValue(c=float(c))


def preconcurrence(spec: Spectrum) -> float:
    """lambda_1 - lambda_3 - 2 sqrt(lambda_2 lambda_4); may be negative."""
    lam = spec.lam
    return float(lam[0] - lam[2] - 2.0 * np.sqrt(lam[1] * lam[3]))


def mems_concurrence(spec: Spectrum) -> float:
    """Concurrence ceiling for the given spectrum: the concurrence of its
    maximally entangled mixed state, max(0, preconcurrence)."""
    return max(0.0, preconcurrence(spec))
