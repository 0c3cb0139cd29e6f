"""The universal X-state family and its entanglement-preserving unitary.

``build_x_state`` maps any (spectrum, concurrence) pair realized by a
physical state to an X state with exactly that spectrum and concurrence:

    1/2 * [[l1 + l3 + sqrt(Omega), 0, 0, k],
           [0, 2 l2, 0, 0],
           [0, 0, 2 l4, 0],
           [k, 0, 0, l1 + l3 - sqrt(Omega)]]

with Omega = max(0, Q), Q = (l1 - l3)^2 - (C + 2 sqrt(l2 l4))^2, and
corner k = sqrt((l1 - l3)^2 - Omega). ``build_x_state_cases`` realizes the
same family through the explicit Q >= 0 / Q < 0 branch expressions and
exists solely as an independent cross-check.

``build_epu`` produces the unitary U = E_x E_rho^dag (eigenvector matrices
of the X state and of the input) with U rho U^dag equal to the X state up
to numerical residuals.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .concurrence import concurrence_general, mems_concurrence, preconcurrence
from .errors import OutOfRange, UnphysicalConcurrence
from .linalg import hermitian_eig, unitarity_residual
from .states import DensityMatrix, Spectrum, spectrum_of

C_CLAMP = 1e-12

# sigma_x (x) I as a basis permutation: 1<->3, 2<->4
_SWAP_PERM = (2, 3, 0, 1)


@dataclass(frozen=True)
class XConstruction:
    """One member of the X family: spectrum, target concurrence, branch
    discriminant q, omega = max(0, q), and the constructed state."""

    spec: Spectrum
    c: float
    q: float
    omega: float
    rho_x: DensityMatrix


@dataclass(frozen=True)
class EpuResult:
    """Unitary ``u``, the X state it maps to, and residual diagnostics."""

    u: np.ndarray
    rho_x: DensityMatrix
    transform_residual: float
    unitarity_residual: float


def _clamped_c(spec: Spectrum, c: float) -> float:
    ceiling = mems_concurrence(spec)
    if not 0.0 <= c <= ceiling + C_CLAMP:
        raise UnphysicalConcurrence(c, ceiling)
    return min(c, ceiling)


def q_value(spec: Spectrum, c: float) -> float:
    """Branch discriminant (l1 - l3)^2 - (c + 2 sqrt(l2 l4))^2.

    Negative q forces a separable construction; nonnegative q admits the
    entangled corner. Raises UnphysicalConcurrence when c exceeds the
    spectrum's ceiling beyond the 1e-12 clamp window.
    """
    lam = spec.lam
    c = _clamped_c(spec, c)
    x = c + 2.0 * np.sqrt(lam[1] * lam[3])
    return float((lam[0] - lam[2]) ** 2 - x * x)


def _assemble(lam: np.ndarray, root_omega: float, corner: float) -> DensityMatrix:
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = 0.5 * (lam[0] + lam[2] + root_omega)
    m[3, 3] = 0.5 * (lam[0] + lam[2] - root_omega)
    m[1, 1] = lam[1]
    m[2, 2] = lam[3]
    m[0, 3] = m[3, 0] = 0.5 * corner
    return DensityMatrix(m)


def build_x_state(spec: Spectrum, c: float) -> XConstruction:
    """X state with the given spectrum and concurrence (compact form).

    The corner sqrt((l1 - l3)^2 - Omega) is evaluated as
    min(l1 - l3, c + 2 sqrt(l2 l4)), its exact value for Omega = max(0, Q);
    the min form avoids cancellation when the corner is tiny.
    """
    lam = spec.lam
    c = _clamped_c(spec, c)
    x = float(c + 2.0 * np.sqrt(lam[1] * lam[3]))
    q = float((lam[0] - lam[2]) ** 2 - x * x)
    omega = max(0.0, q)
    corner = min(float(lam[0] - lam[2]), x)
    rho_x = _assemble(lam, np.sqrt(omega), corner)
    return XConstruction(spec=spec, c=c, q=q, omega=omega, rho_x=rho_x)


def build_x_state_cases(spec: Spectrum, c: float) -> XConstruction:
    """The same family through the explicit branch expressions: corner
    c + 2 sqrt(l2 l4) when q >= 0, corner l1 - l3 (and flat diagonal)
    when q < 0. Cross-check for ``build_x_state``."""
    lam = spec.lam
    c = _clamped_c(spec, c)
    x = float(c + 2.0 * np.sqrt(lam[1] * lam[3]))
    q = float((lam[0] - lam[2]) ** 2 - x * x)
    if q >= 0.0:
        root = float(np.sqrt(q))
        corner = x
    else:
        root = 0.0
        corner = float(lam[0] - lam[2])
    rho_x = _assemble(lam, root, corner)
    return XConstruction(spec=spec, c=c, q=q, omega=max(0.0, q), rho_x=rho_x)


def build_mems(spec: Spectrum) -> DensityMatrix:
    """Maximally entangled mixed state for the spectrum: the corner is
    l1 - l3 and the outer diagonal is flat at (l1 + l3)/2."""
    lam = spec.lam
    return _assemble(lam, 0.0, float(lam[0] - lam[2]))


def build_epu(rho: DensityMatrix) -> EpuResult:
    """Unitary mapping ``rho`` onto its X-family representative.

    U = E_x E_rho^dag from the deterministic eigendecompositions of the
    X state and of the input; U rho U^dag reproduces the X state up to
    eigensolver residuals.
    """
    spec = spectrum_of(rho)
    c = concurrence_general(rho).c
    xc = build_x_state(spec, c)
    e_rho = hermitian_eig(rho.mat).vectors
    e_x = hermitian_eig(xc.rho_x.mat).vectors
    u = e_x @ e_rho.conj().T
    transformed = u @ rho.mat @ u.conj().T
    t_res = float(np.linalg.norm(transformed - xc.rho_x.mat))
    u_res = unitarity_residual(u)
    return EpuResult(u=u, rho_x=xc.rho_x, transform_residual=t_res, unitarity_residual=u_res)


def swap_variant(xc: XConstruction) -> DensityMatrix:
    """Conjugate the X state by sigma_x (x) I, moving the outer corners
    into the central 2x2 block. Local, so spectrum and concurrence are
    unchanged."""
    m = xc.rho_x.mat
    return DensityMatrix(m[np.ix_(_SWAP_PERM, _SWAP_PERM)])


def parameterize(spec: Spectrum, eta: float) -> XConstruction:
    """Guaranteed-physical construction: target concurrence
    eta * max(0, preconcurrence), so any (spectrum, eta in [0, 1]) yields a
    valid state."""
    if not 0.0 <= eta <= 1.0:
        raise OutOfRange("eta", eta, 0, 1)
    c_eta = eta * max(0.0, preconcurrence(spec))
    return build_x_state(spec, c_eta)
