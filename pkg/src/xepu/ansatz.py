"""Spectral X decompositions: eigenvector families, the concurrence
landscape over their two angles, and the closed-form angle that reproduces
a target concurrence.

An X-form orthonormal basis consists of two real doublets,

    (cos a, 0, 0, sin a), (sin a, 0, 0, -cos a)   outer doublet
    (0, cos b, sin b, 0), (0, sin b, -cos b, 0)   central doublet

and the freedom studied here is how the doublets are assigned to the
descending eigenvalues. PAIRED gives the outer doublet eigenvalues
(l1, l2); INTERLEAVED gives it (l1, l3) and is the assignment that covers
every spectrum-concurrence combination (the paired order provably cannot
reach the top of the rank-2 range).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange, QNegative
from .states import DensityMatrix, Spectrum
from .xfamily import q_value

ASIN_CLAMP = 1e-12
DEGENERATE_GAP = 1e-12


class Ordering(enum.Enum):
    PAIRED = "paired"
    INTERLEAVED = "interleaved"


@dataclass(frozen=True)
class AnsatzParams:
    """Angles in [0, pi/2] plus the doublet-to-eigenvalue assignment."""

    alpha: float
    beta: float
    ordering: Ordering = Ordering.INTERLEAVED

    def __post_init__(self):
        for name, v in (("alpha", self.alpha), ("beta", self.beta)):
            if not 0.0 <= v <= np.pi / 2:
                raise OutOfRange(name, v, 0, np.pi / 2)


def x_eigenvectors(params: AnsatzParams) -> np.ndarray:
    """Unitary whose columns are the X-form eigenvectors in the requested
    ordering. Exact trigonometric construction (unitary to ~1e-16)."""
    ca, sa = np.cos(params.alpha), np.sin(params.alpha)
    cb, sb = np.cos(params.beta), np.sin(params.beta)
    outer_plus = (ca, 0.0, 0.0, sa)
    outer_minus = (sa, 0.0, 0.0, -ca)
    central_plus = (0.0, cb, sb, 0.0)
    central_minus = (0.0, sb, -cb, 0.0)
    if params.ordering is Ordering.PAIRED:
        cols = (outer_plus, outer_minus, central_plus, central_minus)
    else:
        cols = (outer_plus, central_plus, outer_minus, central_minus)
    return np.array(cols, dtype=np.complex128).T


def assemble_rho_x(spec: Spectrum, params: AnsatzParams) -> DensityMatrix:
    """Spectral assembly V diag(lam) V^dag with X-form eigenvectors."""
    v = x_eigenvectors(params)
    return DensityMatrix((v * spec.lam) @ v.conj().T)


def c_surface(spec: Spectrum, alpha: float, beta: float) -> float:
    """Concurrence of the INTERLEAVED assembly as a closed form in the
    angles:

    2 max(0,
          (l2 - l4)/2 sin 2b - sqrt((l1 sa^2 + l3 ca^2)(l1 ca^2 + l3 sa^2)),
          (l1 - l3)/2 sin 2a - sqrt((l2 sb^2 + l4 cb^2)(l2 cb^2 + l4 sb^2)))
    """
    for name, v in (("alpha", alpha), ("beta", beta)):
        if not 0.0 <= v <= np.pi / 2:
            raise OutOfRange(name, v, 0, np.pi / 2)
    l1, l2, l3, l4 = spec.lam
    ca2, sa2 = np.cos(alpha) ** 2, np.sin(alpha) ** 2
    cb2, sb2 = np.cos(beta) ** 2, np.sin(beta) ** 2
    t_central = 0.5 * (l2 - l4) * np.sin(2.0 * beta) - np.sqrt(
        (l1 * sa2 + l3 * ca2) * (l1 * ca2 + l3 * sa2)
    )
    t_outer = 0.5 * (l1 - l3) * np.sin(2.0 * alpha) - np.sqrt(
        (l2 * sb2 + l4 * cb2) * (l2 * cb2 + l4 * sb2)
    )
    return 2.0 * max(0.0, float(t_central), float(t_outer))


def alpha_star(spec: Spectrum, c: float) -> float:
    """Angle (with beta = 0) at which the INTERLEAVED assembly reaches
    concurrence ``c``: asin((c + 2 sqrt(l2 l4)) / (l1 - l3)) / 2, or pi/4
    on the degenerate l1 = l3 branch.

    Only defined where the branch discriminant is nonnegative; the asin
    argument is clamped to 1 when within 1e-12 of it, and QNegative is
    raised beyond that.
    """
    lam = spec.lam
    q = q_value(spec, c)
    gap = float(lam[0] - lam[2])
    x = float(c + 2.0 * np.sqrt(lam[1] * lam[3]))
    if gap <= DEGENERATE_GAP:
        if x > DEGENERATE_GAP:
            raise QNegative(q)
        return float(np.pi / 4)
    arg = x / gap
    if arg > 1.0 + ASIN_CLAMP:
        raise QNegative(q)
    return float(0.5 * np.arcsin(min(arg, 1.0)))
