"""Pure-Python eigenkernels (fallback when the compiled extension is absent).

Backed by ``numpy.linalg.eigh`` behind the same contract as the compiled
cyclic-Jacobi kernel: eigenvalues sorted descending, columns inside any
eigenvalue cluster (gap < 1e-10) re-orthonormalized with modified
Gram-Schmidt, and every column's phase fixed so its largest-magnitude entry
is real positive (magnitude ties break to the lowest row index).
"""

import numpy as np

CLUSTER_GAP = 1e-10


def _finalize(w: np.ndarray, v: np.ndarray) -> None:
    """Apply the deterministic degenerate-subspace conventions in place."""
    start = 0
    for k in range(1, 5):
        if k == 4 or w[k - 1] - w[k] >= CLUSTER_GAP:
            if k - start > 1:
                for j in range(start, k):
                    for i in range(start, j):
                        v[:, j] -= (v[:, i].conj() @ v[:, j]) * v[:, i]
                    v[:, j] /= np.linalg.norm(v[:, j])
            start = k
    for j in range(4):
        mags = np.abs(v[:, j])
        r = int(np.argmax(mags))
        if mags[r] > 0.0:
            v[:, j] *= v[r, j].conj() / mags[r]


def eigh4(a: np.ndarray):
    """Eigendecomposition of a 4x4 Hermitian matrix, descending eigenvalues."""
    w, v = np.linalg.eigh(a)
    # stable descending sort keeps LAPACK's order inside ties
    order = np.argsort(-w, kind="stable")
    w = np.ascontiguousarray(w[order])
    v = np.ascontiguousarray(v[:, order])
    _finalize(w, v)
    return w, v


def psd_sqrt4(a: np.ndarray, neg_tol: float) -> np.ndarray:
    """Hermitian PSD square root; eigenvalues below ``-neg_tol`` raise ValueError."""
    w, v = np.linalg.eigh(a)
    if w[0] < -neg_tol:
        raise ValueError(w[0])
    s = np.sqrt(np.maximum(w, 0.0))
    r = (v * s) @ v.conj().T
    r = 0.5 * (r + r.conj().T)
    return r
