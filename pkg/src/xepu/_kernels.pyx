# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled 4x4 Hermitian eigenkernels.

Cyclic Jacobi rotations: unconditionally convergent at this size and the
rotations build an orthonormal basis even inside degenerate subspaces.
Budget is 100 sweeps with an off-diagonal Frobenius threshold of 1e-14
(scaled by the input norm when that norm exceeds 1).

Degenerate-subspace determinism: eigenvalues are sorted descending with a
stable sort, columns inside any eigenvalue cluster (gap < 1e-10) are
re-orthonormalized with modified Gram-Schmidt, and every column's phase is
fixed so its largest-magnitude entry is real positive (magnitude ties break
to the lowest row index).
"""

import numpy as np

from libc.math cimport fabs, hypot, sqrt

cdef enum:
    N = 4
    MAX_SWEEPS = 100

cdef double OFF_TOL = 1e-14
cdef double CLUSTER_GAP = 1e-10


cdef inline double _cabs(double complex z) noexcept nogil:
    return hypot(z.real, z.imag)


cdef int _jacobi(double complex[4][4] a, double complex[4][4] v) noexcept nogil:
    """Diagonalize Hermitian ``a`` in place, accumulating eigenvectors in ``v``.

    Returns 0 on convergence, 1 if the sweep budget is exhausted.
    """
    cdef int i, j, k, p, q, sweep
    cdef double fnorm, off, tol, m, tau, t, c, s, er, ei
    cdef double complex zpq, e, ce, akp, akq, apk, aqk

    for i in range(N):
        for j in range(N):
            v[i][j] = 1.0 if i == j else 0.0

    fnorm = 0.0
    for i in range(N):
        for j in range(N):
            fnorm += a[i][j].real * a[i][j].real + a[i][j].imag * a[i][j].imag
    fnorm = sqrt(fnorm)
    tol = OFF_TOL * (fnorm if fnorm > 1.0 else 1.0)

    for sweep in range(MAX_SWEEPS):
        off = 0.0
        for i in range(N):
            for j in range(i + 1, N):
                off += 2.0 * (a[i][j].real * a[i][j].real + a[i][j].imag * a[i][j].imag)
        off = sqrt(off)
        if off <= tol:
            return 0

        for p in range(N - 1):
            for q in range(p + 1, N):
                zpq = a[p][q]
                m = _cabs(zpq)
                if m < 1e-280:
                    a[p][q] = 0.0
                    a[q][p] = 0.0
                    continue
                tau = (a[q][q].real - a[p][p].real) / (2.0 * m)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                er = zpq.real / m
                ei = zpq.imag / m
                e = er + 1j * ei
                ce = er - 1j * ei

                # columns p and q of A <- A R
                for k in range(N):
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = c * akp - s * ce * akq
                    a[k][q] = s * e * akp + c * akq
                # rows p and q of A <- R^dag A
                for k in range(N):
                    apk = a[p][k]
                    aqk = a[q][k]
                    a[p][k] = c * apk - s * e * aqk
                    a[q][k] = s * ce * apk + c * aqk
                # the rotation annihilates (p, q) by construction
                a[p][q] = 0.0
                a[q][p] = 0.0
                a[p][p] = a[p][p].real
                a[q][q] = a[q][q].real

                # eigenvectors: V <- V R
                for k in range(N):
                    akp = v[k][p]
                    akq = v[k][q]
                    v[k][p] = c * akp - s * ce * akq
                    v[k][q] = s * e * akp + c * akq
    return 1


cdef void _finalize(double[4] w, double complex[4][4] v) noexcept nogil:
    """Stable-descending sort, cluster MGS, and per-column phase fix."""
    cdef int idx[4]
    cdef double ws[4]
    cdef double complex vs[4][4]
    cdef int i, j, k, m_, start, best
    cdef double nrm, bm, m
    cdef double complex r, z, factor

    for i in range(N):
        idx[i] = i
    for i in range(1, N):
        j = i
        while j > 0 and w[idx[j - 1]] < w[idx[j]]:
            k = idx[j - 1]
            idx[j - 1] = idx[j]
            idx[j] = k
            j -= 1
    for j in range(N):
        ws[j] = w[idx[j]]
        for i in range(N):
            vs[i][j] = v[i][idx[j]]
    for j in range(N):
        w[j] = ws[j]
        for i in range(N):
            v[i][j] = vs[i][j]

    # modified Gram-Schmidt inside eigenvalue clusters
    start = 0
    for k in range(1, N + 1):
        if k == N or w[k - 1] - w[k] >= CLUSTER_GAP:
            if k - start > 1:
                for j in range(start, k):
                    for i in range(start, j):
                        r = 0.0
                        for m_ in range(N):
                            r += v[m_][i].conjugate() * v[m_][j]
                        for m_ in range(N):
                            v[m_][j] = v[m_][j] - r * v[m_][i]
                    nrm = 0.0
                    for m_ in range(N):
                        nrm += v[m_][j].real * v[m_][j].real + v[m_][j].imag * v[m_][j].imag
                    nrm = sqrt(nrm)
                    for m_ in range(N):
                        v[m_][j] = v[m_][j] / nrm
            start = k

    # phase fix: largest-magnitude entry made real positive, ties to lowest row
    for j in range(N):
        best = 0
        bm = _cabs(v[0][j])
        for i in range(1, N):
            m = _cabs(v[i][j])
            if m > bm:
                bm = m
                best = i
        if bm > 0.0:
            z = v[best][j]
            factor = z.conjugate() / bm
            for i in range(N):
                v[i][j] = v[i][j] * factor


cdef int _load(object a, double complex[4][4] am) except -1:
    cdef double complex[:, :] mv = a
    cdef int i, j
    if mv.shape[0] != N or mv.shape[1] != N:
        raise ValueError("expected a 4x4 matrix")
    for i in range(N):
        for j in range(N):
            am[i][j] = mv[i, j]
    return 0


def eigh4(a):
    """Eigendecomposition of a 4x4 Hermitian complex matrix.

    Returns ``(w, v)`` with eigenvalues ``w`` sorted descending and the
    k-th column of ``v`` the unit eigenvector for ``w[k]``, under the
    deterministic degenerate-subspace conventions.
    """
    cdef double complex am[4][4]
    cdef double complex vm[4][4]
    cdef double wv[4]
    cdef int i, j, status

    _load(a, am)
    status = _jacobi(am, vm)
    if status != 0:
        raise RuntimeError("cyclic Jacobi exceeded its 100-sweep budget")
    for i in range(N):
        wv[i] = am[i][i].real
    _finalize(wv, vm)

    w = np.empty(N, dtype=np.float64)
    v = np.empty((N, N), dtype=np.complex128)
    cdef double[:] wout = w
    cdef double complex[:, :] vout = v
    for i in range(N):
        wout[i] = wv[i]
        for j in range(N):
            vout[i, j] = vm[i][j]
    return w, v


def psd_sqrt4(a, double neg_tol):
    """Hermitian PSD square root of a 4x4 matrix.

    Eigenvalues in ``[-neg_tol, 0)`` are clipped to zero; anything more
    negative raises ``ValueError`` carrying the offending eigenvalue.
    """
    cdef double complex am[4][4]
    cdef double complex vm[4][4]
    cdef double wv[4]
    cdef double s[4]
    cdef int i, j, k, status
    cdef double wmin
    cdef double complex acc

    _load(a, am)
    status = _jacobi(am, vm)
    if status != 0:
        raise RuntimeError("cyclic Jacobi exceeded its 100-sweep budget")
    for i in range(N):
        wv[i] = am[i][i].real
    wmin = wv[0]
    for i in range(1, N):
        if wv[i] < wmin:
            wmin = wv[i]
    if wmin < -neg_tol:
        raise ValueError(wmin)
    for i in range(N):
        s[i] = sqrt(wv[i]) if wv[i] > 0.0 else 0.0

    r = np.empty((N, N), dtype=np.complex128)
    cdef double complex[:, :] rout = r
    for i in range(N):
        for j in range(i, N):
            acc = 0.0
            for k in range(N):
                acc += vm[i][k] * s[k] * vm[j][k].conjugate()
            if i == j:
                rout[i, j] = acc.real
            else:
                rout[i, j] = acc
                rout[j, i] = acc.conjugate()
    return r
