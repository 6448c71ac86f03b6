"""Cyclic Jacobi diagonalization for small dense symmetric matrices."""

from __future__ import annotations

import numpy as np


class EigensolverError(RuntimeError):
    pass


def jacobi_eigh(a, tol=1e-13, max_sweeps=100):
    """Eigenvalues (ascending) and column eigenvectors of symmetric ``a``.

    Rotations sweep the strict upper triangle row by row until the
    off-diagonal Frobenius norm falls below ``tol * max(1, ||a||_F)``.
    Equal eigenvalues keep the order of their diagonal positions, and each
    eigenvector is signed so its largest-magnitude entry is positive.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise ValueError("matrix is not symmetric to 1e-12")
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    threshold = tol * max(1.0, np.linalg.norm(a))

    for sweep in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2) * 2.0)
        if off < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    # small-angle limit; avoids overflow in diff / apq
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
    else:
        raise EigensolverError(f"Jacobi did not converge after {max_sweeps} sweeps")

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    v = v[:, order]
    lead = np.argmax(np.abs(v), axis=0)
    signs = np.sign(v[lead, np.arange(n)])
    return w, v * signs
