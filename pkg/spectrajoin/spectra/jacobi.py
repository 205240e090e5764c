"""
Cyclic Jacobi eigenvalue solver for real symmetric matrices.
"""

import logging
import math

import numpy as np

logger = logging.getLogger(__name__)


def off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigenvalues(
    matrix: np.ndarray, tolerance: float = 1e-12, max_sweeps: int = 100
) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, ascending.

    Sweeps every (p, q) pair in turn, annihilating a[p, q] with a plane
    rotation, until the off-diagonal Frobenius norm falls below
    ``tolerance * max(1, ||A||_F)``.

    Raises:
        ValueError: If the matrix is not square and symmetric.
    """
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"Jacobi needs a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, atol=1e-12):
        raise ValueError("Jacobi needs a symmetric matrix")
    n = a.shape[0]
    if n == 0:
        return np.empty(0)

    threshold = tolerance * max(1.0, float(np.linalg.norm(a)))
    for sweep in range(max_sweeps):
        off = off_diagonal_norm(a)
        if off < threshold:
            logger.debug(f"Jacobi converged after {sweep} sweeps (off={off:.2e})")
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < abs(diff) * 1.0e-36:
                    t = apq / diff
                else:
                    phi = diff / (2.0 * apq)
                    t = 1.0 / (abs(phi) + math.sqrt(phi * phi + 1.0))
                    if phi < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    else:
        logger.warning(
            f"Jacobi did not converge in {max_sweeps} sweeps (off={off_diagonal_norm(a):.2e})"
        )

    return np.sort(np.diag(a))
