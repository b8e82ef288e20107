"""Dense matrix inversion by elimination with row pivoting."""

import numpy as np

from .errors import DimensionMismatch, SingularMatrixError

#: Pivot magnitudes below this are treated as zero (matrix singular).
PIVOT_TOL = 1e-12


def invert_matrix(matrix, pivot_tol: float = PIVOT_TOL) -> np.ndarray:
    """Invert a square matrix.

    Gauss-Jordan elimination on the augmented system [M | I] with
    partial pivoting: at each column the largest remaining entry is
    swapped into the pivot position.  Raises SingularMatrixError as
    soon as the best available pivot magnitude drops below
    ``pivot_tol``.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionMismatch(f"expected a nonempty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")

    n = a.shape[0]
    aug = np.hstack([a, np.eye(n)])
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(aug[col:, col])))
        pivot = aug[pivot_row, col]
        if abs(pivot) < pivot_tol:
            raise SingularMatrixError(
                f"pivot {pivot:.3e} below threshold {pivot_tol:g} in column {col}"
            )
        if pivot_row != col:
            aug[[col, pivot_row]] = aug[[pivot_row, col]]
        aug[col] /= aug[col, col]
        others = np.arange(n) != col
        aug[others] -= np.outer(aug[others, col], aug[col])
    return aug[:, n:].copy()
