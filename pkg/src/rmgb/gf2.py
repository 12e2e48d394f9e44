"""Small GF(2) linear algebra helpers on numpy uint8 matrices."""

from __future__ import annotations

import numpy as np


def bit_matrix(rows) -> np.ndarray:
    """Stack iterables of 0/1 into a uint8 matrix (empty input allowed)."""
    data = [list(r) for r in rows]
    if not data:
        return np.zeros((0, 0), dtype=np.uint8)
    return np.array(data, dtype=np.uint8) & 1


def rref(a: np.ndarray) -> np.ndarray:
    """Reduced row echelon form over GF(2), zero rows dropped."""
    a = (np.array(a, dtype=np.uint8) & 1).copy()
    if a.size == 0:
        return a.reshape(0, a.shape[1] if a.ndim == 2 else 0)
    nrows, ncols = a.shape
    pivot_row = 0
    for col in range(ncols):
        hits = np.nonzero(a[pivot_row:, col])[0]
        if hits.size == 0:
            continue
        swap = pivot_row + hits[0]
        if swap != pivot_row:
            a[[pivot_row, swap]] = a[[swap, pivot_row]]
        mask = a[:, col].copy()
        mask[pivot_row] = 0
        a[mask == 1] ^= a[pivot_row]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return a[np.any(a, axis=1)]


def rank(a: np.ndarray) -> int:
    return rref(a).shape[0]


def same_row_space(a: np.ndarray, b: np.ndarray) -> bool:
    """Whether two GF(2) matrices span the same row space."""
    ra, rb = rref(a), rref(b)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))
