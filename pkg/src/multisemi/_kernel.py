"""Dense associativity kernel.

Both sides of the associativity law are Boolean tensor contractions:

    left[a, b, c, k]  = OR_t  M[b, c, t] & M[a, t, k]      (a * (b * c))
    right[a, b, c, k] = OR_s  M[a, b, s] & M[s, c, k]      ((a * b) * c)

They are evaluated as float32 matrix products (exact: every count is at most
n < 2**24) so the inner OR runs in BLAS.  Work is O(n**5) per table and the
scan is chunked over ``a`` to bound memory at roughly ``_CHUNK_CELLS`` floats.
"""

from typing import NamedTuple, Optional, Tuple

import numpy as np

_CHUNK_CELLS = 1 << 22


class Scan(NamedTuple):
    witness: Optional[Tuple[int, int, int]]
    full: bool  # both sides equal the whole carrier for every triple


def scan(arr: np.ndarray) -> Scan:
    """Return the lexicographically first violating triple and the full-product flag.

    ``arr`` is a Boolean array of shape (n, n, n) with ``arr[a, b, k]`` true
    iff ``k`` lies in ``a * b``.  The scan stops at the first chunk holding a
    violation; ``full`` is then reported as False.
    """
    n = arr.shape[0]
    m = np.ascontiguousarray(arr, dtype=np.float32)
    flat = m.reshape(n * n, n)
    right_factor = m.reshape(n, n * n)
    chunk = max(1, _CHUNK_CELLS // max(1, n ** 3))
    full = True
    for a0 in range(0, n, chunk):
        a1 = min(n, a0 + chunk)
        w = a1 - a0
        left = (np.matmul(flat, m[a0:a1]) > 0).reshape(w, n, n, n)
        right = (m[a0:a1].reshape(w * n, n) @ right_factor).reshape(w, n, n, n) > 0
        bad = (left != right).any(axis=3)
        if bad.any():
            a, b, c = np.argwhere(bad)[0]
            return Scan((int(a) + a0, int(b), int(c)), False)
        if full:
            full = bool(left.all()) and bool(right.all())
    return Scan(None, full)


def batch_associative(arr: np.ndarray) -> np.ndarray:
    """Associativity verdicts for a batch of small tables, shape (B, n, n, n)."""
    m = arr.astype(np.uint8)
    left = np.einsum("zbct,zatk->zabck", m, m) > 0
    right = np.einsum("zabs,zsck->zabck", m, m) > 0
    return (left == right).reshape(arr.shape[0], -1).all(axis=1)
