"""Numpy implementations of the mutation kernels.

Used when the compiled extension is missing, or when the environment
variable ``ORBIMGS_BACKEND=python`` is set.
"""

import numpy as np

LIMIT = 2**31


def mutate_inplace(block, k):
    n, m = block.shape
    if not (0 <= k < n and k < m):
        raise IndexError(k)
    col = block[:, k].copy()
    row = block[k].copy()
    # row[k] == col[k] == 0, so row k and column k receive no update here
    block += np.outer(np.maximum(col, 0), np.maximum(row, 0))
    block -= np.outer(np.minimum(col, 0), np.minimum(row, 0))
    block[k] *= -1
    block[:, k] *= -1
    if block.size and np.abs(block).max() > LIMIT:
        raise OverflowError("mutation entry exceeds 2**31")


def row_signs(block, start, out):
    sub = block[:, start:]
    pos = (sub > 0).any(axis=1)
    neg = (sub < 0).any(axis=1)
    out[:] = np.where(pos & neg, 2, np.where(pos, 1, np.where(neg, -1, 0)))
