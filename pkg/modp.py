"""Exact linear algebra over the prime field GF(p)."""

import numpy as np

# products of two residues must fit in int64
MAX_PRIME = 3_037_000_493


def is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod_p(matrix, p):
    """Rank of an integer matrix over GF(p), by row reduction on a copy.

    Args:
        matrix: 2-D array-like of integers (any sign).
        p: a prime below MAX_PRIME.

    Returns:
        Integer rank over GF(p).
    """
    A = np.array(matrix, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return 0
    A %= p
    rows, cols = A.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nonzero = np.flatnonzero(A[rank:, col])
        if nonzero.size == 0:
            continue
        pivot = rank + int(nonzero[0])
        if pivot != rank:
            A[[rank, pivot]] = A[[pivot, rank]]
        inv = pow(int(A[rank, col]), -1, p)
        A[rank] = (A[rank] * inv) % p
        below = rank + 1 + np.flatnonzero(A[rank + 1:, col])
        if below.size:
            factors = A[below, col][:, None]
            A[below] = (A[below] - factors * A[rank]) % p
        rank += 1
    return rank
