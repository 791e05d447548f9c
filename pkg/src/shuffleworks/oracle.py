"""Reference implementations used to cross-check the in-place algorithms.

Everything here is deliberately naive: out-of-place, index-by-index, no
cleverness.  The fast paths elsewhere must agree with these on every
input, which is what the test suite enforces.
"""

from __future__ import annotations

import numpy as np

from .perm_core import Involution, Permutation


def oracle_shuffle(array, k: int):
    """Out-of-place k-way perfect in-shuffle.

    The element at position i lands at k*i mod (N-1); the first and last
    positions stay put.  For k=2 this interleaves the two halves starting
    with the first element of the first half.
    """
    n = len(array)
    if k < 2:
        raise ValueError("k must be at least 2")
    if n % k:
        raise ValueError("length %d is not a multiple of k=%d" % (n, k))
    if n < 2:
        return array.copy() if isinstance(array, np.ndarray) else list(array)
    m = n - 1
    if isinstance(array, np.ndarray):
        out = np.empty_like(array)
        idx = (k * np.arange(m, dtype=np.int64)) % m
        out[idx] = array[:m]
        out[m] = array[m]
        return out
    out = [None] * n
    for i in range(m):
        out[k * i % m] = array[i]
    out[m] = array[m]
    return out


def oracle_apply(p: Permutation, array):
    """Out-of-place application of a permutation: out[p.map[i]] = array[i]."""
    if len(array) != p.size:
        raise ValueError("array length %d != permutation size %d" % (len(array), p.size))
    out = [None] * p.size
    for i, v in enumerate(p.map):
        out[v] = array[i]
    return out


def inshuffle_permutation(N: int, k: int) -> Permutation:
    """The index map induced by the k-way in-shuffle on N = k*M positions."""
    if k < 2 or N < 2 or N % k:
        raise ValueError("need N = k*M with k >= 2 and M >= 1")
    m = N - 1
    return Permutation([k * i % m for i in range(m)] + [m], check=False)


def enumerate_involutions(n: int):
    """Yield every involution of n points exactly once.

    Recursive matching: the smallest unmatched point is either fixed or
    paired with one of the larger unmatched points.  Intended for small n
    only; the count grows like the telephone numbers.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > 9:
        raise ValueError("n > 9 is too large for exhaustive enumeration")

    def match(free: tuple[int, ...]):
        if not free:
            yield ()
            return
        x = free[0]
        for rest in match(free[1:]):
            yield rest
        for pos in range(1, len(free)):
            y = free[pos]
            for rest in match(free[1:pos] + free[pos + 1:]):
                yield ((x, y),) + rest

    for pairs in match(tuple(range(n))):
        yield Involution.from_pairs(n, pairs)


def telephone_number(n: int) -> int:
    """Number of involutions of n points: T(n) = T(n-1) + (n-1)*T(n-2)."""
    a, b = 1, 1
    for i in range(2, n + 1):
        a, b = b, b + (i - 1) * a
    return b if n >= 1 else 1
