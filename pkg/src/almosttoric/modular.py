"""Kernel of a large integer matrix by multi-modular elimination.

Used by interpolation when the exact rational solve would be too slow.  The
caller certifies every reconstructed kernel vector exactly; the arithmetic
here only has to produce a candidate.
"""

from math import isqrt
from typing import Iterator, List, Optional, Tuple

import numpy as np

# p < 2**31 keeps products of residues below 2**62 in int64
PRIME_CEILING = 2**31 - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # bases 2, 3, 5, 7 are deterministic below 3.2e9
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(ceiling: int = PRIME_CEILING) -> Iterator[int]:
    n = ceiling
    while n > 2:
        if _is_prime(n):
            yield n
        n -= 1


def echelon_mod(M: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Forward elimination mod p; ``M`` holds residues in [0, p)."""
    a = M.copy() % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        below = a[r + 1:, c]
        hit = np.nonzero(below)[0] + r + 1
        if hit.size:
            factor = a[hit, c] * inv % p
            a[hit, c:] = (a[hit, c:] - np.outer(factor, a[r, c:]) % p) % p
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_vector_mod(M: np.ndarray, p: int, normalize_at: int) -> Tuple[int, Optional[List[int]]]:
    """Return (rank, kernel vector) mod p.

    The vector is only returned when the kernel is one-dimensional and its
    ``normalize_at`` coordinate is a unit; it is scaled so that coordinate is 1.
    """
    ech, pivots = echelon_mod(M, p)
    cols = M.shape[1]
    rank = len(pivots)
    if rank != cols - 1:
        return rank, None
    free = next(c for c in range(cols) if c not in set(pivots))
    v = np.zeros(cols, dtype=np.int64)
    v[free] = 1
    for r in range(rank - 1, -1, -1):
        pc = pivots[r]
        s = int((ech[r, pc + 1:] * v[pc + 1:] % p).sum()) % p
        v[pc] = (-s) * pow(int(ech[r, pc]), p - 2, p) % p
    v = [int(x) for x in v]
    if v[normalize_at] == 0:
        return rank, None
    inv = pow(v[normalize_at], p - 2, p)
    return rank, [x * inv % p for x in v]


def power_matrix_mod(values: List[List[int]], support: List[Tuple[int, ...]], p: int) -> np.ndarray:
    """Rows indexed by evaluation point, columns by support vector:
    entry prod_i values[x][i] ** v[i] mod p."""
    y = np.array([[v % p for v in row] for row in values], dtype=np.int64)  # shape (N, m)
    S = np.array(support, dtype=np.int64)  # shape (k, m)
    N, m = y.shape
    out = np.ones((N, len(support)), dtype=np.int64)
    for i in range(m):
        top = int(S[:, i].max()) if len(support) else 0
        table = np.ones((top + 1, N), dtype=np.int64)
        for e in range(1, top + 1):
            table[e] = table[e - 1] * y[:, i] % p
        out = out * table[S[:, i]].T % p
    return out


def rational_reconstruct(a: int, m: int) -> Optional[Tuple[int, int]]:
    """Find n/d = a mod m with |n|, d <= sqrt(m/2), or None."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return r1, s1


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> Tuple[int, int]:
    t = (r2 - r1) * pow(m1, -1, m2) % m2
    return r1 + m1 * t, m1 * m2
