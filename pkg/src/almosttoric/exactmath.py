"""Exact integer/rational linear algebra.

Matrices are plain row-major sequences of sequences holding ``int`` or
``fractions.Fraction`` entries.  Nothing in here touches floating point.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

Matrix = Sequence[Sequence]


def shape(M: Matrix) -> Tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for row in M:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def to_fraction_matrix(M: Matrix) -> List[List[Fraction]]:
    return [[Fraction(x) for x in row] for row in M]


def integer_rows(M: Matrix) -> List[List[int]]:
    """Scale each row by the lcm of its denominators; row scaling keeps rank and kernel."""
    out = []
    for row in M:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_echelon(M: Matrix) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the reduced matrix and the list of pivot columns.  Pivots are the
    first nonzero entry in column order, so the result is deterministic.
    """
    a = [list(row) for row in integer_rows(M)]
    rows, cols = shape(a)
    prev = 1
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        prow = a[r]
        for i in range(r + 1, rows):
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    for j in range(c + 1, cols):
                        row[j] = row[j] * piv // prev
                continue
            for j in range(c + 1, cols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        pivots.append(c)
        prev = piv
        r += 1
    return a, pivots


def rank_exact(M: Matrix) -> int:
    """Rank over the rationals via Bareiss elimination."""
    rows, cols = shape(M)
    if rows == 0 or cols == 0:
        return 0
    return len(bareiss_echelon(M)[1])


def det(M: Matrix) -> int:
    """Determinant of a square integer matrix (fraction-free)."""
    rows, cols = shape(M)
    if rows != cols:
        raise ValueError("determinant of a non-square matrix")
    if rows == 0:
        return 1
    a = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(rows - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, rows) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, rows):
            for j in range(k + 1, rows):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = piv
    return sign * a[-1][-1]


def maximal_minor(A: Matrix, deleted_cols: Tuple[int, int]) -> int:
    """det of the n x n submatrix of the n x (n+2) matrix ``A`` with two columns removed."""
    n, m = shape(A)
    if m != n + 2:
        raise ValueError(f"expected an n x (n+2) matrix, got {n} x {m}")
    i, j = deleted_cols
    if not (0 <= i < m and 0 <= j < m):
        raise IndexError(f"column index out of range: {deleted_cols}")
    if i == j:
        raise ValueError(f"duplicate column index {i}")
    keep = [c for c in range(m) if c != i and c != j]
    return det([[row[c] for c in keep] for row in A])


def content(v: Sequence[int]) -> int:
    """gcd of the absolute values of the entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no content")
    return g


def rref(M: Matrix) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over the rationals (plain Gauss-Jordan)."""
    a = to_fraction_matrix(M)
    rows, cols = shape(a)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        prow = a[r]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace_dim_and_basis(M: Matrix) -> Tuple[int, List[List[Fraction]]]:
    """Right nullspace of ``M``: one basis vector per free column of the RREF."""
    rows, cols = shape(M)
    if rows == 0:
        return cols, [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    red, pivots = rref(M)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return len(basis), basis


def matmul(A: Matrix, B: Matrix) -> List[list]:
    ra, ca = shape(A)
    rb, cb = shape(B)
    if ca != rb:
        raise ValueError(f"dimension mismatch {ra}x{ca} * {rb}x{cb}")
    bt = list(zip(*B)) if rb else [()] * cb
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in A]


def matvec(A: Matrix, v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in A]


def transpose(A: Matrix) -> List[list]:
    return [list(c) for c in zip(*A)]


def solve(M: Matrix, b: Sequence) -> List[Fraction]:
    """Unique solution of a square nonsingular system over the rationals."""
    n, m = shape(M)
    if n != m:
        raise ValueError("solve expects a square matrix")
    aug = [list(row) + [bb] for row, bb in zip(M, b)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


def inverse(M: Matrix) -> List[List[Fraction]]:
    n, m = shape(M)
    if n != m:
        raise ValueError("inverse expects a square matrix")
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def primitive(v: Sequence[Fraction]) -> List[int]:
    """Clear denominators and divide by the content; the zero vector is returned as is."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    if not any(ints):
        return ints
    g = content(ints)
    return [x // g for x in ints]
