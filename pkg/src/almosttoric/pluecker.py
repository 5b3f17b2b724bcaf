"""Problem instances and the Pluecker matrix of the exponent matrix."""

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Sequence, Tuple

from .errors import InputError
from .exactmath import maximal_minor, rank_exact
from .unipoly import UPoly, parse_poly

IntMatrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ToricInput:
    A: IntMatrix
    f: Tuple[UPoly, ...]

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def d(self) -> int:
        return sum(row[0] for row in self.A)


def validate_input(raw_A: Sequence[Sequence[int]], raw_f: Sequence) -> ToricInput:
    """Check the standing hypotheses and freeze the instance.

    ``raw_f`` entries may be :class:`UPoly` or expression strings.
    """
    try:
        A = tuple(tuple(int(x) for x in row) for row in raw_A)
    except (TypeError, ValueError) as exc:
        raise InputError(f"matrix entries must be integers: {exc}") from None
    n = len(A)
    if n == 0:
        raise InputError("A must have at least one row")
    width = {len(row) for row in A}
    if len(width) != 1:
        raise InputError("rows of A have different lengths")
    if width.pop() != n + 2:
        raise InputError(f"A must be n x (n+2); got {n} x {len(A[0])}")
    if rank_exact(A) < n:
        raise InputError("rank(A) < n")
    sums = {sum(col) for col in zip(*A)}
    if len(sums) != 1:
        raise InputError("column sums differ")
    if sums.pop() <= 0:
        raise InputError("column sums must be positive")
    if len(raw_f) != n + 2:
        raise InputError(f"expected {n + 2} polynomials, got {len(raw_f)}")
    f = []
    for i, g in enumerate(raw_f):
        if not isinstance(g, UPoly):
            try:
                g = parse_poly(str(g))
            except ValueError as exc:
                raise InputError(f"f_{i}: {exc}") from None
        if g.is_zero():
            raise InputError(f"f_{i} is the zero polynomial")
        f.append(g)
    return ToricInput(A, tuple(f))


@dataclass(frozen=True)
class PlueckerData:
    P: IntMatrix
    delta: int


def minors_table(A: Sequence[Sequence[int]]) -> dict:
    """All maximal minors det(A_[i,j]) for i < j."""
    m = len(A[0])
    return {(i, j): maximal_minor(A, (i, j)) for i, j in combinations(range(m), 2)}


def build_pluecker(A: Sequence[Sequence[int]]) -> PlueckerData:
    m = len(A[0])
    minors = minors_table(A)
    delta = 0
    for v in minors.values():
        delta = gcd(delta, v)
    assert delta > 0, "all maximal minors vanish; A is rank deficient"
    P = [[0] * m for _ in range(m)]
    for (i, j), v in minors.items():
        # (-1)^(i+j) has the same parity for 0- and 1-based indices
        p = (-1) ** (i + j) * v // delta
        P[i][j] = p
        P[j][i] = -p
    return PlueckerData(tuple(map(tuple, P)), delta)
