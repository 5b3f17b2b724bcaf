"""Valuation matrix of a vector of univariate polynomials."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import InconsistencyError
from .unipoly import CoprimeBasis, UPoly, coprime_basis


@dataclass(frozen=True)
class ValuationMatrix:
    """Columns are stored as tuples; the last one is the valuation at infinity.

    ``provenance[j]`` lists the indices (into the coprime basis) merged into
    finite column ``j``.
    """

    columns: Tuple[Tuple[int, ...], ...]
    provenance: Tuple[Tuple[int, ...], ...]

    @property
    def finite(self) -> Tuple[Tuple[int, ...], ...]:
        return self.columns[:-1]

    @property
    def infinity(self) -> Tuple[int, ...]:
        return self.columns[-1]

    @property
    def rows(self) -> List[List[int]]:
        return [list(r) for r in zip(*self.columns)]


def proportional(u: Sequence[int], v: Sequence[int]) -> bool:
    """True if u and v span the same line (all 2x2 cross terms vanish)."""
    k = len(u)
    return all(u[a] * v[b] == u[b] * v[a] for a in range(k) for b in range(a + 1, k))


def infinity_column(f: Sequence[UPoly]) -> Tuple[int, ...]:
    return tuple(-g.degree for g in f)


def build_valuation(f: Sequence[UPoly], basis: CoprimeBasis = None) -> ValuationMatrix:
    if basis is None:
        basis = coprime_basis(f)
    # every root of g_j has the same order vector, so summing over the
    # deg(g_j) conjugate roots just scales it
    vectors = []
    for j, g in enumerate(basis.elements):
        w = tuple(g.degree * basis.exponents[i][j] for i in range(len(f)))
        vectors.append((w, (j,)))

    merged = True
    while merged:
        merged = False
        for a in range(len(vectors)):
            for b in range(a + 1, len(vectors)):
                (u, pu), (v, pv) = vectors[a], vectors[b]
                if proportional(u, v):
                    rest = [x for k, x in enumerate(vectors) if k not in (a, b)]
                    vectors = rest + [(tuple(x + y for x, y in zip(u, v)), tuple(sorted(pu + pv)))]
                    merged = True
                    break
            if merged:
                break

    vectors.sort(key=lambda item: item[0], reverse=True)
    total = [sum(col) for col in zip(*(v for v, _ in vectors))] or [0] * len(f)
    inf = tuple(-x for x in total)
    if inf != infinity_column(f):
        raise InconsistencyError("multiplicities do not add up to the degrees")
    return ValuationMatrix(
        columns=tuple(v for v, _ in vectors) + (inf,),
        provenance=tuple(p for _, p in vectors),
    )
