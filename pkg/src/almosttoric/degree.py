"""Three independent ways to get the degree of the hypersurface."""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .errors import InconsistencyError
from .exactmath import det, matvec, rank_exact
from .pluecker import PlueckerData
from .polygon import NewtonPolygon
from .valuation import ValuationMatrix

log = logging.getLogger(__name__)

W_RANGE = 10**6
W_RETRIES = 32


def degree_from_polygon(poly: NewtonPolygon) -> int:
    sums = {sum(v) for v in poly.vertices}
    if len(sums) != 1:
        raise InconsistencyError(f"vertices of different total degree: {sorted(sums)}")
    return sums.pop()


# --- tropical ray count ----------------------------------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _bilinear(P, a, b) -> int:
    """a^T P b"""
    return sum(x * y for x, y in zip(a, matvec(P, b)))


def is_generic(P, V: ValuationMatrix, w: Sequence[int]) -> bool:
    Pw = matvec(P, w)
    for i, row in enumerate(P):
        if any(row) and Pw[i] == 0:
            return False
    for v in V.columns:
        if any(matvec(P, v)) and _bilinear(P, v, w) == 0:
            return False
    return True


def _intersections(P, V: ValuationMatrix, w: Sequence[int]) -> List[Tuple[int, int, int]]:
    """(i, j, |e_i^T P v_j|) for the pairs whose three signs agree."""
    Pw = matvec(P, w)
    out = []
    for j, v in enumerate(V.columns):
        Pv = matvec(P, v)
        s = _sign(_bilinear(P, v, w))
        for i in range(len(P)):
            if Pv[i] == 0 or s == 0:
                continue
            if _sign(Pw[i]) == _sign(Pv[i]) == s:
                out.append((i, j, abs(Pv[i])))
    return out


def generic_weight(P, V: ValuationMatrix, seed: int = 0) -> List[int]:
    rng = random.Random(seed)
    m = len(P)
    for _ in range(W_RETRIES):
        w = [rng.randint(-W_RANGE, W_RANGE) for _ in range(m)]
        if is_generic(P, V, w):
            return w
    raise InconsistencyError("no generic w found")


def degree_tropical(pd: PlueckerData, V: ValuationMatrix, w: Optional[Sequence[int]] = None, seed: int = 0) -> int:
    """Count intersections of the tropical hypersurface with the half lines w + R_{>=0} e_i."""
    if w is None:
        w = generic_weight(pd.P, V, seed)
    elif not is_generic(pd.P, V, w):
        raise ValueError(f"w = {list(w)} is not generic")
    return sum(mult for _, _, mult in _intersections(pd.P, V, w))


def initial_monomial(pd: PlueckerData, V: ValuationMatrix, w: Optional[Sequence[int]] = None, seed: int = 0) -> Tuple[int, ...]:
    if w is None:
        w = generic_weight(pd.P, V, seed)
    elif not is_generic(pd.P, V, w):
        raise ValueError(f"w = {list(w)} is not generic")
    expo = [0] * len(pd.P)
    for i, _, mult in _intersections(pd.P, V, w):
        expo[i] += mult
    return tuple(expo)


# --- triangulation sum -----------------------------------------------------

@dataclass(frozen=True)
class PSContext:
    """Two rows of P_A spanning ker(A); ``b`` lists the columns of that 2 x (n+2) matrix."""

    rows: Tuple[int, int]
    B: Tuple[Tuple[int, ...], Tuple[int, ...]]

    @property
    def b(self) -> List[Tuple[int, int]]:
        return list(zip(*self.B))


def ps_context(pd: PlueckerData) -> PSContext:
    for r1, r2 in combinations(range(len(pd.P)), 2):
        if rank_exact([pd.P[r1], pd.P[r2]]) == 2:
            return PSContext((r1, r2), (tuple(pd.P[r1]), tuple(pd.P[r2])))
    raise InconsistencyError("P_A has rank < 2")


def _det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _perturbation(bs) -> Tuple[int, int]:
    k = 1
    while any(_det2((1, k), b) == 0 for b in bs if any(b)):
        k += 1
    return (1, k)


@dataclass
class PSReport:
    """``terms`` are the local degrees of the columns of V_f in order.

    With the triangulation chosen by the cone test below their sum is
    minus the degree, so ``degree`` negates it.
    """

    total: Fraction
    terms: List[Fraction] = field(default_factory=list)
    # columns of V_f whose B*v sits on a cone boundary (resolved by perturbation)
    boundary: List[int] = field(default_factory=list)

    @property
    def degree(self) -> int:
        if self.total.denominator != 1:
            raise InconsistencyError(f"non-integral triangulation sum {self.total}")
        return -int(self.total)


def _lex_positive(a, b) -> bool:
    return a > 0 or (a == 0 and b > 0)


def local_degree(A, v: Sequence[int], ctx: PSContext, delta: int, z) -> Tuple[Fraction, bool]:
    """(1/delta) * sum over the triangulation T of |A_sigma| * sum_{i in sigma} v_i.

    T holds sigma = complement of {i, j} when B*v lies in the open cone of
    b_i, b_j.  If B*v sits on a boundary, B*v + eps*z (eps -> 0+) decides,
    which picks a triangulation refining the coarse subdivision; the sum is
    the same for every such refinement.
    """
    bs = ctx.b
    Bv = matvec(ctx.B, v)
    m = len(v)
    total = Fraction(0)
    boundary = False
    for i, j in combinations(range(m), 2):
        dij = _det2(bs[i], bs[j])
        if dij == 0:
            continue
        lam, lam_z = _det2(Bv, bs[j]) * _sign(dij), _det2(z, bs[j]) * _sign(dij)
        mu, mu_z = _det2(bs[i], Bv) * _sign(dij), _det2(bs[i], z) * _sign(dij)
        strict = lam > 0 and mu > 0
        if _lex_positive(lam, lam_z) and _lex_positive(mu, mu_z):
            if not strict:
                boundary = True
            sigma = [c for c in range(m) if c not in (i, j)]
            vol = abs(det([[row[c] for c in sigma] for row in A]))
            total += vol * sum(v[c] for c in sigma)
        elif (lam >= 0 and mu >= 0) and not strict:
            boundary = True
    return total / delta, boundary


def degree_ps(A, pd: PlueckerData, V: ValuationMatrix, ctx: Optional[PSContext] = None) -> PSReport:
    if ctx is None:
        ctx = ps_context(pd)
    z = _perturbation(ctx.b)
    report = PSReport(Fraction(0))
    for j, v in enumerate(V.columns):
        term, on_boundary = local_degree(A, v, ctx, pd.delta, z)
        report.terms.append(term)
        if on_boundary:
            report.boundary.append(j)
        report.total += term
    if report.boundary:
        log.debug("columns %s of V_f resolved by perturbation", report.boundary)
    return report
