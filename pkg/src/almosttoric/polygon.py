"""Newton polygon of an almost-toric hypersurface from P_A * V_f."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import ceil, floor, gcd
from typing import List, Sequence, Tuple

from .errors import InconsistencyError, NotHypersurfaceError
from .exactmath import content, inverse, matmul, matvec, rank_exact
from .pluecker import PlueckerData
from .valuation import ValuationMatrix

Vector = Tuple[int, ...]


class Classification(str, Enum):
    NOT_HYPERSURFACE = "NotHypersurface"
    TORIC = "ToricHypersurface"
    ALMOST_TORIC = "AlmostToric"


@dataclass(frozen=True)
class EdgeMatrix:
    columns: Tuple[Vector, ...]
    classification: Classification

    @property
    def rows(self) -> List[List[int]]:
        return [list(r) for r in zip(*self.columns)]


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: Tuple[Vector, ...]
    edges: Tuple[Vector, ...]
    projection: Tuple[int, int]
    classification: Classification
    lattice_points: Tuple[Vector, ...] = field(default=(), compare=False)

    @property
    def degree(self) -> int:
        return sum(self.vertices[0])


def edge_matrix(pd: PlueckerData, V: ValuationMatrix) -> EdgeMatrix:
    E = matmul(pd.P, V.rows)
    rank = rank_exact(E)
    if rank > 2:
        raise InconsistencyError(f"rank(P_A V_f) = {rank} > 2")
    cls = [Classification.NOT_HYPERSURFACE, Classification.TORIC, Classification.ALMOST_TORIC][rank]
    return EdgeMatrix(tuple(tuple(c) for c in zip(*E)), cls)


def projection_pair(pd: PlueckerData) -> Tuple[int, int]:
    m = len(pd.P)
    for c1, c2 in combinations(range(m), 2):
        if pd.P[c1][c2] != 0:
            return c1, c2
    raise InconsistencyError("Pluecker matrix is zero")


def _half(x: int, y: int) -> int:
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _angle_cmp(u: Tuple[int, int], v: Tuple[int, int]) -> int:
    hu, hv = _half(*u), _half(*v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _same_direction(u: Sequence[int], v: Sequence[int]) -> bool:
    k = len(u)
    if any(u[a] * v[b] != u[b] * v[a] for a in range(k) for b in range(a + 1, k)):
        return False
    return sum(x * y for x, y in zip(u, v)) > 0


def combine_parallel(columns: Sequence[Sequence[int]]) -> List[Vector]:
    """Drop zero columns and sum columns pointing the same way."""
    edges: List[List[int]] = []
    for c in columns:
        if not any(c):
            continue
        for e in edges:
            if _same_direction(e, c):
                e[:] = [x + y for x, y in zip(e, c)]
                break
        else:
            edges.append(list(c))
    return [tuple(e) for e in edges]


def assemble_polygon(em: EdgeMatrix, pd: PlueckerData, flip_orientation: bool = False) -> NewtonPolygon:
    """Order the edges and chain them into the vertex cycle.

    Counterclockwise in the (c1, c2) projection when p_{c1,c2} > 0, clockwise
    otherwise.  ``flip_orientation`` inverts that rule.
    """
    if em.classification is Classification.NOT_HYPERSURFACE:
        raise NotHypersurfaceError("not a hypersurface: rank(P_A V_f) = 0")
    c1, c2 = projection_pair(pd)
    edges = combine_parallel(em.columns)
    ccw = pd.P[c1][c2] > 0
    if flip_orientation:
        ccw = not ccw
    key = cmp_to_key(lambda u, v: _angle_cmp((u[c1], u[c2]), (v[c1], v[c2])))
    edges.sort(key=key, reverse=not ccw)
    return NewtonPolygon(chain_edges(edges), tuple(edges), (c1, c2), em.classification)


def chain_edges(edges: Sequence[Vector]) -> Tuple[Vector, ...]:
    """Vertices from ordered edges: partial sums shifted into the nonnegative orthant."""
    m = len(edges[0])
    partial = []
    acc = [0] * m
    for e in edges:
        acc = [a + b for a, b in zip(acc, e)]
        partial.append(acc)
    if any(partial[-1]):
        raise InconsistencyError("edges do not close up")
    shift = [-min(p[i] for p in partial) for i in range(m)]
    # vertex k sits after edges 1..k; the start vertex is the partial sum of all m
    order = [len(partial) - 1] + list(range(len(partial) - 1))
    return tuple(tuple(s + p for s, p in zip(shift, partial[k])) for k in order)


def edge_gcd(poly: NewtonPolygon) -> int:
    g = 0
    for e in poly.edges:
        g = gcd(g, content(e))
    return g


def shrink_polygon(poly: NewtonPolygon, m: int, A: Sequence[Sequence[int]]) -> NewtonPolygon:
    """The polygon with every edge divided by ``m``, normalized and with lattice points.

    Needed when the parameterization covers its image m times: the edge
    lengths then come out m times too long.
    """
    if m < 1 or any(x % m for e in poly.edges for x in e):
        raise ValueError(f"{m} does not divide every edge")
    edges = tuple(tuple(x // m for x in e) for e in poly.edges)
    small = NewtonPolygon(chain_edges(edges), edges, poly.projection, poly.classification)
    return NewtonPolygon(small.vertices, edges, poly.projection, poly.classification, tuple(lattice_points(small, A)))


def _segment_points(a: Vector, b: Vector) -> List[Vector]:
    diff = [y - x for x, y in zip(a, b)]
    g = content(diff)
    step = [d // g for d in diff]
    return [tuple(x + k * s for x, s in zip(a, step)) for k in range(g + 1)]


def _row_range(poly2d: List[Tuple[int, int]], y: int) -> Tuple[Fraction, Fraction]:
    """x-extent of the convex polygon on the horizontal line at height y."""
    xs = []
    k = len(poly2d)
    for i in range(k):
        (x0, y0), (x1, y1) = poly2d[i], poly2d[(i + 1) % k]
        if y0 == y1:
            if y0 == y:
                xs.extend([Fraction(x0), Fraction(x1)])
            continue
        lo, hi = min(y0, y1), max(y0, y1)
        if lo <= y <= hi:
            xs.append(Fraction(x0) + Fraction((y - y0) * (x1 - x0), y1 - y0))
    return min(xs), max(xs)


def lattice_points(poly: NewtonPolygon, A: Sequence[Sequence[int]]) -> List[Vector]:
    """Integer points of the polygon, by scanline in the projection and exact lifting."""
    if len(poly.vertices) == 2:
        return _segment_points(*poly.vertices)
    c1, c2 = poly.projection
    m = len(A[0])
    rest = [i for i in range(m) if i not in (c1, c2)]
    A_rest_inv = inverse([[row[i] for i in rest] for row in A])
    alpha = matvec(A, poly.vertices[0])
    proj = [(v[c1], v[c2]) for v in poly.vertices]
    ys = [p[1] for p in proj]
    out = []
    for y in range(min(ys), max(ys) + 1):
        lo, hi = _row_range(proj, y)
        for x in range(ceil(lo), floor(hi) + 1):
            rhs = [al - row[c1] * x - row[c2] * y for al, row in zip(alpha, A)]
            sol = matvec(A_rest_inv, rhs)
            if any(s.denominator != 1 for s in sol):
                continue
            v = [0] * m
            v[c1], v[c2] = x, y
            for i, s in zip(rest, sol):
                v[i] = int(s)
            out.append(tuple(v))
    return out


def newton_polygon(inst, pd: PlueckerData, V: ValuationMatrix, flip_orientation: bool = False) -> NewtonPolygon:
    """Edge matrix, assembly and lattice points in one call."""
    em = edge_matrix(pd, V)
    poly = assemble_polygon(em, pd, flip_orientation)
    pts = lattice_points(poly, inst.A)
    return NewtonPolygon(poly.vertices, poly.edges, poly.projection, poly.classification, tuple(pts))
