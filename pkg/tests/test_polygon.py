from itertools import product

import pytest

from almosttoric import Classification, build_pluecker, build_valuation, newton_polygon, validate_input
from almosttoric.errors import NotHypersurfaceError
from almosttoric.exactmath import matvec
from almosttoric.polygon import combine_parallel, edge_matrix
from golden import (
    H_EDGES, H_PV, H_VERTICES, H_VERTICES_LISTED, Z_MONOMIALS, Z_VERTICES, cyclic_equal, instance_H, instance_Z,
    parse_monomial,
)


def polygon_of(inst, flip=False):
    return newton_polygon(inst, build_pluecker(inst.A), build_valuation(inst.f), flip_orientation=flip)


def test_edge_matrix_H_columns():
    inst = instance_H()
    em = edge_matrix(build_pluecker(inst.A), build_valuation(inst.f))
    assert sorted(em.columns) == sorted(tuple(c) for c in zip(*H_PV))
    assert em.classification is Classification.ALMOST_TORIC


def test_vertices_H():
    poly = polygon_of(instance_H())
    assert cyclic_equal(poly.vertices, H_VERTICES)
    assert sorted(poly.edges) == sorted(H_EDGES)
    assert poly.degree == 22


def test_listed_H_vertex_is_not_homogeneous():
    A = instance_H().A
    alphas = {tuple(matvec(A, v)) for v in H_VERTICES_LISTED}
    assert len(alphas) == 2
    assert {tuple(matvec(A, v)) for v in H_VERTICES} == {(20, 8, 16)}


def test_vertices_Z():
    poly = polygon_of(instance_Z())
    assert cyclic_equal(poly.vertices, Z_VERTICES)


def brute_force_points(A, vertices):
    """Every nonnegative integer vector in the box with the right A-degree that lies in the hull."""
    m = len(vertices[0])
    alpha = matvec(A, vertices[0])
    hi = [max(v[i] for v in vertices) for i in range(m)]
    pts = []
    for p in product(*[range(h + 1) for h in hi]):
        if matvec(A, p) == alpha and _in_hull(p, vertices):
            pts.append(p)
    return sorted(pts)


def _in_hull(p, verts):
    # 2D hull in a coordinate projection where the polygon is non-degenerate
    m = len(p)
    for a in range(m):
        for b in range(a + 1, m):
            proj = [(v[a], v[b]) for v in verts]
            area = sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(proj, proj[1:] + proj[:1]))
            if area == 0:
                continue
            sgn = 1 if area > 0 else -1
            q = (p[a], p[b])
            return all(sgn * ((x1 - x0) * (q[1] - y0) - (y1 - y0) * (q[0] - x0)) >= 0
                       for (x0, y0), (x1, y1) in zip(proj, proj[1:] + proj[:1]))
    raise AssertionError("degenerate polygon")


def test_lattice_points_Z_are_the_monomials():
    poly = polygon_of(instance_Z())
    want = sorted(parse_monomial(t, 4) for t in Z_MONOMIALS.split(","))
    assert len(want) == 20
    assert sorted(poly.lattice_points) == want


@pytest.mark.parametrize("inst", [instance_H(), instance_Z()], ids=["H", "Z"])
def test_lattice_points_against_brute_force(inst):
    poly = polygon_of(inst)
    assert sorted(poly.lattice_points) == brute_force_points(inst.A, list(poly.vertices))


@pytest.mark.parametrize("inst", [instance_H(), instance_Z()], ids=["H", "Z"])
def test_flipped_orientation_reflects(inst):
    a = polygon_of(inst)
    b = polygon_of(inst, flip=True)
    assert set(a.vertices) != set(b.vertices)
    # point reflection through the centre of the bounding box
    m = len(a.vertices[0])
    twice_center = [max(v[i] for v in a.vertices) + min(v[i] for v in a.vertices) for i in range(m)]
    assert {tuple(c - x for c, x in zip(twice_center, v)) for v in a.vertices} == set(b.vertices)


def test_toric_segment():
    inst = validate_input([[1, 1, 1]], ["1", "1", "x"])
    poly = polygon_of(inst)
    assert poly.classification is Classification.TORIC
    assert sorted(poly.vertices) == [(0, 1, 0), (1, 0, 0)]
    assert sorted(poly.lattice_points) == [(0, 1, 0), (1, 0, 0)]


def test_constant_f_is_not_a_hypersurface():
    with pytest.raises(NotHypersurfaceError):
        polygon_of(validate_input([[1, 1, 1]], ["2", "3", "5"]))


def test_combine_parallel():
    cols = [(1, -1, 0), (2, -2, 0), (0, 0, 0), (-1, 1, 0)]
    assert combine_parallel(cols) == [(3, -3, 0), (-1, 1, 0)]
