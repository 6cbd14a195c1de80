import random

import pytest

from tcurve_lab.errors import DegenerateAtlas
from tcurve_lab.lattice import validate_polygon
from tcurve_lab.oracles import classify_surface_by_cells
from tcurve_lab.surface import (A1, IDENTITY, QUADRANTS,
                                build_ambient_surface, mat_mul, vec_mat)

from conftest import standard_triangle
from helpers import random_polygon


def test_boundary_identification_t5():
    s = build_ambient_surface(standard_triangle(5))
    # bottom edge has parity (1,0): copies pair across (0,1)
    cls = s.point_class((0, 0), (1, 0))
    assert cls == (((0, 0), (1, 0)), ((0, 1), (1, 0)))
    # an odd vertex lifts to a single point
    assert len(s.preimage_classes((0, 0))) == 1
    # interior broken-edge points lift to two, interior points to four
    assert len(s.preimage_classes((1, 0))) == 2
    assert len(s.preimage_classes((1, 1))) == 4


def test_preimage_counts_everywhere():
    for poly in (standard_triangle(3),
                 validate_polygon([(0, 0), (4, 0), (0, 2)]),
                 validate_polygon([(0, 0), (2, 0), (2, 2), (0, 2)])):
        s = build_ambient_surface(poly)
        odd = {poly.vertices[i] for i in poly.odd_vertex_indices}
        for p in poly.boundary_points:
            assert len(s.preimage_classes(p)) == (1 if p in odd else 2)
        for p in poly.interior_points:
            assert len(s.preimage_classes(p)) == 4


def test_lifted_broken_edge_is_a_circle():
    s = build_ambient_surface(standard_triangle(3))
    for j in range(3):
        circle = s.lifted_broken_edge(j)
        # twice the integral length, all classes distinct
        assert len(circle) == 2 * s.broken_edges[j].integral_length
        assert len(set(circle)) == len(circle)


def test_diamond_has_two_sheets():
    poly = validate_polygon([(1, 0), (2, 1), (1, 2), (0, 1)])
    topo = build_ambient_surface(poly).classify_topology()
    assert topo.components == 2
    assert topo.name == "two spheres"
    assert classify_surface_by_cells(poly) == topo


# ---------------------------------------------------------------------------
# atlas

def test_atlas_standard_triangle():
    s = build_ambient_surface(standard_triangle(4))
    atlas = s.canonical_atlas()
    assert atlas.eta == (1, 1, 1)
    assert mat_mul(A1, mat_mul(A1, A1)) == IDENTITY
    assert atlas.cyclic_product() == IDENTITY
    for k in range(3):
        assert atlas.charts[k].matrix == \
            mat_mul(atlas.charts[k - 1].matrix, atlas.steps[k])


def test_gluing_matrix_products():
    atlas = build_ambient_surface(standard_triangle(5)).canonical_atlas()
    r = atlas.r
    for i in range(r):
        assert atlas.gluing_matrix(i, i) == IDENTITY
        for j in range(r):
            assert atlas.charts[j].matrix == mat_mul(
                atlas.charts[i].matrix, atlas.gluing_matrix(i, j))


def test_chart_quadrant_map():
    atlas = build_ambient_surface(standard_triangle(3)).canonical_atlas()
    for chart in atlas.charts:
        qm = chart.quadrant_map
        assert qm[(0, 0)] == (0, 0)
        assert sorted(qm.values()) == sorted(QUADRANTS)  # a bijection
        for q in QUADRANTS:
            assert qm[q] == vec_mat(q, chart.matrix)


def test_degenerate_atlas():
    wide = build_ambient_surface(validate_polygon([(0, 0), (4, 0), (0, 2)]))
    with pytest.raises(DegenerateAtlas):
        wide.canonical_atlas()
    with pytest.raises(DegenerateAtlas):
        wide.homology_basis()


def test_tubular_types():
    td = build_ambient_surface(standard_triangle(3))
    assert [td.tubular_type(j) for j in range(3)] == ["moebius"] * 3
    wide = build_ambient_surface(validate_polygon([(0, 0), (4, 0), (0, 2)]))
    assert wide.tubular_type(0) == "annulus"
    assert wide.tubular_type(1) == "annulus"


def test_homology_basis_sizes():
    td = build_ambient_surface(standard_triangle(2))
    assert len(td.homology_basis()) == 1  # matches dim H_1(RP^2; Z2)
    sq = build_ambient_surface(
        validate_polygon([(0, 0), (2, 0), (2, 2), (0, 2)]))
    assert len(sq.homology_basis()) == 2
    circles = sq.homology_basis_circles()
    assert len(circles) == 2
    assert all(len(c) == 2 * sq.broken_edges[j].integral_length
               for c, j in zip(circles, sq.homology_basis()))


# ---------------------------------------------------------------------------
# topology

def test_classify_families():
    for d in range(1, 7):
        topo = build_ambient_surface(standard_triangle(d)).classify_topology()
        assert (topo.orientable, topo.crosscaps) == (False, 1)
    for d in range(1, 5):
        topo = build_ambient_surface(
            validate_polygon([(0, 0), (2 * d, 0), (0, d)])).classify_topology()
        assert topo.name == "sphere"
    sq = build_ambient_surface(
        validate_polygon([(0, 0), (2, 0), (2, 2), (0, 2)])).classify_topology()
    assert (sq.orientable, sq.genus) == (True, 1)


def test_classify_matches_cell_oracle_on_random_polygons():
    rng = random.Random(11)
    for _ in range(30):
        poly = random_polygon(rng)
        fast = build_ambient_surface(poly).classify_topology()
        assert fast == classify_surface_by_cells(poly)


def test_odd_broken_edge_lemmas():
    rng = random.Random(5)
    for _ in range(40):
        poly = random_polygon(rng)
        odd = [b.is_odd for b in poly.broken_edges]
        assert sum(odd) != 1
        r = len(odd)
        if r >= 2 and any(odd[k] and odd[(k + 1) % r] for k in range(r)):
            assert sum(odd) >= 3
        if build_ambient_surface(poly).classify_topology().orientable \
                and poly.r > 1:
            assert poly.r % 2 == 0
