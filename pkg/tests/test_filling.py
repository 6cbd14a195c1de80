import random

import pytest

from tcurve_lab.errors import EmptyCurve, NotTypeI
from tcurve_lab.filling import (build_filling, classify_filling,
                                harnack_check, orient_curve)
from tcurve_lab.oracles import classify_filling_by_cells
from tcurve_lab.surface import build_ambient_surface
from tcurve_lab.tcurve import extract_curve, harnack_distribution

from conftest import pipeline, standard_triangle
from helpers import (primitive_triangulation, random_distribution,
                     random_flips, random_polygon)


def test_single_thick_y():
    # one triangle, three folds: the filling is a disk with one boundary
    # circle, traced by hand in the strand model
    t1 = standard_triangle(1)
    _, _, curve = pipeline(t1, {(0, 0): 1, (1, 0): 1, (0, 1): -1})
    filling = build_filling(curve)
    assert len(filling.folds) == 3
    assert not filling.twists
    assert filling.chi == 1
    assert filling.boundary_count == 1
    assert len(curve.components) == 1


def test_t3_harnack_arithmetic():
    t3 = standard_triangle(3)
    _, tri, curve = pipeline(t3, harnack_distribution(t3, (1, 0, 0)))
    filling = build_filling(curve)
    assert filling.chi == tri.E - 2 * tri.T == 0
    assert filling.boundary_count == 2
    cls = classify_filling(filling)
    assert cls.capped.chi == 2
    assert cls.capped.orientable and cls.capped.genus == 0
    assert cls.curve_type == "I"
    verdict = harnack_check(curve, filling)
    assert verdict.maximal and verdict.bound_holds and verdict.identity_holds
    # the double of the filling has genus (d-1)(d-2)/2 = 1
    assert 2 * filling.chi == 2 - 2 * 1


def test_boundary_cycles_match_components():
    rng = random.Random(31)
    for d in (2, 3, 4):
        poly = standard_triangle(d)
        for _ in range(6):
            _, _, curve = pipeline(poly, random_distribution(rng, poly))
            filling = build_filling(curve)
            assert filling.boundary_count == len(curve.components)
            cycles = filling.boundary_cycles()
            assert [c for _, c in cycles] == list(curve.components)


def test_chi_formulas_agree():
    rng = random.Random(37)
    poly = standard_triangle(3)
    _, tri, _ = pipeline(poly, random_distribution(rng, poly))
    for _ in range(10):
        _, _, curve = pipeline(poly, random_distribution(rng, poly))
        filling = build_filling(curve)
        cls = classify_filling(filling)
        d = filling.boundary_count
        assert cls.capped.chi == filling.chi + d == d + 1 - tri.V + tri.L
        assert cls.capped.chi <= 2


def test_oracle_agreement_random_instances():
    rng = random.Random(41)
    for _ in range(10):
        poly = random_polygon(rng, box=6)
        tri = random_flips(rng, primitive_triangulation(poly), 4)
        surface = build_ambient_surface(poly)
        curve = extract_curve(surface, tri, random_distribution(rng, poly))
        filling = build_filling(curve)
        cls = classify_filling(filling)
        chi, d, orientable = classify_filling_by_cells(filling)
        assert chi == filling.chi
        assert d == filling.boundary_count
        assert orientable == cls.capped.orientable
        assert d <= poly.census().interior_points + 1


def test_harnack_check_t5():
    t5 = standard_triangle(5)
    _, _, curve = pipeline(t5, harnack_distribution(t5, (1, 0, 0)))
    verdict = harnack_check(curve, build_filling(curve))
    assert verdict.boundary_count == 7 == verdict.interior_points + 1
    assert verdict.maximal


def test_maximal_implies_type_one():
    rng = random.Random(43)
    found = 0
    for d in (2, 3):
        poly = standard_triangle(d)
        for _ in range(40):
            _, _, curve = pipeline(poly, random_distribution(rng, poly))
            filling = build_filling(curve)
            verdict = harnack_check(curve, filling)
            if verdict.maximal:
                found += 1
                assert classify_filling(filling).curve_type == "I"
    assert found > 0


def test_empty_curve_guard():
    class Stub:
        components = ()
    with pytest.raises(EmptyCurve):
        build_filling(Stub())


# ---------------------------------------------------------------------------
# orientation

def test_orientation_reversal():
    t2 = standard_triangle(2)
    _, _, curve = pipeline(t2, harnack_distribution(t2, (1, 0, 0)))
    filling = build_filling(curve)
    assert classify_filling(filling).curve_type == "I"
    oc = orient_curve(curve, filling)
    assert len(oc.components) == 1
    flipped = orient_curve(curve, filling, flip=True)
    assert flipped.components == oc.reversed().components
    # a directed cycle: each segment ends where the next starts
    comp = oc.components[0]
    for i in range(len(comp.directed_projection)):
        a = comp.directed_projection[i]
        b = comp.directed_projection[(i + 1) % len(comp.directed_projection)]
        assert a[1] == b[0]


def test_orientation_lift_rule():
    # the lifted direction of each projected segment is its reflection:
    # nodes of the oriented cycle project in traversal order
    t3 = standard_triangle(3)
    _, _, curve = pipeline(t3, harnack_distribution(t3, (1, 0, 0)))
    filling = build_filling(curve)
    oc = orient_curve(curve, filling)
    for comp in oc.components:
        n = len(comp.nodes)
        for i in range(n):
            lifted = (comp.nodes[i], comp.nodes[(i + 1) % n])
            projected = comp.directed_projection[i]
            assert projected == tuple(x[:1] + x[2:] for x in lifted)


def test_not_type_one_rejected():
    rng = random.Random(47)
    poly = standard_triangle(3)
    for _ in range(200):
        _, _, curve = pipeline(poly, random_distribution(rng, poly))
        filling = build_filling(curve)
        if classify_filling(filling).curve_type == "II":
            with pytest.raises(NotTypeI):
                orient_curve(curve, filling)
            return
    pytest.fail("no type II curve found")
