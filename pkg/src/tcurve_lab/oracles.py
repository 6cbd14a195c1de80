"""Independent cell-complex classifiers.

These deliberately share no code with the main computations: the surface
is rebuilt as four polygon faces with explicit edge pairings, the filling
as one hexagonal disk per thick-Y with explicit end-segment
identifications.  Euler characteristics come from counting identified
cells, orientability from propagating face orientations, boundary circles
from walking free edges.  Tests demand exact agreement with the fast
paths on every instance.
"""

from .lattice import Polygon
from .surface import (QUADRANTS, TopologyClass, _surface_name, glue_offset,
                      quad_add)
from .filling import TFilling
from .geometry import segment_lattice_points
from .uf import ParityUnionFind, UnionFind


def classify_surface_by_cells(polygon: Polygon) -> TopologyClass:
    """Classify the glued surface from an explicit polygon-identification
    cell complex: four faces, one 1-cell per primitive boundary segment
    copy (identified in pairs), 0-cells at boundary lattice points."""
    odd_vertices = {polygon.vertices[i] for i in polygon.odd_vertex_indices}
    seg_offset = {}
    point_offset = {}
    base_cycle = []  # directed primitive segments, counterclockwise
    for edge, par in zip(polygon.edges, polygon.edge_segment_parities):
        off = glue_offset(par)
        pts = segment_lattice_points(*edge)
        for p, q in zip(pts, pts[1:]):
            base_cycle.append((p, q))
            seg_offset[frozenset((p, q))] = off
            for x in (p, q):
                if x not in odd_vertices:
                    point_offset.setdefault(x, off)

    def vclass(q, p):
        if p in odd_vertices:
            return ("v", p)
        return ("p", min(q, quad_add(q, point_offset[p])), p)

    def eclass(q, seg):
        off = seg_offset[frozenset(seg)]
        return ("e", min(q, quad_add(q, off)), frozenset(seg))

    vertices = set()
    edges = set()
    # per face: list of (edge class, direction of traversal on the base
    # segment) for the face's own counterclockwise boundary cycle
    face_traversal = {}
    for q in QUADRANTS:
        preserves = (q[0] + q[1]) % 2 == 0  # sigma_q orientation-preserving
        cyc = base_cycle if preserves else [(b, a) for a, b in base_cycle[::-1]]
        tr = []
        for p, r in cyc:
            vertices.add(vclass(q, p))
            edges.add(eclass(q, (p, r)))
            tr.append((eclass(q, (p, r)), (p, r)))
        face_traversal[q] = tr

    chi_total = len(vertices) - len(edges) + 4

    # connectivity and orientability via faces
    conn = UnionFind()
    spin = ParityUnionFind()
    incid = {}
    for q in QUADRANTS:
        conn.add(q)
        spin.add(q)
        for ec, direction in face_traversal[q]:
            incid.setdefault(ec, []).append((q, direction))
    orientable_all = True
    for ec, uses in sorted(incid.items()):
        assert len(uses) == 2, "every boundary segment copy is glued to one other"
        (q1, d1), (q2, d2) = uses
        assert q1 != q2
        conn.union(q1, q2)
        # compatible orientations traverse the shared segment oppositely
        rel = 0 if d1 == (d2[1], d2[0]) else 1
        if not spin.union(q1, q2, rel):
            orientable_all = False

    groups = conn.groups()
    n_comp = len(groups)
    if n_comp == 2:
        assert chi_total == 4, "two components must both be spheres"
        return TopologyClass(2, True, 0, None, 4, "two spheres")
    assert n_comp == 1
    if orientable_all:
        genus = (2 - chi_total) // 2
        return TopologyClass(1, True, genus, None, chi_total,
                             _surface_name(True, genus, None))
    cc = 2 - chi_total
    return TopologyClass(1, False, None, cc, chi_total,
                         _surface_name(False, None, cc))


# ---------------------------------------------------------------------------

def classify_filling_by_cells(filling: TFilling):
    """(euler characteristic, boundary circles, orientable) of the filling
    built as hexagonal disks with end-segment identifications.

    Each thick-Y becomes a hexagon with two corners and a midpoint per
    prong; interior gluings identify end halves by x -> eps*x, folds
    identify the two halves of one end with each other.
    """
    tri = filling.tri

    vuf = UnionFind()
    euf = UnionFind()

    def corner(t, k, s):
        return ("c", t, k, s)

    def emid(t, k):
        return ("m", t, k)

    def ehalf(t, k, s):
        return ("h", t, k, s)

    def flank(t, k):
        return ("f", t, k)

    all_v = []
    all_e = []
    for t in tri.triangles:
        for k in range(3):
            all_v += [corner(t, k, 1), corner(t, k, -1), emid(t, k)]
            all_e += [ehalf(t, k, 1), ehalf(t, k, -1), flank(t, k)]
    for x in all_v:
        vuf.add(x)
    for x in all_e:
        euf.add(x)

    slot_of = {t: {e: i for i, e in enumerate(tri.slots[t])}
               for t in tri.triangles}
    for e, twisted in filling.twists.items():
        t1, t2 = tri.edge_triangles[e]
        k1, k2 = slot_of[t1][e], slot_of[t2][e]
        eps = 1 if twisted else -1
        vuf.union(emid(t1, k1), emid(t2, k2))
        for s in (1, -1):
            vuf.union(corner(t1, k1, s), corner(t2, k2, eps * s))
            euf.union(ehalf(t1, k1, s), ehalf(t2, k2, eps * s))
    for e in filling.folds:
        (t,) = tri.edge_triangles[e]
        k = slot_of[t][e]
        vuf.union(corner(t, k, 1), corner(t, k, -1))
        euf.union(ehalf(t, k, 1), ehalf(t, k, -1))

    n_v = len({vuf.find(x) for x in all_v})
    n_e = len({euf.find(x) for x in all_e})
    chi = n_v - n_e + tri.T

    # boundary circles: flank edges joined at corner classes
    corner_flanks = {}
    for t in tri.triangles:
        for k in range(3):
            # flank k runs from corner (k,-1) to corner (k+1,+1)
            for c in (corner(t, k, -1), corner(t, (k + 1) % 3, 1)):
                corner_flanks.setdefault(vuf.find(c), []).append(flank(t, k))
    buf = UnionFind()
    for t in tri.triangles:
        for k in range(3):
            buf.add(flank(t, k))
    for c, flanks in corner_flanks.items():
        assert len(flanks) == 2, "boundary corners join exactly two flanks"
        buf.union(flanks[0], flanks[1])
    boundary_circles = len(buf.groups())

    # orientability: every face traverses its hexagon counterclockwise;
    # an interior 1-cell must be traversed once in each direction, where
    # a face's two traversals of a folded half count with their own
    # directions.  Directions are tracked on the class representative of
    # each half-edge, oriented from its midpoint to its corner.
    spin = ParityUnionFind()
    for t in tri.triangles:
        spin.add(t)
    uses = {}
    for t in tri.triangles:
        for k in range(3):
            # counterclockwise hexagon: corner(k,+1) -> emid(k) ->
            # corner(k,-1) -> flank -> corner(k+1,+1) ...
            uses.setdefault(euf.find(ehalf(t, k, 1)), []).append((t, -1))
            uses.setdefault(euf.find(ehalf(t, k, -1)), []).append((t, +1))
    orientable = True
    for cls, lst in sorted(uses.items()):
        assert len(lst) == 2
        (t1, d1), (t2, d2) = lst
        if t1 == t2:
            # a fold: the face passes the cell twice; opposite directions
            # mean no constraint, equal directions would be a conflict
            if d1 == d2:
                orientable = False
            continue
        # need directions opposite once spins are applied
        rel = 0 if d1 != d2 else 1
        if not spin.union(t1, t2, rel):
            orientable = False
    return chi, boundary_circles, orientable
