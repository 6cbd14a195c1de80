"""Primitive triangulations and their incidence graphs.

A primitive triangulation uses every lattice point of the polygon as a
vertex; equivalently all triangles have lattice area 1/2.  The incidence
graph joins each triangle's barycenter to the midpoints of its three
edges; downstairs it is G(Pi), upstairs (one copy per quadrant, midpoints
merged along the boundary identification) it is G(S).
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import (DanglingEdge, Gap, MissingLatticeVertex,
                     NonPrimitiveTriangle, Overlap, UnsupportedShape)
from .geometry import cross
from .lattice import (Point, Polygon, is_axis_rectangle, is_standard_triangle)
from .surface import QUADRANTS, AmbientSurface, Quadrant, quad_add

Tri = tuple[Point, Point, Point]          # canonical: sorted
Edge = tuple[Point, Point]                # canonical: sorted


def tri_key(a: Point, b: Point, c: Point) -> Tri:
    return tuple(sorted((a, b, c)))


def edge_key(a: Point, b: Point) -> Edge:
    return (a, b) if a < b else (b, a)


def tri_edges(t: Tri) -> tuple[Edge, Edge, Edge]:
    a, b, c = t
    return (edge_key(a, b), edge_key(a, c), edge_key(b, c))


def tri_ccw(t: Tri) -> tuple[Point, Point, Point]:
    a, b, c = t
    return (a, b, c) if cross(a, b, c) > 0 else (a, c, b)


class PrimitiveTriangulation:
    """A validated primitive triangulation of a polygon."""

    def __init__(self, polygon: Polygon, triangles):
        self.polygon = polygon
        tris = tuple(sorted(tri_key(*t) for t in triangles))
        if len(set(tris)) != len(tris):
            raise Overlap("repeated triangle")
        self.triangles: tuple[Tri, ...] = tris
        self._validate()

    def _validate(self):
        poly = self.polygon
        lattice = set(poly.lattice_points)
        used = set()
        for t in self.triangles:
            a, b, c = t
            if abs(cross(a, b, c)) != 1:
                raise NonPrimitiveTriangle(f"triangle {t} has area {abs(cross(a,b,c))}/2")
            for v in t:
                if v not in lattice:
                    raise MissingLatticeVertex(
                        f"triangle vertex {v} is not a lattice point of the polygon")
            used.update(t)
        if used != lattice:
            missing = sorted(lattice - used)
            raise MissingLatticeVertex(f"unused lattice points: {missing}")

        # oriented edges must be pairwise distinct; undirected counts are
        # 1 (boundary) or 2 (interior)
        directed = set()
        undirected: dict[Edge, int] = {}
        for t in self.triangles:
            v0, v1, v2 = tri_ccw(t)
            for p, q in ((v0, v1), (v1, v2), (v2, v0)):
                if (p, q) in directed:
                    raise Overlap(f"directed edge {(p, q)} used twice")
                directed.add((p, q))
                undirected[edge_key(p, q)] = undirected.get(edge_key(p, q), 0) + 1
        boundary_segments = {edge_key(p, q)
                             for b in poly.broken_edges
                             for p, q in b.primitive_segments}
        for e, cnt in undirected.items():
            if cnt > 2:
                raise Overlap(f"edge {e} shared by {cnt} triangles")
            if cnt == 1 and e not in boundary_segments:
                raise DanglingEdge(f"interior edge {e} belongs to one triangle only")
        for e in boundary_segments:
            if undirected.get(e, 0) != 1:
                raise Gap(f"boundary segment {e} not covered exactly once")
        # each triangle has area 1/2, so the count equals twice the area
        if len(self.triangles) != poly.double_area:
            raise Gap("triangle areas do not sum to the polygon area")
        self._undirected = undirected

        # Euler relations, guaranteed by the checks above
        assert self.T - self.E + self.V == 1
        assert 3 * self.T == 2 * self.E - self.L

    # ------------------------------------------------------------------

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self._undirected))

    @cached_property
    def boundary_edges(self) -> frozenset:
        return frozenset(e for e, c in self._undirected.items() if c == 1)

    @cached_property
    def interior_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e not in self.boundary_edges)

    @cached_property
    def edge_triangles(self) -> dict:
        out: dict[Edge, list] = {e: [] for e in self.edges}
        for t in self.triangles:
            for e in tri_edges(t):
                out[e].append(t)
        return {e: tuple(ts) for e, ts in out.items()}

    @cached_property
    def slots(self) -> dict:
        """Per triangle, its three edges in counterclockwise cyclic order
        (the order of their midpoints around the barycenter)."""
        out = {}
        for t in self.triangles:
            v0, v1, v2 = tri_ccw(t)
            out[t] = (edge_key(v0, v1), edge_key(v1, v2), edge_key(v2, v0))
        return out

    @property
    def T(self) -> int:
        return len(self.triangles)

    @property
    def E(self) -> int:
        return len(self._undirected)

    @property
    def V(self) -> int:
        return len(self.polygon.lattice_points)

    @property
    def L(self) -> int:
        return len(self.polygon.boundary_points)

    def __repr__(self):
        return f"PrimitiveTriangulation({self.polygon!r}, T={self.T})"


def validate_primitive_triangulation(polygon: Polygon, triangles) -> PrimitiveTriangulation:
    return PrimitiveTriangulation(polygon, triangles)


def generate_grid_triangulation(polygon: Polygon) -> PrimitiveTriangulation:
    """Staircase triangulation of the standard triangle (0,0),(d,0),(0,d)
    or of an axis-aligned rectangle: every unit cell is split along its
    NW-SE diagonal.  Other polygons must supply triangulations explicitly.
    """
    d = is_standard_triangle(polygon)
    tris = []
    if d is not None:
        for x in range(d):
            for y in range(d - x):
                tris.append(((x, y), (x + 1, y), (x, y + 1)))
                if x + y <= d - 2:
                    tris.append(((x + 1, y), (x + 1, y + 1), (x, y + 1)))
        return PrimitiveTriangulation(polygon, tris)
    rect = is_axis_rectangle(polygon)
    if rect is not None:
        (x0, y0), (x1, y1) = rect
        for x in range(x0, x1):
            for y in range(y0, y1):
                tris.append(((x, y), (x + 1, y), (x, y + 1)))
                tris.append(((x + 1, y), (x + 1, y + 1), (x, y + 1)))
        return PrimitiveTriangulation(polygon, tris)
    raise UnsupportedShape(
        "built-in generator covers the standard triangle and axis-aligned "
        "rectangles; supply the triangulation explicitly")


# ---------------------------------------------------------------------------
# incidence graphs

BNode = tuple   # ('b', tri) downstairs, ('b', quad, tri) upstairs
MNode = tuple   # ('m', edge) downstairs, ('m', quad, edge) upstairs


@dataclass(frozen=True)
class IncidencePair:
    """G(Pi) and G(S) for one lifted triangulation.

    Downstairs edges are (tri, edge) pairs; each lifts to the four
    upstairs edges (quad, tri, edge).  Upstairs midpoints of boundary
    segments are shared between the two identified quadrant copies.
    """
    surface: AmbientSurface
    tri: PrimitiveTriangulation
    gpi_adj: dict
    gs_adj: dict
    gs_midpoint: dict      # (quad, edge) -> canonical midpoint node

    @property
    def gpi_edge_count(self) -> int:
        return 3 * self.tri.T

    @property
    def gpi_vertex_count(self) -> int:
        return self.tri.T + self.tri.E

    def lifts(self, t: Tri, e: Edge) -> tuple:
        """The four upstairs edges over a downstairs edge."""
        return tuple((q, t, e) for q in QUADRANTS)

    def gs_connected(self) -> bool:
        nodes = list(self.gs_adj)
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for _, nb in self.gs_adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(nodes)


def midpoint_node(surface: AmbientSurface, tri: PrimitiveTriangulation,
                  q: Quadrant, e: Edge) -> MNode:
    off = surface.boundary_segment_offset.get(e)
    if off is not None and e in tri.boundary_edges:
        q = min(q, quad_add(q, off))
    return ("m", q, e)


def incidence_graphs(surface: AmbientSurface,
                     tri: PrimitiveTriangulation) -> IncidencePair:
    gpi_adj: dict = {}
    for t in tri.triangles:
        gpi_adj[("b", t)] = tuple((("m", e)) for e in tri.slots[t])
    for e in tri.edges:
        gpi_adj[("m", e)] = tuple(("b", t) for t in tri.edge_triangles[e])

    gs_adj: dict = {}
    gs_mid: dict = {}
    for q in QUADRANTS:
        for e in tri.edges:
            gs_mid[(q, e)] = midpoint_node(surface, tri, q, e)
    for q in QUADRANTS:
        for t in tri.triangles:
            b = ("b", q, t)
            gs_adj[b] = tuple(((q, t, e), gs_mid[(q, e)]) for e in tri.slots[t])
    mid_adj: dict = {}
    for (q, t, e), m in ((ek, m) for b, nbrs in gs_adj.items()
                         for ek, m in nbrs):
        mid_adj.setdefault(m, []).append(((q, t, e), ("b", q, t)))
    for m, incid in mid_adj.items():
        assert len(incid) == 2, f"upstairs midpoint {m} has degree {len(incid)}"
        gs_adj[m] = tuple(sorted(incid))

    pair = IncidencePair(surface, tri, gpi_adj, gs_adj, gs_mid)
    if surface.r >= 2:
        assert pair.gs_connected(), "G(S) must be connected when S is"
    return pair
