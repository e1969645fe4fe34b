"""Numerical spatial realization with exact rational arithmetic.

``layout`` draws an embedded planar graph with straight lines (star-
triangulate every face, solve the barycentric system exactly, snap to a
rational grid, verify the rotation system survived), then lifts the
drawing to the unit sphere by inverse stereographic projection, so all
vertex coordinates are rational points exactly on the sphere.

``route_fragments`` realizes fragments as shallow chains strictly inside
or outside the sphere at per-fragment radii.  ``linking_number`` counts
signed crossings of a generic rational projection, which keeps the parity
argument exact: the result is a true integer, never a float estimate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .embeddings import EmbeddingError, RotationSystem
from .graphs import Graph, GraphError
from .maximal_planar import Fragment

Point = tuple[Fraction, Fraction, Fraction]
Point2 = tuple[Fraction, Fraction]

INSIDE = "inside"
OUTSIDE = "outside"


class RealizationError(GraphError):
    pass


# ---------------------------------------------------------------------------
# Small exact linear algebra
# ---------------------------------------------------------------------------


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _scale(a: Point, s: Fraction) -> Point:
    return (a[0] * s, a[1] * s, a[2] * s)


def _dot(a: Point, b: Point) -> Fraction:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a: Point, b: Point) -> Point:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _norm2(a: Point) -> Fraction:
    return _dot(a, a)


def _is_zero(a: Point) -> bool:
    return a[0] == 0 and a[1] == 0 and a[2] == 0


def _lerp(a: Point, b: Point, t: Fraction) -> Point:
    return _add(a, _scale(_sub(b, a), t))


def segment_intersection(a: Point, b: Point, c: Point, d: Point):
    """Exact intersection of closed segments AB and CD.

    Returns None, ('point', p), or ('overlap',).
    """
    ab = _sub(b, a)
    cd = _sub(d, c)
    n = _cross(ab, cd)
    ac = _sub(c, a)
    if not _is_zero(n):
        if _dot(ac, n) != 0:
            return None  # skew lines
        # coplanar, non-parallel: solve a + s*ab = c + t*cd on 2 coordinates
        for i, j in ((0, 1), (0, 2), (1, 2)):
            det = ab[i] * (-cd[j]) - ab[j] * (-cd[i])
            if det != 0:
                s = (ac[i] * (-cd[j]) - ac[j] * (-cd[i])) / det
                t = (ab[i] * ac[j] - ab[j] * ac[i]) / det
                if 0 <= s <= 1 and 0 <= t <= 1:
                    return ("point", _lerp(a, b, s))
                return None
        return None
    # parallel
    if not _is_zero(_cross(ac, ab)):
        return None
    # collinear: overlap test along ab (or cd if ab degenerate)
    axis = ab if not _is_zero(ab) else cd
    if _is_zero(axis):
        return ("point", a) if a == c else None
    proj = lambda p: _dot(_sub(p, a), axis)
    s0, s1 = sorted((proj(a), proj(b)))
    t0, t1 = sorted((proj(c), proj(d)))
    lo, hi = max(s0, t0), min(s1, t1)
    if lo > hi:
        return None
    if lo == hi:
        denom = _dot(axis, axis)
        return ("point", _lerp(a, b, lo / denom) if not _is_zero(ab) else c)
    return ("overlap",)


# ---------------------------------------------------------------------------
# Spatial realization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpatialRealization:
    """Vertex coordinates on the unit sphere plus per-edge and per-fragment
    polylines (point chains; fragment interiors strictly off the sphere)."""

    graph: Graph
    coords: dict[int, Point]
    edge_points: dict[int, tuple[Point, ...]]
    fragment_points: dict[int, tuple[Point, ...]] = field(default_factory=dict)
    fragment_sides: dict[int, str] = field(default_factory=dict)

    def polyline_of_edge(self, eid: int, start: int) -> tuple[Point, ...]:
        u, v = self.graph.edge_ends(eid)
        pts = self.edge_points[eid]
        if start == u:
            return pts
        if start == v:
            return tuple(reversed(pts))
        raise RealizationError(f"vertex {start} not an endpoint of edge {eid}")

    def all_segments(self) -> list[tuple[object, Point, Point]]:
        segs = []
        for eid, pts in self.edge_points.items():
            for i in range(len(pts) - 1):
                segs.append((("edge", eid), pts[i], pts[i + 1]))
        for fid, pts in self.fragment_points.items():
            for i in range(len(pts) - 1):
                segs.append((("fragment", fid), pts[i], pts[i + 1]))
        return segs

    def validate_disjoint(self) -> None:
        """No two polylines intersect except at shared graph vertices."""
        vertex_points = set(self.coords.values())
        segs = self.all_segments()
        by_owner: dict[object, list[tuple[Point, Point]]] = {}
        for owner, a, b in segs:
            by_owner.setdefault(owner, []).append((a, b))
        owners = sorted(by_owner, key=repr)
        for oa, ob in itertools.combinations(owners, 2):
            for a1, b1 in by_owner[oa]:
                for a2, b2 in by_owner[ob]:
                    hit = segment_intersection(a1, b1, a2, b2)
                    if hit is None:
                        continue
                    if hit[0] == "overlap":
                        raise RealizationError(f"{oa} and {ob} overlap")
                    p = hit[1]
                    if p not in vertex_points:
                        raise RealizationError(
                            f"{oa} and {ob} cross away from a vertex"
                        )
        # self-intersection within one polyline: consecutive sharing allowed
        for owner, chain in by_owner.items():
            for i in range(len(chain)):
                for j in range(i + 1, len(chain)):
                    hit = segment_intersection(*chain[i], *chain[j])
                    if hit is None:
                        continue
                    if hit[0] == "overlap":
                        raise RealizationError(f"{owner} overlaps itself")
                    if j == i + 1:
                        if hit[1] != chain[i][1]:
                            raise RealizationError(f"{owner} self-touches")
                    elif not (
                        j == len(chain) - 1 and i == 0 and hit[1] == chain[0][0]
                    ):
                        raise RealizationError(f"{owner} self-intersects")


def _inverse_stereographic(p: Point2) -> Point:
    x, y = p
    d = 1 + x * x + y * y
    return (2 * x / d, 2 * y / d, (x * x + y * y - 1) / d)


def _orient2(a: Point2, b: Point2, c: Point2) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _cyclic_equal(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    bb = list(b) + list(b)
    la = list(a)
    for i in range(len(b)):
        if bb[i : i + len(la)] == la:
            return True
    return False


def _sorted_ccw(origin: Point2, items: list[tuple[int, Point2]]) -> list[int]:
    """Neighbor ids sorted counterclockwise around origin (exact)."""

    def halfplane(p: Point2) -> int:
        dx, dy = p[0] - origin[0], p[1] - origin[1]
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp_sort(items_in_half):
        out = list(items_in_half)
        # insertion sort with exact cross-product comparisons
        for i in range(1, len(out)):
            j = i
            while j > 0 and _orient2(origin, out[j - 1][1], out[j][1]) < 0:
                out[j - 1], out[j] = out[j], out[j - 1]
                j -= 1
        return out

    first = [(k, p) for k, p in items if halfplane(p) == 0]
    second = [(k, p) for k, p in items if halfplane(p) == 1]
    return [k for k, _ in cmp_sort(first) + cmp_sort(second)]


def _tutte_triangulation_drawing(rs: RotationSystem) -> dict[int, Point2]:
    """Planar straight-line drawing of rs.graph realizing its rotations.

    Every face is starred with a fresh center, the resulting triangulation
    is drawn with one star triangle as the fixed convex outer face, and the
    helper centers are dropped.
    """
    g = rs.graph
    if not g.is_simple():
        raise RealizationError("layout requires a simple graph")
    if not g.is_connected():
        raise RealizationError("layout requires a connected graph")
    if not rs.is_planar_embedding():
        raise RealizationError("layout requires a sphere embedding")
    for f in rs.faces:
        bv = f.boundary_vertices
        if len(set(bv)) != len(bv):
            raise RealizationError("layout requires a 2-connected graph")

    # star triangulation, extending the rotation system
    rot: dict[int, list] = {v: list(rs.rotation(v)) for v in g.vertices}
    tri = g
    centers = []
    for face in rs.faces:
        c = max(tri.vertices) + 1
        tri = Graph.make(list(tri.vertices) + [c], tri.edges)
        spokes = []
        for d in face.darts:
            eid = tri.max_edge_id() + 1
            tri = tri.add_edge(c, d[1], eid)
            spokes.append((eid, d))
        # center rotation runs against the face walk so each corner closes
        # into a triangle under the next-after-twin trace
        rot[c] = [(eid, c) for eid, _ in reversed(spokes)]
        for eid, d in spokes:
            lst = rot[d[1]]
            lst.insert(lst.index(d), (eid, d[1]))
        centers.append(c)

    tri_rs = RotationSystem.from_dict(tri, rot)
    if not tri_rs.is_planar_embedding():
        raise RealizationError("face starring broke the embedding (bug)")

    # outer face: a star triangle of the largest original face
    big = max(range(len(rs.faces)), key=lambda i: (len(rs.faces[i]), -i))
    c_out = centers[big]
    d0 = rs.faces[big].darts[0]
    t0 = d0[1]
    t1 = rs.head(d0)
    outer = [c_out, t0, t1]

    pos: dict[int, Point2] = {
        c_out: (Fraction(0), Fraction(0)),
        t0: (Fraction(8), Fraction(0)),
        t1: (Fraction(0), Fraction(8)),
    }
    interior = [v for v in tri.vertices if v not in pos]
    idx = {v: i for i, v in enumerate(interior)}
    n = len(interior)
    if n:
        # barycentric equations: deg(v) * p_v - sum of neighbor p_u = boundary
        rows = []
        for v in interior:
            row = [Fraction(0)] * n
            bx = Fraction(0)
            by = Fraction(0)
            row[idx[v]] = Fraction(tri.degree(v))
            for _, w in tri.incident(v):
                if w in pos:
                    bx += pos[w][0]
                    by += pos[w][1]
                else:
                    row[idx[w]] -= 1
            rows.append((row, bx, by))
        sol = _solve_two(rows)
        for v in interior:
            pos[v] = sol[idx[v]]

    # snap to a rational grid while preserving the combinatorics
    for denom_bits in (16, 24, 32, 48, 64):
        snapped = {
            v: (
                Fraction(round(p[0] * (1 << denom_bits)), 1 << denom_bits),
                Fraction(round(p[1] * (1 << denom_bits)), 1 << denom_bits),
            )
            for v, p in pos.items()
        }
        if _drawing_matches(rs, snapped):
            return {v: snapped[v] for v in g.vertices}
    if _drawing_matches(rs, pos):
        return {v: pos[v] for v in g.vertices}
    raise RealizationError("drawing does not realize the rotation system")


def _solve_two(rows) -> list[Point2]:
    """Gaussian elimination over the rationals, two right-hand sides."""
    n = len(rows)
    a = [list(r[0]) + [r[1], r[2]] for r in rows]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [(a[i][n], a[i][n + 1]) for i in range(n)]


def _drawing_matches(rs: RotationSystem, pos: dict[int, Point2]) -> bool:
    """The geometric neighbor order at every vertex equals the rotation
    (all direct, or all reversed: a global reflection)."""
    if len(set(pos.values())) != len(pos):
        return False
    direct = reversed_ok = True
    for v in rs.graph.vertices:
        darts = rs.rotation(v)
        if len(darts) <= 2:
            continue
        geo = _sorted_ccw(pos[v], [(i, pos[rs.head(d)]) for i, d in enumerate(darts)])
        if not _cyclic_equal(geo, list(range(len(darts)))):
            direct = False
        if not _cyclic_equal(geo, list(reversed(range(len(darts))))):
            reversed_ok = False
        if not direct and not reversed_ok:
            return False
    return direct or reversed_ok


def layout(rs: RotationSystem, samples_per_edge: int = 6) -> SpatialRealization:
    """Straight-line drawing lifted to the unit sphere.

    Edge polylines sample each planar segment and map every sample through
    the inverse stereographic projection, so all points are rational and
    exactly on the sphere; the polyline chords stay within the sampling
    sag of it.
    """
    plane = _tutte_triangulation_drawing(rs)
    coords = {v: _inverse_stereographic(p) for v, p in plane.items()}
    edge_points: dict[int, tuple[Point, ...]] = {}
    for eid, u, v in rs.graph.edges:
        chain = []
        for i in range(samples_per_edge + 1):
            t = Fraction(i, samples_per_edge)
            q = (
                plane[u][0] + (plane[v][0] - plane[u][0]) * t,
                plane[u][1] + (plane[v][1] - plane[u][1]) * t,
            )
            chain.append(_inverse_stereographic(q))
        edge_points[eid] = tuple(chain)
    sr = SpatialRealization(rs.graph, coords, edge_points)
    sr.validate_disjoint()
    return sr


_INSIDE_RADII = [Fraction(1, 2), Fraction(2, 3), Fraction(2, 5), Fraction(3, 4), Fraction(1, 3)]
_OUTSIDE_RADII = [Fraction(2), Fraction(3, 2), Fraction(3), Fraction(5, 2), Fraction(4)]


def route_fragments(
    sr: SpatialRealization,
    fragments: Sequence[Fragment],
    sides: dict[int, str],
    samples: int = 8,
) -> SpatialRealization:
    """Route each fragment as an unknotted chain on its assigned side.

    The chain follows the sphere arc between the attachments, scaled to a
    per-fragment radius, so interiors stay strictly off the sphere; radii
    differ per fragment and the result is validated pairwise disjoint.
    """
    inside_iter = iter(_INSIDE_RADII)
    outside_iter = iter(_OUTSIDE_RADII)
    frag_points = dict(sr.fragment_points)
    frag_sides = dict(sr.fragment_sides)
    for f in fragments:
        side = sides[f.edge_id]
        if side not in (INSIDE, OUTSIDE):
            raise RealizationError(f"bad side {side!r}")
        r = next(inside_iter if side == INSIDE else outside_iter)
        a, b = f.attachments
        pa, pb = sr.coords[a], sr.coords[b]
        qa = _stereo_preimage(pa)
        qb = _stereo_preimage(pb)
        chain = [pa]
        for i in range(1, samples):
            t = Fraction(i, samples)
            q = (qa[0] + (qb[0] - qa[0]) * t, qa[1] + (qb[1] - qa[1]) * t)
            chain.append(_scale(_inverse_stereographic(q), r))
        chain.append(pb)
        frag_points[f.edge_id] = tuple(chain)
        frag_sides[f.edge_id] = side
    out = replace(sr, fragment_points=frag_points, fragment_sides=frag_sides)
    out.validate_disjoint()
    _validate_sides(out)
    return out


def _stereo_preimage(p: Point) -> Point2:
    x, y, z = p
    if z == 1:
        raise RealizationError("north pole has no stereographic preimage")
    return (x / (1 - z), y / (1 - z))


def _validate_sides(sr: SpatialRealization) -> None:
    for fid, pts in sr.fragment_points.items():
        side = sr.fragment_sides[fid]
        for i, p in enumerate(pts):
            n2 = _norm2(p)
            if i in (0, len(pts) - 1):
                if n2 != 1:
                    raise RealizationError("fragment endpoint off the sphere")
            elif side == INSIDE and n2 >= 1:
                raise RealizationError("inside fragment touches the sphere")
            elif side == OUTSIDE and n2 <= 1:
                raise RealizationError("outside fragment touches the sphere")
        # interior segments must stay strictly off the sphere throughout
        for i in range(len(pts) - 1):
            a, b = pts[i], pts[i + 1]
            lo, hi = _segment_norm2_range(a, b)
            if side == INSIDE and hi > 1 and not (i == 0 or i == len(pts) - 2):
                raise RealizationError("inside fragment segment crosses the sphere")
            if side == OUTSIDE and lo < 1 and not (i == 0 or i == len(pts) - 2):
                raise RealizationError("outside fragment segment crosses the sphere")


def _segment_norm2_range(a: Point, b: Point) -> tuple[Fraction, Fraction]:
    ab = _sub(b, a)
    denom = _dot(ab, ab)
    hi = max(_norm2(a), _norm2(b))
    lo = min(_norm2(a), _norm2(b))
    if denom != 0:
        t = -_dot(a, ab) / denom
        if 0 < t < 1:
            lo = min(lo, _norm2(_lerp(a, b, t)))
    return lo, hi


# ---------------------------------------------------------------------------
# Linking numbers
# ---------------------------------------------------------------------------

_DIRECTIONS: list[Point] = [
    (Fraction(0), Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(2), Fraction(5)),
    (Fraction(3), Fraction(1), Fraction(7)),
    (Fraction(2), Fraction(9), Fraction(4)),
    (Fraction(5), Fraction(3), Fraction(11)),
    (Fraction(7), Fraction(2), Fraction(3)),
    (Fraction(1), Fraction(13), Fraction(6)),
    (Fraction(11), Fraction(5), Fraction(2)),
    (Fraction(4), Fraction(7), Fraction(13)),
    (Fraction(9), Fraction(1), Fraction(17)),
    (Fraction(6), Fraction(11), Fraction(1)),
    (Fraction(13), Fraction(3), Fraction(5)),
]


class _Degenerate(Exception):
    pass


def _closed_segments(loop: Sequence[Point]) -> list[tuple[Point, Point]]:
    pts = list(loop)
    if pts[0] == pts[-1]:
        pts = pts[:-1]
    if len(pts) < 3:
        raise RealizationError("closed polyline needs at least 3 points")
    return [(pts[i], pts[(i + 1) % len(pts)]) for i in range(len(pts))]


def linking_number(
    c1: Sequence[Point], c2: Sequence[Point], direction: Optional[Point] = None
) -> int:
    """Half the signed crossing count of a generic projection, exactly.

    The polylines are closed (last point may repeat the first).  The
    projection direction defaults to a deterministic sequence, resampled on
    any degeneracy; an explicit rational ``direction`` can be supplied.
    """
    s1 = _closed_segments(c1)
    s2 = _closed_segments(c2)
    for a, b in s1:
        for c, d in s2:
            if segment_intersection(a, b, c, d) is not None:
                raise RealizationError("polylines intersect; linking undefined")
    candidates = [direction] if direction is not None else _DIRECTIONS
    for d in candidates:
        try:
            return _linking_with_direction(s1, s2, d)
        except _Degenerate:
            continue
    raise RealizationError("no generic projection direction found")


def _linking_with_direction(s1, s2, d: Point) -> int:
    if _is_zero(d):
        raise _Degenerate
    e = (Fraction(1), Fraction(0), Fraction(0))
    if _is_zero(_cross(d, e)):
        e = (Fraction(0), Fraction(1), Fraction(0))
    u = _cross(d, e)
    v = _cross(d, u)

    def proj(p: Point) -> Point2:
        return (_dot(p, u), _dot(p, v))

    def depth(p: Point) -> Fraction:
        return _dot(p, d)

    total = 0
    for a, b in s1:
        pa, pb = proj(a), proj(b)
        if pa == pb:
            raise _Degenerate
        for c, dd in s2:
            pc, pd = proj(c), proj(dd)
            if pc == pd:
                raise _Degenerate
            o1 = _orient2(pa, pb, pc)
            o2 = _orient2(pa, pb, pd)
            o3 = _orient2(pc, pd, pa)
            o4 = _orient2(pc, pd, pb)
            if o1 == 0 or o2 == 0 or o3 == 0 or o4 == 0:
                if max(min(pa[0], pb[0]), min(pc[0], pd[0])) <= min(
                    max(pa[0], pb[0]), max(pc[0], pd[0])
                ) and max(min(pa[1], pb[1]), min(pc[1], pd[1])) <= min(
                    max(pa[1], pb[1]), max(pc[1], pd[1])
                ):
                    raise _Degenerate  # touching projections: resample
                continue
            if (o1 > 0) == (o2 > 0) or (o3 > 0) == (o4 > 0):
                continue
            # strict crossing: parameters along each segment
            s = o3 / (o3 - o4)
            t = o1 / (o1 - o2)
            h1 = depth(a) + (depth(b) - depth(a)) * s
            h2 = depth(c) + (depth(dd) - depth(c)) * t
            if h1 == h2:
                raise _Degenerate
            tangent_det = _orient2((Fraction(0), Fraction(0)), _sub2(pb, pa), _sub2(pd, pc))
            sign = 1 if tangent_det > 0 else -1
            if h1 < h2:
                sign = -sign
            total += sign
    if total % 2 != 0:
        raise AssertionError("odd signed crossing sum (bug)")
    return total // 2


def _sub2(a: Point2, b: Point2) -> Point2:
    return (a[0] - b[0], a[1] - b[1])


# ---------------------------------------------------------------------------
# Linked-pair scan
# ---------------------------------------------------------------------------


def _paths_between(g: Graph, a: int, b: int, max_edges: int) -> Iterable[list[tuple[int, int]]]:
    """Simple a..b paths as (edge, next-vertex) steps, shortest first."""
    out: list[list[tuple[int, int]]] = []

    def walk(here: int, seen: set[int], steps: list[tuple[int, int]]):
        if len(steps) >= max_edges:
            return
        for eid, w in g.incident(here):
            if w == b:
                out.append(steps + [(eid, w)])
            elif w not in seen:
                seen.add(w)
                walk(w, seen, steps + [(eid, w)])
                seen.remove(w)

    walk(a, {a}, [])
    out.sort(key=lambda p: (len(p), [e for e, _ in p]))
    return out


def _cycle_polyline(sr: SpatialRealization, frag: Fragment, path: list[tuple[int, int]]) -> list[Point]:
    a, b = frag.attachments
    pts: list[Point] = list(sr.fragment_points[frag.edge_id])  # a .. b
    here = b
    for eid, nxt in path:
        seg = sr.polyline_of_edge(eid, here)
        pts.extend(seg[1:])
        here = nxt
    if here != a:
        raise RealizationError("path does not close the fragment cycle")
    return pts


def check_linked_pair(
    g: Graph,
    m,
    rs: RotationSystem,
    f: Fragment,
    f2: Fragment,
    sides: dict[int, str],
    max_cycle_len: int = 10,
) -> Optional[tuple[list[int], list[int], int]]:
    """Scan disjoint cycle pairs, one through each fragment, for a pair
    with nonzero linking number in the canonical realization.

    Returns (cycle1 vertices, cycle2 vertices, lk) for the first hit, or
    None.  Absence is evidence about this realization only.
    """
    sr = route_fragments(layout(rs), [f, f2], sides)
    mg = rs.graph
    a1, b1 = f.attachments
    a2, b2 = f2.attachments
    paths1 = list(_paths_between(mg, b1, a1, max_cycle_len - 1))
    paths2 = list(_paths_between(mg, b2, a2, max_cycle_len - 1))
    for p1 in paths1:
        verts1 = {a1, b1} | {w for _, w in p1}
        for p2 in paths2:
            verts2 = {a2, b2} | {w for _, w in p2}
            if verts1 & verts2:
                continue
            loop1 = _cycle_polyline(sr, f, p1)
            loop2 = _cycle_polyline(sr, f2, p2)
            lk = linking_number(loop1, loop2)
            if lk != 0:
                cyc1 = [a1, b1] + [w for _, w in p1][:-1]
                cyc2 = [a2, b2] + [w for _, w in p2][:-1]
                return (cyc1, cyc2, lk)
    return None


def to_obj(sr: SpatialRealization) -> str:
    """Wavefront OBJ with polylines as line elements, floats for viewing."""
    lines = ["# conflictgraph spatial realization"]
    index: dict[Point, int] = {}

    def vid(p: Point) -> int:
        if p not in index:
            index[p] = len(index) + 1
            lines.append(f"v {float(p[0]):.9f} {float(p[1]):.9f} {float(p[2]):.9f}")
        return index[p]

    chains = [("edge", eid, pts) for eid, pts in sorted(sr.edge_points.items())]
    chains += [("fragment", fid, pts) for fid, pts in sorted(sr.fragment_points.items())]
    body = []
    for kind, key, pts in chains:
        ids = [vid(p) for p in pts]
        body.append(f"# {kind} {key}")
        body.append("l " + " ".join(map(str, ids)))
    return "\n".join(lines + body) + "\n"
