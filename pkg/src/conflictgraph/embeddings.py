"""Combinatorial sphere embeddings as rotation systems.

A rotation system fixes, at every vertex, the cyclic order of its darts
(edge ends).  Faces come from the usual next-after-twin trace, and the
embedding is spherical exactly when Euler's count gives genus zero on each
component.  The module also provides exhaustive enumeration of the
inequivalent sphere embeddings of a planar graph, induced embeddings on
subgraphs, the two sides of an embedded cycle, and embedding-preserving
edge deletion/contraction/insertion used by the minor searches downstream.

Darts are ``(edge_id, tail_vertex)`` pairs; every non-loop edge owns two.

Equivalence of embeddings is graph automorphism composed with global
reflection (reversing every rotation).  That is the natural reading of
"inequivalent sphere embeddings" but it is a modeling choice; enumeration
can also run in labeled mode, which skips the quotient.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .graphs import Cycle, Graph, GraphError, VertexMap

Dart = tuple[int, int]


class EmbeddingError(GraphError):
    """Malformed rotation data or an impossible embedding request."""


@dataclass(frozen=True)
class Face:
    """One face boundary walk, as the tuple of darts it traverses."""

    darts: tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def boundary_vertices(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.darts)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.boundary_vertices)


@dataclass(frozen=True)
class RotationSystem:
    """A graph plus a cyclic dart order at every vertex."""

    graph: Graph
    rotations: tuple[tuple[int, tuple[Dart, ...]], ...]

    @classmethod
    def from_dict(cls, g: Graph, rot: dict[int, Sequence[Dart]]) -> "RotationSystem":
        rs = cls(g, tuple((v, tuple(rot.get(v, ()))) for v in g.vertices))
        rs._validate()
        return rs

    @classmethod
    def from_neighbor_orders(cls, g: Graph, orders: dict[int, Sequence[int]]) -> "RotationSystem":
        """Build from per-vertex cyclic neighbor orders (simple graphs only)."""
        if not g.is_simple():
            raise EmbeddingError("neighbor orders are ambiguous on multigraphs")
        rot: dict[int, list[Dart]] = {}
        for v in g.vertices:
            order = orders.get(v, g.neighbors(v))
            rot[v] = [(g.edge_ids_between(v, w)[0], v) for w in order]
        return cls.from_dict(g, rot)

    def _validate(self) -> None:
        expected: set[Dart] = set()
        for eid, u, v in self.graph.edges:
            expected.add((eid, u))
            expected.add((eid, v))
        listed = [d for _, darts in self.rotations for d in darts]
        if len(listed) != len(set(listed)):
            raise EmbeddingError("a dart appears twice in the rotation data")
        if set(listed) != expected:
            raise EmbeddingError("rotation darts do not match the edge set")
        for v, darts in self.rotations:
            if v not in self.graph._adj:
                raise EmbeddingError(f"rotation for unknown vertex {v}")
            for eid, tail in darts:
                if tail != v:
                    raise EmbeddingError(f"dart {(eid, tail)} listed at vertex {v}")

    # -- basic structure -------------------------------------------------

    @cached_property
    def _rot(self) -> dict[int, tuple[Dart, ...]]:
        return dict(self.rotations)

    def rotation(self, v: int) -> tuple[Dart, ...]:
        return self._rot[v]

    def twin(self, d: Dart) -> Dart:
        eid, tail = d
        u, v = self.graph.edge_ends(eid)
        return (eid, v if tail == u else u)

    def head(self, d: Dart) -> int:
        return self.twin(d)[1]

    @cached_property
    def _succ(self) -> dict[Dart, Dart]:
        nxt: dict[Dart, Dart] = {}
        for _, darts in self.rotations:
            k = len(darts)
            for i, d in enumerate(darts):
                nxt[d] = darts[(i + 1) % k]
        return nxt

    def next_in_rotation(self, d: Dart) -> Dart:
        return self._succ[d]

    def face_successor(self, d: Dart) -> Dart:
        return self._succ[self.twin(d)]

    # -- faces and genus ---------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        """The face partition of the dart set, deterministically ordered."""
        remaining = {d for _, darts in self.rotations for d in darts}
        out: list[Face] = []
        while remaining:
            start = min(remaining)
            walk = [start]
            remaining.discard(start)
            d = self.face_successor(start)
            while d != start:
                walk.append(d)
                remaining.discard(d)
                d = self.face_successor(d)
            out.append(Face(tuple(walk)))
        out.sort(key=lambda f: f.darts[0])
        return tuple(out)

    @cached_property
    def _face_of_dart(self) -> dict[Dart, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.darts}

    def face_index_of(self, d: Dart) -> int:
        return self._face_of_dart[d]

    def is_planar_embedding(self) -> bool:
        """Euler's count gives genus zero, per connected component."""
        for comp in self.graph.components():
            v = len(comp)
            e = sum(1 for _, a, b in self.graph.edges if a in comp)
            if e == 0:
                continue  # isolated vertex: one trivial face
            f = sum(1 for face in self.faces if face.darts[0][1] in comp)
            if v - e + f != 2:
                return False
        return True

    # -- derived embeddings ------------------------------------------------

    def reflect(self) -> "RotationSystem":
        return RotationSystem(
            self.graph,
            tuple((v, tuple(reversed(darts))) for v, darts in self.rotations),
        )

    def induced(self, sub: Graph) -> "RotationSystem":
        """Restriction to a subgraph, cyclic order preserved."""
        for eid, u, v in sub.edges:
            if not self.graph.has_edge_id(eid) or self.graph.edge_ends(eid) != (u, v):
                raise EmbeddingError("not a subgraph of the embedded graph")
        for v in sub.vertices:
            if v not in self.graph._adj:
                raise EmbeddingError("not a subgraph of the embedded graph")
        keep = {eid for eid, _, _ in sub.edges}
        rot = {
            v: [d for d in self._rot[v] if d[0] in keep]
            for v in sub.vertices
        }
        return RotationSystem.from_dict(sub, rot)

    def delete_edge_embedded(self, eid: int) -> "RotationSystem":
        u, v = self.graph.edge_ends(eid)
        g = self.graph.delete_edge(eid)
        rot = {
            w: [d for d in darts if d[0] != eid]
            for w, darts in self.rotations
        }
        return RotationSystem.from_dict(g, rot)

    def contract_edge_embedded(self, eid: int) -> tuple["RotationSystem", VertexMap]:
        """Contract ``eid`` splicing the two rotations at its darts.

        Loops created by the merge (parallel copies of the contracted edge)
        are removed.  Genus is preserved; asserted via Euler on the result.
        """
        u, v = self.graph.edge_ends(eid)
        keep, gone = min(u, v), max(u, v)
        d_keep = (eid, keep)
        d_gone = (eid, gone)

        rk = self._rot[keep]
        rg = self._rot[gone]
        ik = rk.index(d_keep)
        ig = rg.index(d_gone)
        seq_k = [rk[(ik + 1 + i) % len(rk)] for i in range(len(rk) - 1)]
        seq_g = [rg[(ig + 1 + i) % len(rg)] for i in range(len(rg) - 1)]
        merged = seq_k + [(e, keep) for e, _ in seq_g]

        # drop loops: other edges that joined keep and gone
        loop_ids = {e for e in self.graph.edge_ids_between(keep, gone) if e != eid}
        merged = [d for d in merged if d[0] not in loop_ids]

        g, vmap = self.graph.contract_edge(eid)
        rot = {
            w: [d for d in darts if d[0] not in loop_ids]
            for w, darts in self.rotations
            if w not in (keep, gone)
        }
        rot[keep] = merged
        rs = RotationSystem.from_dict(g, rot)
        if not rs.is_planar_embedding():
            raise EmbeddingError("contraction broke the sphere embedding (bug)")
        return rs, vmap

    def insert_edge_in_face(
        self, eid: int, corner_a: Dart, corner_b: Dart
    ) -> "RotationSystem":
        """Draw a new edge across a face, splitting it.

        ``corner_a`` and ``corner_b`` are darts of one common face; the new
        edge joins their tail vertices and is inserted immediately before
        each corner dart in its rotation.
        """
        fa = self.face_index_of(corner_a)
        fb = self.face_index_of(corner_b)
        if fa != fb:
            raise EmbeddingError("corners lie on different faces")
        a, b = corner_a[1], corner_b[1]
        if a == b:
            raise EmbeddingError("edge insertion needs distinct endpoints")
        g = self.graph.add_edge(a, b, eid)
        rot = {w: list(darts) for w, darts in self.rotations}
        rot[a].insert(rot[a].index(corner_a), (eid, a))
        rot[b].insert(rot[b].index(corner_b), (eid, b))
        rs = RotationSystem.from_dict(g, rot)
        if not rs.is_planar_embedding():
            raise EmbeddingError("face insertion broke the sphere embedding (bug)")
        return rs

    # -- canonical code ------------------------------------------------------

    def canonical_code(self, overlay_edges: Iterable[tuple[int, int]] = ()) -> tuple:
        """Canonical invariant of the embedded map, up to relabeling and
        reflection.

        Two rotation systems of one graph get equal codes exactly when some
        graph automorphism (composed with an optional global reflection)
        carries one to the other.  ``overlay_edges`` adds uembedded vertex
        pairs (e.g. fragment attachments) that the automorphism must also
        respect, which refines the quotient accordingly.
        """
        darts = sorted(d for _, ds in self.rotations for d in ds)
        if not darts:
            return (len(self.graph.vertices),)
        if len(self.graph.components()) != 1:
            raise EmbeddingError("canonical map code requires a connected graph")
        overlay = [tuple(sorted(p)) for p in overlay_edges]

        best: Optional[tuple] = None
        for orientation in (1, -1):
            succ = (
                self._succ
                if orientation == 1
                else {d: p for p, d in self._succ.items()}
            )
            for start in darts:
                num: dict[Dart, int] = {start: 0}
                order: list[Dart] = [start]
                i = 0
                while i < len(order):
                    d = order[i]
                    for nxt in (succ[d], self.twin(d)):
                        if nxt not in num:
                            num[nxt] = len(order)
                            order.append(nxt)
                    i += 1
                code: list[int] = []
                for d in order:
                    code.append(num[succ[d]])
                    code.append(num[self.twin(d)])
                if overlay:
                    vnum: dict[int, int] = {}
                    for d in order:
                        vnum.setdefault(d[1], num[d])
                    sect = sorted(
                        tuple(sorted((vnum[u], vnum[v]))) for u, v in overlay
                    )
                    code.extend(x for pair in sect for x in pair)
                tcode = tuple(code)
                if best is None or tcode < best:
                    best = tcode
        return best  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# Module-level operation forms
# ---------------------------------------------------------------------------


def trace_faces(rs: RotationSystem) -> list[Face]:
    return list(rs.faces)


def is_planar_embedding(rs: RotationSystem) -> bool:
    return rs.is_planar_embedding()


def induced_embedding(rs: RotationSystem, sub: Graph) -> RotationSystem:
    return rs.induced(sub)


def on_common_face(rs: RotationSystem, u: int, v: int) -> bool:
    """True iff some face boundary contains both vertices."""
    for w in (u, v):
        if w not in rs.graph._adj:
            raise EmbeddingError(f"no vertex {w}")
    if u == v:
        return True
    for f in rs.faces:
        vs = f.vertex_set()
        if u in vs and v in vs:
            return True
    return False


def _is_three_connected(g: Graph) -> bool:
    if g.vertex_count < 4 or not g.is_connected():
        return False
    for pair in itertools.combinations(g.vertices, 2):
        rest = [v for v in g.vertices if v not in pair]
        if not rest:
            return False
        sub = g.induced_subgraph(rest)
        if not sub.is_connected():
            return False
    return True


def enumerate_embeddings(
    g: Graph,
    up_to_equivalence: bool = True,
    overlay_edges: Iterable[tuple[int, int]] = (),
    cap: int = 2_000_000,
) -> list[RotationSystem]:
    """All genus-zero rotation systems of a connected planar graph.

    By default the list is deduplicated up to graph automorphism plus
    global reflection and sorted by canonical code; for a 3-connected
    planar graph it has exactly one entry (Whitney), found without
    enumeration.  With ``up_to_equivalence=False`` every labeled rotation
    system is returned.
    """
    if not g.is_connected():
        raise EmbeddingError("embedding enumeration requires a connected graph")
    from .planarity import reference_planarity

    if g.is_simple() and not reference_planarity(g):
        raise EmbeddingError("graph is not planar")

    if up_to_equivalence and g.is_simple() and _is_three_connected(g):
        # labeled sphere rotations of a 3-connected planar graph are one
        # mirror pair, hence a single class under any reflection-containing
        # equivalence regardless of overlay
        return [planar_embedding(g)]

    total = 1
    for v in g.vertices:
        total *= math.factorial(max(g.degree(v) - 1, 1))
    if total > cap:
        raise EmbeddingError(
            f"rotation space of size {total} exceeds the enumeration cap {cap}"
        )

    per_vertex: list[list[tuple[Dart, ...]]] = []
    for v in g.vertices:
        darts = sorted((eid, v) for eid, _ in g.incident(v))
        if not darts:
            per_vertex.append([()])
            continue
        head, rest = darts[0], darts[1:]
        per_vertex.append([(head, *perm) for perm in itertools.permutations(rest)])

    overlay = tuple(overlay_edges)
    chosen: dict[tuple, RotationSystem] = {}
    labeled: list[RotationSystem] = []
    for combo in itertools.product(*per_vertex):
        rs = RotationSystem(g, tuple(zip(g.vertices, combo)))
        if not rs.is_planar_embedding():
            continue
        if not up_to_equivalence:
            labeled.append(rs)
            continue
        code = rs.canonical_code(overlay)
        if code not in chosen:
            chosen[code] = rs
    if not up_to_equivalence:
        return labeled
    return [chosen[k] for k in sorted(chosen)]


def planar_embedding(g: Graph) -> RotationSystem:
    """Some genus-zero embedding of a connected planar simple graph (fast path)."""
    from .planarity import planar_rotations

    rs = RotationSystem.from_neighbor_orders(g, planar_rotations(g))
    if not rs.is_planar_embedding():
        raise EmbeddingError("planar rotation construction failed (bug)")
    return rs


# ---------------------------------------------------------------------------
# Sides of an embedded cycle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleSides:
    """The two components of the sphere minus an embedded cycle.

    Faces and off-cycle vertices are labeled 'A' or 'B'; side 'A' is the
    one containing the first face in trace order.
    """

    cycle: Cycle
    face_side: tuple[str, ...]  # indexed like rs.faces
    vertex_side: dict[int, str]

    def faces_on(self, side: str) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.face_side) if s == side)

    def vertices_on(self, side: str) -> frozenset[int]:
        return frozenset(v for v, s in self.vertex_side.items() if s == side)


def sides_of_cycle(rs: RotationSystem, c: Cycle) -> CycleSides:
    """2-color the faces by cutting the dual along the cycle's edges.

    The dual minus the cycle crossings must fall into exactly two
    components (Jordan); anything else is an internal-consistency error.
    """
    c.validate(rs.graph)
    c_edges = c.edge_set()
    n_faces = len(rs.faces)
    parent = list(range(n_faces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for eid, u, v in rs.graph.edges:
        if eid in c_edges:
            continue
        union(rs.face_index_of((eid, u)), rs.face_index_of((eid, v)))

    roots = sorted({find(i) for i in range(n_faces)})
    if len(roots) != 2:
        raise EmbeddingError(
            f"embedded cycle split the sphere into {len(roots)} parts, not 2"
        )
    side_of_root = {roots[0]: "A", roots[1]: "B"}
    face_side = tuple(side_of_root[find(i)] for i in range(n_faces))

    for eid in c_edges:
        u, v = rs.graph.edge_ends(eid)
        if face_side[rs.face_index_of((eid, u))] == face_side[rs.face_index_of((eid, v))]:
            raise EmbeddingError("cycle edge does not separate its two faces (bug)")

    on_c = c.vertex_set()
    vertex_side: dict[int, str] = {}
    for v in rs.graph.vertices:
        if v in on_c:
            continue
        sides = {face_side[rs.face_index_of(d)] for d in rs.rotation(v)}
        if len(sides) != 1:
            raise EmbeddingError(f"off-cycle vertex {v} touches both sides (bug)")
        vertex_side[v] = sides.pop()
    return CycleSides(c, face_side, vertex_side)
