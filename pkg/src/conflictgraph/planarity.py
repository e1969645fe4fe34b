"""Fragments of a cycle, the conflict relation, and planarity two ways.

``tutte_planarity`` decides planarity through the classical criterion: a
graph is planar iff every cycle has a bipartite conflict graph.  A fragment
(bridge) of a cycle C is either a chord of C or a connected component of
G - C together with its attachment edges; two fragments conflict when they
share three attachment vertices or attach in interleaved cyclic order.

``reference_planarity`` is the independent cross-check: an edge-count
prefilter followed by the left-right planarity test (via networkx).  The
two deciders share no code on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graphs import Cycle, Graph, GraphError, NotACycleError, bipartition, enumerate_cycles


@dataclass(frozen=True)
class CycleFragment:
    """A chord of C or a component of G - C with its attachment edges."""

    kind: str  # "chord" | "component"
    internal_vertices: frozenset[int]
    attachments: tuple[int, ...]  # ordered by position along C
    edge_ids: frozenset[int]

    def attachment_set(self) -> frozenset[int]:
        return frozenset(self.attachments)


@dataclass(frozen=True)
class ConflictGraphUnsigned:
    """Fragments as vertices, conflicting pairs as edges (simple, loopless)."""

    fragments: tuple[CycleFragment, ...]
    conflict_pairs: tuple[tuple[int, int], ...]  # index pairs, i < j


def fragments_of_cycle(g: Graph, c: Cycle) -> list[CycleFragment]:
    """All fragments of cycle ``c`` in ``g``, deterministically ordered.

    Every edge of ``g`` lands in exactly one of: the cycle, or one fragment.
    """
    c.validate(g)
    on_c = c.vertex_set()
    c_edges = c.edge_set()
    pos = {v: i for i, v in enumerate(c.vertices)}

    frags: list[CycleFragment] = []

    # chords: edges off the cycle with both ends on it
    for eid, u, v in g.edges:
        if eid in c_edges:
            continue
        if u in on_c and v in on_c:
            att = tuple(sorted((u, v), key=lambda x: pos[x]))
            frags.append(CycleFragment("chord", frozenset(), att, frozenset({eid})))

    # component fragments of G - C
    off = [v for v in g.vertices if v not in on_c]
    seen: set[int] = set()
    for start in off:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for _, w in g.incident(x):
                if w not in on_c and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        member = set()
        attach = set()
        for x in comp:
            for eid, w in g.incident(x):
                if w in on_c:
                    member.add(eid)
                    attach.add(w)
                elif w in comp:
                    member.add(eid)
        frags.append(
            CycleFragment(
                "component",
                frozenset(comp),
                tuple(sorted(attach, key=lambda x: pos[x])),
                frozenset(member),
            )
        )

    def sort_key(f: CycleFragment):
        first = min(f.edge_ids) if f.edge_ids else -1
        return (f.kind, first, min(f.internal_vertices, default=-1))

    frags.sort(key=sort_key)
    return frags


def fragments_conflict(a: CycleFragment, b: CycleFragment, c: Cycle) -> bool:
    """Three shared attachments, or four distinct attachments interleaved on C.

    Shared attachment vertices only count under the three-in-common rule;
    the interleaving rule requires four pairwise distinct vertices.
    """
    if a == b:
        return False
    sa, sb = a.attachment_set(), b.attachment_set()
    if len(sa & sb) >= 3:
        return True
    pos = {v: i for i, v in enumerate(c.vertices)}
    k = len(c.vertices)
    for a1 in sa:
        for a2 in sa:
            if a2 == a1:
                continue
            for b1 in sb - {a1, a2}:
                for b2 in sb - {a1, a2, b1}:
                    # strict cyclic order a1 < b1 < a2 < b2
                    p = pos[a1]
                    q = (pos[b1] - p) % k
                    r = (pos[a2] - p) % k
                    s = (pos[b2] - p) % k
                    if 0 < q < r < s:
                        return True
    return False


def cycle_conflict_graph(g: Graph, c: Cycle) -> ConflictGraphUnsigned:
    frags = fragments_of_cycle(g, c)
    pairs = [
        (i, j)
        for i in range(len(frags))
        for j in range(i + 1, len(frags))
        if fragments_conflict(frags[i], frags[j], c)
    ]
    return ConflictGraphUnsigned(tuple(frags), tuple(pairs))


def is_bipartite(
    h: ConflictGraphUnsigned,
) -> tuple[bool, Optional[dict[int, int]], Optional[list[int]]]:
    """Bipartiteness with a certificate either way.

    Returns ``(True, two_coloring, None)`` or ``(False, None, odd_walk)``
    where the walk is a closed odd cycle over fragment indices.
    """
    n = len(h.fragments)
    g = Graph.build(range(n), h.conflict_pairs)
    parts, odd = bipartition(g)
    if parts is None:
        return False, None, odd
    x, _ = parts
    return True, {i: (0 if i in x else 1) for i in range(n)}, None


def tutte_planarity(g: Graph) -> tuple[bool, Optional[Cycle]]:
    """Planarity by the bipartite-conflict-graph criterion.

    Cycles are scanned in increasing length; the first cycle whose conflict
    graph is not bipartite is returned as the witness.
    """
    if not g.is_simple():
        raise GraphError("planarity test requires a simple graph")
    for c in enumerate_cycles(g):
        ok, _, _ = is_bipartite(cycle_conflict_graph(g, c))
        if not ok:
            return False, c
    return True, None


def _to_networkx(g: Graph) -> "nx.Graph":
    ng = nx.Graph()
    ng.add_nodes_from(g.vertices)
    ng.add_edges_from((u, v) for _, u, v in g.edges)
    return ng


def reference_planarity(g: Graph) -> bool:
    """Independent planarity decision: edge-count prefilter, then the
    left-right test.  Shares no code with the conflict-graph route."""
    if not g.is_simple():
        raise GraphError("planarity test requires a simple graph")
    n, m = g.vertex_count, g.edge_count
    if n >= 3 and m > 3 * n - 6:
        return False
    ok, _ = nx.check_planarity(_to_networkx(g), counterexample=False)
    return ok


def kuratowski_edge_ids(g: Graph) -> frozenset[int]:
    """Edge ids of one K5/K33 subdivision of a nonplanar simple graph."""
    ok, cert = nx.check_planarity(_to_networkx(g), counterexample=True)
    if ok:
        raise GraphError("graph is planar; no obstruction exists")
    out = set()
    for u, v in cert.edges():
        ids = g.edge_ids_between(u, v)
        out.add(ids[0])
    return frozenset(out)


def planar_rotations(g: Graph) -> dict[int, tuple[int, ...]]:
    """A genus-zero rotation (neighbor order per vertex) of a planar simple
    graph, from the left-right test's combinatorial embedding."""
    ok, emb = nx.check_planarity(_to_networkx(g), counterexample=False)
    if not ok:
        raise GraphError("graph is not planar")
    return {
        v: tuple(emb.neighbors_cw_order(v)) if g.degree(v) else ()
        for v in g.vertices
    }
