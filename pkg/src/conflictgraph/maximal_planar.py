"""Maximal planar subgraphs of a nonplanar graph.

A maximal planar subgraph M is a spanning planar subgraph such that adding
any edge of G - M breaks planarity.  Equivalently the deleted edge set is a
minimal planarizing set, so enumeration branches on the edges of a
Kuratowski obstruction: every planarizing set must hit it.

Isomorphism classing of results is done three ways, because "count up to
isomorphism" is ambiguous for subgraph-with-fragment structures:

* ``labeled``      distinct edge subsets;
* ``host_classes`` orbits under automorphisms of G mapping M onto M'
                   (equivalently, the edge-2-colored canonical form);
* ``abstract_classes`` isomorphism types of M alone.

The host-class convention is the default for representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, GraphError, canonical_form
from .planarity import kuratowski_edge_ids, reference_planarity


@dataclass(frozen=True)
class Fragment:
    """One edge of G - M, attached to M at its two endpoints."""

    edge_id: int
    attachments: tuple[int, int]

    @classmethod
    def of_edge(cls, g: Graph, eid: int) -> "Fragment":
        u, v = g.edge_ends(eid)
        return cls(eid, (u, v))


@dataclass(frozen=True)
class MaximalPlanarSubgraph:
    host: Graph
    m: Graph
    fragments: tuple[Fragment, ...]

    @cached_property
    def fragment_ids(self) -> tuple[int, ...]:
        return tuple(f.edge_id for f in self.fragments)

    def colored_canonical_form(self) -> bytes:
        """Canonical form of the host with M-edges and fragment edges
        distinguished; equal forms mean some host automorphism maps one
        subgraph (with its fragment pattern) onto the other."""
        frag = set(self.fragment_ids)
        colors = {eid: (2 if eid in frag else 1) for eid, _, _ in self.host.edges}
        return canonical_form(self.host, edge_colors=colors)


def is_maximal_planar_subgraph(g: Graph, m: Graph) -> bool:
    """m is planar, spans g, and every one-edge extension is nonplanar."""
    if set(m.vertices) != set(g.vertices):
        return False
    m_ids = {eid for eid, _, _ in m.edges}
    for eid, u, v in m.edges:
        if not g.has_edge_id(eid) or g.edge_ends(eid) != (u, v):
            raise GraphError("m is not a subgraph of g")
    if not reference_planarity(m):
        return False
    for eid, u, v in g.edges:
        if eid in m_ids:
            continue
        if reference_planarity(m.add_edge(u, v, eid)):
            return False
    return True


def _minimal_planarizing_sets(g: Graph) -> list[frozenset[int]]:
    """All minimal edge sets whose deletion makes ``g`` planar.

    Branch on the edges of a Kuratowski subdivision of the current graph;
    every planarizing set must contain one of them.  Visited partial sets
    are memoized, and minimality is checked at the planar leaves.
    """
    solutions: set[frozenset[int]] = set()
    visited: set[frozenset[int]] = set()

    def planar_minus(drop: frozenset[int]) -> bool:
        return reference_planarity(g.delete_edges(drop))

    def walk(drop: frozenset[int]) -> None:
        if drop in visited:
            return
        visited.add(drop)
        reduced = g.delete_edges(drop)
        if reference_planarity(reduced):
            if all(not planar_minus(drop - {e}) for e in drop):
                solutions.add(drop)
            return
        for eid in sorted(kuratowski_edge_ids(reduced)):
            walk(drop | {eid})

    walk(frozenset())
    return sorted(solutions, key=lambda s: tuple(sorted(s)))


def enumerate_maximal_planar_subgraphs(
    g: Graph, up_to_iso: bool = True
) -> list[MaximalPlanarSubgraph]:
    """All maximal planar subgraphs of a connected nonplanar simple graph.

    With ``up_to_iso`` one representative per host-class survives (see the
    module docstring); otherwise every labeled subgraph is returned.
    Deterministic order: sorted by the tuple of deleted edge ids.
    """
    if not g.is_simple():
        raise GraphError("maximal planar subgraph enumeration requires a simple graph")
    if not g.is_connected():
        raise GraphError("host graph must be connected")
    if reference_planarity(g):
        raise GraphError("host graph is planar; no fragments exist")

    out = []
    for drop in _minimal_planarizing_sets(g):
        m = g.delete_edges(drop)
        frags = tuple(Fragment.of_edge(g, eid) for eid in sorted(drop))
        out.append(MaximalPlanarSubgraph(g, m, frags))

    if not up_to_iso:
        return out
    seen: dict[bytes, MaximalPlanarSubgraph] = {}
    for mps in out:
        seen.setdefault(mps.colored_canonical_form(), mps)
    return sorted(seen.values(), key=lambda s: s.fragment_ids)


def mps_counts(g: Graph) -> dict[str, int]:
    """The three documented counting conventions for maximal planar subgraphs."""
    all_mps = enumerate_maximal_planar_subgraphs(g, up_to_iso=False)
    host = {mps.colored_canonical_form() for mps in all_mps}
    abstract = {canonical_form(mps.m) for mps in all_mps}
    return {
        "labeled": len(all_mps),
        "host_classes": len(host),
        "abstract_classes": len(abstract),
    }
