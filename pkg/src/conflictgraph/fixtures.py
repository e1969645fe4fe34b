"""Built-in fixture graphs, shipped as ``fixtures/*.graph.json``.

Each fixture is also constructible programmatically here (the JSON files
are generated from these builders; a test keeps them in sync).  Fixtures
carry optional extras: a designated cycle, the edge ids of a maximal
planar subgraph, and free-form notes describing what the graph exercises.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .embeddings import RotationSystem
from .graphs import Cycle, Graph, GraphError
from .maximal_planar import Fragment, MaximalPlanarSubgraph


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    cycle: Optional[tuple[int, ...]] = None
    mps_edges: Optional[tuple[int, ...]] = None
    mps_rotations: Optional[tuple[tuple[int, tuple], ...]] = None
    notes: str = ""

    def designated_cycle(self) -> Cycle:
        if self.cycle is None:
            raise GraphError(f"fixture {self.name} has no designated cycle")
        return Cycle.from_vertices(self.graph, self.cycle)

    def mps_embedding(self) -> RotationSystem:
        """The designated sphere embedding of the fixture's subgraph."""
        if self.mps_rotations is None:
            from .embeddings import enumerate_embeddings

            m = self.mps()
            overlay = [f.attachments for f in m.fragments]
            return enumerate_embeddings(m.m, overlay_edges=overlay)[0]
        m = self.mps()
        return RotationSystem.from_dict(
            m.m, {v: [tuple(d) for d in darts] for v, darts in self.mps_rotations}
        )

    def mps(self) -> MaximalPlanarSubgraph:
        if self.mps_edges is None:
            raise GraphError(f"fixture {self.name} has no designated subgraph")
        keep = set(self.mps_edges)
        m = self.graph.edge_subgraph(keep)
        frags = tuple(
            Fragment.of_edge(self.graph, eid)
            for eid, _, _ in self.graph.edges
            if eid not in keep
        )
        return MaximalPlanarSubgraph(self.graph, m, frags)


def _builders() -> dict[str, Fixture]:
    k42 = Graph.build(range(6), [(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (3, 5)])
    demo_pairs = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
        (0, 6), (6, 7), (7, 3),
        (1, 8), (8, 9), (9, 4),
        (6, 8), (7, 9),
    ]
    out = [
        Fixture("k5", Graph.complete(5), notes="smallest nonplanar complete graph"),
        Fixture("k6", Graph.complete(6), notes="complete graph on six vertices"),
        Fixture("k33", Graph.complete_bipartite(3, 3), notes="utility graph"),
        Fixture(
            "k44_minus_e",
            Graph.complete_bipartite(4, 4).delete_edge(0),
            notes="complete bipartite 4+4 minus one edge",
        ),
        Fixture("petersen", Graph.petersen(), notes="the Petersen graph"),
        Fixture(
            "octahedron",
            Graph.octahedron(),
            notes="K_{2,2,2}; antipodal pairs {0,3}, {1,4}, {2,5}",
        ),
        Fixture(
            "chorded_hexagon",
            Graph.build(
                range(7),
                [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4), (6, 0), (6, 2)],
            ),
            cycle=(0, 1, 2, 3, 4, 5),
            notes=(
                "planar graph whose designated hexagon has two interleaved "
                "chords and one two-legged spur; the overlap graph is a "
                "bipartite path"
            ),
        ),
        Fixture(
            "k42_conflict_pair",
            k42,
            mps_edges=tuple(range(8)),
            mps_rotations=(
                (0, ((0, 0), (1, 0), (2, 0), (3, 0))),
                (1, ((7, 1), (6, 1), (5, 1), (4, 1))),
                (2, ((0, 2), (4, 2))),
                (3, ((1, 3), (5, 3))),
                (4, ((2, 4), (6, 4))),
                (5, ((3, 5), (7, 5))),
            ),
            notes=(
                "complete bipartite 4+2 core with two extra edges joining "
                "opposite degree-2 vertices; in the alternating sphere "
                "embedding the two extra edges are strongly conflicting "
                "fragments of the core"
            ),
        ),
        Fixture(
            "octahedral_mps_of_k6",
            Graph.complete(6),
            mps_edges=tuple(
                eid for eid, u, v in Graph.complete(6).edges if v - u != 3
            ),
            notes=(
                "octahedral maximal planar subgraph of K6; the three "
                "antipodal fragments conflict pairwise, a negative triangle"
            ),
        ),
        Fixture(
            "petersen_mps_anticonflict",
            Graph.petersen(),
            mps_edges=(1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14),
            notes=(
                "13-edge maximal planar subgraph of the Petersen graph; its "
                "two fragments strongly anti-conflict (positive edge) and "
                "also strongly conflict, an unbalanced digon"
            ),
        ),
        Fixture(
            "k44e_balanced_strong_mps",
            Graph.complete_bipartite(4, 4).delete_edge(0),
            mps_edges=(2, 3, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15),
            notes=(
                "maximal planar subgraph of K44 minus an edge whose strong "
                "conflict graph is balanced while the full conflict graph "
                "(with implicit edges) is unbalanced"
            ),
        ),
        Fixture(
            "separated_pair_link_demo",
            Graph.build(range(10), demo_pairs),
            cycle=(0, 1, 2, 3, 4, 5),
            mps_edges=tuple(range(12)),
            notes=(
                "hexagon with one ear across each side of the designated "
                "cycle; the two cross fragments strongly anti-conflict, so "
                "placing them on opposite sides of the sphere forces a link"
            ),
        ),
    ]
    return {f.name: f for f in out}


FIXTURE_NAMES = tuple(sorted(_builders()))


def build_fixture(name: str) -> Fixture:
    try:
        return _builders()[name]
    except KeyError:
        raise GraphError(f"unknown fixture {name!r}") from None


def fixture_to_json_dict(f: Fixture) -> dict:
    from .formats import dart_id, graph_to_json_dict

    data = graph_to_json_dict(f.graph)
    if f.cycle is not None:
        data["cycle"] = list(f.cycle)
    if f.mps_edges is not None:
        data["mps_edges"] = list(f.mps_edges)
    if f.mps_rotations is not None:
        data["rotations"] = {
            str(v): [dart_id(f.graph, e, t) for e, t in darts]
            for v, darts in f.mps_rotations
        }
    data["notes"] = f.notes
    return data


def load_fixture(name: str) -> Fixture:
    """Load a shipped fixture file (the canonical read path)."""
    from .formats import graph_from_json_dict

    ref = resources.files(__package__).joinpath("fixtures", f"{name}.graph.json")
    try:
        data = json.loads(ref.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise GraphError(f"unknown fixture {name!r}") from None
    g = graph_from_json_dict(data)
    rotations = None
    if "rotations" in data:
        from .formats import dart_from_id

        rotations = tuple(
            (int(v), tuple(dart_from_id(g, did) for did in dart_ids))
            for v, dart_ids in sorted(data["rotations"].items(), key=lambda kv: int(kv[0]))
        )
    return Fixture(
        name,
        g,
        cycle=tuple(data["cycle"]) if "cycle" in data else None,
        mps_edges=tuple(data["mps_edges"]) if "mps_edges" in data else None,
        mps_rotations=rotations,
        notes=data.get("notes", ""),
    )


def write_fixture_files(directory: str) -> list[str]:
    import os

    os.makedirs(directory, exist_ok=True)
    written = []
    for name in FIXTURE_NAMES:
        path = os.path.join(directory, f"{name}.graph.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(fixture_to_json_dict(build_fixture(name)), fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(path)
    return written
