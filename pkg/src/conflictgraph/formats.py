"""File formats: graph JSON, signed-graph JSON, rotation data, DOT export,
and the reproducible report envelope.

Graph files (extension ``.graph.json``):
    {"vertices": [0, 1, ...], "edges": [[id, u, v], ...]}

Optional keys used by fixtures and tools: ``rotations`` (dart ids per
vertex; the dart at the lower endpoint of edge e is 2e, at the higher one
2e+1), ``cycle`` (vertex list), ``mps_edges`` (edge ids of a maximal
planar subgraph), ``fragments`` (edge ids), ``notes``.

Signed graph files: {"vertices": [...], "edges": [[u, v, "+"], ...]}.

Reports carry tool version, seed, budget and input hashes; serializing the
same configuration twice yields byte-identical JSON.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Optional

from .embeddings import RotationSystem
from .graphs import Graph, GraphError
from .signed import SignedGraph


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [[eid, u, v] for eid, u, v in g.edges],
    }


def graph_from_json_dict(data: dict) -> Graph:
    try:
        vertices = data["vertices"]
        edges = data["edges"]
    except (TypeError, KeyError) as exc:
        raise GraphError(f"graph JSON needs 'vertices' and 'edges': {exc}") from exc
    if not all(isinstance(v, int) and v >= 0 for v in vertices):
        raise GraphError("vertex ids must be non-negative integers")
    triples = []
    for item in edges:
        if not (isinstance(item, list) and len(item) == 3):
            raise GraphError(f"edge entries are [id, u, v]; got {item!r}")
        triples.append(tuple(item))
    return Graph.make(vertices, triples)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json_dict(json.load(fh))


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json_dict(g), fh, indent=2, sort_keys=True)
        fh.write("\n")


def dart_id(g: Graph, eid: int, tail: int) -> int:
    u, v = g.edge_ends(eid)
    if tail == u:
        return 2 * eid
    if tail == v:
        return 2 * eid + 1
    raise GraphError(f"vertex {tail} is not an endpoint of edge {eid}")


def dart_from_id(g: Graph, did: int) -> tuple[int, int]:
    eid, side = divmod(did, 2)
    u, v = g.edge_ends(eid)
    return (eid, u if side == 0 else v)


def rotations_to_json_dict(rs: RotationSystem) -> dict:
    return {
        str(v): [dart_id(rs.graph, e, t) for e, t in darts]
        for v, darts in rs.rotations
    }


def rotations_from_json_dict(g: Graph, data: dict) -> RotationSystem:
    rot = {
        int(v): [dart_from_id(g, did) for did in dart_ids]
        for v, dart_ids in data.items()
    }
    return RotationSystem.from_dict(g, rot)


def signed_graph_to_json_dict(sg: SignedGraph) -> dict:
    return {
        "vertices": list(sg.vertices),
        "edges": [[u, v, s] for u, v, s in sg.signed_edges],
    }


def signed_graph_from_json_dict(data: dict) -> SignedGraph:
    try:
        return SignedGraph.build(
            data["vertices"], [tuple(e) for e in data["edges"]]
        )
    except (TypeError, KeyError) as exc:
        raise GraphError(f"bad signed-graph JSON: {exc}") from exc


def load_signed_graph(path: str) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return signed_graph_from_json_dict(json.load(fh))


def sha256_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def report_envelope(
    command: str,
    result: Any,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
    jobs: int = 1,
    inputs: Optional[dict[str, str]] = None,
) -> dict:
    from . import __version__

    return {
        "tool": "conflictgraph",
        "version": __version__,
        "command": command,
        "seed": seed,
        "budget": budget,
        "jobs": jobs,
        "inputs": inputs or {},
        "result": result,
    }


def dump_report(report: dict, path: Optional[str]) -> str:
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for eid, u, v in g.edges:
        lines.append(f'  {u} -- {v} [label="{eid}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def signed_graph_to_dot(sg: SignedGraph, name: str = "S") -> str:
    lines = [f"graph {name} {{"]
    for v in sg.vertices:
        lines.append(f"  {v};")
    for u, v, s in sg.signed_edges:
        color = "red" if s == "-" else "green"
        lines.append(f'  {u} -- {v} [color={color}, label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def conflict_graph_to_dot(scg, name: str = "C") -> str:
    """Signed conflict graph: solid strong edges, dashed implicit ones,
    red negative, green positive."""
    lines = [f"graph {name} {{"]
    for fid in scg.fragment_ids:
        lines.append(f'  f{fid} [label="fragment {fid}"];')
    for e in scg.edges:
        a, b = e.pair
        color = "red" if e.sign == "-" else "green"
        style = "solid" if e.provenance == "strong" else "dashed"
        lines.append(
            f'  f{a} -- f{b} [color={color}, style={style}, label="{e.sign}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
