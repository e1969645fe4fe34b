"""Command-line interface.

Subcommands: planarity, conflict-cycle, embeddings, mps, conflict,
balance, petersen verify, petersen probe, realize, link-check, fixtures.
Exit codes: 0 success, 1 assertion-style failure (e.g. a planarity
disagreement or an unbalancedness violation), 2 usage or input errors.

Every JSON report embeds the tool version, seed, budget and input hashes;
running the same configuration twice produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from .graphs import Cycle, Graph, GraphError
from .embeddings import enumerate_embeddings
from .maximal_planar import enumerate_maximal_planar_subgraphs, mps_counts
from .planarity import (
    cycle_conflict_graph,
    is_bipartite,
    reference_planarity,
    tutte_planarity,
)
from . import conflicts as C
from . import formats as F
from . import realize as R
from .fixtures import FIXTURE_NAMES, fixture_to_json_dict, load_fixture
from .signed import is_balanced


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CONFLICTGRAPH_JOBS", "1")))
    except ValueError:
        return 1


def _load_graph_arg(path: str) -> tuple[Graph, dict[str, str]]:
    g = F.load_graph(path)
    return g, {path: F.sha256_file(path)}


def _emit(args, report: dict) -> None:
    path = getattr(args, "json", None)
    if path:
        F.dump_report(report, path)
        print(f"report written to {path}")


def cmd_planarity(args) -> int:
    g, hashes = _load_graph_arg(args.graph)
    tutte_ok, witness = tutte_planarity(g)
    ref_ok = reference_planarity(g)
    verdict = "planar" if tutte_ok else "nonplanar"
    print(f"{verdict} (conflict-graph criterion)")
    if witness is not None:
        print(f"witness cycle: {list(witness.vertices)}")
    print(f"reference test agrees: {tutte_ok == ref_ok}")
    result = {
        "tutte_planar": tutte_ok,
        "reference_planar": ref_ok,
        "witness_cycle": list(witness.vertices) if witness else None,
    }
    _emit(args, F.report_envelope("planarity", result, inputs=hashes))
    return 0 if tutte_ok == ref_ok else 1


def cmd_conflict_cycle(args) -> int:
    g, hashes = _load_graph_arg(args.graph)
    vs = [int(x) for x in args.cycle.split(",")]
    c = Cycle.from_vertices(g, vs)
    cg = cycle_conflict_graph(g, c)
    ok, coloring, odd = is_bipartite(cg)
    print(f"{len(cg.fragments)} fragments")
    for i, fr in enumerate(cg.fragments):
        print(f"  [{i}] {fr.kind}: attachments {list(fr.attachments)}")
    print(f"conflicts: {list(cg.conflict_pairs)}")
    print("bipartite" if ok else f"not bipartite; odd cycle {odd}")
    if args.dot:
        frag_graph = Graph.build(range(len(cg.fragments)), cg.conflict_pairs)
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(F.graph_to_dot(frag_graph, "conflicts"))
    result = {
        "fragments": [
            {"kind": fr.kind, "attachments": list(fr.attachments), "edges": sorted(fr.edge_ids)}
            for fr in cg.fragments
        ],
        "conflict_pairs": [list(p) for p in cg.conflict_pairs],
        "bipartite": ok,
        "two_coloring": coloring,
        "odd_cycle": odd,
    }
    _emit(args, F.report_envelope("conflict-cycle", result, inputs=hashes))
    return 0


def cmd_embeddings(args) -> int:
    g, hashes = _load_graph_arg(args.graph)
    embs = enumerate_embeddings(g, up_to_equivalence=not args.labeled)
    kind = "labeled" if args.labeled else "inequivalent"
    print(f"{len(embs)} {kind} sphere embeddings")
    for i, rs in enumerate(embs):
        print(f"  [{i}] faces: {len(rs.faces)}")
    result = {
        "count": len(embs),
        "labeled": args.labeled,
        "embeddings": [
            {"index": i, "faces": len(rs.faces), "rotations": F.rotations_to_json_dict(rs)}
            for i, rs in enumerate(embs)
        ],
    }
    _emit(args, F.report_envelope("embeddings", result, inputs=hashes))
    return 0


def cmd_mps(args) -> int:
    g, hashes = _load_graph_arg(args.graph)
    subs = enumerate_maximal_planar_subgraphs(g, up_to_iso=args.iso)
    counts = mps_counts(g)
    print(f"{len(subs)} maximal planar subgraphs ({'classes' if args.iso else 'labeled'})")
    print(f"counts: {counts}")
    for i, m in enumerate(subs):
        frag = [list(f.attachments) for f in m.fragments]
        print(f"  [{i}] {m.m.edge_count} edges, fragments {frag}")
    result = {
        "counts": counts,
        "up_to_iso": args.iso,
        "subgraphs": [
            {
                "index": i,
                "m_edges": sorted(e for e, _, _ in m.m.edges),
                "fragments": [[f.edge_id, *f.attachments] for f in m.fragments],
            }
            for i, m in enumerate(subs)
        ],
    }
    _emit(args, F.report_envelope("mps", result, inputs=hashes))
    return 0


def _pick_mps_embedding(g: Graph, mps_index: int, embedding_index: int):
    subs = enumerate_maximal_planar_subgraphs(g, up_to_iso=True)
    if not 0 <= mps_index < len(subs):
        raise GraphError(f"mps index {mps_index} out of range 0..{len(subs) - 1}")
    m = subs[mps_index]
    overlay = [f.attachments for f in m.fragments]
    embs = enumerate_embeddings(m.m, overlay_edges=overlay)
    if not 0 <= embedding_index < len(embs):
        raise GraphError(
            f"embedding index {embedding_index} out of range 0..{len(embs) - 1}"
        )
    return m, embs[embedding_index]


def cmd_conflict(args) -> int:
    g, hashes = _load_graph_arg(args.graph)
    m, rs = _pick_mps_embedding(g, args.mps_index, args.embedding)
    if args.strong_only:
        scg = C.build_strong_conflict_graph(g, m, rs)
    else:
        scg = C.build_conflict_graph(g, m, rs, budget=args.budget)
    bal = scg.balance()
    print(f"fragments: {list(scg.fragment_ids)}")
    for e in scg.edges:
        print(f"  {e.pair[0]} {e.sign} {e.pair[1]}  ({e.provenance})")
    if scg.incomplete_pairs:
        print(f"incomplete searches: {list(scg.incomplete_pairs)}")
    print("balanced" if bal.balanced else "unbalanced")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(F.conflict_graph_to_dot(scg))
    result = {
        "mps_index": args.mps_index,
        "embedding": args.embedding,
        "strong_only": args.strong_only,
        "fragments": list(scg.fragment_ids),
        "edges": sorted([list(e.pair), e.sign, e.provenance] for e in scg.edges),
        "digons": [list(p) for p in scg.digon_pairs],
        "incomplete": [[list(p), k] for p, k in scg.incomplete_pairs],
        "balanced": bal.balanced,
    }
    _emit(
        args,
        F.report_envelope("conflict", result, budget=args.budget, inputs=hashes),
    )
    return 0


def cmd_balance(args) -> int:
    sg = F.load_signed_graph(args.signed_graph)
    res = is_balanced(sg)
    if res.balanced:
        x, y = res.split
        print(f"balanced; split X={sorted(x)} Y={sorted(y)}")
    else:
        print(f"unbalanced; negative cycle {list(res.negative_cycle.vertices)}")
    result = {
        "balanced": res.balanced,
        "split": [sorted(res.split[0]), sorted(res.split[1])] if res.split else None,
        "negative_cycle": list(res.negative_cycle.vertices) if res.negative_cycle else None,
    }
    hashes = {args.signed_graph: F.sha256_file(args.signed_graph)}
    _emit(args, F.report_envelope("balance", result, inputs=hashes))
    return 0


def cmd_petersen_verify(args) -> int:
    from .petersen import verify_theorem_42

    report = verify_theorem_42(budget=args.budget, jobs=args.jobs)
    totals = report.totals
    print(f"maximal planar subgraph classes per member:")
    for m in report.members:
        print(f"  {m.name}: {m.counts}")
    print(f"totals: {totals}")
    match = report.count_matches_45
    print(f"counting convention totalling 45: {match}")
    print(
        "all conflict graphs unbalanced"
        if report.all_unbalanced
        else f"BALANCED CASES FOUND: "
        + ", ".join(
            f"{m.name}{m.balanced_cases()}" for m in report.members if m.balanced_cases()
        )
    )
    _emit(
        args,
        F.report_envelope(
            "petersen verify", report.to_json_dict(), budget=args.budget, jobs=args.jobs
        ),
    )
    return 0 if report.all_unbalanced else 1


def cmd_petersen_probe(args) -> int:
    from .petersen import conjecture_probe

    report = conjecture_probe(
        args.samples,
        min_v=args.min_v,
        max_v=args.max_v,
        seed=args.seed,
        budget=args.budget,
        jobs=args.jobs,
        dump_dir=args.dump_dir,
    )
    print(f"contingency: {report.contingency}")
    envelope = F.report_envelope(
        "petersen probe",
        report.to_json_dict(),
        seed=args.seed,
        budget=args.budget,
        jobs=args.jobs,
    )
    text = F.dump_report(envelope, args.out)
    if args.out:
        print(f"report written to {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_realize(args) -> int:
    g, hashes = _load_graph_arg(args.graph)
    m, rs = _pick_mps_embedding(g, args.mps_index, args.embedding)
    sides = {}
    for spec in args.side or []:
        eid, side = spec.split("=")
        sides[int(eid)] = side
    for f in m.fragments:
        sides.setdefault(f.edge_id, "inside")
    sr = R.route_fragments(R.layout(rs), m.fragments, sides)
    print(
        f"realized {len(sr.edge_points)} subgraph edges and "
        f"{len(sr.fragment_points)} fragments; disjointness validated"
    )
    if args.obj:
        with open(args.obj, "w", encoding="utf-8") as fh:
            fh.write(R.to_obj(sr))
        print(f"OBJ written to {args.obj}")
    result = {
        "mps_index": args.mps_index,
        "embedding": args.embedding,
        "sides": {str(k): v for k, v in sorted(sides.items())},
        "vertices": {
            str(v): [str(x) for x in p] for v, p in sorted(sr.coords.items())
        },
    }
    _emit(args, F.report_envelope("realize", result, inputs=hashes))
    return 0


def cmd_link_check(args) -> int:
    g, hashes = _load_graph_arg(args.graph)
    m, rs = _pick_mps_embedding(g, args.mps_index, args.embedding)
    ids = {f.edge_id: f for f in m.fragments}
    e1, e2 = (int(x) for x in args.pair.split(","))
    if e1 not in ids or e2 not in ids:
        raise GraphError(f"pair must name fragment edge ids from {sorted(ids)}")
    if args.opposite_sides:
        sides = {e1: "inside", e2: "outside"}
    else:
        sides = {e1: "inside", e2: "inside"}
    hit = R.check_linked_pair(g, m, rs, ids[e1], ids[e2], sides)
    if hit:
        c1, c2, lk = hit
        print(f"linked pair found: {c1} and {c2} with linking number {lk}")
    else:
        print("no linked disjoint cycle pair found in this realization")
    result = {
        "pair": [e1, e2],
        "sides": {str(k): v for k, v in sorted(sides.items())},
        "found": bool(hit),
        "cycles": [hit[0], hit[1]] if hit else None,
        "linking_number": hit[2] if hit else None,
    }
    _emit(args, F.report_envelope("link-check", result, inputs=hashes))
    return 0


def cmd_fixtures(args) -> int:
    if args.emit:
        fx = load_fixture(args.emit)
        text = json.dumps(fixture_to_json_dict(fx), indent=2, sort_keys=True) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(f"fixture written to {args.out}")
        else:
            print(text, end="")
    else:
        for name in FIXTURE_NAMES:
            fx = load_fixture(name)
            print(f"{name}: {fx.notes}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="conflictgraph",
        description="conflict graphs of cycles and sphere-embedded maximal planar subgraphs",
    )
    p.add_argument("--version", action="version", version=f"conflictgraph {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_json(sp):
        sp.add_argument("--json", help="write a JSON report to this path")

    sp = sub.add_parser("planarity", help="decide planarity two independent ways")
    sp.add_argument("--graph", required=True)
    add_json(sp)
    sp.set_defaults(func=cmd_planarity)

    sp = sub.add_parser("conflict-cycle", help="fragments and conflicts of one cycle")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--cycle", required=True, help="comma-separated vertex list")
    sp.add_argument("--dot", help="write the conflict graph as DOT")
    add_json(sp)
    sp.set_defaults(func=cmd_conflict_cycle)

    sp = sub.add_parser("embeddings", help="inequivalent sphere embeddings")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--labeled", action="store_true", help="skip the equivalence quotient")
    add_json(sp)
    sp.set_defaults(func=cmd_embeddings)

    sp = sub.add_parser("mps", help="maximal planar subgraphs")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--iso", action=argparse.BooleanOptionalAction, default=True)
    add_json(sp)
    sp.set_defaults(func=cmd_mps)

    sp = sub.add_parser("conflict", help="signed conflict graph of an embedded subgraph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--mps-index", type=int, required=True)
    sp.add_argument("--embedding", type=int, default=0)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--strong-only", action="store_true")
    sp.add_argument("--dot", help="write the signed conflict graph as DOT")
    add_json(sp)
    sp.set_defaults(func=cmd_conflict)

    sp = sub.add_parser("balance", help="Harary balance of a signed graph")
    sp.add_argument("--signed-graph", required=True)
    add_json(sp)
    sp.set_defaults(func=cmd_balance)

    pp = sub.add_parser("petersen", help="family-wide verification and probe")
    psub = pp.add_subparsers(dest="petersen_command", required=True)

    sp = psub.add_parser("verify", help="reproduce the family unbalancedness counts")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    add_json(sp)
    sp.set_defaults(func=cmd_petersen_verify)

    sp = psub.add_parser("probe", help="random-graph conjecture probe")
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--min-v", type=int, default=7)
    sp.add_argument("--max-v", type=int, default=9)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.add_argument("--out", help="report path")
    sp.add_argument("--dump-dir", help="directory for counterexample-candidate dumps")
    sp.set_defaults(func=cmd_petersen_probe)

    sp = sub.add_parser("realize", help="spatial realization on the unit sphere")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--mps-index", type=int, required=True)
    sp.add_argument("--embedding", type=int, default=0)
    sp.add_argument(
        "--side",
        action="append",
        metavar="EDGE=SIDE",
        help="fragment side assignment, e.g. 12=outside (default inside)",
    )
    sp.add_argument("--obj", help="write polylines as a Wavefront OBJ")
    add_json(sp)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("link-check", help="scan for a linked disjoint cycle pair")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--mps-index", type=int, required=True)
    sp.add_argument("--embedding", type=int, default=0)
    sp.add_argument("--pair", required=True, help="two fragment edge ids, e.g. 3,12")
    side = sp.add_mutually_exclusive_group()
    side.add_argument("--same-side", action="store_true", default=True)
    side.add_argument("--opposite-sides", dest="opposite_sides", action="store_true")
    add_json(sp)
    sp.set_defaults(func=cmd_link_check, opposite_sides=False)

    sp = sub.add_parser("fixtures", help="list or emit built-in fixture graphs")
    sp.add_argument("--emit", metavar="NAME")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_fixtures)

    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
