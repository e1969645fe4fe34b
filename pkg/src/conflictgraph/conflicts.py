"""Strong and implicit (anti-)conflicts between fragments of an embedded
maximal planar subgraph, and assembly of the signed conflict graph.

Fragments are single edges of G - M with both endpoints on M.  With M
embedded in the sphere:

* two fragments *strongly conflict* when their four attachment vertices
  form the degree-2 side of a K_{4,2} subdivision inside M whose induced
  embedding puts the two attachments of each fragment on no common face;

* they *strongly anti-conflict* when some cycle of M separates the two
  attachments of each fragment to opposite sides of the sphere, with a
  path off the cycle joining each same-side attachment pair;

* *implicit* (anti-)conflicts arise when, for every potentially flat
  placement with the pair on the same (resp. opposite) side, some sequence
  of embedding-preserving edge deletions, contractions and whole-fragment
  absorptions turns the pair strongly (anti-)conflicting.

The signed conflict graph records a negative edge for a (strong or
implicit) conflict and a positive edge for a (strong or implicit)
anti-conflict.  A pair can carry both: the resulting two-edge digon has
negative sign product, so it makes the graph unbalanced.  Such pairs are
logged prominently; they are how two-fragment subgraphs end up unbalanced.

The implicit search is a combinatorial proxy for an ambient-isotopy
quantifier: absorption requires the fragment's two mapped attachments on a
common face (every face of a sphere graph is reachable from either side,
so placements constrain which pairs are searched, not which absorptions
are legal).  Spatial effects beyond that, such as fragments blocking one
another, are not modeled; verdicts therefore carry their search budget.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .embeddings import Dart, EmbeddingError, RotationSystem, sides_of_cycle
from .graphs import Cycle, Graph, GraphError, VertexMap, enumerate_cycles
from .maximal_planar import Fragment, MaximalPlanarSubgraph
from .signed import NEGATIVE, POSITIVE, SignedGraph, is_balanced

logger = logging.getLogger(__name__)

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget_exceeded"

INSIDE = "inside"
OUTSIDE = "outside"

DEFAULT_NODE_CAP = 60_000


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathInM:
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]


@dataclass(frozen=True)
class BranchTree:
    """A tree inside M standing for one vertex of the pattern graph."""

    vertices: frozenset[int]
    edge_ids: frozenset[int]


@dataclass(frozen=True)
class StrongConflictWitness:
    """A K_{4,2} expansion: vertices of the pattern blown up into disjoint
    trees of M, joined by one M-edge per pattern edge.

    ``side_trees`` follow terminal order (v1, v2, w1, w2); ``links`` holds
    the connecting edge ids indexed by (hub 0|1, side 0..3).
    """

    terminals: tuple[int, int, int, int]
    side_trees: tuple[BranchTree, BranchTree, BranchTree, BranchTree]
    hub_trees: tuple[BranchTree, BranchTree]
    links: tuple[tuple[int, int, int], ...]  # (hub index, side index, edge id)

    def edge_ids(self) -> frozenset[int]:
        out = set()
        for t in (*self.side_trees, *self.hub_trees):
            out |= t.edge_ids
        out |= {eid for _, _, eid in self.links}
        return frozenset(out)


@dataclass(frozen=True)
class StrongAnticonflictWitness:
    cycle: Cycle
    path_a: PathInM  # joins f's side-A attachment to f2's
    path_b: PathInM


@dataclass(frozen=True)
class Move:
    kind: str  # "delete" | "contract" | "absorb"
    edge_id: int
    corners: Optional[tuple[Dart, Dart]] = None  # absorb only


@dataclass(frozen=True)
class ImplicitWitness:
    kind: str  # "implicit_conflict" | "implicit_anticonflict"
    vacuous: bool
    placements: tuple[tuple[tuple[int, str], ...], ...]  # each as sorted items
    moves: tuple[Move, ...]
    terminal: Optional[StrongConflictWitness | StrongAnticonflictWitness]


# ---------------------------------------------------------------------------
# Strong conflict
# ---------------------------------------------------------------------------


def _check_path(g: Graph, p: PathInM) -> bool:
    if len(p.vertices) != len(p.edge_ids) + 1:
        return False
    if len(set(p.vertices)) != len(p.vertices):
        return False
    for i, eid in enumerate(p.edge_ids):
        if not g.has_edge_id(eid):
            return False
        if set(g.edge_ends(eid)) != {p.vertices[i], p.vertices[i + 1]}:
            return False
    return True


def _attachments(rs: RotationSystem, f: Fragment, f2: Fragment) -> tuple[int, int, int, int]:
    v1, v2 = f.attachments
    w1, w2 = f2.attachments
    for x in (v1, v2, w1, w2):
        if x not in rs.graph._adj:
            raise GraphError(f"attachment {x} is not a vertex of the embedded graph")
    return v1, v2, w1, w2


def _expansion_separates(
    rs: RotationSystem, edge_ids: Iterable[int], v1: int, v2: int
) -> bool:
    """Face condition on the induced embedding of the expansion subgraph."""
    sub = rs.graph.edge_subgraph(set(edge_ids), keep_vertices=False)
    induced = rs.induced(sub)
    for face in induced.faces:
        vs = face.vertex_set()
        if v1 in vs and v2 in vs:
            return False
    return True


def _spanning_trees(g: Graph, vertices: frozenset[int]) -> list[frozenset[int]]:
    """Edge-id sets of the spanning trees of the induced subgraph."""
    vs = sorted(vertices)
    if len(vs) == 1:
        return [frozenset()]
    inner = [
        (eid, u, v)
        for eid, u, v in g.edges
        if u in vertices and v in vertices
    ]
    need = len(vs) - 1
    out = []
    for combo in itertools.combinations(inner, need):
        # tree test: connected and acyclic follows from |E| = |V| - 1 + connected
        adj: dict[int, list[int]] = {v: [] for v in vs}
        for _, u, v in combo:
            adj[u].append(v)
            adj[v].append(u)
        seen = {vs[0]}
        stack = [vs[0]]
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == len(vs):
            out.append(frozenset(e for e, _, _ in combo))
    return out


def _connected_vertex_sets(
    g: Graph, seed: int, allowed: frozenset[int], max_size: int
) -> Iterable[frozenset[int]]:
    """Connected vertex sets containing ``seed`` inside ``allowed``,
    ascending size."""
    if seed not in allowed or max_size < 1:
        return
    pool = sorted(allowed - {seed})
    for size in range(0, max_size):
        for extra in itertools.combinations(pool, size):
            vs = frozenset((seed, *extra))
            sub = g.induced_subgraph(vs)
            if sub.is_connected():
                yield vs


def strong_conflict(
    rs: RotationSystem, f: Fragment, f2: Fragment
) -> tuple[bool, Optional[StrongConflictWitness]]:
    """Search for a K_{4,2} expansion of M on the four attachments whose
    induced embedding keeps each fragment's attachments off a common face.

    An expansion blows pattern vertices up into vertex-disjoint trees: two
    hub trees and four side trees (each containing its attachment vertex),
    joined by one M-edge per pattern edge.  Plain subdivisions are the
    special case of singleton hubs.  Pairs sharing an attachment vertex
    never strongly conflict (the four side roots must be distinct).
    """
    if f.edge_id == f2.edge_id:
        raise GraphError("a fragment does not conflict with itself")
    v1, v2, w1, w2 = _attachments(rs, f, f2)
    terminals = (v1, v2, w1, w2)
    if len(set(terminals)) < 4:
        return False, None

    g = rs.graph
    n = g.vertex_count
    tset = frozenset(terminals)
    non_terminal = frozenset(g.vertices) - tset

    def edges_between(a: frozenset[int], b: frozenset[int]) -> list[int]:
        return [
            eid
            for eid, u, v in g.edges
            if (u in a and v in b) or (u in b and v in a)
        ]

    if len(non_terminal) < 2:
        return False, None

    # hub trees first (they carry the degree); sides grown afterwards.
    # Sets are enumerated once each by their minimum vertex, and the
    # unordered hub pair is normalized by min(bx) < min(by).
    hub_max = n - 5  # leave room for the other hub and four side roots
    if hub_max < 1:
        return False, None

    all_v = frozenset(g.vertices)
    for sx in sorted(non_terminal):
        pool_x = frozenset(v for v in non_terminal if v >= sx)
        for bx in _connected_vertex_sets(g, sx, pool_x, hub_max):
            if len(edges_between(bx, all_v - bx)) < 4:
                continue
            rest_for_y = non_terminal - bx
            for sy in sorted(v for v in rest_for_y if v > sx):
                pool_y = frozenset(v for v in rest_for_y if v >= sy)
                for by in _connected_vertex_sets(g, sy, pool_y, hub_max):
                    if len(edges_between(by, all_v - bx - by)) < 4:
                        continue
                    wit = _grow_sides(rs, g, terminals, bx, by, edges_between)
                    if wit is not None:
                        return True, wit
    return False, None


def _grow_sides(
    rs: RotationSystem,
    g: Graph,
    terminals: tuple[int, int, int, int],
    bx: frozenset[int],
    by: frozenset[int],
    edges_between,
) -> Optional[StrongConflictWitness]:
    v1, v2 = terminals[0], terminals[1]
    hubs = bx | by
    free0 = frozenset(g.vertices) - hubs
    sides: list[frozenset[int]] = []

    def assemble() -> Optional[StrongConflictWitness]:
        link_choices: list[list[tuple[int, int, int]]] = []
        for i, b in enumerate(sides):
            ex = edges_between(b, bx)
            ey = edges_between(b, by)
            if not ex or not ey:
                return None
            link_choices.append([(0, i, e) for e in ex])
            link_choices.append([(1, i, e) for e in ey])
        tree_choices = [_spanning_trees(g, b) for b in (*sides, bx, by)]
        if any(not t for t in tree_choices):
            return None
        for links in itertools.product(*link_choices):
            for trees in itertools.product(*tree_choices):
                eids = set()
                for t in trees:
                    eids |= t
                eids |= {e for _, _, e in links}
                if _expansion_separates(rs, eids, v1, v2):
                    side_trees = tuple(
                        BranchTree(sides[i], trees[i]) for i in range(4)
                    )
                    hub_trees = (BranchTree(bx, trees[4]), BranchTree(by, trees[5]))
                    return StrongConflictWitness(terminals, side_trees, hub_trees, links)
        return None

    def place(i: int, free: frozenset[int]) -> Optional[StrongConflictWitness]:
        if i == 4:
            return assemble()
        t = terminals[i]
        remaining_roots = len(terminals) - i - 1
        max_size = len(free) - remaining_roots
        for b in _connected_vertex_sets(g, t, free - frozenset(terminals[i + 1 :]) | {t}, max_size):
            if not edges_between(b, bx) or not edges_between(b, by):
                continue
            sides.append(b)
            got = place(i + 1, free - b)
            sides.pop()
            if got is not None:
                return got
        return None

    return place(0, free0)


def verify_strong_conflict_witness(
    rs: RotationSystem, f: Fragment, f2: Fragment, wit: StrongConflictWitness
) -> bool:
    """Replay a strong-conflict witness against the embedding."""
    g = rs.graph
    v1, v2, w1, w2 = _attachments(rs, f, f2)
    if wit.terminals != (v1, v2, w1, w2):
        return False
    trees = [*wit.side_trees, *wit.hub_trees]
    for i, t in enumerate(wit.side_trees):
        if wit.terminals[i] not in t.vertices:
            return False
    for a, b in itertools.combinations(trees, 2):
        if a.vertices & b.vertices:
            return False
    for t in trees:
        if t.edge_ids and len(t.edge_ids) != len(t.vertices) - 1:
            return False
        sub = g.edge_subgraph(t.edge_ids, keep_vertices=False) if t.edge_ids else None
        if sub is not None:
            if set(sub.vertices) != set(t.vertices) or not sub.is_connected():
                return False
        elif len(t.vertices) != 1:
            return False
    seen_links = set()
    for hub_i, side_i, eid in wit.links:
        seen_links.add((hub_i, side_i))
        u, v = g.edge_ends(eid)
        hub = wit.hub_trees[hub_i].vertices
        side = wit.side_trees[side_i].vertices
        if not (
            (u in hub and v in side) or (v in hub and u in side)
        ):
            return False
    if seen_links != {(h, s) for h in range(2) for s in range(4)}:
        return False
    return _expansion_separates(rs, wit.edge_ids(), v1, v2)


# ---------------------------------------------------------------------------
# Strong anti-conflict
# ---------------------------------------------------------------------------


def strong_anticonflict(
    rs: RotationSystem, f: Fragment, f2: Fragment
) -> tuple[bool, Optional[StrongAnticonflictWitness]]:
    """Search for a cycle of M separating each fragment's attachments, with
    off-cycle paths joining the same-side attachment pairs.

    The connecting paths may be trivial, so fragments sharing an
    attachment vertex can anti-conflict (the shared vertex pairs with
    itself).
    """
    if f.edge_id == f2.edge_id:
        raise GraphError("a fragment does not anti-conflict with itself")
    v1, v2, w1, w2 = _attachments(rs, f, f2)

    g = rs.graph
    for c in enumerate_cycles(g):
        on_c = c.vertex_set()
        if {v1, v2, w1, w2} & on_c:
            continue
        sides = sides_of_cycle(rs, c)
        sv = sides.vertex_side
        if sv[v1] == sv[v2] or sv[w1] == sv[w2]:
            continue
        a1, a2 = (w1, w2) if sv[w1] == sv[v1] else (w2, w1)
        p1 = _path_avoiding(g, v1, a1, on_c)
        if p1 is None:
            continue
        p2 = _path_avoiding(g, v2, a2, on_c)
        if p2 is None:
            continue
        return True, StrongAnticonflictWitness(c, p1, p2)
    return False, None


def _path_avoiding(g: Graph, a: int, b: int, banned: frozenset[int]) -> Optional[PathInM]:
    """Shortest a..b path whose vertices all avoid ``banned``."""
    if a in banned or b in banned:
        return None
    prev: dict[int, tuple[int, int]] = {}
    seen = {a}
    queue = [a]
    while queue:
        x = queue.pop(0)
        if x == b:
            break
        for eid, w in g.incident(x):
            if w in banned or w in seen:
                continue
            seen.add(w)
            prev[w] = (x, eid)
            queue.append(w)
    if b not in seen:
        return None
    vs, es = [b], []
    while vs[-1] != a:
        x, eid = prev[vs[-1]]
        es.append(eid)
        vs.append(x)
    return PathInM(tuple(reversed(vs)), tuple(reversed(es)))


def verify_strong_anticonflict_witness(
    rs: RotationSystem, f: Fragment, f2: Fragment, wit: StrongAnticonflictWitness
) -> bool:
    v1, v2, w1, w2 = _attachments(rs, f, f2)
    try:
        wit.cycle.validate(rs.graph)
    except GraphError:
        return False
    on_c = wit.cycle.vertex_set()
    if {v1, v2, w1, w2} & on_c:
        return False
    sides = sides_of_cycle(rs, wit.cycle)
    sv = sides.vertex_side
    if sv[v1] == sv[v2] or sv[w1] == sv[w2]:
        return False
    for p in (wit.path_a, wit.path_b):
        if not _check_path(rs.graph, p):
            return False
        if set(p.vertices) & on_c:
            return False
    ends_a = frozenset({wit.path_a.vertices[0], wit.path_a.vertices[-1]})
    ends_b = frozenset({wit.path_b.vertices[0], wit.path_b.vertices[-1]})
    if sv[w1] == sv[v1]:
        want = {frozenset({v1, w1}), frozenset({v2, w2})}
    else:
        want = {frozenset({v1, w2}), frozenset({v2, w1})}
    return {ends_a, ends_b} == want


# ---------------------------------------------------------------------------
# Potentially flat placements
# ---------------------------------------------------------------------------


def potentially_flat_placements(scg: "SignedConflictGraph") -> list[dict[int, str]]:
    """Side assignments satisfying every strong constraint.

    Strong conflicts force opposite sides, strong anti-conflicts the same
    side.  Per connected component of the constraint graph one free global
    flip remains; the component holding the smallest fragment id is pinned
    to 'inside', the rest enumerate both choices.  Unbalanced constraints
    (including digon pairs) give the empty list.
    """
    frags = list(scg.fragment_ids)
    cons: dict[int, list[tuple[int, int]]] = {f: [] for f in frags}  # (other, parity)
    for e in scg.edges:
        if e.provenance != "strong":
            continue
        a, b = sorted(e.pair)
        parity = 1 if e.sign == NEGATIVE else 0
        cons[a].append((b, parity))
        cons[b].append((a, parity))

    comp_of: dict[int, int] = {}
    parity_of: dict[int, int] = {}
    comps: list[list[int]] = []
    for root in frags:
        if root in comp_of:
            continue
        ci = len(comps)
        comps.append([])
        comp_of[root] = ci
        parity_of[root] = 0
        queue = [root]
        comps[ci].append(root)
        while queue:
            x = queue.pop(0)
            for other, parity in cons[x]:
                want = parity_of[x] ^ parity
                if other not in parity_of:
                    parity_of[other] = want
                    comp_of[other] = ci
                    comps[ci].append(other)
                    queue.append(other)
                elif parity_of[other] != want:
                    return []

    out: list[dict[int, str]] = []
    free = len(comps) - 1
    for bits in range(1 << max(free, 0)):
        assign: dict[int, str] = {}
        for ci, members in enumerate(comps):
            flip = 0 if ci == 0 else (bits >> (ci - 1)) & 1
            for fr in members:
                side = parity_of[fr] ^ flip
                assign[fr] = INSIDE if side == 0 else OUTSIDE
        out.append(assign)
    return out


# ---------------------------------------------------------------------------
# Embedded minor search for implicit relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddedMinorState:
    """One node of the embedding-preserving minor search."""

    rs: RotationSystem
    vmap: VertexMap
    absorbed: frozenset[int]
    moves: tuple[Move, ...]

    def key(self, tracked: tuple[int, ...]) -> tuple:
        imgs = tuple(self.vmap[t] for t in tracked)
        return (self.absorbed, self.rs.rotations, imgs)


def _legal_moves(
    state: EmbeddedMinorState,
    pair: tuple[Fragment, Fragment],
    others: Sequence[Fragment],
) -> list[tuple[Move, EmbeddedMinorState]]:
    rs = state.rs
    g = rs.graph
    out: list[tuple[Move, EmbeddedMinorState]] = []
    f, f2 = pair
    vm = state.vmap
    track = [vm[x] for x in (*f.attachments, *f2.attachments)]

    # absorb another fragment across a face it can reach
    for h in others:
        if h.edge_id in state.absorbed:
            continue
        a, b = vm[h.attachments[0]], vm[h.attachments[1]]
        if a == b:
            continue
        for fi, face in enumerate(rs.faces):
            corners_a = [d for d in face.darts if d[1] == a]
            corners_b = [d for d in face.darts if d[1] == b]
            for ca in corners_a:
                for cb in corners_b:
                    child = EmbeddedMinorState(
                        rs.insert_edge_in_face(h.edge_id, ca, cb),
                        vm,
                        state.absorbed | {h.edge_id},
                        state.moves + (Move("absorb", h.edge_id, (ca, cb)),),
                    )
                    out.append((Move("absorb", h.edge_id, (ca, cb)), child))

    # contract any edge, unless it merges tracked attachments illegally
    for eid, u, v in g.edges:
        nrs, step = rs.contract_edge_embedded(eid)
        nvm = vm.then(step.nonidentity())
        t = [nvm[x] for x in (*f.attachments, *f2.attachments)]
        if len(set(t)) < 4:
            continue  # merged attachments can never come apart again
        out.append(
            (
                Move("contract", eid),
                EmbeddedMinorState(nrs, nvm, state.absorbed, state.moves + (Move("contract", eid),)),
            )
        )

    # delete any non-bridge edge (bridge deletion never merges faces, so it
    # cannot enable an absorption, and removing edges never helps the
    # terminal tests; it would only disconnect the state)
    bridges = g.bridges()
    for eid, _, _ in g.edges:
        if eid in bridges:
            continue
        out.append(
            (
                Move("delete", eid),
                EmbeddedMinorState(
                    rs.delete_edge_embedded(eid),
                    vm,
                    state.absorbed,
                    state.moves + (Move("delete", eid),),
                ),
            )
        )
    return out


def _mapped_fragment(f: Fragment, vm: VertexMap) -> Fragment:
    return Fragment(f.edge_id, (vm[f.attachments[0]], vm[f.attachments[1]]))


class _SearchCutoff(Exception):
    pass


def _search_for_strong_target(
    rs: RotationSystem,
    f: Fragment,
    f2: Fragment,
    others: Sequence[Fragment],
    budget: int,
    target: str,
    node_cap: int,
) -> tuple[str, Optional[EmbeddedMinorState], Optional[object]]:
    """Iterative-deepening search for a move sequence after which the pair
    meets ``target`` ('conflict' or 'anticonflict').

    Returns (YES, final state, terminal witness), (NO, None, None) when the
    reachable space closed within the budget with no success, otherwise
    (BUDGET_EXCEEDED, None, None).
    """
    test = strong_conflict if target == "conflict" else strong_anticonflict
    tracked = (*f.attachments, *f2.attachments)
    root = EmbeddedMinorState(rs, VertexMap.identity(rs.graph.vertices), frozenset(), ())

    terminal_cache: dict[tuple, tuple[bool, Optional[object]]] = {}

    def terminal(state: EmbeddedMinorState) -> tuple[bool, Optional[object]]:
        key = state.key(tracked)
        if key not in terminal_cache:
            mf = _mapped_fragment(f, state.vmap)
            mf2 = _mapped_fragment(f2, state.vmap)
            terminal_cache[key] = test(state.rs, mf, mf2)
        return terminal_cache[key]

    nodes = 0
    frontier_open = False

    for depth in range(budget + 1):
        frontier_open = False
        visited: dict[tuple, int] = {}

        def dfs(state: EmbeddedMinorState, depth_left: int) -> Optional[EmbeddedMinorState]:
            nonlocal nodes, frontier_open
            nodes += 1
            if nodes > node_cap:
                raise _SearchCutoff
            ok, _ = terminal(state)
            if ok:
                return state
            if depth_left == 0:
                if _legal_moves(state, (f, f2), others):
                    frontier_open = True
                return None
            key = state.key(tracked)
            prev = visited.get(key)
            if prev is not None and prev >= depth_left:
                return None
            visited[key] = depth_left
            for _, child in _legal_moves(state, (f, f2), others):
                got = dfs(child, depth_left - 1)
                if got is not None:
                    return got
            return None

        try:
            hit = dfs(root, depth)
        except _SearchCutoff:
            return BUDGET_EXCEEDED, None, None
        if hit is not None:
            return YES, hit, terminal(hit)[1]
        if not frontier_open:
            return NO, None, None
    return BUDGET_EXCEEDED, None, None


def _implicit(
    rs: RotationSystem,
    f: Fragment,
    f2: Fragment,
    others: Sequence[Fragment],
    budget: Optional[int],
    node_cap: int,
    strong_graph: Optional["SignedConflictGraph"],
    kind: str,
) -> tuple[str, Optional[ImplicitWitness]]:
    same_side_wanted = kind == "implicit_conflict"
    target = "conflict" if same_side_wanted else "anticonflict"

    v1, v2, w1, w2 = _attachments(rs, f, f2)
    if same_side_wanted and len({v1, v2, w1, w2}) < 4:
        # a strong conflict needs four distinct side roots; contraction
        # only merges vertices further, so no sequence can succeed
        return NO, None

    if strong_graph is None:
        from_fragments = [f, f2, *others]
        strong_graph = build_strong_conflict_graph_from_fragments(rs, from_fragments)
    placements = potentially_flat_placements(strong_graph)
    if same_side_wanted:
        relevant = [p for p in placements if p[f.edge_id] == p[f2.edge_id]]
    else:
        relevant = [p for p in placements if p[f.edge_id] != p[f2.edge_id]]
    placement_items = tuple(tuple(sorted(p.items())) for p in relevant)
    if not relevant:
        return YES, ImplicitWitness(kind, True, (), (), None)

    if budget is None:
        budget = 2 * rs.graph.edge_count
    # the per-placement searches coincide: moves and terminal tests do not
    # depend on the side assignment, so one search answers all placements
    verdict, final, term_wit = _search_for_strong_target(
        rs, f, f2, others, budget, target, node_cap
    )
    if verdict == YES:
        assert final is not None
        return YES, ImplicitWitness(kind, False, placement_items, final.moves, term_wit)
    return verdict, None


def implicit_conflict(
    rs: RotationSystem,
    f: Fragment,
    f2: Fragment,
    others: Sequence[Fragment],
    budget: Optional[int] = None,
    node_cap: int = DEFAULT_NODE_CAP,
    strong_graph: Optional["SignedConflictGraph"] = None,
) -> tuple[str, Optional[ImplicitWitness]]:
    """Tri-state implicit conflict (see module docstring)."""
    ok, _ = strong_conflict(rs, f, f2)
    if ok:
        raise GraphError("pair already strongly conflicts; implicit test not applicable")
    return _implicit(rs, f, f2, others, budget, node_cap, strong_graph, "implicit_conflict")


def implicit_anticonflict(
    rs: RotationSystem,
    f: Fragment,
    f2: Fragment,
    others: Sequence[Fragment],
    budget: Optional[int] = None,
    node_cap: int = DEFAULT_NODE_CAP,
    strong_graph: Optional["SignedConflictGraph"] = None,
) -> tuple[str, Optional[ImplicitWitness]]:
    ok, _ = strong_anticonflict(rs, f, f2)
    if ok:
        raise GraphError("pair already strongly anti-conflicts; implicit test not applicable")
    return _implicit(rs, f, f2, others, budget, node_cap, strong_graph, "implicit_anticonflict")


def replay_implicit_witness(
    rs: RotationSystem, f: Fragment, f2: Fragment, wit: ImplicitWitness
) -> bool:
    """Re-execute an implicit witness: apply its moves and re-derive the
    terminal strong verdict."""
    if wit.vacuous:
        return True
    state = EmbeddedMinorState(rs, VertexMap.identity(rs.graph.vertices), frozenset(), ())
    for mv in wit.moves:
        if mv.kind == "delete":
            state = EmbeddedMinorState(
                state.rs.delete_edge_embedded(mv.edge_id), state.vmap, state.absorbed, ()
            )
        elif mv.kind == "contract":
            nrs, step = state.rs.contract_edge_embedded(mv.edge_id)
            state = EmbeddedMinorState(nrs, state.vmap.then(step.nonidentity()), state.absorbed, ())
        elif mv.kind == "absorb":
            assert mv.corners is not None
            state = EmbeddedMinorState(
                state.rs.insert_edge_in_face(mv.edge_id, *mv.corners),
                state.vmap,
                state.absorbed | {mv.edge_id},
                (),
            )
        else:
            return False
    mf = _mapped_fragment(f, state.vmap)
    mf2 = _mapped_fragment(f2, state.vmap)
    test = strong_conflict if wit.kind == "implicit_conflict" else strong_anticonflict
    ok, _ = test(state.rs, mf, mf2)
    return ok


# ---------------------------------------------------------------------------
# Signed conflict graph assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConflictEdge:
    pair: tuple[int, int]  # fragment edge ids, sorted
    sign: str
    provenance: str  # "strong" | "implicit"
    witness: object = field(compare=False, repr=False, default=None)


@dataclass(frozen=True)
class SignedConflictGraph:
    """Fragments as vertices; signed edges with provenance.

    A pair may carry one negative and one positive edge simultaneously
    (both relations hold); such digons have negative sign product and make
    the graph unbalanced.  ``incomplete_pairs`` records pair/kind searches
    that hit their budget.
    """

    fragment_ids: tuple[int, ...]
    edges: tuple[ConflictEdge, ...]
    incomplete_pairs: tuple[tuple[tuple[int, int], str], ...] = ()

    def __post_init__(self) -> None:
        seen: set[tuple[tuple[int, int], str]] = set()
        for e in self.edges:
            key = (e.pair, e.sign)
            if key in seen:
                raise GraphError(f"duplicate conflict edge {key}")
            seen.add(key)

    @cached_property
    def digon_pairs(self) -> tuple[tuple[int, int], ...]:
        signs: dict[tuple[int, int], set[str]] = {}
        for e in self.edges:
            signs.setdefault(e.pair, set()).add(e.sign)
        return tuple(sorted(p for p, s in signs.items() if len(s) == 2))

    def restricted_to_strong(self) -> "SignedConflictGraph":
        return SignedConflictGraph(
            self.fragment_ids,
            tuple(e for e in self.edges if e.provenance == "strong"),
        )

    def sign_graph(self) -> SignedGraph:
        """Simple signed graph over the non-digon pairs."""
        digons = set(self.digon_pairs)
        return SignedGraph.build(
            self.fragment_ids,
            [(*e.pair, e.sign) for e in self.edges if e.pair not in digons],
        )

    def balance(self):
        """Harary balance, counting opposite-sign digons as negative 2-cycles."""
        from .signed import BalanceResult

        if self.digon_pairs:
            a, b = self.digon_pairs[0]
            neg = Cycle((a, b), (0, 1))  # formal digon certificate
            return BalanceResult(False, None, neg)
        return is_balanced(self.sign_graph())

    def is_balanced(self) -> bool:
        return self.balance().balanced


def _strong_edges(
    rs: RotationSystem, fragments: Sequence[Fragment]
) -> list[ConflictEdge]:
    out: list[ConflictEdge] = []
    for fa, fb in itertools.combinations(sorted(fragments, key=lambda fr: fr.edge_id), 2):
        pair = (fa.edge_id, fb.edge_id)
        c_ok, c_wit = strong_conflict(rs, fa, fb)
        a_ok, a_wit = strong_anticonflict(rs, fa, fb)
        if c_ok and a_ok:
            logger.warning(
                "fragments %s strongly conflict AND strongly anti-conflict", pair
            )
        if c_ok:
            out.append(ConflictEdge(pair, NEGATIVE, "strong", c_wit))
        if a_ok:
            out.append(ConflictEdge(pair, POSITIVE, "strong", a_wit))
    return out


def build_strong_conflict_graph_from_fragments(
    rs: RotationSystem, fragments: Sequence[Fragment]
) -> SignedConflictGraph:
    ids = tuple(sorted(fr.edge_id for fr in fragments))
    return SignedConflictGraph(ids, tuple(_strong_edges(rs, fragments)))


def build_strong_conflict_graph(
    g: Graph, m: MaximalPlanarSubgraph, rs: RotationSystem
) -> SignedConflictGraph:
    """Strong relations only; no search budget involved."""
    _check_mps_embedding(m, rs)
    return build_strong_conflict_graph_from_fragments(rs, m.fragments)


def _check_mps_embedding(m: MaximalPlanarSubgraph, rs: RotationSystem) -> None:
    if set(rs.graph.edges) != set(m.m.edges) or set(rs.graph.vertices) != set(m.m.vertices):
        raise GraphError("rotation system does not embed the maximal planar subgraph")


def build_conflict_graph(
    g: Graph,
    m: MaximalPlanarSubgraph,
    rs: RotationSystem,
    budget: Optional[int] = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> SignedConflictGraph:
    """Full signed conflict graph of one sphere embedding of M.

    Per unordered pair: a negative edge for a strong conflict, else for a
    found implicit conflict; a positive edge for a strong anti-conflict,
    else for a found implicit anti-conflict.  Both can apply.  Budget hits
    are recorded as incomplete pairs instead of edges.
    """
    _check_mps_embedding(m, rs)
    fragments = sorted(m.fragments, key=lambda fr: fr.edge_id)
    strong = build_strong_conflict_graph_from_fragments(rs, fragments)
    strong_lookup = {(e.pair, e.sign) for e in strong.edges}

    edges: list[ConflictEdge] = list(strong.edges)
    incomplete: list[tuple[tuple[int, int], str]] = []

    for fa, fb in itertools.combinations(fragments, 2):
        pair = (fa.edge_id, fb.edge_id)
        others = [fr for fr in fragments if fr.edge_id not in pair]
        if (pair, NEGATIVE) not in strong_lookup:
            verdict, wit = _implicit(
                rs, fa, fb, others, budget, node_cap, strong, "implicit_conflict"
            )
            if verdict == YES:
                edges.append(ConflictEdge(pair, NEGATIVE, "implicit", wit))
            elif verdict == BUDGET_EXCEEDED:
                incomplete.append((pair, "implicit_conflict"))
        if (pair, POSITIVE) not in strong_lookup:
            verdict, wit = _implicit(
                rs, fa, fb, others, budget, node_cap, strong, "implicit_anticonflict"
            )
            if verdict == YES:
                edges.append(ConflictEdge(pair, POSITIVE, "implicit", wit))
            elif verdict == BUDGET_EXCEEDED:
                incomplete.append((pair, "implicit_anticonflict"))

    scg = SignedConflictGraph(
        tuple(fr.edge_id for fr in fragments),
        tuple(edges),
        tuple(incomplete),
    )
    for pair in scg.digon_pairs:
        logger.warning("fragment pair %s carries both signs (digon)", pair)
    return scg
