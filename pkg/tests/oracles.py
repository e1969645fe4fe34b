"""Independent oracles for the test suite.

These deliberately avoid the code paths they check: planarity via the
forbidden-minor characterization, isomorphism by permutation backtracking,
faces by the twin-after-next trace (the mirror of the library's
convention), strong conflicts by exhaustive model enumeration over raw
vertex assignments, and maximal planar subgraphs by deletion-set sweep.
"""

from __future__ import annotations

import itertools

from conflictgraph.graphs import Graph
from conflictgraph.planarity import reference_planarity


def wagner_planar(g: Graph) -> bool:
    """Planarity via forbidden minors (independent of both library routes)."""
    from conflictgraph.graphs import is_minor

    k5 = Graph.complete(5)
    k33 = Graph.complete_bipartite(3, 3)
    return not is_minor(g, k5) and not is_minor(g, k33)


def isomorphic_backtrack(g: Graph, h: Graph) -> bool:
    """First-match isomorphism search with degree pruning."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    gv = list(g.vertices)
    hv = list(h.vertices)
    gn = {v: set(g.neighbors(v)) for v in gv}
    hn = {v: set(h.neighbors(v)) for v in hv}

    def extend(i: int, assign: dict[int, int], used: set[int]) -> bool:
        if i == len(gv):
            return True
        v = gv[i]
        for w in hv:
            if w in used or g.degree(v) != h.degree(w):
                continue
            ok = True
            for u in gn[v]:
                if u in assign and assign[u] not in hn[w]:
                    ok = False
                    break
            for u in set(assign) - gn[v]:
                if assign[u] in hn[w]:
                    ok = False
                    break
            if ok:
                assign[v] = w
                used.add(w)
                if extend(i + 1, assign, used):
                    return True
                del assign[v]
                used.discard(w)
        return False

    return extend(0, {}, set())


def mirror_faces(rs) -> int:
    """Face count via the mirrored trace convention."""
    succ = {}
    for _, darts in rs.rotations:
        k = len(darts)
        for i, d in enumerate(darts):
            succ[d] = darts[(i - 1) % k]
    remaining = set(succ)
    count = 0
    while remaining:
        start = min(remaining)
        d = start
        while True:
            remaining.discard(d)
            d = succ[rs.twin(d)]
            if d == start:
                break
        count += 1
    return count


def naive_mps_deletion_sets(g: Graph, max_k: int = 7) -> set[frozenset[int]]:
    """All maximal planar subgraph complements by plain subset sweep."""
    eids = [e for e, _, _ in g.edges]
    sols: set[frozenset[int]] = set()
    for k in range(1, max_k + 1):
        for combo in itertools.combinations(eids, k):
            drop = frozenset(combo)
            if any(s <= drop for s in sols):
                continue
            m = g.delete_edges(drop)
            if not reference_planarity(m):
                continue
            ok = True
            for e in drop:
                u, v = g.edge_ends(e)
                if reference_planarity(m.add_edge(u, v, e)):
                    ok = False
                    break
            if ok:
                sols.add(drop)
    return sols


def naive_strong_conflict(rs, f, f2) -> bool:
    """Exhaustive rooted expansion-model search over raw assignments.

    Every map of vertices to {side trees 0..3, hub 4, hub 5, unused} is
    tried; branch sets must induce connected subgraphs, every pattern edge
    must be realized, and some spanning-tree/link choice must separate the
    first fragment's attachments in the induced embedding.
    """
    g = rs.graph
    v1, v2 = f.attachments
    w1, w2 = f2.attachments
    roots = (v1, v2, w1, w2)
    if len(set(roots)) < 4:
        return False
    others = [v for v in g.vertices if v not in roots]

    def edges_between(a, b):
        return [
            eid
            for eid, x, y in g.edges
            if (x in a and y in b) or (x in b and y in a)
        ]

    def spanning_trees(vertices):
        vs = sorted(vertices)
        if len(vs) == 1:
            return [frozenset()]
        inner = [(e, x, y) for e, x, y in g.edges if x in vertices and y in vertices]
        out = []
        for combo in itertools.combinations(inner, len(vs) - 1):
            adj = {v: [] for v in vs}
            for _, x, y in combo:
                adj[x].append(y)
                adj[y].append(x)
            seen = {vs[0]}
            stack = [vs[0]]
            while stack:
                a = stack.pop()
                for b in adj[a]:
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
            if len(seen) == len(vs):
                out.append(frozenset(e for e, _, _ in combo))
        return out

    for assign in itertools.product(range(7), repeat=len(others)):
        sets = {i: {roots[i]} for i in range(4)}
        sets[4] = set()
        sets[5] = set()
        for v, a in zip(others, assign):
            if a < 6:
                sets[a].add(v)
        if not sets[4] or not sets[5]:
            continue
        if any(not g.induced_subgraph(s).is_connected() for s in sets.values()):
            continue
        links = []
        feasible = True
        for i in range(4):
            ex = edges_between(sets[i], sets[4])
            ey = edges_between(sets[i], sets[5])
            if not ex or not ey:
                feasible = False
                break
            links.append((ex, ey))
        if not feasible:
            continue
        tree_lists = [spanning_trees(sets[i]) for i in range(6)]
        if any(not t for t in tree_lists):
            continue
        link_products = itertools.product(
            *[lst for ex, ey in links for lst in (ex, ey)]
        )
        for chosen_links in link_products:
            for trees in itertools.product(*tree_lists):
                eids = set(chosen_links)
                for t in trees:
                    eids |= t
                sub = g.edge_subgraph(eids, keep_vertices=False)
                ind = rs.induced(sub)
                if not any(
                    v1 in face.vertex_set() and v2 in face.vertex_set()
                    for face in ind.faces
                ):
                    return True
    return False
