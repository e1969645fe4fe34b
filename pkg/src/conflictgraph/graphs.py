"""Labeled undirected multigraphs with minor operations and canonical forms.

Graphs are immutable values: vertices are integer ids, edges carry stable
integer ids that survive deletions (an id is never reused within one
derivation history).  Parallel edges are allowed and distinguished by edge
id; loops are rejected at rest and only appear transiently inside
``contract_edge``, which removes them before returning.

Everything here is deterministic: vertex and edge iteration follow sorted
ids, and the cycle enumerator and canonical-form labeler produce stable
output for equal inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(Exception):
    """Misuse of a graph operation (caller bug, not bad data)."""


class UnknownEdgeError(GraphError):
    """Edge id not present in the graph."""


class NotACycleError(GraphError):
    """A vertex/edge sequence that does not describe a cycle of the graph."""


# ---------------------------------------------------------------------------
# Core value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on integer vertex ids.

    ``edges`` holds ``(edge_id, u, v)`` triples with ``u < v``.  Use
    :meth:`build` or :meth:`make` instead of the raw constructor so the
    normal form (sorted, validated) is guaranteed.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    # -- construction -------------------------------------------------

    @classmethod
    def build(cls, vertices: Iterable[int], pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from vertex ids and endpoint pairs; edge ids are 0..m-1."""
        return cls.make(vertices, ((i, u, v) for i, (u, v) in enumerate(pairs)))

    @classmethod
    def make(cls, vertices: Iterable[int], triples: Iterable[tuple[int, int, int]]) -> "Graph":
        vs = tuple(sorted(set(vertices)))
        es = tuple(sorted((eid, min(u, v), max(u, v)) for eid, u, v in triples))
        g = cls(vs, es)
        g._validate()
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.build(range(n), itertools.combinations(range(n), 2))

    @classmethod
    def complete_multipartite(cls, *part_sizes: int) -> "Graph":
        parts: list[list[int]] = []
        nxt = 0
        for size in part_sizes:
            parts.append(list(range(nxt, nxt + size)))
            nxt += size
        pairs = [
            (u, v)
            for a, b in itertools.combinations(range(len(parts)), 2)
            for u in parts[a]
            for v in parts[b]
        ]
        return cls.build(range(nxt), pairs)

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.complete_multipartite(a, b)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.build(range(n), [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.build(range(n), [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.build(range(10), outer + spokes + inner)

    @classmethod
    def octahedron(cls) -> "Graph":
        """K_{2,2,2} labeled so that the antipodal pairs are {0,3}, {1,4}, {2,5}."""
        pairs = [
            (u, v)
            for u, v in itertools.combinations(range(6), 2)
            if (v - u) != 3
        ]
        return cls.build(range(6), pairs)

    def _validate(self) -> None:
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        seen: set[int] = set()
        for eid, u, v in self.edges:
            if eid in seen:
                raise GraphError(f"duplicate edge id {eid}")
            seen.add(eid)
            if u == v:
                raise GraphError(f"loop at vertex {u} (edge {eid}) not allowed")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {eid} endpoint missing from vertex set")

    # -- cached views --------------------------------------------------

    @cached_property
    def _edge_by_id(self) -> dict[int, tuple[int, int]]:
        return {eid: (u, v) for eid, u, v in self.edges}

    @cached_property
    def _adj(self) -> dict[int, tuple[tuple[int, int], ...]]:
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in self.vertices}
        for eid, u, v in self.edges:
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        return {v: tuple(sorted(lst)) for v, lst in adj.items()}

    # -- queries -------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_ends(self, eid: int) -> tuple[int, int]:
        try:
            return self._edge_by_id[eid]
        except KeyError:
            raise UnknownEdgeError(f"no edge with id {eid}") from None

    def has_edge_id(self, eid: int) -> bool:
        return eid in self._edge_by_id

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(edge id, other endpoint) pairs at ``v``, sorted by edge id."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted({w for _, w in self._adj[v]}))

    def edge_ids_between(self, u: int, v: int) -> tuple[int, ...]:
        return tuple(eid for eid, w in self._adj.get(u, ()) if w == v)

    def has_edge_between(self, u: int, v: int) -> bool:
        return bool(self.edge_ids_between(u, v))

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in self.vertices))

    def is_simple(self) -> bool:
        return len({(u, v) for _, u, v in self.edges}) == self.edge_count

    def max_edge_id(self) -> int:
        return max((eid for eid, _, _ in self.edges), default=-1)

    # -- connectivity ---------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps: list[frozenset[int]] = []
        for start in self.vertices:
            if start in seen:
                continue
            stack, comp = [start], {start}
            while stack:
                x = stack.pop()
                for _, w in self._adj[x]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bridges(self) -> frozenset[int]:
        """Edge ids whose deletion disconnects their component.

        A parallel class of size >= 2 never contains a bridge.
        """
        index: dict[int, int] = {}
        low: dict[int, int] = {}
        out: set[int] = set()
        counter = itertools.count()

        for root in self.vertices:
            if root in index:
                continue
            # iterative DFS; entry edge id tracked to skip the tree edge back
            stack: list[tuple[int, Optional[int], Iterator[tuple[int, int]]]] = [
                (root, None, iter(self._adj[root]))
            ]
            index[root] = low[root] = next(counter)
            while stack:
                v, in_eid, it = stack[-1]
                advanced = False
                for eid, w in it:
                    if eid == in_eid:
                        continue
                    if w not in index:
                        index[w] = low[w] = next(counter)
                        stack.append((w, eid, iter(self._adj[w])))
                        advanced = True
                        break
                    low[v] = min(low[v], index[w])
                if not advanced:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        low[parent] = min(low[parent], low[v])
                        if low[v] > index[parent]:
                            out.add(in_eid)  # type: ignore[arg-type]
        return frozenset(out)

    # -- pure modifications ---------------------------------------------

    def delete_edge(self, eid: int) -> "Graph":
        self.edge_ends(eid)
        return Graph(self.vertices, tuple(e for e in self.edges if e[0] != eid))

    def delete_edges(self, eids: Iterable[int]) -> "Graph":
        drop = set(eids)
        for eid in drop:
            self.edge_ends(eid)
        return Graph(self.vertices, tuple(e for e in self.edges if e[0] not in drop))

    def delete_vertex(self, v: int) -> "Graph":
        if v not in self._adj:
            raise GraphError(f"no vertex {v}")
        return Graph(
            tuple(x for x in self.vertices if x != v),
            tuple(e for e in self.edges if v not in (e[1], e[2])),
        )

    def add_edge(self, u: int, v: int, eid: Optional[int] = None) -> "Graph":
        if u not in self._adj or v not in self._adj:
            raise GraphError("endpoint missing from vertex set")
        if u == v:
            raise GraphError("loops not allowed")
        if eid is None:
            eid = self.max_edge_id() + 1
        elif eid in self._edge_by_id:
            raise GraphError(f"edge id {eid} already in use")
        return Graph(
            self.vertices,
            tuple(sorted(self.edges + ((eid, min(u, v), max(u, v)),))),
        )

    def contract_edge(self, eid: int) -> tuple["Graph", "VertexMap"]:
        """Contract ``eid``, keeping the lower endpoint id.

        Loops produced by the merge are deleted; parallel edges are kept.
        """
        u, v = self.edge_ends(eid)
        keep, gone = min(u, v), max(u, v)
        new_edges = []
        for e, a, b in self.edges:
            if e == eid:
                continue
            a2 = keep if a == gone else a
            b2 = keep if b == gone else b
            if a2 == b2:
                continue  # loop created by the merge
            new_edges.append((e, min(a2, b2), max(a2, b2)))
        g = Graph(
            tuple(x for x in self.vertices if x != gone),
            tuple(sorted(new_edges)),
        )
        vmap = VertexMap.identity(self.vertices).then({gone: keep})
        return g, vmap

    def simplify(self) -> "Graph":
        """Collapse each parallel class to its lowest-id edge."""
        best: dict[tuple[int, int], int] = {}
        for eid, u, v in self.edges:
            if (u, v) not in best or eid < best[(u, v)]:
                best[(u, v)] = eid
        return Graph(
            self.vertices,
            tuple(sorted((eid, u, v) for (u, v), eid in best.items())),
        )

    def edge_subgraph(self, eids: Iterable[int], keep_vertices: bool = True) -> "Graph":
        keep = set(eids)
        for eid in keep:
            self.edge_ends(eid)
        es = tuple(e for e in self.edges if e[0] in keep)
        if keep_vertices:
            vs = self.vertices
        else:
            vs = tuple(sorted({x for _, a, b in es for x in (a, b)}))
        return Graph(vs, es)

    def induced_subgraph(self, vs: Iterable[int]) -> "Graph":
        keep = set(vs)
        return Graph(
            tuple(sorted(keep)),
            tuple(e for e in self.edges if e[1] in keep and e[2] in keep),
        )

    def relabel(self, mapping: dict[int, int]) -> "Graph":
        """Apply an injective vertex relabeling (edge ids unchanged)."""
        if len(set(mapping.values())) != len(mapping):
            raise GraphError("relabeling must be injective")
        m = lambda x: mapping.get(x, x)
        return Graph.make(
            (m(v) for v in self.vertices),
            ((eid, m(u), m(v)) for eid, u, v in self.edges),
        )


@dataclass(frozen=True)
class VertexMap:
    """Association from original vertex ids to current ids.

    Tracks vertex merges through contraction sequences; identity on
    untouched vertices.
    """

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def identity(cls, vertices: Iterable[int]) -> "VertexMap":
        return cls(tuple((v, v) for v in sorted(vertices)))

    @cached_property
    def mapping(self) -> dict[int, int]:
        return dict(self.pairs)

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def then(self, step: dict[int, int]) -> "VertexMap":
        """Compose with a further renaming applied to current ids."""
        return VertexMap(
            tuple(sorted((orig, step.get(cur, cur)) for orig, cur in self.pairs))
        )

    def nonidentity(self) -> dict[int, int]:
        return {orig: cur for orig, cur in self.pairs if orig != cur}

    def image(self) -> frozenset[int]:
        return frozenset(cur for _, cur in self.pairs)


@dataclass(frozen=True)
class Cycle:
    """A cyclic vertex sequence with the realizing edge id between each
    consecutive pair (``edge_ids[i]`` joins ``vertices[i]`` and
    ``vertices[(i+1) % k]``)."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @classmethod
    def from_vertices(cls, g: Graph, vs: Sequence[int]) -> "Cycle":
        """Resolve a vertex sequence to a cycle, using the lowest edge id
        where parallel edges give a choice."""
        vs = tuple(vs)
        eids = []
        for i, u in enumerate(vs):
            v = vs[(i + 1) % len(vs)]
            cands = g.edge_ids_between(u, v)
            if not cands:
                raise NotACycleError(f"no edge between {u} and {v}")
            eids.append(min(cands))
        c = cls(vs, tuple(eids))
        c.validate(g)
        return c

    def validate(self, g: Graph) -> None:
        k = len(self.vertices)
        if k != len(self.edge_ids):
            raise NotACycleError("vertex/edge length mismatch")
        if len(set(self.vertices)) != k:
            raise NotACycleError("repeated vertex")
        if len(set(self.edge_ids)) != k:
            raise NotACycleError("repeated edge")
        if k < 2:
            raise NotACycleError("cycles have length >= 2")
        if k == 2 and self.edge_ids[0] == self.edge_ids[1]:
            raise NotACycleError("a 2-cycle needs two distinct parallel edges")
        for i, eid in enumerate(self.edge_ids):
            u, v = self.vertices[i], self.vertices[(i + 1) % k]
            if set(g.edge_ends(eid)) != {u, v}:
                raise NotACycleError(f"edge {eid} does not join {u} and {v}")

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def canonical(self) -> "Cycle":
        """Normal form under rotation and reflection."""
        k = len(self.vertices)
        best = None
        for start in range(k):
            fwd_v = tuple(self.vertices[(start + i) % k] for i in range(k))
            fwd_e = tuple(self.edge_ids[(start + i) % k] for i in range(k))
            rev_v = tuple(self.vertices[(start - i) % k] for i in range(k))
            rev_e = tuple(self.edge_ids[(start - 1 - i) % k] for i in range(k))
            for cand in ((fwd_v, fwd_e), (rev_v, rev_e)):
                if best is None or cand < best:
                    best = cand
        assert best is not None
        return Cycle(*best)

    def position(self, v: int) -> int:
        return self.vertices.index(v)


# ---------------------------------------------------------------------------
# Cycle enumeration
# ---------------------------------------------------------------------------


def enumerate_cycles(g: Graph) -> list[Cycle]:
    """All simple cycles of ``g``, once up to rotation/reflection.

    Works on multigraphs too: parallel pairs contribute 2-cycles and
    distinct parallel edges give distinct cycles.  Output is sorted by
    (length, vertices, edge ids) of the canonical form.
    """
    found: dict[tuple, Cycle] = {}

    def record(vs: list[int], es: list[int]) -> None:
        c = Cycle(tuple(vs), tuple(es)).canonical()
        found.setdefault((len(c), c.vertices, c.edge_ids), c)

    for anchor in g.vertices:
        # paths from anchor through vertices > anchor only
        path = [anchor]
        on_path = {anchor}
        edges_used: list[int] = []

        def extend() -> None:
            v = path[-1]
            for eid, w in g.incident(v):
                if w == anchor:
                    if len(path) >= 2 and eid != edges_used[0]:
                        record(path, edges_used + [eid])
                    continue
                if w < anchor or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                edges_used.append(eid)
                extend()
                path.pop()
                on_path.remove(w)
                edges_used.pop()

        extend()

    return [found[k] for k in sorted(found)]


# ---------------------------------------------------------------------------
# Bipartiteness
# ---------------------------------------------------------------------------


def bipartition(g: Graph) -> tuple[Optional[tuple[frozenset[int], frozenset[int]]], Optional[list[int]]]:
    """2-color ``g`` if possible.

    Returns ``((X, Y), None)`` when bipartite, else ``(None, odd_walk)``
    where ``odd_walk`` is a closed odd-length vertex walk witnessing an odd
    cycle.
    """
    color: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            x = queue.pop(0)
            for _, w in g.incident(x):
                if w not in color:
                    color[w] = 1 - color[x]
                    parent[w] = x
                    queue.append(w)
                elif color[w] == color[x]:
                    # climb to common ancestor for an explicit odd cycle
                    ax, aw = x, w
                    px = [ax]
                    while parent[ax] is not None:
                        ax = parent[ax]  # type: ignore[assignment]
                        px.append(ax)
                    pw = [aw]
                    while parent[aw] is not None:
                        aw = parent[aw]  # type: ignore[assignment]
                        pw.append(aw)
                    sx, sw = set(px), None
                    for node in pw:
                        if node in sx:
                            sw = node
                            break
                    assert sw is not None
                    ix = px.index(sw)
                    iw = pw.index(sw)
                    walk = px[: ix + 1] + list(reversed(pw[:iw]))
                    return None, walk
    X = frozenset(v for v, c in color.items() if c == 0)
    Y = frozenset(v for v, c in color.items() if c == 1)
    return (X, Y), None


# ---------------------------------------------------------------------------
# Minor containment
# ---------------------------------------------------------------------------


def _connected_mask(adj: list[int], mask: int) -> bool:
    if mask == 0:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1] & mask
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen == mask


def is_minor(
    g: Graph, h: Graph, with_witness: bool = False
) -> bool | tuple[bool, Optional[dict[int, frozenset[int]]]]:
    """Decide whether ``h`` is a minor of ``g`` (both simple).

    With ``with_witness`` a true answer also returns disjoint connected
    branch sets of ``g``, one per vertex of ``h``, realizing every edge of
    ``h`` between the corresponding sets.
    """
    if not (g.is_simple() and h.is_simple()):
        raise GraphError("minor test requires simple graphs")

    def done(ok: bool, wit: Optional[dict[int, frozenset[int]]] = None):
        return (ok, wit) if with_witness else ok

    k = h.vertex_count
    if k == 0:
        return done(True, {})
    if k > g.vertex_count or h.edge_count > g.edge_count:
        return done(False)

    gv = list(g.vertices)
    gi = {v: i for i, v in enumerate(gv)}
    adj = [0] * len(gv)
    for _, u, v in g.edges:
        adj[gi[u]] |= 1 << gi[v]
        adj[gi[v]] |= 1 << gi[u]

    order = sorted(h.vertices, key=lambda v: (-h.degree(v), v))
    hpos = {v: i for i, v in enumerate(order)}
    needs: list[list[int]] = [[] for _ in order]
    for _, a, b in h.edges:
        i, j = hpos[a], hpos[b]
        if i < j:
            needs[j].append(i)
        else:
            needs[i].append(j)

    branch: list[int] = [0] * k
    full = (1 << len(gv)) - 1

    def neighborhood(mask: int) -> int:
        out = 0
        m = mask
        while m:
            b = m & -m
            m ^= b
            out |= adj[b.bit_length() - 1]
        return out & ~mask

    subsets_memo: dict[tuple[int, int, int], list[int]] = {}

    def connected_subsets(allowed: int, seed: int, max_size: int) -> list[int]:
        key = (allowed, seed, max_size)
        if key in subsets_memo:
            return subsets_memo[key]
        out = []
        base = allowed
        bits = []
        m = base
        while m:
            b = m & -m
            m ^= b
            bits.append(b)
        if seed & base:
            # all subsets containing seed, connected, size-limited
            others = [b for b in bits if b != seed]
            for size in range(0, max_size):
                for combo in itertools.combinations(others, size):
                    mask = seed
                    for b in combo:
                        mask |= b
                    if _connected_mask(adj, mask):
                        out.append(mask)
        subsets_memo[key] = out
        return out

    def place(i: int, free: int) -> bool:
        if i == k:
            return True
        remaining = k - i
        max_size = bin(free).count("1") - (remaining - 1)
        if max_size <= 0:
            return False
        req_nbhd = full
        for j in needs[i]:
            req_nbhd &= neighborhood(branch[j])
        # candidate sets must contain a vertex adjacent to each required
        # earlier branch; enumerate by ascending seed to avoid duplicates
        seen_seeds = 0
        m = free
        while m:
            seed = m & -m
            m ^= seed
            allowed = free & ~seen_seeds
            seen_seeds |= seed
            for cand in connected_subsets(allowed, seed, max_size):
                ok = True
                for j in needs[i]:
                    if not (cand & neighborhood(branch[j])):
                        ok = False
                        break
                if not ok:
                    continue
                branch[i] = cand
                if place(i + 1, free & ~cand):
                    return True
        branch[i] = 0
        return False

    if place(0, full):
        wit = {
            order[i]: frozenset(gv[b] for b in range(len(gv)) if branch[i] >> b & 1)
            for i in range(k)
        }
        return done(True, wit)
    return done(False)


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def canonical_form(
    g: Graph,
    edge_colors: Optional[dict[int, int]] = None,
    vertex_colors: Optional[dict[int, int]] = None,
) -> bytes:
    """Canonical label: equal labels iff isomorphic (respecting colors).

    Iterated color refinement with individualization backtracking; exact,
    intended for graphs up to ~16 vertices.  ``edge_colors`` maps edge ids
    to small positive ints (default 1); non-edges count as color 0.
    """
    if not g.is_simple():
        raise GraphError("canonical form requires a simple graph")
    n = g.vertex_count
    vs = list(g.vertices)
    vi = {v: i for i, v in enumerate(vs)}
    amat = [[0] * n for _ in range(n)]
    for eid, u, v in g.edges:
        c = 1 if edge_colors is None else edge_colors.get(eid, 1)
        if c <= 0:
            raise GraphError("edge colors must be positive")
        amat[vi[u]][vi[v]] = c
        amat[vi[v]][vi[u]] = c
    base = [0] * n
    if vertex_colors is not None:
        vals = sorted(set(vertex_colors.values()))
        rank = {c: i for i, c in enumerate(vals)}
        base = [rank[vertex_colors[v]] if v in vertex_colors else len(vals) for v in vs]

    def refine(colors: list[int]) -> list[int]:
        cur = colors
        while True:
            sigs = []
            for i in range(n):
                row = sorted((cur[j], amat[i][j]) for j in range(n) if j != i)
                sigs.append((cur[i], tuple(row)))
            order = sorted(set(sigs))
            lut = {s: c for c, s in enumerate(order)}
            nxt = [lut[s] for s in sigs]
            if nxt == cur:
                return cur
            cur = nxt

    def extract(colors: list[int]) -> bytes:
        perm = sorted(range(n), key=lambda i: colors[i])
        out = bytearray()
        for i in range(n):
            out.append(base[perm[i]] & 0xFF)
        for a in range(n):
            for b in range(a + 1, n):
                out.append(amat[perm[a]][perm[b]] & 0xFF)
        return bytes(out)

    best: Optional[bytes] = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = refine(colors)
        cells: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            cells.setdefault(c, []).append(i)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            code = extract(colors)
            if best is None or code < best:
                best = code
            return
        for v in target:
            child = [2 * c for c in colors]
            child[v] -= 1
            search(child)

    search(base)
    assert best is not None
    return bytes([n]) + best


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def girth(g: Graph) -> Optional[int]:
    cycles = enumerate_cycles(g)
    return min((len(c) for c in cycles), default=None)


# Module-level forms of the pure graph operations, for symmetry with the
# rest of the library's functional API.

def delete_edge(g: Graph, eid: int) -> Graph:
    return g.delete_edge(eid)


def contract_edge(g: Graph, eid: int) -> tuple[Graph, VertexMap]:
    return g.contract_edge(eid)


def simplify(g: Graph) -> Graph:
    return g.simplify()
