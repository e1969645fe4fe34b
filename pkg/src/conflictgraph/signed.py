"""Signed graphs, cycle signs, and Harary balance with certificates.

A signed graph is balanced when every cycle has positive sign product;
equivalently (Harary) the vertices split into two sets X, Y with negative
edges exactly between the sets.  ``is_balanced`` decides by a spanning-tree
parity sweep and returns either the split or an explicit negative cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .graphs import Cycle, Graph, GraphError, NotACycleError

POSITIVE = "+"
NEGATIVE = "-"


@dataclass(frozen=True)
class SignedGraph:
    """Simple graph with a total edge signing.

    Contradictory duplicate pairs (same endpoints, opposite signs) are
    rejected at construction rather than silently merged.
    """

    vertices: tuple[int, ...]
    signed_edges: tuple[tuple[int, int, str], ...]  # (u, v, sign) with u < v

    @classmethod
    def build(
        cls, vertices: Iterable[int], edges: Iterable[tuple[int, int, str]]
    ) -> "SignedGraph":
        vs = tuple(sorted(set(vertices)))
        vset = set(vs)
        norm: dict[tuple[int, int], str] = {}
        for u, v, sign in edges:
            if sign not in (POSITIVE, NEGATIVE):
                raise GraphError(f"bad sign {sign!r}")
            if u == v:
                raise GraphError("loops not allowed in signed graphs")
            if u not in vset or v not in vset:
                raise GraphError("edge endpoint missing from vertex set")
            key = (min(u, v), max(u, v))
            if key in norm:
                raise GraphError(
                    f"duplicate signed edge {key} (existing {norm[key]!r}, new {sign!r})"
                )
            norm[key] = sign
        return cls(vs, tuple(sorted((u, v, s) for (u, v), s in norm.items())))

    @cached_property
    def underlying(self) -> Graph:
        return Graph.build(self.vertices, [(u, v) for u, v, _ in self.signed_edges])

    @cached_property
    def sign_of(self) -> dict[frozenset[int], str]:
        return {frozenset((u, v)): s for u, v, s in self.signed_edges}

    def sign_between(self, u: int, v: int) -> str:
        try:
            return self.sign_of[frozenset((u, v))]
        except KeyError:
            raise GraphError(f"no edge between {u} and {v}") from None


def cycle_sign(sg: SignedGraph, c: Cycle) -> str:
    """Product of the edge signs along the cycle."""
    c.validate(sg.underlying)
    neg = 0
    k = len(c.vertices)
    for i in range(k):
        u, v = c.vertices[i], c.vertices[(i + 1) % k]
        if sg.sign_between(u, v) == NEGATIVE:
            neg += 1
    return NEGATIVE if neg % 2 else POSITIVE


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    split: Optional[tuple[frozenset[int], frozenset[int]]]  # (X, Y) if balanced
    negative_cycle: Optional[Cycle]  # if unbalanced


def is_balanced(sg: SignedGraph) -> BalanceResult:
    """Harary balance with a certificate either way.

    Per component, vertices get parities along a BFS tree (positive edge
    keeps parity, negative flips); the first inconsistent non-tree edge
    closes an explicit negative cycle.  The returned X side contains the
    smallest vertex of every component.
    """
    g = sg.underlying
    parity: dict[int, int] = {}
    parent: dict[int, Optional[int]] = {}

    for root in g.vertices:
        if root in parity:
            continue
        parity[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            x = queue.pop(0)
            for _, w in g.incident(x):
                flip = 1 if sg.sign_between(x, w) == NEGATIVE else 0
                if w not in parity:
                    parity[w] = parity[x] ^ flip
                    parent[w] = x
                    queue.append(w)
                elif parity[w] != parity[x] ^ flip:
                    # tree path w -> x plus edge (x, w) has negative sign
                    up_x = [x]
                    while parent[up_x[-1]] is not None:
                        up_x.append(parent[up_x[-1]])
                    up_w = [w]
                    while parent[up_w[-1]] is not None:
                        up_w.append(parent[up_w[-1]])
                    in_x = set(up_x)
                    meet = next(node for node in up_w if node in in_x)
                    px = up_x[: up_x.index(meet) + 1]
                    pw = up_w[: up_w.index(meet)]
                    cyc_vertices = px + list(reversed(pw))
                    c = Cycle.from_vertices(g, cyc_vertices)
                    assert cycle_sign(sg, c) == NEGATIVE
                    return BalanceResult(False, None, c)

    x_side = frozenset(v for v, p in parity.items() if p == 0)
    y_side = frozenset(v for v, p in parity.items() if p == 1)
    for u, v, s in sg.signed_edges:
        crossing = (u in x_side) != (v in x_side)
        if crossing != (s == NEGATIVE):
            raise AssertionError("parity sweep produced an invalid split (bug)")
    return BalanceResult(True, (x_side, y_side), None)


def switch(sg: SignedGraph, s: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge with exactly one endpoint in ``s``."""
    sset = set(s)
    unknown = sset - set(sg.vertices)
    if unknown:
        raise GraphError(f"switching set contains unknown vertices {sorted(unknown)}")
    flipped = []
    for u, v, sign in sg.signed_edges:
        if (u in sset) != (v in sset):
            sign = NEGATIVE if sign == POSITIVE else POSITIVE
        flipped.append((u, v, sign))
    return SignedGraph(sg.vertices, tuple(flipped))
