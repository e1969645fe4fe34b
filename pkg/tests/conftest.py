from __future__ import annotations

import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conflictgraph.graphs import Graph
from conflictgraph.petersen import generate_family


@pytest.fixture(scope="session")
def family():
    return {m.name: m.graph for m in generate_family()}


@pytest.fixture(scope="session")
def small_connected_graphs():
    """All connected graphs on at most 6 vertices, one per isomorphism class."""
    return enumerate_graphs_up_to(6, connected_only=True)


def enumerate_graphs_up_to(max_n: int, connected_only: bool = False) -> list[Graph]:
    """All graphs on 1..max_n vertices up to isomorphism.

    Grown by augmenting each (n-1)-vertex representative with every
    neighborhood of a new vertex; duplicates removed by invariant
    bucketing plus first-match isomorphism checks.
    """
    from oracles import isomorphic_backtrack

    levels: list[list[Graph]] = [[Graph.build([0], [])]]
    for n in range(2, max_n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        for base in levels[-1]:
            base_pairs = [(u, v) for _, u, v in base.edges]
            for mask in range(1 << (n - 1)):
                pairs = base_pairs + [
                    (i, n - 1) for i in range(n - 1) if mask >> i & 1
                ]
                g = Graph.build(range(n), pairs)
                tri = sum(
                    1
                    for a, b, c in itertools.combinations(range(n), 3)
                    if g.has_edge_between(a, b)
                    and g.has_edge_between(a, c)
                    and g.has_edge_between(b, c)
                )
                key = (g.edge_count, g.degree_sequence(), tri)
                bucket = buckets.setdefault(key, [])
                if not any(isomorphic_backtrack(g, h) for h in bucket):
                    bucket.append(g)
        levels.append([g for bucket in buckets.values() for g in bucket])
    out = [g for level in levels for g in level]
    if connected_only:
        out = [g for g in out if g.is_connected()]
    return out
