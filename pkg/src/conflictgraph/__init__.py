"""Conflict graphs of cycles and of sphere-embedded maximal planar subgraphs.

The package decides planarity through the classical bipartite-conflict-graph
criterion, enumerates maximal planar subgraphs and their inequivalent sphere
embeddings, detects strong and implicit (anti-)conflicts between fragments,
assembles signed conflict graphs and decides Harary balance, reproduces the
Petersen-family unbalancedness results, and backs the linkedness claims with
exact integer linking numbers of explicit spatial realizations.
"""

__version__ = "0.1.0"

from .graphs import (
    Cycle,
    Graph,
    GraphError,
    NotACycleError,
    UnknownEdgeError,
    VertexMap,
    canonical_form,
    enumerate_cycles,
    is_minor,
)
from .planarity import (
    CycleFragment,
    cycle_conflict_graph,
    fragments_conflict,
    fragments_of_cycle,
    is_bipartite,
    reference_planarity,
    tutte_planarity,
)
from .embeddings import (
    CycleSides,
    EmbeddingError,
    Face,
    RotationSystem,
    enumerate_embeddings,
    induced_embedding,
    is_planar_embedding,
    on_common_face,
    sides_of_cycle,
    trace_faces,
)
from .maximal_planar import (
    Fragment,
    MaximalPlanarSubgraph,
    enumerate_maximal_planar_subgraphs,
    is_maximal_planar_subgraph,
    mps_counts,
)
from .signed import BalanceResult, SignedGraph, cycle_sign, is_balanced, switch
from .conflicts import (
    SignedConflictGraph,
    build_conflict_graph,
    build_strong_conflict_graph,
    implicit_anticonflict,
    implicit_conflict,
    potentially_flat_placements,
    strong_anticonflict,
    strong_conflict,
)
from .petersen import (
    FamilyMember,
    conjecture_probe,
    delta_y,
    generate_family,
    is_linklessly_embeddable,
    verify_theorem_42,
    y_delta,
)
from .realize import (
    SpatialRealization,
    check_linked_pair,
    layout,
    linking_number,
    route_fragments,
)

__all__ = [name for name in dir() if not name.startswith("_")]
