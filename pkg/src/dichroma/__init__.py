"""Digraph dicolouring toolkit.

Exact and bound-certified dichromatic numbers, the directed max-degree
classification with constructive colourings, arc-connectivity-extremal
recognition through join decompositions, generators for families with
known dichromatic number, locally semicomplete structure theory, and
defective edge colouring of multigraphs.
"""

from .brooks import BrooksVerdict, brooks_colour, classify_brooks, deltamin_gadget
from .colouring import (
    BackwardPathCertificate,
    Dicolouring,
    ExactResult,
    backward_certificate,
    dipolar_combine,
    exact_dichromatic,
    gallai_roy_colour,
    greedy_dicolour,
    two_colour_odd_free,
    verify_dicolouring,
)
from .core import (
    Digraph,
    Multigraph,
    VertexSetPartition,
    bfs_order,
    blocks,
    build_digraph,
    build_multigraph,
    contract,
    euler_tour,
    partition,
    strong_components,
)
from .defective import (
    EdgeColouring,
    colour_shannon_multigraph,
    defective_colour,
    exact_defective_index,
    extract_factor,
    gamma_d,
    np_gadget_defective,
    split_euler,
    verify_edge_colouring,
)
from .extremal import (
    CertNode,
    DecompositionCertificate,
    LambdaProfile,
    check_2_extremal,
    check_extremal_necessary,
    directed_hajos_join,
    generalized_wheel,
    hajos_bijoin,
    hajos_star_join,
    hajos_tree_join,
    induced_cycle_hypergraph,
    lambda_profile,
    parallel_hajos_join,
    recognize_k_extremal,
)
from .heroes import (
    GeneratedDigraph,
    PatternEmbedding,
    compose_circular,
    compose_domination,
    contains_induced,
    gen_chordal_c122,
    gen_chordal_hero_free,
    gen_ds,
    gen_fk,
    pattern,
    substitute,
)
from .localstruct import (
    CyclicOrder,
    HubPartition,
    SemicompleteStructure,
    check_local_class,
    find_2king,
    hub_decomposition,
    inround_order,
    min_outdegree_witness,
    semicomplete_structure,
    two_dicolour_lot,
    weighted_out_round_witness,
)

__version__ = "0.1.0"
