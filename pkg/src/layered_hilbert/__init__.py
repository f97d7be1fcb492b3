"""Order homology of layered directed graphs and Hilbert series of B(G) and A(G)."""

from .generators import (
    boolean_graph,
    cassidy_shelton,
    complete_layered,
    palindromic_graph,
    prescribed_rs,
    random_poset,
    random_uniform,
)
from .graph import (
    GraphError,
    InducedSubgraph,
    InvalidGraphError,
    LayeredGraph,
    covers,
    graph_from_json,
    graph_to_json,
    is_uniform,
    less_than,
    level_window_subgraph,
    minimal_vertices,
    successor_set,
    validate,
)
from .homology import (
    BettiTable,
    ChainTable,
    boundary_matrix,
    enumerate_chains,
    face,
    is_cohen_macaulay,
    mobius,
    reduced_cohomology_dims,
    reduced_homology_dims,
)
from .linalg import QQ, FieldSpec
from .oracle import b_graded_dims, enumerate_path_words, relation_vectors
from .poset import Poset
from .series import (
    HypothesisError,
    HypothesisWarning,
    KoszulReport,
    TruncatedSeries,
    hilbert_B,
    hilbert_B_low_degree,
    inv_hilbert_A,
    inv_hilbert_A_chain_count,
    numerically_koszul,
    series_inverse,
    series_mul,
    substitute_neg,
)
