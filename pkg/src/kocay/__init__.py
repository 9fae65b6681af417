"""Exact covering counts, Kocay identities and deck-only reconstruction for
small graphs and 2-coloured graphs."""

from .colored import (
    ColoredCanonicalForm,
    ColoredGraph,
    blue_graph,
    colored_automorphisms,
    colored_canonical_form,
    colored_components,
    colored_isomorphic,
    colored_pair_orbit_size,
    delete_pair,
    enumerate_colored_graphs,
    recolor,
    red_graph,
    swap_colors,
    two_form,
)
from .counting import (
    ColoredDeck,
    Deck,
    colored_deck,
    colored_kelly_count_from_deck,
    count_colored_induced,
    count_colored_subgraph,
    count_induced,
    count_subgraph,
    deck,
    deck_of_complement,
    kelly_count_from_deck,
    swap_deck_colors,
)
from .covering import (
    COLORED,
    PLAIN,
    CoveringSystem,
    KocayReport,
    LabeledCopy,
    cover_count,
    enumerate_copies,
    kocay_check,
    order_n_sum,
    spanning_disconnected_sum,
    spanning_subgraph_count,
    union_classes,
)
from .errors import ConsistencyError, Graph6Error, InputError, KocayError, PreconditionError
from .formats import format_colored, parse_colored, parse_graph6, serialize_graph6
from .graph import (
    MAX_N,
    CanonicalForm,
    Graph,
    automorphisms,
    canonical_form,
    complement,
    complete,
    connected_components,
    cycle,
    disjoint_union,
    empty,
    enumerate_graphs,
    enumerate_trees,
    is_isomorphic,
    matching,
    max_degree,
    pair_orbit_size,
    path,
    permute,
    star,
)
from .reconstruct import (
    BlueDescentSequence,
    ReconstructionReport,
    Status,
    blue_descent_sequence,
    edge_identity_check,
    reconstruct_path_count,
    tree_combo_oracle,
    tree_descent,
)

__version__ = "0.1.0"
