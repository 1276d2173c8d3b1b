"""Nonrepetitive (Thue) colourings of graphs and lexicographic products."""

__version__ = "0.1.0"

from .bounds import (
    BoundsCertificate,
    certify,
    lower_bound_conjecture,
    multipartite_product_pi,
    recognise_multipartite,
    sweep_conjecture,
    theorem_pi_check,
    upper_bound_product,
)
from .colouring import (
    Colouring,
    ListAssignment,
    RepetitionWitness,
    check_choosable,
    construct_product_colouring,
    exact_pi,
    greedy_list_colouring,
    multipartite_exact_pi,
    verify_nonrepetitive,
)
from .graphio import from_edge_list, from_graph6, to_edge_list, to_graph6
from .graphs import (
    Graph,
    MultipartiteSpec,
    ProductVertex,
    clique_number,
    enumerate_simple_paths,
    independence_number,
    lex_product,
    make_family,
)
from .words import find_repetition, interleave, is_nonrepetitive, rainbow_interrupt, thue_word
