"""braidkit: exact computation in Artin braid groups.

Braid-word arithmetic, two word-problem solvers (the free-group action and
pure-braid combing), the Burau representation, the 3-strand modular map,
the Temperley-Lieb algebra with the braid representation into it, Kauffman
bracket / Jones polynomial of braid closures, and two orderings (the
Dehornoy right-order and the Magnus bi-order on pure braids).
"""

from .braids import (
    BraidWord,
    Permutation,
    full_twist,
    generator,
    half_twist,
    parse_braid,
    pure_generator,
    random_braid,
)
from .combing import (
    ArtinCoordinates,
    comb,
    forget_last,
    kernel_part,
    linking_numbers,
    loop_word,
    pure_word_problem,
    reconstruct,
)
from .errors import (
    BraidError,
    BudgetError,
    ConventionError,
    DomainError,
    ParseError,
)
from .free_group import (
    FreeWord,
    artin_apply,
    artin_images,
    free_generator,
    free_reduce,
    is_identity,
    parse_free_word,
    verify_artin_form,
)
from .invariants import (
    FuzzReport,
    InvariantReport,
    bracket_state_sum,
    components,
    fuzz_markov,
    markov_conjugate,
    markov_stabilize,
    report,
    writhe,
)
from .laurent import LaurentMatrix, LaurentPoly
from .ordering import (
    NCSeries,
    OrderResult,
    dehornoy_compare,
    free_compare,
    fuzz_order,
    handle_reduce,
    is_sigma_positive,
    magnus_expand,
    pure_compare,
    series_compare,
)
from .representations import burau, burau_at_one, modular, permutation_matrix
from .temperley_lieb import (
    DELTA,
    PlanarMatching,
    TLElement,
    bracket_via_tl,
    jones_rep,
    markov_trace,
    tl_basis,
    tl_e,
)

__version__ = "0.1.0"

__all__ = [
    "ArtinCoordinates",
    "BraidError",
    "BraidWord",
    "BudgetError",
    "ConventionError",
    "DELTA",
    "DomainError",
    "FreeWord",
    "FuzzReport",
    "InvariantReport",
    "LaurentMatrix",
    "LaurentPoly",
    "NCSeries",
    "OrderResult",
    "ParseError",
    "Permutation",
    "PlanarMatching",
    "TLElement",
    "artin_apply",
    "artin_images",
    "bracket_state_sum",
    "bracket_via_tl",
    "burau",
    "burau_at_one",
    "comb",
    "components",
    "dehornoy_compare",
    "forget_last",
    "free_compare",
    "free_generator",
    "free_reduce",
    "full_twist",
    "fuzz_markov",
    "fuzz_order",
    "generator",
    "half_twist",
    "handle_reduce",
    "is_identity",
    "is_sigma_positive",
    "jones_rep",
    "kernel_part",
    "linking_numbers",
    "loop_word",
    "magnus_expand",
    "markov_conjugate",
    "markov_stabilize",
    "markov_trace",
    "modular",
    "parse_braid",
    "parse_free_word",
    "permutation_matrix",
    "pure_compare",
    "pure_generator",
    "pure_word_problem",
    "random_braid",
    "reconstruct",
    "report",
    "series_compare",
    "tl_basis",
    "tl_e",
    "verify_artin_form",
    "writhe",
]
