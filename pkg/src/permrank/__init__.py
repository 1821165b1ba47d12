"""Principal permanent rank sequences: exact computation, realizability, witnesses."""

from .exactmat import (
    IndexSet,
    IntMatrix,
    parse_matrix,
    format_matrix,
    pattern_of,
    permanent,
    permanent_naive,
    permanent_ryser,
    permanent_sparse,
    principal_submatrix,
)
from .graphcore import (
    Digraph,
    GeneralizedCycle,
    find_generalized_cycle,
    from_pattern,
    is_symmetric,
    is_tree,
    max_matching_tree,
    to_dot,
    to_pattern,
)
from .pprseq import PprSequence, perrank, ppr_sequence, sequences_equal
from .realizer import (
    Family,
    FamilyClassification,
    Reason,
    Shape,
    classify,
    construct_nonnegative,
    construct_skew_tree,
    construct_symmetric,
    construct_witness,
    enumerate_realizable,
)

__version__ = "0.1.0"
