"""Induced densities of directed stars and complete bipartite digraphs.

Exact induced-pattern counting, count-monotone reductions toward weighted
tournament blow-ups, the one-dimensional optimization giving the limiting
star density, finite extremal constructions and brute-force search.
"""

from .compress import (
    ClassPartition,
    MergeEvaluation,
    compress,
    merge_step,
    reduce,
    reduce_to_profile,
    sort_and_orient,
    twin_partition,
)
from .counting import CountResult, count_kst, count_pattern, count_pattern_oracle, count_stars
from .density import (
    OptResult,
    WeightProfile,
    best_two_class_profile,
    eval_fm,
    fm_recursion,
    fm_trace,
    geometric_weights,
    kst_inducibility,
    kst_inducibility_exact,
    solve_alpha,
)
from .digraph import (
    Digraph,
    FormatError,
    from_arclist,
    induced_subdigraph,
    is_isomorphic,
    make_digraph,
    random_digraph,
    reverse,
    to_arclist,
)
from .extremal import (
    SearchReport,
    ThreeGraph,
    aux_3graph,
    balanced_kst_blowup,
    exhaustive_max,
    is_c5_free,
    iterated_blowup,
)
from .patterns import CompleteBipartite, Explicit, PatternSpec, Star

__version__ = "0.1.0"
