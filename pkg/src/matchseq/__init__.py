"""Edge orderings of complete graphs whose sliding windows stay sparse.

``ms_r`` asks for the longest window length ``s`` such that every ``s``
consecutive edges of an ordering form a subgraph of maximum degree at most
``r``; ``cms_r`` lets windows wrap around.
"""

from __future__ import annotations

from .assemble import (
    ConstructionPlan,
    HypothesisError,
    NotCoveredError,
    assemble_prop_2regular,
    assemble_prop_2regular_odd_r,
    assemble_prop_matching,
    concat,
    construct_cms,
    construct_ms,
    window_join,
)
from .core import (
    EdgeOrdering,
    Graph,
    SequencibilityReport,
    complete_graph,
    eval_cms_r,
    eval_ms_r,
    junction_ms_r,
    window_max_degree,
)
from .hyper import (
    HyperDecomposition,
    HyperOrdering,
    KGraph,
    baranyai,
    complete_kgraph,
    eval_hyper_ms_r,
    greedy_hyper_ordering,
    katona_bounds,
)
from .oracle import (
    Certificate,
    SearchConfig,
    check_product_bound,
    check_theorem7_transfer,
    check_window_duality,
    exact_cms,
    exact_ms,
    upper_bound,
)

__version__ = "0.1.0"
