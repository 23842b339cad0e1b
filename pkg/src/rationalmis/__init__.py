"""Simulator and analysis harness for rationality-resilient MIS protocols.

Two protocols are implemented: a rock-paper-scissors tournament protocol
(three engine rounds per iteration) and a signed-rank protocol (five engine
rounds per iteration).  Both come in two codings: the full strategy machine
with all deviation-handling branches, and an independently coded honest
variant used for differential testing.  A deviation-injection catalog,
a batched vectorized simulator for honest runs, and an exact small-graph
oracle ground the statistical test suite.
"""

from .graph import Graph, make_family, load_edge_list, is_independent_set, is_maximal_independent_set, max_degree
from .engine import RunConfig, RunRecord, run
from .utility import NEG_INF, evaluate_node, evaluate_all
from .deviations import DeviationSpec
from .oracle import exact_small_oracle
from .analysis import run_trials, paired_deviation_test, termination_curve

__all__ = [
    "Graph",
    "make_family",
    "load_edge_list",
    "is_independent_set",
    "is_maximal_independent_set",
    "max_degree",
    "RunConfig",
    "RunRecord",
    "run",
    "NEG_INF",
    "evaluate_node",
    "evaluate_all",
    "DeviationSpec",
    "exact_small_oracle",
    "run_trials",
    "paired_deviation_test",
    "termination_curve",
]

__version__ = "0.1.0"
