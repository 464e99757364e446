"""Threshold-separation toolkit.

Find minimum-cost vertex or edge sets whose removal pushes the shortest-path
distance of every target pair strictly above a threshold T.  Includes greedy
and LP-rounding approximations over the enumerated bounded-path family, a
sampling-based greedy solver, exact solvers (branch and bound, plus the
polynomial T <= 3 cases), a classical min vertex cut baseline, topology
generators, a packet-error-rate transform, and a deterministic experiment
harness with CSV output.
"""

__version__ = "0.1.0"

from .approx import FractionalSolution, fen, gen, greedy_cover, solve_covering_lp
from .baseline import cumulative_per, min_vertex_cut, per_threshold, per_to_length, transform_per_graph
from .errors import (
    BudgetExceededError,
    ForbiddenElementError,
    InfeasibleInstanceError,
    InputError,
    NoFiniteCutError,
    PseudocutError,
    ResourceError,
    TimeBudgetExceededError,
)
from .exact import exact_T2, exact_T3, hopcroft_karp, koenig_cover, opt, opt_hitting_set
from .experiment import (
    ExperimentSpec,
    RunRecord,
    format_records_csv,
    format_summary_csv,
    run_experiment,
    summarize,
)
from .files import (
    format_graph,
    load_graph,
    load_targets,
    load_vertex_costs,
    parse_graph,
    parse_targets,
    save_graph,
    save_targets,
)
from .generators import (
    TargetScheme,
    gen_er,
    gen_fig1,
    gen_hier,
    gen_targets,
    gen_tightness,
    gen_waxman,
)
from .gest import GestConfig, gest, gesta_fallback, sample_count, sigma
from .graph import (
    EDGE,
    UNREMOVABLE,
    VERTEX,
    Graph,
    PseudocutInstance,
    Solution,
    is_feasible,
    shortest_distance,
    shortest_path,
    solution_cost,
    validate,
)
from .pathspace import (
    DEFAULT_PATH_BUDGET,
    CoveringInstance,
    Path,
    SampledPath,
    build_covering,
    count_paths_through,
    enumerate_paths,
    sample_path,
)
from .seeding import mix64

__all__ = [
    "__version__",
    "BudgetExceededError", "CoveringInstance", "DEFAULT_PATH_BUDGET", "EDGE",
    "ExperimentSpec", "ForbiddenElementError", "FractionalSolution",
    "GestConfig", "Graph", "InfeasibleInstanceError", "InputError",
    "NoFiniteCutError", "Path", "PseudocutError", "PseudocutInstance",
    "ResourceError", "RunRecord", "SampledPath", "Solution", "TargetScheme",
    "TimeBudgetExceededError", "UNREMOVABLE", "VERTEX",
    "build_covering", "count_paths_through", "cumulative_per",
    "enumerate_paths", "exact_T2", "exact_T3", "fen", "format_graph",
    "format_records_csv", "format_summary_csv", "gen", "gen_er", "gen_fig1",
    "gen_hier", "gen_targets", "gen_tightness", "gen_waxman", "gest",
    "gesta_fallback", "greedy_cover", "hopcroft_karp", "is_feasible",
    "koenig_cover", "load_graph", "load_targets", "load_vertex_costs",
    "min_vertex_cut", "mix64", "opt", "opt_hitting_set", "parse_graph",
    "parse_targets", "per_threshold", "per_to_length", "run_experiment",
    "sample_count", "sample_path", "save_graph", "save_targets",
    "shortest_distance", "shortest_path", "sigma", "solution_cost",
    "solve_covering_lp", "summarize", "transform_per_graph", "validate",
]
