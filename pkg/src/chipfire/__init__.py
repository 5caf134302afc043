"""Exact chip-firing arithmetic on finite multigraphs.

Divisors, base-reduced forms, ranks with certificates, the critical group,
flow and cut lattices, and both the unconstrained lending game and the
constrained sandpile game, all in integer or rational arithmetic.
"""

from .divisors import (
    Divisor,
    FiringScript,
    apply_laplacian,
    canonical_divisor,
    divisor_from_json,
    divisor_to_json,
    linearly_equivalent,
    nu_divisor,
)
from .dollar_game import (
    GameState,
    Strategy,
    apply_move,
    apply_script,
    is_winnable,
    lowest_in_debt,
    unwinnable_example,
    winning_strategy,
)
from .errors import ChipfireError, GraphConstructionError, PreconditionError, ResourceGuardError
from .jacobian import (
    JacElement,
    JacobianStructure,
    abel_jacobi,
    divisor_class,
    jacobian_structure,
    pushforward,
    smith_normal_form,
    symmetric_power_map,
)
from .lattices import (
    LatticeBasis,
    OrientedEdgeSpace,
    abel_map,
    boundary_operators,
    cut_lattice,
    flow_lattice,
    lattice_determinant,
    lattice_diagnostics,
    quotient_group,
    shortest_vector_norm,
)
from .multigraph import INFINITE, Multigraph, graph_from_json, graph_to_json
from .rank import (
    LinearSystem,
    Rank,
    clifford_check,
    dichotomy,
    epsilon,
    has_effective_representative,
    linear_system,
    rank,
    verify_riemann_roch,
    verify_rr_criterion,
)
from .reduction import ReducedDivisor, enumerate_reduced, is_reduced, reduce
from .sandpile import (
    RunResult,
    SandpileConfig,
    finiteness_via_duality,
    is_critical,
    k_plus,
    lowest_index_policy,
    random_policy,
    round_robin_policy,
    run,
    star_transform,
)

__version__ = "0.1.0"

__all__ = [
    "ChipfireError",
    "Divisor",
    "FiringScript",
    "GameState",
    "GraphConstructionError",
    "INFINITE",
    "JacElement",
    "JacobianStructure",
    "LatticeBasis",
    "LinearSystem",
    "Multigraph",
    "OrientedEdgeSpace",
    "PreconditionError",
    "Rank",
    "ReducedDivisor",
    "ResourceGuardError",
    "RunResult",
    "SandpileConfig",
    "Strategy",
    "abel_jacobi",
    "abel_map",
    "apply_laplacian",
    "apply_move",
    "apply_script",
    "boundary_operators",
    "canonical_divisor",
    "clifford_check",
    "cut_lattice",
    "dichotomy",
    "divisor_class",
    "divisor_from_json",
    "divisor_to_json",
    "enumerate_reduced",
    "epsilon",
    "finiteness_via_duality",
    "flow_lattice",
    "graph_from_json",
    "graph_to_json",
    "has_effective_representative",
    "is_critical",
    "is_reduced",
    "is_winnable",
    "jacobian_structure",
    "k_plus",
    "lattice_determinant",
    "lattice_diagnostics",
    "linear_system",
    "linearly_equivalent",
    "lowest_in_debt",
    "lowest_index_policy",
    "nu_divisor",
    "pushforward",
    "quotient_group",
    "random_policy",
    "rank",
    "reduce",
    "round_robin_policy",
    "run",
    "shortest_vector_norm",
    "smith_normal_form",
    "star_transform",
    "symmetric_power_map",
    "unwinnable_example",
    "verify_riemann_roch",
    "verify_rr_criterion",
    "winning_strategy",
]
