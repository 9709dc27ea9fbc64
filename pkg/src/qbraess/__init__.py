"""Braess paradox in a four-node entanglement-swapping network."""
from .concurrence import (
    Bell,
    BellState,
    DomainError,
    PureSchmidtState,
    WernerState,
    chain_concurrence,
    concurrence_pure,
    concurrence_werner,
    link_concurrence,
)
from .distillation import (
    distilled_alpha,
    distilled_concurrence,
    majorization_feasible,
    tensor_spectrum,
)
from .game import (
    BraessReport,
    EquilibriumReport,
    best_response_step,
    candidate_paradox_interval,
    detect_braess,
    find_nash,
    is_nash,
    paradox_interval,
    paradox_region,
    payoff,
    social_optimum,
)
from .network import (
    EdgeId,
    FlowAllocation,
    NetworkConfig,
    PathId,
    average_concurrence,
    edge_concurrence,
    edge_load,
    enumerate_allocations,
    path_concurrence,
)
from .oracle import bell_swap_average_concurrence, wootters_concurrence
from .traffic import path_time, traffic_nash

__version__ = "0.1.0"
