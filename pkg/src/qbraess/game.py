"""Selfish path selection: best-response dynamics, Nash checks and Braess detection.

Each of the ``2N`` swaps is a player whose payoff is the concurrence of the
pair it produces. Players are anonymous, so a profile is the aggregate
``FlowAllocation``. A deviation moves one swap from its path to another; the
deviator compares its current payoff with the payoff of the new path under
the post-deviation allocation, distillation levels recomputed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .network import (
    DEFAULT_ALPHA,
    FlowAllocation,
    NetworkConfig,
    PathId,
    average_concurrence,
    enumerate_allocations,
    path_concurrence,
    path_concurrences,
    validate_allocation,
)
from .distillation import distilled_concurrence
from .concurrence import concurrence_pure

IMPROVE_TOL = 1e-12
PARADOX_TOL = 1e-9

SOURCE_ORDER = (PathId.ACB, PathId.ADB, PathId.ACDB)
TARGET_ORDER = (PathId.ACDB, PathId.ACB, PathId.ADB)


@dataclass(frozen=True)
class EquilibriumReport:
    allocation: FlowAllocation
    avg_concurrence: float
    path_concurrences: dict = field(compare=False)
    is_nash: bool
    passes: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "allocation": {"x": self.allocation.x, "y": self.allocation.y, "z": self.allocation.z},
            "avg_concurrence": self.avg_concurrence,
            "path_concurrences": {p.value: c for p, c in self.path_concurrences.items()},
            "is_nash": self.is_nash,
            "passes": self.passes,
            "converged": self.converged,
        }


@dataclass(frozen=True)
class BraessReport:
    original_eq: EquilibriumReport
    modified_eq: EquilibriumReport
    paradox: bool
    gap: float

    def to_dict(self) -> dict:
        return {
            "original_eq": self.original_eq.to_dict(),
            "modified_eq": self.modified_eq.to_dict(),
            "paradox": self.paradox,
            "gap": self.gap,
        }


def payoff(config: NetworkConfig, alloc, path: PathId) -> float:
    return path_concurrence(config, alloc, path)


def deviation_payoffs(config: NetworkConfig, alloc, src: PathId, dst: PathId) -> tuple[float, float]:
    """(current payoff on ``src``, payoff on ``dst`` after one swap moves there)."""
    alloc = FlowAllocation(*alloc)
    return payoff(config, alloc, src), payoff(config, alloc.moved(src, dst), dst)


def _improving_moves(config, alloc):
    paths = config.paths()
    for src in SOURCE_ORDER:
        if src not in paths or alloc.count(src) == 0:
            continue
        for dst in TARGET_ORDER:
            if dst == src or dst not in paths:
                continue
            current, new = deviation_payoffs(config, alloc, src, dst)
            if new > current + IMPROVE_TOL:
                yield src, dst


def best_response_step(config: NetworkConfig, alloc) -> FlowAllocation:
    alloc = validate_allocation(config, alloc)
    for src, dst in _improving_moves(config, alloc):
        return alloc.moved(src, dst)
    return alloc


def is_nash(config: NetworkConfig, alloc) -> bool:
    alloc = validate_allocation(config, alloc)
    return next(_improving_moves(config, alloc), None) is None


def default_start(config: NetworkConfig) -> FlowAllocation:
    n = config.n_half
    return FlowAllocation(0, n, n)


def _report(config, alloc, passes, converged) -> EquilibriumReport:
    return EquilibriumReport(
        allocation=alloc,
        avg_concurrence=average_concurrence(config, alloc),
        path_concurrences=path_concurrences(config, alloc),
        is_nash=is_nash(config, alloc),
        passes=passes,
        converged=converged,
    )


def find_nash(
    config: NetworkConfig,
    start: Optional[Iterable[int]] = None,
    max_passes: Optional[int] = None,
) -> EquilibriumReport:
    """Iterate unilateral improving moves until none is left.

    ``passes`` counts calls to :func:`best_response_step`, including the
    final one that finds no move. Hitting ``max_passes`` (default
    ``100 * N``) returns a report with ``converged=False``.
    """
    alloc = validate_allocation(config, default_start(config) if start is None else start)
    cap = 100 * config.n_half if max_passes is None else int(max_passes)
    for passes in range(1, cap + 1):
        nxt = best_response_step(config, alloc)
        if nxt == alloc:
            return _report(config, alloc, passes, True)
        alloc = nxt
    return _report(config, alloc, cap, False)


def social_optimum(config: NetworkConfig) -> tuple[FlowAllocation, float]:
    best, best_value = None, -1.0
    for alloc in enumerate_allocations(config):
        value = average_concurrence(config, alloc)
        if value > best_value + IMPROVE_TOL:
            best, best_value = alloc, value
    return best, best_value


def detect_braess(config_modified: NetworkConfig, start=None) -> BraessReport:
    if not config_modified.has_cd_edge:
        raise ValueError("detect_braess needs the configuration with the CD edge")
    original = find_nash(config_modified.without_cd(), start)
    modified = find_nash(config_modified, start)
    gap = original.avg_concurrence - modified.avg_concurrence
    return BraessReport(original, modified, gap > PARADOX_TOL, gap)


def paradox_region(
    n_half: int, alpha: float = DEFAULT_ALPHA, p_values: Iterable[float] = ()
) -> list[tuple[float, BraessReport]]:
    return [(p, detect_braess(NetworkConfig(n_half, p, alpha, True))) for p in p_values]


def paradox_interval(scan: list[tuple[float, BraessReport]]) -> Optional[tuple[float, float]]:
    """Smallest and largest ``p`` flagged as paradoxical in a scan, or None."""
    hits = [p for p, report in scan if report.paradox]
    if not hits:
        return None
    return min(hits), max(hits)


def candidate_paradox_interval(n_half: int, alpha: float = DEFAULT_ALPHA) -> tuple[float, float]:
    """Closed-form ``p`` bounds of the paradox for swaps starting at ``(0, N, N)``.

    Lower end: the full shift to ACDB averages ``C_pure**2``; it is worse than
    the original ``C_W`` only once ``C_W > C_pure**2``. Upper end: the first
    swap gains by moving onto ACDB only while ``C_W`` is below the concurrence
    of the pure edge distilled to ``N + 1`` copies. Past that nobody moves.
    """
    c_full = concurrence_pure(alpha)
    c_first = distilled_concurrence(alpha, 2 * n_half, n_half + 1)

    def p_of(c):
        return (2.0 * c + 1.0) / 3.0

    return p_of(c_full * c_full), p_of(c_first)
