"""The four-node swapping network A, B, C, D.

Edges AC and DB each hold ``2N`` copies of a pure state; AD and CB hold ``2N``
Werner states; the optional CD edge holds ``2N`` Bell pairs. Alice and Bob
want ``2N`` shared pairs, made by swapping along ACB (y of them), ADB (z) or
ACDB (x). A pure edge carrying ``L`` swaps distills its ``2N`` copies into
``max(L, N)`` states before use.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .concurrence import (
    chain_concurrence,
    concurrence_pure,
    concurrence_werner,
    _check_alpha,
    _check_p,
)
from .distillation import ResourceError, distilled_concurrence

DEFAULT_ALPHA = 2.0**-0.25
ENUMERATION_CAP = 200


class PathId(str, enum.Enum):
    ACB = "ACB"
    ADB = "ADB"
    ACDB = "ACDB"


class EdgeId(str, enum.Enum):
    AC = "AC"
    CB = "CB"
    AD = "AD"
    DB = "DB"
    CD = "CD"


PATH_EDGES = {
    PathId.ACB: (EdgeId.AC, EdgeId.CB),
    PathId.ADB: (EdgeId.AD, EdgeId.DB),
    PathId.ACDB: (EdgeId.AC, EdgeId.CD, EdgeId.DB),
}


@dataclass(frozen=True)
class NetworkConfig:
    n_half: int
    p: float
    alpha: float = DEFAULT_ALPHA
    has_cd_edge: bool = True

    def __post_init__(self):
        if int(self.n_half) != self.n_half or self.n_half < 1:
            raise ValueError(f"n_half must be a positive integer, got {self.n_half!r}")
        object.__setattr__(self, "n_half", int(self.n_half))
        object.__setattr__(self, "p", _check_p(self.p))
        alpha = _check_alpha(self.alpha)
        if alpha >= 1.0:
            raise ValueError("alpha = 1 is a product state; the pure edges carry no entanglement")
        object.__setattr__(self, "alpha", alpha)

    @property
    def total(self) -> int:
        return 2 * self.n_half

    @property
    def werner_concurrence(self) -> float:
        return concurrence_werner(self.p)

    @property
    def pure_concurrence(self) -> float:
        return concurrence_pure(self.alpha)

    @property
    def warnings(self) -> tuple[str, ...]:
        """Conditions under which the model runs but leaves the intended regime."""
        out = []
        if self.pure_concurrence <= self.werner_concurrence:
            out.append("pure-edge concurrence does not exceed Werner concurrence")
        if self.n_half == 1:
            out.append("N = 1 is degenerate")
        return tuple(out)

    def paths(self) -> tuple[PathId, ...]:
        if self.has_cd_edge:
            return (PathId.ACB, PathId.ADB, PathId.ACDB)
        return (PathId.ACB, PathId.ADB)

    def without_cd(self) -> "NetworkConfig":
        return NetworkConfig(self.n_half, self.p, self.alpha, has_cd_edge=False)

    def with_cd(self) -> "NetworkConfig":
        return NetworkConfig(self.n_half, self.p, self.alpha, has_cd_edge=True)


class FlowAllocation(NamedTuple):
    """Swap counts per path: ``x`` on ACDB, ``y`` on ACB, ``z`` on ADB."""

    x: int
    y: int
    z: int

    def count(self, path: PathId) -> int:
        return {PathId.ACDB: self.x, PathId.ACB: self.y, PathId.ADB: self.z}[PathId(path)]

    def moved(self, src: PathId, dst: PathId) -> "FlowAllocation":
        """One swap switches from ``src`` to ``dst``."""
        counts = {PathId.ACDB: self.x, PathId.ACB: self.y, PathId.ADB: self.z}
        counts[PathId(src)] -= 1
        counts[PathId(dst)] += 1
        return FlowAllocation(counts[PathId.ACDB], counts[PathId.ACB], counts[PathId.ADB])


def validate_allocation(config: NetworkConfig, alloc) -> FlowAllocation:
    alloc = FlowAllocation(*(int(v) for v in alloc))
    if min(alloc) < 0:
        raise ValueError(f"negative path count in {tuple(alloc)}")
    if sum(alloc) != config.total:
        raise ValueError(f"allocation {tuple(alloc)} does not sum to 2N = {config.total}")
    if alloc.x and not config.has_cd_edge:
        raise ValueError("ACDB swaps require the CD edge")
    return alloc


def edge_load(alloc, edge: EdgeId) -> int:
    x, y, z = alloc
    return {
        EdgeId.AC: x + y,
        EdgeId.DB: x + z,
        EdgeId.CB: y,
        EdgeId.AD: z,
        EdgeId.CD: x,
    }[EdgeId(edge)]


def edge_concurrence(config: NetworkConfig, alloc, edge: EdgeId) -> float:
    edge = EdgeId(edge)
    if edge is EdgeId.CD and not config.has_cd_edge:
        raise ValueError("network has no CD edge")
    load = edge_load(alloc, edge)
    if load == 0:
        return 1.0
    if edge in (EdgeId.AC, EdgeId.DB):
        # Below N swaps the parties still distill to N Bell pairs and use a subset.
        return distilled_concurrence(config.alpha, config.total, max(load, config.n_half))
    if edge in (EdgeId.AD, EdgeId.CB):
        return config.werner_concurrence
    return 1.0


def path_concurrence(config: NetworkConfig, alloc, path: PathId) -> float:
    path = PathId(path)
    if path is PathId.ACDB and not config.has_cd_edge:
        raise ValueError("path ACDB needs the CD edge")
    return chain_concurrence(_link_on_path(config, alloc, e) for e in PATH_EDGES[path])


def _link_on_path(config, alloc, edge):
    # Werner edges keep their concurrence even when the profile leaves them
    # idle; a path's payoff is defined whether or not anyone uses it.
    if edge in (EdgeId.AD, EdgeId.CB):
        return config.werner_concurrence
    return edge_concurrence(config, alloc, edge)


def path_concurrences(config: NetworkConfig, alloc) -> dict[PathId, float]:
    return {path: path_concurrence(config, alloc, path) for path in config.paths()}


def average_concurrence(config: NetworkConfig, alloc) -> float:
    alloc = validate_allocation(config, alloc)
    total = 0.0
    for path in config.paths():
        count = alloc.count(path)
        if count:
            total += count * path_concurrence(config, alloc, path)
    return total / config.total


def enumerate_allocations(config: NetworkConfig) -> list[FlowAllocation]:
    n = config.n_half
    if n > ENUMERATION_CAP:
        raise ResourceError(f"N={n} exceeds enumeration cap {ENUMERATION_CAP}")
    total = config.total
    xs = range(total + 1) if config.has_cd_edge else range(1)
    return [FlowAllocation(x, y, total - x - y) for x in xs for y in range(total - x + 1)]

