"""The classical four-node Braess road network, for comparison.

Vehicles travel from A to D. Links: 1 = A-B (10x), 2 = A-C (50+x),
3 = C-D (10x), 4 = B-D (50+x) and the optional shortcut 5 = B-C (10+x).
Equilibria are found by exhaustive search over integer allocations using the
same unilateral-deviation rule as the swapping game.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple


@dataclass(frozen=True)
class TrafficLink:
    id: int
    a: float
    b: float

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("link latency coefficients must be non-negative")


LINKS = {
    1: TrafficLink(1, 0, 10),
    2: TrafficLink(2, 50, 1),
    3: TrafficLink(3, 0, 10),
    4: TrafficLink(4, 50, 1),
    5: TrafficLink(5, 10, 1),
}

PATHS = ("ABD", "ACD", "ABCD")
PATH_LINKS = {"ABD": (1, 4), "ACD": (2, 3), "ABCD": (1, 5, 3)}


class TrafficAllocation(NamedTuple):
    abd: int
    acd: int
    abcd: int = 0

    def count(self, path: str) -> int:
        return self[PATHS.index(path)]

    def moved(self, src: str, dst: str) -> "TrafficAllocation":
        counts = list(self)
        counts[PATHS.index(src)] -= 1
        counts[PATHS.index(dst)] += 1
        return TrafficAllocation(*counts)


def link_time(link: TrafficLink, flow: int):
    if flow < 0:
        raise ValueError("link flow must be non-negative")
    return link.a + link.b * flow


def link_flows(alloc: TrafficAllocation) -> dict[int, int]:
    abd, acd, abcd = alloc
    return {1: abd + abcd, 2: acd, 3: acd + abcd, 4: abd, 5: abcd}


def path_time(alloc: TrafficAllocation, path: str):
    alloc = TrafficAllocation(*alloc)
    flows = link_flows(alloc)
    return sum(link_time(LINKS[i], flows[i]) for i in PATH_LINKS[path])


def average_time(alloc: TrafficAllocation) -> Fraction:
    alloc = TrafficAllocation(*alloc)
    total = sum(Fraction(alloc.count(p)) * Fraction(path_time(alloc, p)) for p in PATHS)
    return total / sum(alloc)


def _paths(with_link5: bool):
    return PATHS if with_link5 else PATHS[:2]


def is_traffic_nash(alloc: TrafficAllocation, with_link5: bool) -> bool:
    alloc = TrafficAllocation(*alloc)
    if alloc.abcd and not with_link5:
        raise ValueError("ABCD flow requires link 5")
    paths = _paths(with_link5)
    for src in paths:
        if alloc.count(src) == 0:
            continue
        current = path_time(alloc, src)
        for dst in paths:
            if dst != src and path_time(alloc.moved(src, dst), dst) < current:
                return False
    return True


def enumerate_traffic(vehicles: int, with_link5: bool) -> list[TrafficAllocation]:
    if with_link5:
        return [
            TrafficAllocation(a, b, vehicles - a - b)
            for a in range(vehicles + 1)
            for b in range(vehicles - a + 1)
        ]
    return [TrafficAllocation(a, vehicles - a, 0) for a in range(vehicles + 1)]


def traffic_nash(vehicles: int, with_link5: bool) -> tuple[TrafficAllocation, Fraction]:
    """First equilibrium in lexicographic order and its average travel time."""
    if vehicles < 1:
        raise ValueError("need at least one vehicle")
    for alloc in enumerate_traffic(vehicles, with_link5):
        if is_traffic_nash(alloc, with_link5):
            return alloc, average_time(alloc)
    raise RuntimeError("no pure equilibrium found")
