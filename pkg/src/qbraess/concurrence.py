"""Two-qubit link states and the concurrence algebra for swapping chains.

A link between two nodes holds one of three resources: a pure Schmidt state
``alpha|00> + sqrt(1 - alpha^2)|11>``, a Werner state with mixing parameter
``p``, or a Bell pair. Entanglement swapping along a chain of links yields a
final state whose concurrence is the product of the link concurrences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

INV_SQRT2 = 1.0 / math.sqrt(2.0)
ATOL = 1e-9


class DomainError(ValueError):
    """A state parameter lies outside its physical range."""


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (INV_SQRT2 - ATOL <= alpha <= 1.0 + ATOL):
        raise DomainError(
            f"alpha={alpha!r} must be the larger Schmidt coefficient, in [1/sqrt(2), 1]"
        )
    return min(max(alpha, INV_SQRT2), 1.0)


def _check_p(p: float) -> float:
    p = float(p)
    if not (1.0 / 3.0 - ATOL <= p <= 1.0 + ATOL):
        raise DomainError(f"Werner parameter p={p!r} must lie in [1/3, 1]")
    return min(max(p, 1.0 / 3.0), 1.0)


@dataclass(frozen=True)
class PureSchmidtState:
    alpha: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))

    @property
    def beta(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.alpha**2))


@dataclass(frozen=True)
class WernerState:
    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", _check_p(self.p))


@dataclass(frozen=True)
class BellState:
    """The maximally entangled pair ``(|00> + |11>)/sqrt(2)``."""


LinkState = Union[PureSchmidtState, WernerState, BellState]
Bell = BellState()


def concurrence_pure(alpha: float) -> float:
    """Concurrence ``2 alpha sqrt(1 - alpha^2)`` of a pure Schmidt state."""
    alpha = _check_alpha(alpha)
    return 2.0 * alpha * math.sqrt(max(0.0, 1.0 - alpha * alpha))


def concurrence_werner(p: float) -> float:
    """Concurrence ``(3p - 1)/2`` of a Werner state."""
    p = _check_p(p)
    return (3.0 * p - 1.0) / 2.0


def link_concurrence(state: LinkState) -> float:
    if isinstance(state, BellState):
        return 1.0
    if isinstance(state, PureSchmidtState):
        return concurrence_pure(state.alpha)
    if isinstance(state, WernerState):
        return concurrence_werner(state.p)
    raise TypeError(f"not a link state: {state!r}")


def chain_concurrence(links: Iterable[float]) -> float:
    """Concurrence of the end-to-end state after swapping along ``links``.

    Parameters
    ----------
    links : iterable of float
        Concurrence of each link along the path, in order.

    Returns
    -------
    float
        The product of the link concurrences.
    """
    links = [float(c) for c in links]
    if not links:
        raise ValueError("chain_concurrence needs at least one link")
    for c in links:
        if not (-ATOL <= c <= 1.0 + ATOL):
            raise DomainError(f"link concurrence {c!r} outside [0, 1]")
    return reduce(lambda a, b: a * b, links)
