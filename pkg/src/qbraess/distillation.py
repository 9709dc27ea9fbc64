"""Deterministic LOCC distillation of pure two-qubit states.

``n`` copies of ``alpha|00> + sqrt(1-alpha^2)|11>`` are concentrated into
``m <= n`` copies with a larger-coefficient-squared of
``max(1/2, (alpha^2)^(n/m))``: the largest Schmidt weight of the whole
ensemble, ``alpha^(2n)``, is preserved and split evenly over the ``m``
targets. :func:`majorization_feasible` checks the resulting transform
against Nielsen's criterion by brute force over the full tensor spectra.
"""
from __future__ import annotations

import math

import numpy as np
from scipy.special import comb

from .concurrence import DomainError, _check_alpha, concurrence_pure

SPECTRUM_CAP = 20
MAJORIZATION_TOL = 1e-10


class ResourceError(RuntimeError):
    """Requested enumeration exceeds the configured size cap."""


def tensor_spectrum(alpha_sq: float, n: int) -> np.ndarray:
    """Schmidt weights of ``n`` copies of a two-qubit pure state, sorted descending.

    Parameters
    ----------
    alpha_sq : float
        Larger Schmidt weight of a single copy, in ``[1/2, 1]``.
    n : int
        Number of copies, at most ``SPECTRUM_CAP``.

    Returns
    -------
    ndarray of shape (2**n,)
        The products ``alpha_sq**k * (1-alpha_sq)**(n-k)``, each repeated
        ``C(n, k)`` times.
    """
    if not 0.5 - 1e-12 <= alpha_sq <= 1.0 + 1e-12:
        raise DomainError(f"alpha_sq={alpha_sq!r} outside [1/2, 1]")
    n = int(n)
    if n < 1:
        raise DomainError("need at least one copy")
    if n > SPECTRUM_CAP:
        raise ResourceError(f"n={n} exceeds spectrum cap {SPECTRUM_CAP}")
    alpha_sq = min(max(alpha_sq, 0.5), 1.0)
    k = np.arange(n, -1, -1)
    values = alpha_sq**k * (1.0 - alpha_sq) ** (n - k)
    counts = comb(n, k, exact=False).astype(np.int64)
    return np.sort(np.repeat(values, counts))[::-1]


def distilled_alpha(source_alpha: float, n: int, m: int) -> float:
    """Larger Schmidt coefficient after distilling ``n`` copies into ``m``."""
    source_alpha = _check_alpha(source_alpha)
    n, m = int(n), int(m)
    if n < 1 or m < 1:
        raise DomainError("copy counts must be positive")
    if m > n:
        raise DomainError(f"cannot distill {n} copies into {m}")
    alpha_sq = max(0.5, (source_alpha * source_alpha) ** (n / m))
    return math.sqrt(alpha_sq)


def distilled_concurrence(source_alpha: float, n: int, m: int) -> float:
    alpha = distilled_alpha(source_alpha, n, m)
    if alpha * alpha <= 0.5:
        return 1.0
    return concurrence_pure(alpha)


def majorization_feasible(source, target) -> bool:
    """True when ``source`` can be turned into ``target`` by deterministic LOCC.

    Every prefix sum of the sorted target must dominate the corresponding
    prefix sum of the sorted source; the shorter spectrum is zero-padded.
    """
    src = np.sort(np.asarray(source, dtype=float))[::-1]
    tgt = np.sort(np.asarray(target, dtype=float))[::-1]
    size = max(src.size, tgt.size)
    src = np.pad(src, (0, size - src.size))
    tgt = np.pad(tgt, (0, size - tgt.size))
    return bool(np.all(np.cumsum(tgt) >= np.cumsum(src) - MAJORIZATION_TOL))
