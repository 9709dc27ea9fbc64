"""Density-matrix oracle for entanglement swapping.

Builds the explicit four-qubit state of two pairs, projects the two middle
qubits onto each Bell state, and averages the Wootters concurrence of the
resulting outer-pair states. This is a brute-force check on the closed-form
product rule in :mod:`qbraess.concurrence`; it shares no code with it.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .concurrence import BellState, LinkState, PureSchmidtState, WernerState

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

_SQ2 = np.sqrt(0.5)
PHI_PLUS = np.array([_SQ2, 0, 0, _SQ2], dtype=complex)
PHI_MINUS = np.array([_SQ2, 0, 0, -_SQ2], dtype=complex)
PSI_PLUS = np.array([0, _SQ2, _SQ2, 0], dtype=complex)
PSI_MINUS = np.array([0, _SQ2, -_SQ2, 0], dtype=complex)
BELL_BASIS = (PHI_PLUS, PHI_MINUS, PSI_PLUS, PSI_MINUS)

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_YY = np.kron(_Y, _Y)

# Pauli applied to the far qubit after each Bell outcome, in BELL_BASIS order.
PAULI_FRAME = (_I2, _Z, _X, _Z @ _X)


class ValidationError(ValueError):
    """Matrix is not a valid two-qubit density matrix."""


@dataclass(frozen=True)
class SwapOutcome:
    probability: float
    post_state: np.ndarray


def validate_density_matrix(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise ValidationError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > TRACE_TOL:
        raise ValidationError(f"trace {np.trace(rho).real:.3g} != 1")
    if np.linalg.eigvalsh(rho).min() < -PSD_TOL:
        raise ValidationError("density matrix has a negative eigenvalue")
    return rho


def pure_density(alpha: float) -> np.ndarray:
    beta = np.sqrt(max(0.0, 1.0 - alpha * alpha))
    psi = np.array([alpha, 0, 0, beta], dtype=complex)
    return np.outer(psi, psi.conj())


def werner_density(p: float) -> np.ndarray:
    return p * np.outer(PHI_PLUS, PHI_PLUS.conj()) + (1.0 - p) / 4.0 * np.eye(4)


def bell_density() -> np.ndarray:
    return np.outer(PHI_PLUS, PHI_PLUS.conj())


def density_matrix(state: LinkState) -> np.ndarray:
    if isinstance(state, BellState):
        return bell_density()
    if isinstance(state, PureSchmidtState):
        return pure_density(state.alpha)
    if isinstance(state, WernerState):
        return werner_density(state.p)
    raise TypeError(f"not a link state: {state!r}")


def _psd_sqrt(rho: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rho)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def wootters_concurrence(rho) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    The square roots of the eigenvalues of ``rho @ rho_tilde`` are the
    singular values of ``sqrt(rho) @ sqrt(rho_tilde)``. Taking them directly
    avoids the square root of near-zero eigenvalues, which would turn 1e-17
    noise on rank-deficient states into 1e-9 errors.
    """
    rho = validate_density_matrix(rho)
    s = _psd_sqrt(rho)
    # sqrt(rho_tilde) = YY sqrt(rho)* YY; the trailing unitary YY drops out.
    lam = np.linalg.svd(s @ _YY @ s.conj(), compute_uv=False)
    return float(min(1.0, max(0.0, lam[0] - lam[1] - lam[2] - lam[3])))


def bell_swap_outcomes(a: LinkState, b: LinkState, correct: bool = True) -> list[SwapOutcome]:
    """Bell-measure the middle qubits of ``a (x) b`` and return all four branches.

    Qubit order is (left of ``a``, right of ``a``, left of ``b``, right of
    ``b``); the measurement acts on qubits 1 and 2. With ``correct`` the Pauli
    frame fix is applied to the last qubit so every branch is rotated back to
    the ``phi+`` frame.
    """
    rho_a = validate_density_matrix(density_matrix(a))
    rho_b = validate_density_matrix(density_matrix(b))
    joint = np.kron(rho_a, rho_b).reshape((2,) * 8)

    outcomes = []
    for bell, pauli in zip(BELL_BASIS, PAULI_FRAME):
        bv = bell.reshape(2, 2)
        post = np.einsum("jk,ajkdxlmy,lm->adxy", bv.conj(), joint, bv).reshape(4, 4)
        prob = float(np.trace(post).real)
        if prob <= 0.0:
            outcomes.append(SwapOutcome(0.0, np.eye(4, dtype=complex) / 4.0))
            continue
        post = post / prob
        if correct:
            u = np.kron(_I2, pauli)
            post = u @ post @ u.conj().T
        post = (post + post.conj().T) / 2.0
        outcomes.append(SwapOutcome(prob, validate_density_matrix(post)))
    return outcomes


def bell_swap_average_concurrence(a: LinkState, b: LinkState, correct: bool = True) -> float:
    """Outcome-averaged concurrence of the outer pair after swapping ``a`` with ``b``."""
    return sum(
        o.probability * wootters_concurrence(o.post_state)
        for o in bell_swap_outcomes(a, b, correct=correct)
        if o.probability > 0.0
    )
