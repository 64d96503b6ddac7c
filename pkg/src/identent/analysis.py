"""One-particle reduced density operators and von Neumann entropy (bits)."""
import numpy as np

from .errors import InvariantViolation, NotNormalized
from .linalg import hermitian_eigen

# Eigenvalues below this are exact zeros for the entropy sum.
EIGEN_FLOOR = 1e-12
DENSITY_TOL = 1e-10
COEFF_NORM_TOL = 1e-10


class NotADensityOperator(InvariantViolation):
    pass


def reduced_density(state):
    """Reduced one-particle density operator ``rho = C C^dagger``.

    For (anti)symmetric ``C`` tracing out either particle gives the same
    operator, so no slot argument is needed.
    """
    C = state.coeffs
    rho = C @ C.conj().T
    return 0.5 * (rho + rho.conj().T)


def partial_trace(state, slot):
    """Reduced operator of particle ``slot`` (0 or 1), keeping that slot.

    ``slot=0`` traces out the second particle, ``slot=1`` the first.
    """
    C = state.coeffs
    if slot == 0:
        return C @ C.conj().T
    if slot == 1:
        return C.T @ C.conj()
    raise ValueError(f"slot must be 0 or 1, got {slot}")


def _check_density(rho):
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotADensityOperator("density operator must be square")
    if np.max(np.abs(rho - rho.conj().T)) > DENSITY_TOL:
        raise NotADensityOperator("density operator is not Hermitian")
    if abs(np.trace(rho).real - 1) > DENSITY_TOL:
        raise NotADensityOperator(f"trace is {np.trace(rho).real:.12g}, expected 1")
    return rho


def spectrum(rho):
    """Ascending eigenvalues of a density operator."""
    return hermitian_eigen(_check_density(rho)).eigenvalues


def _shannon_bits(p):
    p = p[p > EIGEN_FLOOR]
    return float(-np.sum(p * np.log2(p))) + 0.0  # no negative zero


def von_neumann_entropy(rho):
    """``S(rho) = -Tr[rho log2 rho]``, clamped to ``[0, log2 d]``.

    Examples
    --------
    >>> von_neumann_entropy(np.diag([0.5, 0.5]))
    1.0
    """
    lam = spectrum(rho)
    if lam[0] < -DENSITY_TOL:
        raise NotADensityOperator(f"negative eigenvalue {lam[0]:.3g}")
    S = _shannon_bits(lam)
    return min(max(S, 0.0), float(np.log2(len(lam))))


def _squared_weights(coeffs):
    w = np.abs(np.asarray(coeffs, dtype=np.complex128).reshape(-1)) ** 2
    if abs(w.sum() - 1) > COEFF_NORM_TOL:
        raise NotNormalized(f"squared coefficients sum to {w.sum():.12g}, expected 1")
    return w


def entropy_from_slater(a):
    """Entropy of a fermion state from its Slater coefficients.

    Each pair contributes two eigenvalues ``|a_i|^2 / 2``, hence
    ``S = 1 - sum |a_i|^2 log2 |a_i|^2``.
    """
    return 1.0 + _shannon_bits(_squared_weights(a))


def entropy_from_schmidt(b):
    """Entropy of a boson state from its Schmidt coefficients,
    ``S = -sum b_i^2 log2 b_i^2``."""
    return _shannon_bits(_squared_weights(b))
