"""Pure states of two identical particles.

A state is stored through its coefficient matrix ``C`` in a fixed
single-particle basis, ``|psi> = sum_ij C[i, j] |i> (x) |j>``.  Fermion
states have ``C = -C^T``, boson states ``C = C^T``, and all states have unit
Frobenius norm.
"""
import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionTooSmall,
    LinearlyDependent,
    NotNormalized,
    WrongSymmetry,
)

SYMMETRY_TOL = 1e-10
NORM_TOL = 1e-10
# Norms this close to 1 are silently rescaled by from_matrix.
RENORMALIZE_TOL = 1e-6
DEPENDENCE_TOL = 1e-12
# Norms this close to one are left alone so that serialized states round-trip bit for bit.
_EXACT_NORM_TOL = 1e-14


class Statistics(enum.Enum):
    FERMION = "fermion"
    BOSON = "boson"

    @property
    def sign(self):
        """``-1`` for fermions, ``+1`` for bosons: ``C^T = sign * C``."""
        return -1 if self is Statistics.FERMION else 1

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown statistics {value!r}; expected 'fermion' or 'boson'") from None


FERMION = Statistics.FERMION
BOSON = Statistics.BOSON


@dataclass(frozen=True, eq=False)
class TwoParticleState:
    statistics: Statistics
    coeffs: np.ndarray

    @property
    def dim(self):
        return self.coeffs.shape[0]

    @property
    def ket(self):
        """The state as a length ``d**2`` vector in the product basis."""
        return self.coeffs.reshape(-1).copy()

    def __repr__(self):
        return f"TwoParticleState(dim={self.dim}, statistics={self.statistics.value})"


def _make(statistics, C):
    C = np.array(C, dtype=np.complex128)
    C.setflags(write=False)
    return TwoParticleState(statistics, C)


def from_matrix(d, statistics, C):
    """Validate a coefficient matrix and wrap it as a state.

    The matrix is projected exactly onto the (anti)symmetric subspace once
    its residual passes the ``1e-10`` check, and rescaled to unit norm when
    its norm is within ``1e-6`` of one.

    Raises
    ------
    DimensionTooSmall
        ``d < 2``.
    DimensionMismatch
        ``C`` is not ``d x d``.
    WrongSymmetry
        ``C`` lacks the exchange symmetry of ``statistics``.
    NotNormalized
        ``|C|_F`` differs from 1 by more than ``1e-6``.
    """
    statistics = Statistics.parse(statistics)
    if d < 2:
        raise DimensionTooSmall(f"dimension must be at least 2, got {d}")
    C = np.asarray(C, dtype=np.complex128)
    if C.shape != (d, d):
        raise DimensionMismatch(f"expected a {d}x{d} matrix, got shape {C.shape}")
    if not np.all(np.isfinite(C)):
        raise ValueError("coefficient matrix has non-finite entries")
    sign = statistics.sign
    residual = float(np.max(np.abs(C - sign * C.T)))
    if residual > SYMMETRY_TOL:
        kind = "antisymmetric" if sign < 0 else "symmetric"
        raise WrongSymmetry(
            f"{statistics.value} states need a {kind} coefficient matrix "
            f"(residual {residual:.3g})"
        )
    C = 0.5 * (C + sign * C.T)
    norm = float(np.linalg.norm(C))
    if abs(norm - 1) > RENORMALIZE_TOL:
        raise NotNormalized(f"state norm is {norm:.12g}, expected 1")
    if abs(norm - 1) > _EXACT_NORM_TOL:
        C = C / norm
    return _make(statistics, C)


def _unit(v, name):
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    norm = np.linalg.norm(v)
    if norm == 0 or not np.isfinite(norm):
        raise ValueError(f"{name} must be a nonzero finite vector")
    return v / norm


def _pair(phi, chi):
    phi, chi = _unit(phi, "phi"), _unit(chi, "chi")
    if phi.shape != chi.shape:
        raise DimensionMismatch(f"vector dimensions differ: {phi.size} vs {chi.size}")
    if phi.size < 2:
        raise DimensionTooSmall("single-particle dimension must be at least 2")
    return phi, chi


def antisymmetrize(phi, chi):
    """Fermion state obtained by antisymmetrizing ``phi (x) chi``.

    Inputs are normalized first.  The result has ``C`` proportional to
    ``phi chi^T - chi phi^T``, normalized by ``sqrt(2 (1 - |<phi|chi>|^2))``.

    Raises
    ------
    LinearlyDependent
        If ``|<phi|chi>| > 1 - 1e-12``.
    """
    phi, chi = _pair(phi, chi)
    overlap = abs(np.vdot(phi, chi))
    if overlap > 1 - DEPENDENCE_TOL:
        raise LinearlyDependent("antisymmetrization annihilates parallel vectors")
    C = np.outer(phi, chi)
    C = C - C.T  # exactly antisymmetric; the two outer products can round differently
    return _make(FERMION, C / np.linalg.norm(C))


def symmetrize(phi, chi):
    """Boson state obtained by symmetrizing ``phi (x) chi``.

    For ``phi == chi`` this is the product state ``phi (x) phi``.
    """
    phi, chi = _pair(phi, chi)
    C = np.outer(phi, chi)
    C = C + C.T
    return _make(BOSON, C / np.linalg.norm(C))


def canonical_phase(state):
    """Same state with its first non-negligible coefficient (row-major) made
    real positive."""
    flat = state.coeffs.reshape(-1)
    idx = int(np.argmax(np.abs(flat) > 1e-12))
    c = flat[idx]
    if abs(c) == 0:
        return state
    C = state.coeffs * (abs(c) / c)
    i, j = divmod(idx, state.dim)
    C[i, j] = abs(c)  # exactly real, not just to rounding
    C[j, i] = state.statistics.sign * abs(c) if i != j else abs(c)
    return _make(state.statistics, C)


def random_state(d, statistics, seed):
    """Gaussian random state projected onto the right exchange symmetry.

    Deterministic for a fixed ``seed``; returned in canonical phase.
    """
    statistics = Statistics.parse(statistics)
    if d < 2:
        raise DimensionTooSmall(f"dimension must be at least 2, got {d}")
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    C = G + statistics.sign * G.T
    return canonical_phase(_make(statistics, C / np.linalg.norm(C)))


def fidelity(a, b):
    """``|<a|b>|^2`` between two states of equal dimension."""
    A = a.coeffs if isinstance(a, TwoParticleState) else np.asarray(a)
    B = b.coeffs if isinstance(b, TwoParticleState) else np.asarray(b)
    if A.shape != B.shape:
        raise DimensionMismatch("states have different dimensions")
    return float(abs(np.vdot(A, B)) ** 2)
