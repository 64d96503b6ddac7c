"""Slater, bosonic Schmidt and distinguishable-particle Schmidt decompositions.

Fermion state::

    |psi> = sum_i a_i (|u_2i> |u_2i+1> - |u_2i+1> |u_2i>) / sqrt(2)

Boson state::

    |psi> = sum_i b_i |u_i> |u_i>

Coefficients are real, nonnegative and descending in both cases; phases of
the fermion coefficients are absorbed into the second vector of each pair.
"""
from dataclasses import dataclass

import numpy as np

from .errors import NotNormalized
from .linalg import svd, takagi, youla_antisymmetric
from .states import BOSON, FERMION, TwoParticleState, _make

DEFAULT_EPS = 1e-9
_EPS_RANGE = (1e-12, 1e-3)


def _check_eps(eps):
    lo, hi = _EPS_RANGE
    if not lo <= eps <= hi:
        raise ValueError(f"counting threshold must lie in [{lo:g}, {hi:g}], got {eps:g}")
    return float(eps)


def _require(state, statistics):
    if state.statistics is not statistics:
        raise ValueError(f"expected a {statistics.value} state, got {state.statistics.value}")


@dataclass(frozen=True, eq=False)
class SlaterDecomposition:
    pair_basis: np.ndarray
    coefficients: np.ndarray
    eps: float = DEFAULT_EPS

    @property
    def dim(self):
        return self.pair_basis.shape[0]

    @property
    def slater_number(self):
        return int(np.sum(self.coefficients > self.eps))

    def pair(self, i):
        """The orthonormal pair ``(|2i-1>, |2i>)`` of term ``i`` (0-based)."""
        return self.pair_basis[:, 2 * i], self.pair_basis[:, 2 * i + 1]


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    basis: np.ndarray
    coefficients: np.ndarray
    eps: float = DEFAULT_EPS

    @property
    def dim(self):
        return self.basis.shape[0]

    @property
    def schmidt_number(self):
        return int(np.sum(self.coefficients > self.eps))


@dataclass(frozen=True, eq=False)
class DistinguishableSchmidt:
    """``|psi> = sum_k s_k |left_k> (x) |right_k>``."""

    left: np.ndarray
    right: np.ndarray
    coefficients: np.ndarray
    eps: float = DEFAULT_EPS

    @property
    def schmidt_number(self):
        return int(np.sum(self.coefficients > self.eps))


def slater_decompose(state, eps=DEFAULT_EPS):
    """Slater decomposition of a fermion state via the Youla form of ``C``.

    The Youla values ``z_i`` relate to the Slater coefficients by
    ``a_i = sqrt(2) z_i``, which makes ``sum a_i^2 = |C|_F^2 = 1``.
    """
    _require(state, FERMION)
    eps = _check_eps(eps)
    U, z = youla_antisymmetric(state.coeffs)
    return SlaterDecomposition(U, np.sqrt(2.0) * z, eps)


def schmidt_decompose(state, eps=DEFAULT_EPS):
    """Bosonic Schmidt decomposition via Takagi factorization of ``C``."""
    _require(state, BOSON)
    eps = _check_eps(eps)
    U, b = takagi(state.coeffs)
    return SchmidtDecomposition(U, b, eps)


def decompose(state, eps=DEFAULT_EPS):
    """Slater or Schmidt decomposition, according to the state's statistics."""
    if state.statistics is FERMION:
        return slater_decompose(state, eps)
    return schmidt_decompose(state, eps)


def schmidt_distinguishable(M, eps=DEFAULT_EPS):
    """Ordinary Schmidt decomposition of a normalized ``d1 x d2`` coefficient
    matrix, treating the two particles as distinguishable."""
    if isinstance(M, TwoParticleState):
        M = M.coeffs
    M = np.asarray(M, dtype=np.complex128)
    norm = float(np.linalg.norm(M))
    if abs(norm - 1) > 1e-10:
        raise NotNormalized(f"state norm is {norm:.12g}, expected 1")
    U, s, V = svd(M)
    k = len(s)
    return DistinguishableSchmidt(U[:, :k], V[:, :k].conj(), s, _check_eps(eps))


def reconstruct(dec):
    """The state described by a Slater or bosonic Schmidt decomposition."""
    if isinstance(dec, SlaterDecomposition):
        C = np.zeros((dec.dim, dec.dim), dtype=np.complex128)
        for i, a in enumerate(dec.coefficients):
            u, v = dec.pair(i)
            C += a / np.sqrt(2.0) * (np.outer(u, v) - np.outer(v, u))
        return _make(FERMION, C)
    if isinstance(dec, SchmidtDecomposition):
        U, b = dec.basis, dec.coefficients
        return _make(BOSON, (U * b) @ U.T)
    raise TypeError(f"cannot reconstruct from {type(dec).__name__}")


def counting_number(dec):
    """Slater number or Schmidt number, whichever the record carries."""
    if isinstance(dec, SlaterDecomposition):
        return dec.slater_number
    return dec.schmidt_number

