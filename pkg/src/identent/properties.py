"""Property attribution for two identical particles.

One constituent has a complete set of properties when some one-particle
projector ``P = |p><p|`` gives

    <psi| P(x)(1-P) + (1-P)(x)P + P(x)P |psi> = 1,

the probability that at least one particle is found in ``|p>``.  With
``rho = C C^dagger`` this reduces to

    E(p) = 2 <p|rho|p> - |p^dagger C conj(p)|^2,

evaluated by :func:`ep_expectation`.  ``E(p) = 1`` holds exactly when ``p``
is a factor of the state, ``C = p a^T +/- a p^T``, so it holds for every
(anti)symmetrized product, including products of non-orthogonal vectors.

Both constituents have complete sets of properties when the state is
``p (x) p`` (``<P(x)P> = 1``) or when one particle is in ``p`` and the other
in an orthogonal ``q`` (``<P(x)Q + Q(x)P> = 2 |p^dagger C conj(q)|^2 = 1``).
:func:`pair_expectation` evaluates the latter.  Their maxima are known in
closed form from the decompositions (``b1^2`` and ``(b1 + b2)^2 / 2`` for
bosons, ``a1^2`` for fermions) and are attained by the decomposition
candidates, which is how :func:`find_property_projector` evaluates them.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .analysis import reduced_density
from .classify import pair_from_decomposition
from .decomp import DEFAULT_EPS, SlaterDecomposition, decompose
from .errors import DimensionMismatch
from .linalg import hermitian_eigen
from .states import FERMION

DEFAULT_TOL = 1e-7
DEFAULT_RESTARTS = 32
_MAX_ITER = 500
_STALL_TOL = 1e-13


@dataclass(frozen=True, eq=False)
class PropertyReport:
    """Outcome of the projector search.

    ``max_value``/``argmax``/``attained`` concern one constituent
    (``E(p) = 1``).  ``both_value``/``both_pair``/``both_attained`` concern
    both constituents: ``both_pair`` is ``(p, p)`` or an orthonormal
    ``(p, q)``.
    """

    max_value: float
    argmax: np.ndarray
    attained: bool
    restarts_used: int
    tolerance: float
    both_value: float = 0.0
    both_pair: Optional[tuple] = None
    both_attained: bool = False


def _unit(p, dim):
    p = np.asarray(p, dtype=np.complex128).reshape(-1)
    if p.size != dim:
        raise DimensionMismatch(f"projector has dimension {p.size}, state has {dim}")
    return p / np.linalg.norm(p)


def _unit_columns(P):
    return P / np.linalg.norm(P, axis=0, keepdims=True)


def _batch_values(C, rho, P):
    """``E`` for every column of ``P`` (unit vectors)."""
    quad = np.einsum("ir,ir->r", P.conj(), rho @ P).real
    cross = np.einsum("ir,ir->r", P.conj(), C @ P.conj())
    return 2 * quad - np.abs(cross) ** 2


def _clamp(x):
    return float(min(max(x, 0.0), 1.0))


def ep_expectation(state, p):
    """Probability that at least one particle is found in state ``p``.

    ``p`` is normalized first; the result is clamped to ``[0, 1]``.
    """
    p = _unit(p, state.dim)
    return _clamp(_batch_values(state.coeffs, reduced_density(state), p[:, None])[0])


def same_expectation(state, p):
    """Probability that both particles are found in state ``p``."""
    p = _unit(p, state.dim)
    return _clamp(abs(p.conj() @ state.coeffs @ p.conj()) ** 2)


def pair_expectation(state, p, q):
    """Probability that one particle is found in ``p`` and the other in ``q``.

    ``p`` and ``q`` must be orthogonal (within 1e-10 after normalization).
    """
    p, q = _unit(p, state.dim), _unit(q, state.dim)
    if abs(np.vdot(p, q)) > 1e-10:
        raise ValueError("p and q must be orthogonal")
    return _clamp(2 * abs(p.conj() @ state.coeffs @ q.conj()) ** 2)


def _candidates(rho, dec):
    cols = [hermitian_eigen(rho).eigenvectors]
    if isinstance(dec, SlaterDecomposition):
        cols.append(dec.pair_basis)
    else:
        cols.append(dec.basis)
        if dec.schmidt_number == 2:
            u1, u2 = dec.basis[:, 0], dec.basis[:, 1]
            cols.append(np.column_stack([u1 + 1j * u2, u1 - 1j * u2]) / np.sqrt(2))
    pair = pair_from_decomposition(dec)
    if pair is not None:
        cols.append(np.column_stack(pair))
    return _unit_columns(np.hstack(cols))


def _ascend(C, rho, P):
    """Projected gradient ascent of ``E`` on the unit sphere, all columns at once.

    Steps are accepted only when they increase ``E``; each column keeps its
    own step length, grown on success and halved on failure.
    """
    values = _batch_values(C, rho, P)
    step = np.full(P.shape[1], 0.5 / max(float(np.linalg.eigvalsh(rho)[-1]), 1e-12))
    for _ in range(_MAX_ITER):
        cross = np.einsum("ir,ir->r", P, C.conj() @ P)  # p^T conj(C) p
        grad = rho @ P - (C @ P.conj()) * cross
        grad -= P * np.einsum("ir,ir->r", P.conj(), grad).real
        trial = _unit_columns(P + step * grad)
        new = _batch_values(C, rho, trial)
        better = new > values
        gain = float(np.max(new - values, initial=0.0))
        P = np.where(better, trial, P)
        values = np.where(better, new, values)
        step = np.where(better, step * 1.5, step * 0.5)
        if gain < _STALL_TOL:
            break
    return P, values


def _both_constituents(state, dec):
    if isinstance(dec, SlaterDecomposition):
        p, q = dec.pair(0)
        return pair_expectation(state, p, q), (p.copy(), q.copy())
    u1, u2 = dec.basis[:, 0], dec.basis[:, 1]
    same = same_expectation(state, u1)
    p, q = (u1 + 1j * u2) / np.sqrt(2), (u1 - 1j * u2) / np.sqrt(2)
    split = pair_expectation(state, p, q)
    if same >= split:
        return same, (u1.copy(), u1.copy())
    return split, (p, q)


def find_property_projector(state, tol=DEFAULT_TOL, restarts=DEFAULT_RESTARTS, seed=0, eps=DEFAULT_EPS):
    """Search for a projector attaining ``E = 1``.

    Exact candidates come first: the eigenvectors of ``rho``, the
    decomposition basis (with ``(u1 +/- i u2)/sqrt(2)`` for Schmidt number
    2) and the desymmetrized pair.  If none attains, boson states get
    ``restarts`` random starts refined by gradient ascent.  Fermion states
    skip the ascent: their functional is a Rayleigh quotient already
    maximized by the top eigenvector.

    ``max_value`` is the best value found; when it is below one it is a
    lower bound on the supremum.  The both-constituent fields are filled
    from the closed-form maximizers.  Deterministic for a fixed ``seed``.
    """
    C = state.coeffs
    rho = reduced_density(state)
    dec = decompose(state, eps)
    P = _candidates(rho, dec)
    values = _batch_values(C, rho, P)
    used = 0
    if values.max() < 1 - tol and state.statistics is not FERMION and restarts > 0:
        rng = np.random.default_rng(seed)
        start = rng.standard_normal((state.dim, restarts)) + 1j * rng.standard_normal((state.dim, restarts))
        P, values = _ascend(C, rho, np.hstack([P, _unit_columns(start)]))
        used = restarts
    best = int(np.argmax(values))
    max_value = _clamp(values[best])
    both_value, both_pair = _both_constituents(state, dec)
    return PropertyReport(
        max_value=max_value,
        argmax=P[:, best].copy(),
        attained=max_value >= 1 - tol,
        restarts_used=used,
        tolerance=tol,
        both_value=both_value,
        both_pair=both_pair,
        both_attained=both_value >= 1 - tol,
    )
