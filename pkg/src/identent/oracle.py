"""Brute-force verifiers.

Nothing here goes through the code it checks: entropies come from the full
``d^2 x d^2`` density operator with an explicit partial trace, projector
expectations from explicitly assembled two-particle operators, and
reconstructions from Kronecker products of the basis vectors.  Only plain
numpy is used.  :func:`verify_state` runs every check against the fast
paths.
"""
from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooLarge

MAX_BRUTE_DIM = 16
CHECK_TOL = 1e-9
# Complex entries per chunk of stacked d^2 x d^2 operators.
_CHUNK_ENTRIES = 1 << 20


@dataclass(frozen=True)
class VerificationOutcome:
    check_name: str
    passed: bool
    measured_error: float
    tolerance: float


def _outcome(name, error, tol=CHECK_TOL):
    error = float(error)
    return VerificationOutcome(name, bool(error <= tol), error, tol)


def _ket(state):
    if state.dim > MAX_BRUTE_DIM:
        raise DimensionTooLarge(f"brute-force checks support d <= {MAX_BRUTE_DIM}, got {state.dim}")
    return np.asarray(state.coeffs, dtype=np.complex128).reshape(-1)


def brute_reduced_density(state):
    """Partial trace of ``|psi><psi|`` over the second particle, summed index by index."""
    d = state.dim
    psi = _ket(state)
    full = np.outer(psi, psi.conj()).reshape(d, d, d, d)  # [i, j, k, l] = <i j|rho|k l>
    rho = np.zeros((d, d), dtype=np.complex128)
    for j in range(d):
        rho += full[:, j, :, j]
    return rho


def brute_entropy(state):
    """Von Neumann entropy in bits of the brute-force reduced operator."""
    lam = np.linalg.eigvalsh(brute_reduced_density(state))
    lam = lam[lam > 1e-12]
    return float(-np.sum(lam * np.log2(lam)))


def _random_units(rng, d, n):
    v = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _projectors(vectors):
    return np.einsum("ni,nj->nij", vectors, vectors.conj())


def _kron_stack(A, B):
    n, d, _ = A.shape
    return np.einsum("nij,nkl->nikjl", A, B).reshape(n, d * d, d * d)


def _expect_stack(psi, ops):
    return np.einsum("a,nab,b->n", psi.conj(), ops, psi).real


def _chunks(n, d):
    size = max(1, _CHUNK_ENTRIES // d**4)
    for start in range(0, n, size):
        yield start, min(n, start + size)


def brute_ep_values(state, vectors):
    """``<psi|E_P|psi>`` for each row of ``vectors`` using the explicit operator
    ``P(x)(1-P) + (1-P)(x)P + P(x)P``."""
    psi = _ket(state)
    d = state.dim
    vectors = np.atleast_2d(vectors)
    vectors = vectors / np.linalg.norm(vectors, axis=1, keepdims=True)
    out = np.empty(len(vectors))
    for a, b in _chunks(len(vectors), d):
        P = _projectors(vectors[a:b])
        Q = np.broadcast_to(np.eye(d), P.shape) - P
        ops = _kron_stack(P, Q) + _kron_stack(Q, P) + _kron_stack(P, P)
        out[a:b] = _expect_stack(psi, ops)
    return out


def brute_max_ep(state, samples, seed):
    """Largest ``<psi|E_P|psi>`` over ``samples`` random unit vectors and the
    eigenvectors of the reduced operator.  A lower bound on the supremum."""
    rng = np.random.default_rng(seed)
    _, eigvecs = np.linalg.eigh(brute_reduced_density(state))
    vectors = np.vstack([eigvecs.T, _random_units(rng, state.dim, samples)])
    return float(np.max(brute_ep_values(state, vectors)))


def brute_max_pair(state, samples, seed):
    """Largest probability, over random trials, that both particles carry
    definite states: ``<P(x)P>`` for one random ``p``, and
    ``<P(x)Q + Q(x)P>`` for a random orthonormal pair ``(p, q)``.
    Eigenvectors of the reduced operator are included as trials."""
    rng = np.random.default_rng(seed)
    psi = _ket(state)
    d = state.dim
    _, eigvecs = np.linalg.eigh(brute_reduced_density(state))
    p = np.vstack([eigvecs.T, _random_units(rng, d, samples)])
    q = np.vstack([np.roll(eigvecs, -1, axis=1).T, _random_units(rng, d, samples)])
    q = q - np.einsum("ni,ni->n", p.conj(), q)[:, None] * p
    q = q / np.linalg.norm(q, axis=1, keepdims=True)
    best = 0.0
    for a, b in _chunks(len(p), d):
        P, Q = _projectors(p[a:b]), _projectors(q[a:b])
        same = _expect_stack(psi, _kron_stack(P, P))
        split = _expect_stack(psi, _kron_stack(P, Q) + _kron_stack(Q, P))
        best = max(best, float(same.max()), float(split.max()))
    return best


def _ket_from_decomposition(dec):
    from .decomp import SlaterDecomposition

    d = dec.dim
    psi = np.zeros(d * d, dtype=np.complex128)
    if isinstance(dec, SlaterDecomposition):
        U = dec.pair_basis
        for i, a in enumerate(dec.coefficients):
            u, v = U[:, 2 * i], U[:, 2 * i + 1]
            psi += a / np.sqrt(2) * (np.kron(u, v) - np.kron(v, u))
    else:
        U = dec.basis
        for i, b in enumerate(dec.coefficients):
            psi += b * np.kron(U[:, i], U[:, i])
    return psi


def phase_aligned_distance(x, y):
    """``min_theta |x - e^{i theta} y|`` for two vectors."""
    x, y = np.ravel(x), np.ravel(y)
    overlap = np.vdot(y, x)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(x - phase * y))


def reconstruction_check(state, eps=1e-9, decomposition=None):
    """Decompose ``state`` (unless a decomposition is supplied), rebuild the
    ket from Kronecker products and compare up to global phase."""
    if decomposition is None:
        from .decomp import decompose

        decomposition = decompose(state, eps)
    error = phase_aligned_distance(_ket(state), _ket_from_decomposition(decomposition))
    return _outcome("reconstruction", error)


def verify_state(state, samples=10_000, seed=0, eps=1e-9):
    """Run every brute-force check against the fast paths for one state."""
    from .analysis import entropy_from_schmidt, entropy_from_slater, reduced_density, von_neumann_entropy
    from .classify import classify
    from .decomp import decompose
    from .properties import find_property_projector
    from .states import FERMION, antisymmetrize, symmetrize

    outcomes = []
    dec = decompose(state, eps)
    brute_S = brute_entropy(state)
    fast_S = von_neumann_entropy(reduced_density(state))
    outcomes.append(_outcome("entropy_spectral", abs(fast_S - brute_S)))
    if state.statistics is FERMION:
        closed = entropy_from_slater(dec.coefficients)
    else:
        closed = entropy_from_schmidt(dec.coefficients)
    outcomes.append(_outcome("entropy_closed_form", abs(closed - brute_S)))
    outcomes.append(reconstruction_check(state, eps, dec))

    report = find_property_projector(state, seed=seed, eps=eps)
    sampled = brute_max_ep(state, samples, seed)
    outcomes.append(_outcome("projector_search_vs_sampling", max(sampled - report.max_value, 0.0)))
    sampled_pair = brute_max_pair(state, samples, seed)
    outcomes.append(_outcome("both_constituents_vs_sampling", max(sampled_pair - report.both_value, 0.0)))

    verdict = classify(state, eps)
    agree = (not verdict.entangled) == report.both_attained
    outcomes.append(_outcome("verdict_vs_property_attribution", 0.0 if agree else 1.0, 0.0))

    pair = verdict.factorizing_pair
    if pair is not None:
        build = antisymmetrize if state.statistics is FERMION else symmetrize
        rebuilt = _ket(build(*pair))
        fid = abs(np.vdot(_ket(state), rebuilt)) ** 2
        outcomes.append(_outcome("resymmetrization_fidelity", 1 - fid))
    return outcomes
