"""Dense complex matrix kernels.

Hermitian eigendecomposition and SVD are thin validated wrappers around
LAPACK (via numpy).  The two congruence normal forms needed for identical
particles are built on top of them by deflation:

* Takagi factorization of a complex symmetric matrix, ``S = U diag(b) U^T``;
* Youla canonical form of a complex antisymmetric matrix, ``A = U Z U^T``
  with ``Z`` block diagonal in ``z * [[0, 1], [-1, 0]]`` blocks.

Each deflation step takes the leading singular pair of the remaining block,
turns it into a congruence-invariant direction, and restricts the problem to
its orthogonal complement.  Only reconstruction and unitarity are contracts;
bases are made reproducible by seeding each degenerate cluster with the
best-aligned standard basis vector and by fixing column phases.
"""
from typing import NamedTuple

import numpy as np

from .errors import NoConvergence, NotAntisymmetric, NotHermitian, NotSymmetric

UNITARY_TOL = 1e-10
STRUCTURE_TOL = 1e-10
# Relative size below which a leading singular value is treated as zero.
_DEFLATION_CUTOFF = 1e-14
# Relative spread under which singular values count as one degenerate cluster.
_CLUSTER_TOL = 1e-10


class HermitianEigen(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


class Takagi(NamedTuple):
    unitary: np.ndarray
    values: np.ndarray


class Youla(NamedTuple):
    unitary: np.ndarray
    values: np.ndarray


def _as_square(M, name="matrix"):
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"{name} must be square, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError(f"{name} has non-finite entries")
    return M


def _max_abs(M):
    return float(np.max(np.abs(M))) if M.size else 0.0


def _structure_residual(M, sign, conjugate):
    other = M.conj().T if conjugate else M.T
    return _max_abs(M - sign * other)


def is_unitary(U, tol=UNITARY_TOL):
    U = np.asarray(U)
    return _max_abs(U.conj().T @ U - np.eye(U.shape[1])) < tol


def _svd(M):
    try:
        return np.linalg.svd(M)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"SVD did not converge: {exc}") from exc


def hermitian_eigen(H):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    H : (d, d) array_like
        Hermitian matrix.

    Returns
    -------
    HermitianEigen
        Ascending real eigenvalues and a unitary matrix of eigenvectors
        (columns).

    Raises
    ------
    NotHermitian
        If ``H`` deviates from ``H^dagger`` by more than ``1e-10 (1 + |H|)``.
    NoConvergence
        If LAPACK fails to converge.
    """
    H = _as_square(H, "H")
    if _structure_residual(H, 1, True) > STRUCTURE_TOL * (1 + _max_abs(H)):
        raise NotHermitian("matrix is not Hermitian")
    H = 0.5 * (H + H.conj().T)
    try:
        w, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"eigh did not converge: {exc}") from exc
    return HermitianEigen(w, V)


def svd(M):
    """Singular value decomposition ``M = U diag(s) V^dagger``.

    Returns ``(U, s, V)`` with ``s`` descending; note ``V`` rather than
    ``V^dagger`` is returned.
    """
    M = np.asarray(M, dtype=np.complex128)
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    U, s, Vh = _svd(M)
    return U, s, Vh.conj().T


def _complement(Q):
    """Orthonormal basis of the orthogonal complement of the orthonormal
    columns of Q."""
    full, _ = np.linalg.qr(Q, mode="complete")
    return full[:, Q.shape[1]:]


def _leading_phase(col):
    """Unit phase that makes the largest-magnitude entry of ``col`` real positive."""
    k = int(np.argmax(np.abs(col)))
    if abs(col[k]) == 0:
        return 1.0
    return col[k] / abs(col[k])


def _seed_direction(U, s, Q, scale):
    """Deterministic unit vector in the leading singular subspace.

    The leading cluster (values within ``1e-10 * scale`` of the largest) is
    where the decomposition is non-unique.  The returned vector is the
    projection onto it of the standard basis vector (original coordinates,
    expressed through ``Q``) with the largest overlap, ties to the lowest
    index.
    """
    m = int(np.sum(s[0] - s <= _CLUSTER_TOL * scale))
    Uc = U[:, :m]
    if m == 1:
        x = Uc[:, 0]
    else:
        overlaps = Uc.conj().T @ Q.conj().T  # column k: e_k in cluster coordinates
        k = int(np.argmax(np.round(np.linalg.norm(overlaps, axis=0), 12)))
        x = Uc @ overlaps[:, k]
    return x / np.linalg.norm(x)


def takagi(S):
    """Takagi factorization of a complex symmetric matrix.

    Finds a unitary ``U`` and nonnegative descending ``b`` with
    ``S = U @ diag(b) @ U.T``.  The values ``b`` are the singular values of
    ``S``.

    Columns belonging to a positive value are fixed up to sign, so the sign is
    chosen to give the largest-magnitude entry a positive real part; columns
    of the null space get the full phase normalization.

    Raises
    ------
    NotSymmetric
        If ``|S - S^T|`` exceeds ``1e-10 (1 + |S|)`` entrywise.
    NoConvergence
        If an SVD fails.
    """
    S = _as_square(S, "S")
    if _structure_residual(S, 1, False) > STRUCTURE_TOL * (1 + _max_abs(S)):
        raise NotSymmetric("matrix is not symmetric")
    S = 0.5 * (S + S.T)
    d = S.shape[0]
    scale = max(float(np.linalg.norm(S)), 1.0)

    cols, vals = [], []
    Q = np.eye(d, dtype=np.complex128)
    block = S
    while block.shape[0] > 0:
        U, s, _ = _svd(block)
        if s[0] <= _DEFLATION_CUTOFF * scale:
            break
        x = _seed_direction(U, s, Q, scale)
        # x -> S conj(x) / s is an antiunitary involution on the leading
        # cluster; its fixed points t satisfy S conj(t) = s t.
        jx = block @ x.conj() / s[0]
        t_plus, t_minus = x + jx, 1j * (x - jx)
        t = t_plus if np.linalg.norm(t_plus) >= np.linalg.norm(t_minus) else t_minus
        t = t / np.linalg.norm(t)
        cols.append(Q @ t)
        vals.append(s[0])
        N = _complement(t[:, None])
        block = N.conj().T @ block @ N.conj()
        Q = Q @ N
    for k in range(Q.shape[1]):
        cols.append(Q[:, k])
        vals.append(0.0)

    U = np.column_stack(cols) if cols else np.zeros((0, 0), complex)
    b = np.asarray(vals, dtype=float)
    for k in range(d):
        col = U[:, k]
        if b[k] > 0:
            if col[int(np.argmax(np.abs(col)))].real < 0:
                U[:, k] = -col
        else:
            U[:, k] = col / _leading_phase(col)
    return Takagi(U, b)


def youla_antisymmetric(A):
    """Youla canonical form of a complex antisymmetric matrix.

    Finds a unitary ``U`` and nonnegative descending ``z`` (length
    ``d // 2``) with ``A = U @ Z @ U.T``, where ``Z`` carries the block
    ``z[i] * [[0, 1], [-1, 0]]`` on rows/columns ``2i, 2i + 1`` and a zero
    last row and column when ``d`` is odd.

    Within each pair the first column is phase-fixed (largest entry real
    positive) and the second column absorbs the compensating phase.

    Raises
    ------
    NotAntisymmetric
        If ``|A + A^T|`` exceeds ``1e-10 (1 + |A|)`` entrywise.
    NoConvergence
        If an SVD fails.
    """
    A = _as_square(A, "A")
    if _structure_residual(A, -1, False) > STRUCTURE_TOL * (1 + _max_abs(A)):
        raise NotAntisymmetric("matrix is not antisymmetric")
    A = 0.5 * (A - A.T)
    d = A.shape[0]
    scale = max(float(np.linalg.norm(A)), 1.0)

    cols, vals = [], []
    Q = np.eye(d, dtype=np.complex128)
    block = A
    while block.shape[0] >= 2:
        U, s, _ = _svd(block)
        if s[0] <= _DEFLATION_CUTOFF * scale:
            break
        u = _seed_direction(U, s, Q, scale)
        # Any unit u in the leading cluster pairs with w = -A conj(u) / z,
        # which is automatically unit and orthogonal to u.
        w = -(block @ u.conj()) / s[0]
        w = w / np.linalg.norm(w)
        phase = _leading_phase(Q @ u)
        cols.extend([Q @ u / phase, Q @ w * phase])
        vals.append(s[0])
        N = _complement(np.column_stack([u, w]))
        block = N.conj().T @ block @ N.conj()
        Q = Q @ N
    for k in range(Q.shape[1]):
        col = Q[:, k]
        cols.append(col / _leading_phase(col))
    vals.extend([0.0] * (d // 2 - len(vals)))

    U = np.column_stack(cols) if cols else np.zeros((0, 0), complex)
    return Youla(U, np.asarray(vals, dtype=float))


def youla_block(z, d):
    """The block-diagonal ``Z`` for values ``z`` in dimension ``d``."""
    Z = np.zeros((d, d), dtype=np.complex128)
    for i, zi in enumerate(z):
        Z[2 * i, 2 * i + 1] = zi
        Z[2 * i + 1, 2 * i] = -zi
    return Z
