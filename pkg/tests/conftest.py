"""Shared fixtures and builders for the test suite."""
import numpy as np
import pytest
from hypothesis import strategies as st

from identent.states import BOSON, FERMION, _make

SQ2 = np.sqrt(2.0)

# Frozen reference values, computed independently in plain floating point.
H_08_02 = 0.7219280948873623       # -0.8 log2 0.8 - 0.2 log2 0.2
ONE_PLUS_H_09 = 1.4689955935892813  # 1 - 0.9 log2 0.9 - 0.1 log2 0.1
LOG2_3 = 1.584962500721156
SQRT_08 = 0.8944271909999159
SQRT_02 = 0.4472135954999579


def random_unitary(d, rng):
    Z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def random_vector(d, rng):
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def fermion_from_slater(a, d=None, U=None):
    """State ``sum a_i (|u_2i u_2i+1> - |u_2i+1 u_2i>)/sqrt(2)``."""
    a = np.asarray(a, dtype=float)
    d = d or 2 * len(a)
    U = np.eye(d) if U is None else U
    C = np.zeros((d, d), dtype=np.complex128)
    for i, ai in enumerate(a):
        u, v = U[:, 2 * i], U[:, 2 * i + 1]
        C += ai / SQ2 * (np.outer(u, v) - np.outer(v, u))
    return _make(FERMION, C)


def boson_from_schmidt(b, d=None, U=None):
    """State ``sum b_i |u_i u_i>``."""
    b = np.asarray(b, dtype=float)
    d = d or len(b)
    U = np.eye(d) if U is None else U
    return _make(BOSON, (U[:, : len(b)] * b) @ U[:, : len(b)].T)


@pytest.fixture
def singlet():
    return fermion_from_slater([1.0])


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def complex_vectors(d):
    """Hypothesis strategy for nonzero complex vectors of length ``d``."""
    comp = st.floats(-1, 1, allow_nan=False, allow_infinity=False)
    return (
        st.lists(st.tuples(comp, comp), min_size=d, max_size=d)
        .map(lambda xs: np.array([complex(x, y) for x, y in xs]))
        .filter(lambda v: np.linalg.norm(v) > 1e-3)
    )


seeds = st.integers(0, 2**32 - 1)
dims = st.integers(2, 8)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
