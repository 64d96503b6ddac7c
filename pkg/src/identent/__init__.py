"""Entanglement criteria for pure states of two identical particles.

Typical use::

    >>> import numpy as np
    >>> from identent import antisymmetrize, classify
    >>> report = classify(antisymmetrize([1, 0, 0], [0, 1, 0]))
    >>> report.verdict.value, report.number, round(report.entropy, 12)
    ('non-entangled', 1, 1.0)
"""
from .analysis import (
    entropy_from_schmidt,
    entropy_from_slater,
    reduced_density,
    von_neumann_entropy,
)
from .classify import ClassificationReport, Verdict, classify, desymmetrize
from .decomp import (
    SchmidtDecomposition,
    SlaterDecomposition,
    decompose,
    reconstruct,
    schmidt_decompose,
    schmidt_distinguishable,
    slater_decompose,
)
from .errors import (
    IdentEntError,
    InvariantViolation,
    NoConvergence,
    NumericalFailure,
    NumericalInconsistency,
)
from .linalg import hermitian_eigen, svd, takagi, youla_antisymmetric
from .properties import PropertyReport, ep_expectation, find_property_projector
from .states import (
    BOSON,
    FERMION,
    Statistics,
    TwoParticleState,
    antisymmetrize,
    from_matrix,
    random_state,
    symmetrize,
)

__version__ = "0.1.0"
