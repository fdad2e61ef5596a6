"""Exact moment/cumulant engine for pairs of faces: bi-free and bi-Boolean
cumulants, R-diagonal and eta-diagonal detection, product formulas checked
against a partition-sum oracle, and explicit counterexample witnesses."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AlphabetError, DegreeError, FormatError, LatticeError, MissingEntryError,
    PreconditionError, SizeError, TwoFacedError,
)
from .kernels import BACKEND, ONE, ZERO, GaussianRational  # noqa: E402
from .ncpoly import Alphabet, Letter, NcPolynomial  # noqa: E402
from .partitions import ChiMap, SetPartition  # noqa: E402
from .distribution import (  # noqa: E402
    BiCircularSpec, CumulantTable, MomentTable, SeriesTable, bi_circular, bi_haar,
    bifree_join, haar_unitary, lr_pair, multiply_free_haar, pushforward,
)
from .cumulants import (  # noqa: E402
    moments_to_biboolean, moments_to_bifree, moments_to_boolean, moments_to_free,
    test_biboolean_independence, test_bifree_independence,
)
from .verdict import Verdict  # noqa: E402

__all__ = [
    "__version__", "BACKEND", "GaussianRational", "ZERO", "ONE",
    "Alphabet", "Letter", "NcPolynomial", "ChiMap", "SetPartition",
    "MomentTable", "CumulantTable", "SeriesTable", "BiCircularSpec",
    "bi_circular", "bi_haar", "haar_unitary", "lr_pair", "bifree_join", "pushforward",
    "multiply_free_haar", "moments_to_bifree", "moments_to_biboolean", "moments_to_free",
    "moments_to_boolean", "test_bifree_independence", "test_biboolean_independence",
    "Verdict", "TwoFacedError", "SizeError", "DegreeError", "LatticeError", "AlphabetError",
    "PreconditionError", "MissingEntryError", "FormatError",
]
