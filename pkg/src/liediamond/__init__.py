"""Nilpotent Lie superalgebras: index, classification and enveloping algebras."""
from .catalog import catalog, filiform, from_spec, h5, h6, heisenberg, heisenberg_super_even, heisenberg_super_odd
from .classify import ClassificationResult, Kind, classify, find_abelian_codim1_ideal, find_abelian_codim2_ideal, normalize_h5_h6, verify_witness
from .env import (
    EnvElement,
    EnvelopingAlgebra,
    ad,
    ad_nilpotency_index,
    extract_supercentral,
    is_supercentral,
    multiply,
    sigma,
    supercentralizing_chain,
    supercommutator,
)
from .errors import AxiomViolationError, FormatError, NotNilpotentError, PreconditionError, WitnessSearchError
from .exactmath import MultiPoly, eval_rank, poly_rank, rational_kernel
from .factors import (
    CliffordElement,
    WeylElement,
    clifford_center_dim,
    clifford_multiply,
    heisenberg_to_weyl,
    stafford_alpha,
    weyl_multiply,
)
from .fileformat import dumps, loads, parse_algebra_file
from .indexcalc import compute_index, generic_matrix, has_diamond, index, stabilizer, weyl_order
from .liealg import (
    LieSuperAlgebra,
    Subspace,
    abelian,
    bracket,
    center,
    derived_subalgebra,
    direct_product,
    even_part,
    is_nilpotent,
    lower_central_series,
    refined_adapted_basis,
    strip_abelian_factor,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomViolationError",
    "ClassificationResult",
    "CliffordElement",
    "EnvElement",
    "EnvelopingAlgebra",
    "FormatError",
    "Kind",
    "LieSuperAlgebra",
    "MultiPoly",
    "NotNilpotentError",
    "PreconditionError",
    "Subspace",
    "WeylElement",
    "WitnessSearchError",
    "abelian",
    "ad",
    "ad_nilpotency_index",
    "bracket",
    "catalog",
    "center",
    "classify",
    "clifford_center_dim",
    "clifford_multiply",
    "compute_index",
    "derived_subalgebra",
    "direct_product",
    "dumps",
    "eval_rank",
    "even_part",
    "extract_supercentral",
    "filiform",
    "find_abelian_codim1_ideal",
    "find_abelian_codim2_ideal",
    "from_spec",
    "generic_matrix",
    "h5",
    "h6",
    "has_diamond",
    "heisenberg",
    "heisenberg_super_even",
    "heisenberg_super_odd",
    "heisenberg_to_weyl",
    "index",
    "is_nilpotent",
    "is_supercentral",
    "loads",
    "lower_central_series",
    "multiply",
    "normalize_h5_h6",
    "parse_algebra_file",
    "poly_rank",
    "rational_kernel",
    "refined_adapted_basis",
    "sigma",
    "stabilizer",
    "stafford_alpha",
    "strip_abelian_factor",
    "supercentralizing_chain",
    "supercommutator",
    "validate",
    "verify_witness",
    "weyl_multiply",
    "weyl_order",
]
