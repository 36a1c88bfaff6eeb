"""Square roots of multivectors in the real Clifford algebras Cl(p,q), p+q <= 3.

The solver returns every isolated root in radicals together with the
parametric families (continua) of roots, verified against a brute-force
numerical oracle.
"""

from .algebra import (
    ALL_SIGNATURES,
    AlgebraError,
    Invariants3D,
    Multivector,
    Signature,
    SignatureMismatch,
    SymmetricForm,
    blade_product,
    clifford_conjugate,
    determinant,
    from_symmetric,
    geometric_product,
    grade_select,
    invariants3,
    to_symmetric,
)
from .oracle import ComparisonReport, OracleConfig, compare_root_sets, numeric_root_search, residual
from .parsing import MultivectorParseError, format_mv, parse_mv
from .pauli import (
    ComplexMultivector,
    MismatchReport,
    SullivanBranchError,
    demonstrate_mismatch,
    from_pauli,
    sullivan_sqrt,
    to_pauli,
)
from .roots import (
    DEFAULT_TOL,
    Diagnostics,
    ParametricFamily,
    RootSet,
    SSPair,
    TTPair,
    probe_family,
    recover_vectors,
    solve_sS,
    solve_tT,
    special_case_roots,
    sqrt,
    sqrt_dim1,
    sqrt_dim2,
)

__all__ = [
    "ALL_SIGNATURES",
    "AlgebraError",
    "ComparisonReport",
    "ComplexMultivector",
    "DEFAULT_TOL",
    "Diagnostics",
    "Invariants3D",
    "MismatchReport",
    "Multivector",
    "MultivectorParseError",
    "OracleConfig",
    "ParametricFamily",
    "RootSet",
    "SSPair",
    "Signature",
    "SignatureMismatch",
    "SullivanBranchError",
    "SymmetricForm",
    "TTPair",
    "blade_product",
    "clifford_conjugate",
    "compare_root_sets",
    "demonstrate_mismatch",
    "determinant",
    "format_mv",
    "from_pauli",
    "from_symmetric",
    "geometric_product",
    "grade_select",
    "invariants3",
    "numeric_root_search",
    "parse_mv",
    "probe_family",
    "recover_vectors",
    "residual",
    "solve_sS",
    "solve_tT",
    "special_case_roots",
    "sqrt",
    "sqrt_dim1",
    "sqrt_dim2",
    "sullivan_sqrt",
    "to_pauli",
    "to_symmetric",
]

__version__ = "0.1.0"
