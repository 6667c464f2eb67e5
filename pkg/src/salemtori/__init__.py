"""Exact toolkit for degree-six reciprocal integer polynomials, the complex
3-tori they act on, and the dynamical invariants of those actions.

Everything is computed over the integers and rationals with certified
interval enclosures where real or complex roots are involved; no floating
point enters any decision.
"""

from .certroots import CertValue, ComplexBall, RootSystem, isolate_roots
from .exactlin import (
    IntMatrix,
    Lattice,
    additive_compound2,
    char_poly,
    companion,
    kernel_basis,
    matrix_poly_eval,
    minimal_polynomial,
    restricted_matrix,
    saturate,
    wedge_power,
)
from .exceptions import (
    Ambiguous,
    BadRank,
    ClassificationRequired,
    CollisionUnresolved,
    ConstantPolynomial,
    EndpointIsRoot,
    InadmissibleTriple,
    InputError,
    NoCandidateMatches,
    NoDecomposition,
    NotCoprime,
    NotMonic,
    NotReciprocal,
    NotSpecial,
    NotSquarefree,
    NotUnimodular,
    OddDegree,
    OddDegreeRequested,
    PrecisionExhausted,
    SalemtoriError,
    ScanExhausted,
    VerificationFailed,
    ZeroLattice,
)
from .galois import (
    CandidateGroup,
    GaloisReport,
    candidate_groups,
    galois_class,
    octet_data,
    pair_orbit_partition,
    wreath_group,
)
from .intpoly import IntPoly, discriminant, factor_over_z, is_irreducible, is_squarefree
from .salem import (
    DegreeReport,
    SalemCertificate,
    SpecialClassification,
    classify_special,
    dynamical_degrees,
    enumerate_special,
    first_dynamical_degree_salem,
    gross_mcmullen,
    is_salem,
)
from .torus import (
    FibrationComponent,
    FibrationReport,
    PicardReport,
    ProductTorusModel,
    TorusModel,
    admissible_triples,
    build_fibrations,
    fibration_exists,
    hodge_type,
    picard_number,
    picard_table,
    product_torus_example,
    standard_construction,
)

__version__ = "0.1.0"

__all__ = [
    "Ambiguous",
    "BadRank",
    "CandidateGroup",
    "CertValue",
    "ClassificationRequired",
    "ComplexBall",
    "CollisionUnresolved",
    "ConstantPolynomial",
    "DegreeReport",
    "EndpointIsRoot",
    "FibrationComponent",
    "FibrationReport",
    "GaloisReport",
    "InadmissibleTriple",
    "InputError",
    "IntMatrix",
    "IntPoly",
    "Lattice",
    "NoCandidateMatches",
    "NoDecomposition",
    "NotCoprime",
    "NotMonic",
    "NotReciprocal",
    "NotSpecial",
    "NotSquarefree",
    "NotUnimodular",
    "OddDegree",
    "OddDegreeRequested",
    "PicardReport",
    "PrecisionExhausted",
    "ProductTorusModel",
    "RootSystem",
    "SalemCertificate",
    "SalemtoriError",
    "ScanExhausted",
    "SpecialClassification",
    "TorusModel",
    "VerificationFailed",
    "ZeroLattice",
    "additive_compound2",
    "admissible_triples",
    "build_fibrations",
    "candidate_groups",
    "char_poly",
    "classify_special",
    "companion",
    "discriminant",
    "dynamical_degrees",
    "enumerate_special",
    "factor_over_z",
    "fibration_exists",
    "first_dynamical_degree_salem",
    "galois_class",
    "gross_mcmullen",
    "hodge_type",
    "is_irreducible",
    "is_salem",
    "is_squarefree",
    "isolate_roots",
    "kernel_basis",
    "matrix_poly_eval",
    "minimal_polynomial",
    "octet_data",
    "pair_orbit_partition",
    "picard_number",
    "picard_table",
    "product_torus_example",
    "restricted_matrix",
    "saturate",
    "standard_construction",
    "wedge_power",
    "wreath_group",
    "__version__",
]
