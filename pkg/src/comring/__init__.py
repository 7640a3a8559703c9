"""Exact arithmetic for conditional oriented matroids.

Covector-level axioms and witnesses, circuit extraction, minors and
their counting recursions, no-broken-circuit bases, rational hyperplane
realizations, and integral presentations of the associated filtered
rings, all over exact integer and rational arithmetic.
"""

from .circuits import (
    CircuitSet,
    circuits,
    in_generator_set,
    om_circuits,
    orthogonal,
    realized_patterns,
)
from .core import (
    AxiomWitness,
    Com,
    ComFormatError,
    SignVector,
    check_face_symmetry,
    check_strong_elimination,
    coloops,
    com_to_json,
    compose,
    is_com,
    is_oriented_matroid,
    parse_com_json,
    separator,
    topes,
)
from .exactalg import IntLattice, IntMatrix, determinant, hermite_normal_form, in_row_span
from .minors import (
    contract,
    delete,
    is_wall,
    label_map,
    minor_report,
    tope_trichotomy,
    verify_boolean_extension,
    verify_circuit_minor_laws,
    verify_disjoint_covector,
    verify_lift,
    verify_tope_recursion,
)
from .nbc import (
    LinearOrder,
    NbcFamily,
    broken_circuit,
    nbc_sets,
    order_with_maximum,
    verify_nbc_recursion,
    verify_nbc_tope,
)
from .realize import (
    Arrangement,
    ArrangementFormatError,
    Hyperplane,
    OpenRegion,
    arrangement_to_json,
    covectors,
    covectors_with_witnesses,
    feasible_point,
    geometric_circuits,
    parse_arrangement_json,
    region_point,
    sign_vector_at_point,
    strictly_feasible,
)
from .rings import (
    EMonomial,
    MPoly,
    Presentation,
    Relation,
    TopeFunction,
    UPoly,
    e_X_eval,
    f_X_eval,
    gr_multiply,
    heaviside,
    hilbert_series,
    nbc_basis_matrix,
    presentation,
    rho_eval,
    verify_presentation,
)
from .cli import (
    RunConfig,
    corpus_arrangement,
    full_verify,
    generate_random_arrangement,
    run,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomWitness",
    "Arrangement",
    "ArrangementFormatError",
    "CircuitSet",
    "Com",
    "ComFormatError",
    "EMonomial",
    "Hyperplane",
    "IntLattice",
    "IntMatrix",
    "LinearOrder",
    "MPoly",
    "NbcFamily",
    "OpenRegion",
    "Presentation",
    "Relation",
    "RunConfig",
    "SignVector",
    "TopeFunction",
    "UPoly",
    "arrangement_to_json",
    "broken_circuit",
    "check_face_symmetry",
    "check_strong_elimination",
    "circuits",
    "coloops",
    "com_to_json",
    "compose",
    "contract",
    "corpus_arrangement",
    "covectors",
    "covectors_with_witnesses",
    "delete",
    "determinant",
    "e_X_eval",
    "f_X_eval",
    "feasible_point",
    "full_verify",
    "generate_random_arrangement",
    "geometric_circuits",
    "gr_multiply",
    "heaviside",
    "hermite_normal_form",
    "hilbert_series",
    "in_generator_set",
    "in_row_span",
    "is_com",
    "is_oriented_matroid",
    "is_wall",
    "label_map",
    "minor_report",
    "nbc_basis_matrix",
    "nbc_sets",
    "om_circuits",
    "order_with_maximum",
    "orthogonal",
    "parse_arrangement_json",
    "parse_com_json",
    "presentation",
    "realized_patterns",
    "region_point",
    "rho_eval",
    "run",
    "separator",
    "sign_vector_at_point",
    "strictly_feasible",
    "tope_trichotomy",
    "topes",
    "verify_boolean_extension",
    "verify_circuit_minor_laws",
    "verify_disjoint_covector",
    "verify_lift",
    "verify_nbc_recursion",
    "verify_nbc_tope",
    "verify_presentation",
    "verify_tope_recursion",
]
