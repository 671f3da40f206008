"""Quantum Goppa codes from hyperelliptic curves over odd-characteristic fields.

Exact-arithmetic construction and verification of classical and quantum
stabilizer codes built from conjugate pairs of rational points on
y^2 = f(x), together with brute-force verifiers and closed-form bound
calculators for the asymptotic families.
"""

from .curve import (
    CurveSpec,
    Place,
    PlaceClass,
    classify,
    conjugate,
    curve_new,
    pairs_from_data,
    rational_places,
    select_pairs,
    split_pairs,
)
from .galois import (
    FieldElement,
    FieldSpec,
    discrete_log,
    field_new,
    is_square,
    self_dual_basis,
    sqrt,
    trace,
)
from .goppa import (
    GoppaCode,
    build_goppa,
    build_goppa_css_side,
    normalize_weights_to_base,
    residue_oracle,
    residues,
    weighted_ip,
)
from .linear_code import LinearCode, MatrixGF, rref, vector, vector_ints
from .oracle import (
    VerificationReport,
    check_dual_containment,
    check_rr_dims,
    check_self_orthogonal,
    full_verify,
)
from .polynomial import Poly, gcd, is_square_free, parse_poly, roots, square_part
from .quantum import (
    StabilizerCode,
    SymplecticForm,
    absorb_weights,
    css,
    direct_construct,
    project_to_base,
    quantum_distance,
    stabilizer_from_classical,
    symplectic_dual,
    symplectic_ip,
    symplectic_weight,
)
from .rr_space import RRBasis, rr_basis, rr_eval
from .tower import (
    MatsumotoBounds,
    StepanovParams,
    TowerParams,
    matsumoto_bounds,
    rate_bound,
    rate_threshold_delta,
    stepanov_params,
    tower_params,
)

__version__ = "0.1.0"

__all__ = [
    "CurveSpec", "Place", "PlaceClass", "classify", "conjugate", "curve_new",
    "pairs_from_data", "rational_places", "select_pairs", "split_pairs",
    "FieldElement", "FieldSpec", "discrete_log", "field_new", "is_square",
    "self_dual_basis", "sqrt", "trace",
    "GoppaCode", "build_goppa", "build_goppa_css_side",
    "normalize_weights_to_base", "residue_oracle", "residues", "weighted_ip",
    "LinearCode", "MatrixGF", "rref", "vector", "vector_ints",
    "VerificationReport", "check_dual_containment", "check_rr_dims",
    "check_self_orthogonal", "full_verify",
    "Poly", "gcd", "is_square_free", "parse_poly", "roots", "square_part",
    "StabilizerCode", "SymplecticForm", "absorb_weights", "css",
    "direct_construct", "project_to_base", "quantum_distance",
    "stabilizer_from_classical", "symplectic_dual", "symplectic_ip",
    "symplectic_weight",
    "RRBasis", "rr_basis", "rr_eval",
    "MatsumotoBounds", "StepanovParams", "TowerParams", "matsumoto_bounds",
    "rate_bound", "rate_threshold_delta", "stepanov_params", "tower_params",
]
