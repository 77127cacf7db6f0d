"""Derivations and first cohomology of trivial extension algebras, in exact arithmetic."""

from .field import Field
from .linalg import Subspace, kernel, rref, solve, quotient_dim
from .algebra import (
    Algebra,
    Element,
    center,
    commutator,
    direct_product,
    dual_numbers,
    enumerate_idempotents,
    ground_field,
    matrix_algebra,
    triangular,
    truncated_polynomials,
    validate_algebra,
)
from .bimodule import (
    Bimodule,
    annihilators,
    dual_bimodule,
    lift_to_trivext,
    regular_bimodule,
    symmetric_center_action,
    validate_bimodule,
)
from .trivext import (
    TrivialExtension,
    center_trivext,
    find_triangular_representation,
    is_type_star,
    trivext,
)
from .cohomology import ExtensionSpaces, full_report, exact_sequence_check

__version__ = "0.1.0"
