"""Finite-dimensional unital complex algebras: construction, norms,
spectra, inverses and Neumann-series resolvents."""

from .algebra import (
    AlgebraElement,
    StructureAlgebra,
    add,
    make_function_algebra,
    make_matrix_algebra,
    make_semigroup_algebra,
    multiply,
    regular_rep,
    regular_rep_right,
    scale,
    validate_algebra,
)
from .config import DEFAULTS, RunConfig, Tolerances
from .linalg import Polynomial, char_poly, determinant, poly_eval_at_matrix, poly_roots, solve_linear
from .norms import NormKind, algebra_norm, check_norm_axioms, operator_norm, vector_norm
from .semigroup import (
    CayleyTable,
    chain_semilattice_table,
    convolve,
    cyclic_group_table,
    delta,
    random_monoid_table,
    validate_table,
)
from .spectral import (
    ResolventResult,
    Spectrum,
    invert_cayley_hamilton,
    is_invertible,
    one_sided_inverse,
    resolvent_neumann,
    spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
