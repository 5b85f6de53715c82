"""Digraph calculus for Z2-linear operators on Boolean functions."""

from __future__ import annotations

from .errors import (
    BoolDiffError,
    CapacityError,
    DimensionError,
    DomainError,
    ParseError,
)
from .functions import (
    BooleanFunction,
    bf_add,
    bf_mul,
    change_function_basis,
    derivative,
    format_bf,
    from_m_coeffs,
    from_x_coeffs,
    m_basis,
    m_coeffs,
    parse_bf,
    shift,
    x_basis,
    x_coeffs,
)
from .gf2 import (
    BitVector,
    Gf2Matrix,
    format_matrix,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_rank,
    mat_transpose,
    parse_matrix,
)
from .lattice import (
    DEFAULT_N_MAX,
    ENV_N_MAX,
    elements,
    format_subset,
    index_of,
    mask_of,
    n_max,
    parse_subset,
    singleton,
    subset_of,
    subset_sum_transform,
    subsets_iter,
)
from .operators import (
    Basis,
    Digraph,
    OperatorExpr,
    apply_operator,
    change_operator_basis,
    format_digraph,
    format_operator,
    identity_digraph,
    operator_digraph,
    operator_expr,
    operator_matrix,
    operator_rank_profile,
    parse_digraph,
    sorted_edges,
)
from .products import (
    DIRECT_CAPS,
    MultiplicationTable,
    ast_product,
    bullet_product,
    circ_product,
    digraph_label,
    jordan_digraph,
    multiplication_table,
    product,
    star_decomposed,
    star_product,
    star_single_edge,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BitVector",
    "BooleanFunction",
    "BoolDiffError",
    "CapacityError",
    "DEFAULT_N_MAX",
    "DIRECT_CAPS",
    "Digraph",
    "DimensionError",
    "DomainError",
    "ENV_N_MAX",
    "Gf2Matrix",
    "MultiplicationTable",
    "OperatorExpr",
    "ParseError",
    "apply_operator",
    "ast_product",
    "bf_add",
    "bf_mul",
    "bullet_product",
    "change_function_basis",
    "change_operator_basis",
    "circ_product",
    "derivative",
    "digraph_label",
    "elements",
    "format_bf",
    "format_digraph",
    "format_matrix",
    "format_operator",
    "format_subset",
    "from_m_coeffs",
    "from_x_coeffs",
    "identity_digraph",
    "index_of",
    "jordan_digraph",
    "m_basis",
    "m_coeffs",
    "mask_of",
    "mat_add",
    "mat_inverse",
    "mat_mul",
    "mat_rank",
    "mat_transpose",
    "multiplication_table",
    "n_max",
    "operator_digraph",
    "operator_expr",
    "operator_matrix",
    "operator_rank_profile",
    "parse_bf",
    "parse_digraph",
    "parse_matrix",
    "parse_subset",
    "product",
    "shift",
    "singleton",
    "sorted_edges",
    "star_decomposed",
    "star_product",
    "star_single_edge",
    "subset_of",
    "subset_sum_transform",
    "subsets_iter",
    "x_basis",
    "x_coeffs",
]
