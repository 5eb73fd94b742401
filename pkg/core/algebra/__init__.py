"""
精确代数层统一导出
"""

from .fields import (
    FieldSpec,
    RationalField,
    PrimeField,
    ExtensionField,
    RATIONALS,
    ext_field,
    prime_field,
    field_from_json,
    extend_for_size,
    is_irreducible,
)
from .linalg import (
    ExactMatrix,
    adjugate,
    det,
    echelon,
    identity,
    in_row_space,
    inverse,
    kernel,
    left_kernel,
    mat_vec,
    matmul,
    rank,
    row_basis,
    solve,
    solve_vector,
    transpose,
    vec_mat,
)
from .smith import SmithForm, smith_normal_form, integer_det, int_matmul
from .polynomials import (
    MultiPoly,
    monomials,
    monomial_index,
    monomial_values,
    forms_span_contains,
    upoly_eval,
    upoly_gcd,
    upoly_roots,
)
from .interpolation import interpolate, interpolate_function, random_points, sample_count
from .projective import projective_points, projective_size

__all__ = [
    # 域
    "FieldSpec",
    "RationalField",
    "PrimeField",
    "ExtensionField",
    "RATIONALS",
    "ext_field",
    "prime_field",
    "field_from_json",
    "extend_for_size",
    "is_irreducible",

    # 线性代数
    "ExactMatrix",
    "adjugate",
    "det",
    "echelon",
    "identity",
    "in_row_space",
    "inverse",
    "kernel",
    "left_kernel",
    "mat_vec",
    "matmul",
    "rank",
    "row_basis",
    "solve",
    "solve_vector",
    "transpose",
    "vec_mat",

    # 整数矩阵
    "SmithForm",
    "smith_normal_form",
    "integer_det",
    "int_matmul",

    # 多项式
    "MultiPoly",
    "monomials",
    "monomial_index",
    "monomial_values",
    "forms_span_contains",
    "upoly_eval",
    "upoly_gcd",
    "upoly_roots",
    "interpolate",
    "interpolate_function",
    "random_points",
    "sample_count",

    # 射影点
    "projective_points",
    "projective_size",
]
