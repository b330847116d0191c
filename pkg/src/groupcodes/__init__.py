"""Group codes in finite group algebras and their linear complementary pairs."""

from .algebra import AlgebraElement, GroupAlgebra, euclidean_form, hermitian_form
from .codes import (
    GroupCode,
    Sidedness,
    code_from_side,
    code_left_ideal,
    code_right_ideal,
    code_two_sided,
)
from .errors import (
    BudgetExceededError,
    GroupCodesError,
    ParseError,
    VerificationError,
    ZeroCodeError,
)
from .field import FieldElement, FieldSpec, field_from_literal, field_from_order, field_make
from .group import (
    Group,
    group_cyclic,
    group_dihedral,
    group_direct_product,
    group_from_spec,
    group_from_table,
    group_is_abelian,
)
from .lcp import (
    BUDGET_EXCEEDED,
    UNDEFINED,
    IdempotentCheck,
    LcpReport,
    SweepSummary,
    check_idempotent,
    idempotent_sweep,
    lcp_analyze,
    lcp_check,
    lcp_split_unity,
    lcp_uniqueness_check,
    lcp_verify_theorem,
    sweep,
)
from .linalg import Subspace, kernel, rref, solve_in_sum

__all__ = [
    "AlgebraElement",
    "BUDGET_EXCEEDED",
    "BudgetExceededError",
    "FieldElement",
    "FieldSpec",
    "Group",
    "GroupAlgebra",
    "GroupCode",
    "GroupCodesError",
    "IdempotentCheck",
    "LcpReport",
    "ParseError",
    "Sidedness",
    "Subspace",
    "SweepSummary",
    "UNDEFINED",
    "VerificationError",
    "ZeroCodeError",
    "check_idempotent",
    "code_from_side",
    "code_left_ideal",
    "code_right_ideal",
    "code_two_sided",
    "euclidean_form",
    "field_from_literal",
    "field_from_order",
    "field_make",
    "group_cyclic",
    "group_dihedral",
    "group_direct_product",
    "group_from_spec",
    "group_from_table",
    "group_is_abelian",
    "hermitian_form",
    "idempotent_sweep",
    "kernel",
    "lcp_analyze",
    "lcp_check",
    "lcp_split_unity",
    "lcp_uniqueness_check",
    "lcp_verify_theorem",
    "rref",
    "solve_in_sum",
    "sweep",
]
