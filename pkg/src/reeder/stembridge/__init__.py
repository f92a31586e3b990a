"""Recurrence rows, their coefficient formulas and the reduced identities."""

from .coeffs import OutOfRange, b_coefficients, c_coefficients
from .reduction import (
    IdentityFailure,
    IdentityReport,
    ReductionMultipliers,
    c_next_ratio,
    combine_rows,
    final_identity,
    final_value,
    reduced_identities,
    reduction_multipliers,
)
from .rows import (
    CTable,
    MissingDependency,
    NotMinusculePath,
    RecurrenceRow,
    SingularLeadingCoefficient,
    b_chain_weights,
    b_rows,
    big_f,
    c_chain_weights,
    c_rows,
    f_row,
    minuscule_row,
    qm_row,
    solve_chain,
)

__all__ = [
    "CTable", "IdentityFailure", "IdentityReport", "MissingDependency", "NotMinusculePath",
    "OutOfRange", "RecurrenceRow", "ReductionMultipliers", "SingularLeadingCoefficient",
    "b_chain_weights", "b_coefficients", "b_rows", "big_f", "c_chain_weights", "c_coefficients",
    "c_next_ratio", "c_rows", "combine_rows", "f_row", "final_identity", "final_value",
    "minuscule_row", "qm_row", "reduced_identities", "reduction_multipliers", "solve_chain",
]
