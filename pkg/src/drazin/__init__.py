"""Exact Drazin inverses in concrete rings and executable checks of
equivalences for products, differences, commutators and anti-commutators of
idempotents."""

from .engine import (
    AxiomViolation,
    ContractViolation,
    PreconditionError,
    certify,
    cline,
    commute_with_drazin,
    corner_equivalence,
    corner_split,
    drazin,
    drazin_finite,
    drazin_matrix_field,
    drazin_membership,
    drazin_product_commuting,
    drazin_sum_orthogonal,
    jacobson_transfer,
    pierce_combine,
    quadratic_lift,
)
from .oracle import brute_force_drazin, cross_validate
from .report import Condition, DrazinResult, EquivalenceReport, MembershipDecision, Verdict
from .rings import (
    Element,
    IdempotentFamily,
    Integers,
    Matrix,
    Modular,
    PrimeField,
    Product,
    Rationals,
    Ring,
    RingError,
    enumerate_elements,
    enumerate_idempotents,
    is_idempotent,
)
from .theorems import (
    cor32,
    prop31,
    remark37_regression,
    sweep,
    thm33,
    thm34,
    thm35,
    thm36,
)
