"""Jacobian 环的分次线性代数：成员证书、商空间基与光滑性。"""

from src.jacobian.certificate import CofactorCertificate
from src.jacobian.ring import (
    GradedQuotientBasis,
    GradedReducer,
    JacobianRing,
    MembershipResult,
    Reduction,
    SmoothnessResult,
    get_ring,
    graded_membership,
    is_smooth,
    quotient_basis,
    reduce_mod_jacobian,
)

__all__ = [
    "CofactorCertificate",
    "GradedQuotientBasis",
    "GradedReducer",
    "JacobianRing",
    "MembershipResult",
    "Reduction",
    "SmoothnessResult",
    "get_ring",
    "graded_membership",
    "is_smooth",
    "quotient_basis",
    "reduce_mod_jacobian",
]
