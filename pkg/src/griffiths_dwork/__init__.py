"""Griffiths-Dwork 约化与 Picard-Fuchs 方程。"""

from src.griffiths_dwork.cohomology import (
    CohomClass,
    ConnectionMatrix,
    NormalForm,
    NormalFormBlock,
    basis_classes,
    block_orders,
    connection_matrix,
    gauss_manin_derivative,
    normal_form,
    reduce_pole_order,
)
from src.griffiths_dwork.picard_fuchs import (
    PicardFuchsResult,
    derivative_normal_forms,
    get_connection,
    parameter_field,
    picard_fuchs,
)

__all__ = [
    "CohomClass",
    "ConnectionMatrix",
    "NormalForm",
    "NormalFormBlock",
    "PicardFuchsResult",
    "basis_classes",
    "block_orders",
    "connection_matrix",
    "derivative_normal_forms",
    "gauss_manin_derivative",
    "get_connection",
    "normal_form",
    "parameter_field",
    "picard_fuchs",
    "reduce_pole_order",
]
