"""精确系数域：有理数、数域塔、分圆域与有理函数域。"""

from src.fields.base import Field
from src.fields.cyclotomic import (
    cyclotomic_field,
    embed_trace_field,
    galois_conjugates,
    orbifold_tower,
    trace_field,
    zeta3,
    zeta9,
)
from src.fields.number_field import NFElem, NumberField, nf_create
from src.fields.rational import MPQ, QQ_FIELD, RationalField, rational
from src.fields.ratfun import RationalFunction, RationalFunctionField
from src.fields.unipoly import UniPoly

__all__ = [
    "Field",
    "MPQ",
    "NFElem",
    "NumberField",
    "QQ_FIELD",
    "RationalField",
    "RationalFunction",
    "RationalFunctionField",
    "UniPoly",
    "cyclotomic_field",
    "embed_trace_field",
    "galois_conjugates",
    "nf_create",
    "orbifold_tower",
    "rational",
    "trace_field",
    "zeta3",
    "zeta9",
]
