"""Jacobian 理想的成员证书。

证书 (P, (G_X, G_Y, G_Z), F) 断言 Σ G_i·∂F/∂x_i = P。证书在构造后
总是展开验证，序列化为 JSON 时保存文本形式，载入时重新验证。

Author: QuarticPF Team
Created: 2026-03-04
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from src.fields.base import Field
from src.polyring.multipoly import MultiPoly
from src.polyring.parser import parse_polynomial
from src.utils.errors import CertificateError


@dataclass(frozen=True)
class CofactorCertificate:
    """Σ G_i·∂F/∂x_i = target 的证书。

    Attributes:
        target: 被表示的多项式
        cofactors: 每个偏导数的余因子
        curve: 曲线 F
    """

    target: MultiPoly
    cofactors: Tuple[MultiPoly, ...]
    curve: MultiPoly

    def expand(self) -> MultiPoly:
        total = MultiPoly.zero(self.target.field, self.target.vars)
        for g, partial in zip(self.cofactors, self.curve.gradient()):
            if not g.is_zero():
                total = total + g * partial
        return total

    def verify(self) -> bool:
        return self.expand() == self.target

    def check(self) -> "CofactorCertificate":
        """验证证书，失败时抛出 CertificateError。"""
        if not self.verify():
            raise CertificateError(
                "cofactors do not reproduce the target",
                {"target": str(self.target), "expanded": str(self.expand())},
            )
        return self

    def divergence(self) -> MultiPoly:
        """Σ ∂G_i/∂x_i，降阶公式的分子。"""
        total = MultiPoly.zero(self.target.field, self.target.vars)
        for i, g in enumerate(self.cofactors):
            total = total + g.partial(i)
        return total

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": str(self.target),
            "cofactors": [str(g) for g in self.cofactors],
            "curve": str(self.curve),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], field: Field) -> "CofactorCertificate":
        """从 JSON 字典载入并重新验证。

        Raises:
            CertificateError: 展开不等于 target
            ParseError: 文本无法解析
        """
        target = parse_polynomial(data["target"], field)
        cofactors = tuple(parse_polynomial(text, field) for text in data["cofactors"])
        curve = parse_polynomial(data["curve"], field)
        return cls(target, cofactors, curve).check()
