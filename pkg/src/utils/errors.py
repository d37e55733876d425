"""异常定义模块。

所有库内错误都继承 QuarticPFError，携带机器可读的 code 和 details，
CLI 将其转换为 JSON 诊断与退出码。

Author: QuarticPF Team
Created: 2026-03-02
"""

from typing import Any, Dict, List, Optional, Sequence


class QuarticPFError(Exception):
    """库内所有错误的基类。

    Attributes:
        code: 机器可读的错误代码
        details: 附加诊断数据（已转换为字符串的精确值）
    """

    code = "error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """转换为 JSON 友好的字典。"""
        return {"code": self.code, "message": self.message, "details": self.details}


# ============ 数域与多项式 ============


class FieldError(QuarticPFError):
    """数域构造或运算错误（可约极小多项式、除零、不支持的域）。"""

    code = "field_error"


class PolynomialError(QuarticPFError):
    """多项式运算错误（未知变量、维数不符、不能整除）。"""

    code = "polynomial_error"


class DegreeBookkeepingError(QuarticPFError):
    """上同调类的分子次数不满足 deg P = k·d − 3。"""

    code = "degree_bookkeeping"


# ============ Jacobian 环 ============


class NotInJacobianIdealError(QuarticPFError):
    """分子不属于 Jacobian 理想。

    Attributes:
        residue: 商空间中的余项坐标（字符串形式）
    """

    code = "not_in_jacobian_ideal"

    def __init__(self, message: str, residue: Dict[str, str]) -> None:
        super().__init__(message, {"residue": residue})
        self.residue = residue


class CertificateError(QuarticPFError):
    """证书展开后与目标不一致。"""

    code = "certificate_invalid"


class SingularCurveError(QuarticPFError):
    """曲线（或一般纤维）奇异。"""

    code = "singular_curve"

    def __init__(self, message: str, witness: Optional[str] = None) -> None:
        super().__init__(message, {"witness": witness})
        self.witness = witness


class SingularPointError(QuarticPFError):
    """在奇点处请求切线或拐点分类。"""

    code = "singular_point"


# ============ 微分方程 ============


class IrregularSingularityError(QuarticPFError):
    """非正则奇点（极点阶数超过 Fuchs 界）。"""

    code = "irregular_singularity"

    def __init__(self, message: str, pole_order: int, coefficient: int) -> None:
        super().__init__(
            message, {"pole_order": pole_order, "coefficient_index": coefficient}
        )
        self.pole_order = pole_order
        self.coefficient = coefficient


class ResonanceError(QuarticPFError):
    """Frobenius 递推在整数位移处遇到指标多项式的零点。"""

    code = "resonance"


class NoRelationError(QuarticPFError):
    """在最大阶数之内没有找到线性关系。"""

    code = "no_relation"

    def __init__(self, message: str, rank_profile: Sequence[int]) -> None:
        super().__init__(message, {"rank_profile": list(rank_profile)})
        self.rank_profile: List[int] = list(rank_profile)


class ReconstructionError(QuarticPFError):
    """由尖点纤维重建族时输入不一致。"""

    code = "reconstruction"

    def __init__(self, message: str, monomial: Sequence[int]) -> None:
        super().__init__(message, {"monomial": list(monomial)})
        self.monomial = tuple(monomial)


# ============ 解析 ============


class ParseError(QuarticPFError):
    """表达式语法错误。

    Attributes:
        line: 出错行号（从 1 开始）
        column: 出错列号（从 1 开始）
        expected: 期望的记号集合
    """

    code = "parse_error"

    def __init__(
        self, message: str, line: int, column: int, expected: Sequence[str] = ()
    ) -> None:
        super().__init__(
            f"{message} at line {line}, column {column}",
            {"line": line, "column": column, "expected": sorted(set(expected))},
        )
        self.line = line
        self.column = column
        self.expected = sorted(set(expected))


class ResourceError(QuarticPFError):
    """输入文件不存在、无法读取或内置数据名称未知。"""

    code = "resource"
