"""命令行输出模型。

每个子命令产出一个 ``CommandResponse``；出错时产出 ``Diagnostic``。
JSON 是机器格式，text 是终端上的默认格式。

Author: QuarticPF Team
Created: 2026-03-12
"""

import json
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from src.utils.errors import ParseError, QuarticPFError, ResourceError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


# ==================== Response Models ====================


class CommandResponse(BaseModel):
    """子命令结果。

    Attributes:
        command: 子命令名
        passed: 请求的检查是否全部通过
        summary: 给人看的若干行
        data: 机器可读的结果
    """

    command: str = Field(..., description="子命令名")
    passed: bool = Field(default=True, description="是否通过")
    summary: List[str] = Field(default_factory=list, description="文本摘要")
    data: Dict[str, Any] = Field(default_factory=dict, description="结果数据")

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_FAILURE

    def text(self) -> str:
        return "\n".join(self.summary)


class Diagnostic(BaseModel):
    """结构化错误。

    Attributes:
        code: 错误码（与异常类的 code 一致）
        message: 错误消息
        details: 附加信息，语法错误时含行列号与期望的记号
        exit_code: 1 为数学失败，2 为用法或语法错误
    """

    code: str = Field(..., description="错误码")
    message: str = Field(..., description="错误消息")
    details: Dict[str, Any] = Field(default_factory=dict, description="附加信息")
    exit_code: int = Field(default=EXIT_FAILURE, description="退出码")

    @classmethod
    def from_error(cls, error: QuarticPFError) -> "Diagnostic":
        usage = isinstance(error, (ParseError, ResourceError))
        return cls(
            code=error.code,
            message=error.message,
            details=error.details,
            exit_code=EXIT_USAGE if usage else EXIT_FAILURE,
        )

    def text(self) -> str:
        return f"error [{self.code}]: {self.message}"


def render(model: BaseModel, fmt: str) -> str:
    """按 --format 输出；JSON 的键有序，结果逐字节可复现。"""
    if fmt == "json":
        return json.dumps(model.model_dump(), indent=2, sort_keys=True, ensure_ascii=False, default=str)
    return model.text()  # type: ignore[attr-defined]
