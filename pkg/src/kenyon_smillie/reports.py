"""
验证报告模型

每个检查产出一个 CheckReport，以描述性锚点命名；整套检查汇总为
SuiteReport，按锚点排序，保证同一输入下 JSON 输出逐字节相同。

Author: QuarticPF Team
Created: 2026-03-09
"""

from typing import Any, Dict, List

from pydantic import BaseModel, Field


class CheckReport(BaseModel):
    """
    单个检查的结果

    Attributes:
        anchor: 检查锚点，如 ``descent``、``symmetry``
        passed: 是否通过
        summary: 一句话结论
        details: 精确值的字符串形式，供诊断与复现
    """

    anchor: str = Field(..., description="检查锚点")
    passed: bool = Field(..., description="是否通过")
    summary: str = Field("", description="结论摘要")
    details: Dict[str, Any] = Field(default_factory=dict, description="诊断数据")

    def text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.anchor}: {self.summary}"


class SuiteReport(BaseModel):
    """
    整套验证的汇总

    Attributes:
        passed: 全部检查是否通过
        seed: 随机参数样本的种子
        convention: Galois 共轭约定
        checks: 按锚点排序的检查结果
    """

    passed: bool = Field(..., description="全部通过")
    seed: int = Field(..., description="随机样本种子")
    convention: str = Field(..., description="Galois 共轭约定")
    checks: List[CheckReport] = Field(default_factory=list, description="检查结果")

    @classmethod
    def collect(cls, checks: List[CheckReport], seed: int, convention: str) -> "SuiteReport":
        ordered = sorted(checks, key=lambda c: c.anchor)
        return cls(passed=all(c.passed for c in ordered), seed=seed, convention=convention, checks=ordered)

    def failed(self) -> List[str]:
        return [c.anchor for c in self.checks if not c.passed]

    def text(self) -> str:
        lines = [c.text() for c in self.checks]
        total = len(self.checks)
        lines.append(f"{total - len(self.failed())}/{total} checks passed (seed {self.seed}, {self.convention})")
        return "\n".join(lines)
