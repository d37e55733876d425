"""域的抽象接口。

所有系数域（有理数域、数域塔、有理函数域）实现同一组方法，
上层的多项式、线性代数与 Griffiths-Dwork 代码只依赖这个接口。

Author: QuarticPF Team
Created: 2026-03-02
"""

from abc import ABC, abstractmethod
from typing import Any, List


class Field(ABC):
    """精确系数域。

    元素本身支持 + - * / ** 与 ==，域对象负责常量、类型转换、
    零判断、打印和主元选择用的规模估计。

    Attributes:
        name: 域的可读名称
    """

    name: str = "field"

    @property
    @abstractmethod
    def zero(self) -> Any:
        """加法单位元。"""

    @property
    @abstractmethod
    def one(self) -> Any:
        """乘法单位元。"""

    @abstractmethod
    def convert(self, value: Any) -> Any:
        """把整数、有理数或子域元素转换为本域元素。

        Raises:
            FieldError: 值无法嵌入本域
        """

    @abstractmethod
    def contains(self, value: Any) -> bool:
        """判断值是否已经是本域的元素。"""

    @abstractmethod
    def to_str(self, value: Any) -> str:
        """元素的文本表示（可被表达式解析器读回）。"""

    def is_zero(self, value: Any) -> bool:
        return not value

    def size(self, value: Any) -> int:
        """元素规模，用于选择消元主元（越小越好）。"""
        return 1

    def derivative(self, value: Any) -> Any:
        """对参数求导；常数域上恒为零。"""
        return self.zero

    def base_chain(self) -> List["Field"]:
        """从本域到有理数域的子域链（含本域）。"""
        return [self]

    def is_extension_of(self, other: "Field") -> bool:
        """other 是否在本域的子域链上。"""
        return any(f == other for f in self.base_chain())

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"
