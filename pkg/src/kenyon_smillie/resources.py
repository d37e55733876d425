"""内置数据文件：两种族表示、三个特殊纤维与超几何方程。

数据文件每行一段表达式，``#`` 开头的行是注释。注释行替换为空行，
解析错误的行号因此与文件行号一致。

Author: QuarticPF Team
Created: 2026-03-09
"""

from functools import lru_cache
from pathlib import Path
from typing import Dict, List

from src.fields.base import Field
from src.fields.rational import QQ_FIELD
from src.fuchsian.ode import LinearODE, parse_ode
from src.polyring.multipoly import MultiPoly
from src.polyring.parser import parse_polynomial
from src.utils.errors import ResourceError

DATA_DIR = Path(__file__).parent / "data"

# 内置名称 -> 文件名
BUILTIN_FILES: Dict[str, str] = {
    "ks-spar": "ks_spar.poly",
    "ks-t": "ks_t.poly",
    "f0": "f0.poly",
    "f1": "f1.poly",
    "finf": "finf.poly",
    "cubic": "cubic.poly",
    "hesse": "hesse.poly",
    "eq-spar-x": "eq_spar_x.ode",
    "l1": "l1.ode",
    "l2": "l2.ode",
    "l3": "l3.ode",
}


def strip_comments(text: str) -> str:
    lines = ["" if line.lstrip().startswith("#") else line for line in text.splitlines()]
    return "\n".join(lines)


def read_text(path: Path) -> str:
    """读取表达式文件并去掉注释。

    Raises:
        ResourceError: 文件不存在或无法读取
    """
    try:
        return strip_comments(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ResourceError(f"cannot read {path}: {e}", {"path": str(path)}) from e


def builtin_path(name: str) -> Path:
    if name not in BUILTIN_FILES:
        raise ResourceError(f"unknown built-in data: {name}", {"allowed": sorted(BUILTIN_FILES)})
    return DATA_DIR / BUILTIN_FILES[name]


@lru_cache(maxsize=None)
def builtin_text(name: str) -> str:
    return read_text(builtin_path(name))


def builtin_names() -> List[str]:
    return sorted(BUILTIN_FILES)


def load_polynomial(name: str, field: Field = QQ_FIELD) -> MultiPoly:
    """解析内置多项式。

    Examples:
        >>> str(load_polynomial("f0"))
        'X^4 + X*Z^3 + 3*Y^3*Z'
    """
    return parse_polynomial(builtin_text(name), field)


def load_ode(name: str, base: Field = QQ_FIELD) -> LinearODE:
    return parse_ode(builtin_text(name), base)
