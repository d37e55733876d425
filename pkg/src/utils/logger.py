"""日志工具模块。

提供统一的日志记录接口，基于 loguru 实现。
控制台输出写到 stderr，保证 CLI 的 JSON 报告独占 stdout。
"""

import sys
from pathlib import Path
from typing import Any, Optional

from loguru import logger as _logger

from src.utils.config import get_settings

_settings = get_settings()

# 移除默认的 handler
_logger.remove()

# 添加控制台输出
_logger.add(
    sys.stderr,
    format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
    level=_settings.LOG_LEVEL,
    colorize=True,
)
_logger.configure(extra={"name": "quarticpf"})

# 添加文件输出（可选）
if _settings.ENABLE_FILE_LOGGING:
    log_path = Path("logs")
    try:
        log_path.mkdir(exist_ok=True)
        _logger.add(
            log_path / "quarticpf_{time:YYYY-MM-DD}.log",
            format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[name]}:{function}:{line} - {message}",
            level="DEBUG",
            rotation="00:00",
            retention="7 days",
            compression="zip",
        )
    except (PermissionError, OSError):
        # 无法创建文件日志时只保留控制台输出
        pass


def get_logger(name: Optional[str] = None) -> Any:
    """获取 logger 实例。

    Args:
        name: Logger 名称，通常使用 __name__

    Returns:
        绑定了名称的 loguru Logger

    Examples:
        >>> from src.utils.logger import get_logger
        >>> logger = get_logger(__name__)
        >>> logger.info("reducer ready")
    """
    if name:
        return _logger.bind(name=name)
    return _logger


__all__ = ["get_logger", "logger"]

logger = get_logger(__name__)
