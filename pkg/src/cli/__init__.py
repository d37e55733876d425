"""命令行前端：输入解析、子命令与报告输出。"""

from src.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
