"""
配置管理模块

本模块负责从环境变量和 .env 文件中加载计算配置。

使用 Pydantic Settings 进行类型安全的配置管理。
所有配置项都有默认值，可通过 QPF_ 前缀的环境变量覆盖。

Author: QuarticPF Team
Created: 2026-03-02
"""

from functools import lru_cache
from typing import List

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

CONVENTIONS = ("fix-zeta3", "full")
OUTPUT_FORMATS = ("text", "json")


class Settings(BaseSettings):
    """
    计算配置类

    所有配置项都通过环境变量加载，使用 Pydantic 进行类型验证。

    Attributes:
        MAX_ORDER: Picard-Fuchs 搜索的最大阶数（亏格 3 时 H¹ 维数为 6）
        SEED: 随机参数采样的种子
        CONVENTION: 微分数据共轭时使用的 Galois 约定
        T_SAMPLES: "对所有 t 成立" 类断言使用的参数样本
        IRREDUCIBILITY_DEGREE_LIMIT: 数域极小多项式不可约性检验的次数上限
        FROBENIUS_TERMS: Frobenius 级数默认截断阶
        OUTPUT_FORMAT: CLI 默认输出格式
        REDUCER_CACHE_SIZE: 缓存的 Jacobian 环数量
        LOG_LEVEL: 日志级别
        ENABLE_FILE_LOGGING: 是否写入文件日志
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="QPF_",
        case_sensitive=False,
        extra="ignore",
    )

    # ============ 计算配置 ============
    MAX_ORDER: int = Field(default=6, description="Picard-Fuchs 最大阶数")
    SEED: int = Field(default=20260206, description="随机采样种子")
    CONVENTION: str = Field(default="fix-zeta3", description="Galois 共轭约定")
    T_SAMPLES: List[str] = Field(
        default=["3", "-1", "2", "1/2", "5"],
        description="参数 t 的固定样本",
    )
    IRREDUCIBILITY_DEGREE_LIMIT: int = Field(
        default=6, description="不可约性检验的次数上限"
    )
    FROBENIUS_TERMS: int = Field(default=10, description="Frobenius 级数截断阶")
    REDUCER_CACHE_SIZE: int = Field(default=32, description="Jacobian 环缓存容量")

    # ============ 输出配置 ============
    OUTPUT_FORMAT: str = Field(default="text", description="CLI 输出格式")

    # ============ 日志配置 ============
    LOG_LEVEL: str = Field(default="WARNING", description="日志级别")
    ENABLE_FILE_LOGGING: bool = Field(default=False, description="启用文件日志")

    @field_validator("MAX_ORDER")
    @classmethod
    def validate_max_order(cls, v: int) -> int:
        """验证最大阶数"""
        if not 1 <= v <= 12:
            raise ValueError(f"MAX_ORDER must be between 1 and 12, got {v}")
        return v

    @field_validator("CONVENTION")
    @classmethod
    def validate_convention(cls, v: str) -> str:
        """验证 Galois 约定"""
        v = v.lower()
        if v not in CONVENTIONS:
            raise ValueError(f"CONVENTION must be one of {CONVENTIONS}, got {v}")
        return v

    @field_validator("OUTPUT_FORMAT")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        """验证输出格式"""
        v = v.lower()
        if v not in OUTPUT_FORMATS:
            raise ValueError(f"OUTPUT_FORMAT must be one of {OUTPUT_FORMATS}, got {v}")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """验证日志级别"""
        v = v.upper()
        if v not in ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown LOG_LEVEL {v}")
        return v


@lru_cache()
def get_settings() -> Settings:
    """
    获取配置单例

    使用 lru_cache 确保配置只加载一次。

    Returns:
        Settings: 配置对象

    Examples:
        >>> settings = get_settings()
        >>> settings.MAX_ORDER
        6
    """
    return Settings()


settings = get_settings()
