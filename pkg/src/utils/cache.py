"""计算结果缓存。

线程安全的 LRU 缓存，用于跨调用保留每条曲线的 Jacobian 环
（以及其中按次数缓存的消元结果）。

Author: QuarticPF Team
Created: 2026-03-02
"""

import threading
from collections import OrderedDict
from typing import Any, Callable, Dict, Generic, Hashable, Optional, TypeVar

from src.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")


class LRUCache(Generic[T]):
    """有界 LRU 缓存。

    Attributes:
        max_size: 最大缓存条目数
        hits: 命中次数
        misses: 未命中次数

    Examples:
        >>> cache = LRUCache[int](max_size=2)
        >>> cache.get_or_create("a", lambda: 1)
        1
    """

    def __init__(self, max_size: int = 32, name: str = "cache") -> None:
        self._entries: "OrderedDict[Hashable, T]" = OrderedDict()
        self.max_size = max_size
        self.name = name
        self._lock = threading.RLock()
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[T]:
        """获取缓存值，不存在时返回 None。"""
        with self._lock:
            if key not in self._entries:
                self.misses += 1
                return None
            self._entries.move_to_end(key)
            self.hits += 1
            return self._entries[key]

    def set(self, key: Hashable, value: T) -> None:
        """写入缓存值，超出容量时淘汰最久未使用的条目。"""
        with self._lock:
            self._entries[key] = value
            self._entries.move_to_end(key)
            while len(self._entries) > self.max_size:
                evicted, _ = self._entries.popitem(last=False)
                logger.debug(f"{self.name}: evicted {evicted!r}")

    def get_or_create(self, key: Hashable, factory: Callable[[], T]) -> T:
        """获取缓存值，不存在时调用 factory 创建并写入。"""
        with self._lock:
            value = self.get(key)
            if value is None:
                value = factory()
                self.set(key, value)
            return value

    def clear(self) -> None:
        """清空缓存与统计。"""
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        return len(self._entries)

    def get_stats(self) -> Dict[str, Any]:
        """获取缓存统计信息。"""
        with self._lock:
            total = self.hits + self.misses
            return {
                "size": len(self._entries),
                "max_size": self.max_size,
                "hits": self.hits,
                "misses": self.misses,
                "hit_rate": self.hits / total if total else 0.0,
            }
