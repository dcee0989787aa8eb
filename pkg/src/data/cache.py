import threading
from collections import OrderedDict
from typing import Any, Optional

DEFAULT_CACHE_ENTRIES = 256


class Cache:
    """In-memory cache for expensive per-graph results, keyed by graph digest.

    Holds at most ``max_entries`` results; the oldest are dropped first.
    """

    def __init__(self, max_entries: int = DEFAULT_CACHE_ENTRIES):
        """Initialize an empty cache."""
        self._lock = threading.Lock()
        self._entries: OrderedDict[tuple, Any] = OrderedDict()
        self.max_entries = max_entries

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)

    def clear(self):
        """Clear all cached results."""
        with self._lock:
            self._entries.clear()

    def resize(self, max_entries: int):
        """Change the bound, dropping the oldest entries that no longer fit."""
        if max_entries < 1:
            raise ValueError("the cache must hold at least one entry")
        with self._lock:
            self.max_entries = max_entries
            self._evict()

    def _evict(self):
        while len(self._entries) > self.max_entries:
            self._entries.popitem(last=False)

    def _get(self, key: tuple) -> Optional[Any]:
        with self._lock:
            return self._entries.get(key)

    def _set(self, key: tuple, value: Any):
        with self._lock:
            self._entries.pop(key, None)
            self._entries[key] = value
            self._evict()

    def get_lattice(self, digest: str) -> Optional[list[frozenset[str]]]:
        """Get the cached hereditary saturated lattice if available."""
        return self._get(("lattice", digest))

    def set_lattice(self, digest: str, members: list[frozenset[str]]):
        self._set(("lattice", digest), list(members))

    def get_closure(self, digest: str, generators: frozenset[str]) -> Optional[dict[str, int]]:
        """Get a cached closure (vertex -> stage) if available."""
        return self._get(("closure", digest, generators))

    def set_closure(self, digest: str, generators: frozenset[str], stages: dict[str, int]):
        self._set(("closure", digest, generators), dict(stages))


# Global cache instance
_cache = Cache()


def get_cache() -> Cache:
    """Get the global cache instance."""
    return _cache
