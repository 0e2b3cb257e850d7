"""Content-addressed cache of computed results."""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

# Bump whenever a grading, sign or output convention changes the written results.
CONVENTION_VERSION = 2


class ResultCache:
    """JSON results keyed by the sha256 of their inputs."""

    def __init__(self, config):
        """
        Initialize the cache.

        Args:
            config: Configuration object
        """
        self.config = config
        self._cache: Dict[str, Dict[str, Any]] = {}  # In-memory copy of entries read or written
        self._cache_dir: Optional[Path] = None

        if getattr(config, "enable_caching", False):
            self._cache_dir = Path(config.cache_dir)
            self._cache_dir.mkdir(parents=True, exist_ok=True)

    @property
    def enabled(self) -> bool:
        return self._cache_dir is not None

    def key(self, meta: Dict[str, Any]) -> str:
        """Hash of the inputs together with the convention version."""
        cache_input = json.dumps(
            {"convention_version": CONVENTION_VERSION, **meta}, sort_keys=True, separators=(",", ":")
        )
        return hashlib.sha256(cache_input.encode()).hexdigest()

    def path_for(self, meta: Dict[str, Any]) -> Optional[Path]:
        if self._cache_dir is None:
            return None
        return self._cache_dir / f"{self.key(meta)}.json"

    def get(self, meta: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        """The cached result for ``meta``, or None on a miss or a corrupt entry."""
        cache_key = self.key(meta)
        if cache_key in self._cache:
            return self._cache[cache_key]

        cache_file = self.path_for(meta)
        if cache_file is None or not cache_file.exists():
            logger.debug("Cache miss for %s", cache_key[:12])
            return None
        try:
            with open(cache_file, "r") as f:
                entry = json.load(f)
            if entry["meta"]["convention_version"] != CONVENTION_VERSION:
                raise KeyError("convention_version")
            result = entry["result"]
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            logger.warning("Ignoring corrupt cache entry %s (%s); recomputing", cache_file, e)
            return None
        self._cache[cache_key] = result
        logger.debug("Cache hit for %s", cache_key[:12])
        return result

    def put(self, meta: Dict[str, Any], result: Dict[str, Any]) -> None:
        cache_key = self.key(meta)
        self._cache[cache_key] = result

        cache_file = self.path_for(meta)
        if cache_file is None:
            return
        entry = {"meta": {"convention_version": CONVENTION_VERSION, **meta}, "result": result}
        try:
            with open(cache_file, "w") as f:
                json.dump(entry, f, indent=2, sort_keys=True)
        except OSError as e:
            # Not fatal: the result is still returned to the caller.
            logger.warning("Could not write cache entry %s: %s", cache_file, e)


__all__ = ["CONVENTION_VERSION", "ResultCache"]
