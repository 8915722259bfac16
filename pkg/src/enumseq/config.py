"""Run configuration: command-line flags over environment over defaults."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping, Optional

FORMATS = ("json", "csv", "text")
MIN_PRECISION = 20

ENV_PRECISION = "ENUMSEQ_PRECISION"
ENV_CACHE_DIR = "ENUMSEQ_CACHE_DIR"


def _default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "enumseq"


@dataclass(frozen=True)
class RunConfig:
    precision: int = 60
    k: Optional[int] = None  # None: pick from the number of terms
    output_format: str = "json"
    cache_dir: Optional[Path] = None
    strict: bool = False

    def __post_init__(self):
        if self.precision < MIN_PRECISION:
            raise ValueError(f"precision must be >= {MIN_PRECISION}")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be >= 1")

    @classmethod
    def resolve(cls, flags: Mapping, env: Mapping | None = None) -> "RunConfig":
        """Flags win over the environment, which wins over the defaults.

        ``flags`` maps field names to values, with None meaning "not given".
        A cache directory of "" (from flag or environment) disables caching.
        """
        env = os.environ if env is None else env
        cfg = cls(cache_dir=_default_cache_dir())
        updates: dict = {}
        if env.get(ENV_PRECISION):
            try:
                updates["precision"] = int(env[ENV_PRECISION])
            except ValueError:
                raise ValueError(f"{ENV_PRECISION} must be an integer") from None
        if ENV_CACHE_DIR in env:
            updates["cache_dir"] = Path(env[ENV_CACHE_DIR]) if env[ENV_CACHE_DIR] else None
        for name in ("precision", "k", "output_format", "strict"):
            if flags.get(name) is not None:
                updates[name] = flags[name]
        if flags.get("cache_dir") is not None:
            updates["cache_dir"] = Path(flags["cache_dir"]) if flags["cache_dir"] else None
        return replace(cfg, **updates)
