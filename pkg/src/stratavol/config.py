"""Runtime configuration: enumeration caps, cache location, output format."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

ENV_CACHE = "STRATAVOL_CACHE"

DEFAULT_SET_PARTITION_CAP = 12
DEFAULT_BRUTE_FORCE_CAP = 5
DEFAULT_BERNOULLI_MEMO_CAP = 64

OUTPUT_FORMATS = ("json", "csv", "plain")


def default_cache_dir() -> Path:
    """Per-user cache directory, overridable through STRATAVOL_CACHE."""
    env = os.environ.get(ENV_CACHE)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "stratavol"


@dataclass(frozen=True)
class Caps:
    set_partition_n: int = DEFAULT_SET_PARTITION_CAP
    brute_force_d: int = DEFAULT_BRUTE_FORCE_CAP
    bernoulli_max: int = DEFAULT_BERNOULLI_MEMO_CAP

    def __post_init__(self) -> None:
        for name in ("set_partition_n", "brute_force_d", "bernoulli_max"):
            if getattr(self, name) <= 0:
                raise ValueError(f"cap {name} must be positive")


@dataclass(frozen=True)
class Config:
    cache_dir: Path = field(default_factory=default_cache_dir)
    caps: Caps = field(default_factory=Caps)
    output: str = "json"

    def __post_init__(self) -> None:
        if self.output not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output!r}")

    @classmethod
    def from_mapping(cls, data: dict) -> "Config":
        """Build a Config from a plain mapping, rejecting unknown keys."""
        known = {"cache_dir", "caps", "output"}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        kwargs: dict = {}
        if "cache_dir" in data:
            kwargs["cache_dir"] = Path(data["cache_dir"])
        if "caps" in data:
            caps = data["caps"]
            unknown_caps = set(caps) - {"set_partition_n", "brute_force_d", "bernoulli_max"}
            if unknown_caps:
                raise ValueError(f"unknown cap keys: {sorted(unknown_caps)}")
            kwargs["caps"] = Caps(**caps)
        if "output" in data:
            kwargs["output"] = data["output"]
        return cls(**kwargs)
