"""Run configuration: budgets, seed and output settings.

Values come from (lowest priority first) the defaults below, a JSON file
named by ``--config`` or the ``QUINTICCERT_CONFIG`` environment variable,
and explicit command-line flags.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .arith import Effort

CONFIG_ENV = "QUINTICCERT_CONFIG"
FORMATS = ("json-lines", "tsv")


@dataclass(frozen=True)
class RunConfig:
    trial_bound: int = 10**6
    rho_iterations: int = 20_000_000
    time_limit: float = 120.0
    witness_bound: int = 2000
    curve_height: int = 300
    seed: int = 0
    format: str = "json-lines"
    output: str | None = None
    jobs: int = 1

    def __post_init__(self):
        for name in ("trial_bound", "rho_iterations", "witness_bound", "curve_height", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")

    @property
    def effort(self) -> Effort:
        return Effort(self.trial_bound, self.rho_iterations, self.time_limit, self.seed)

    def to_json(self) -> dict:
        return asdict(self)

    def updated(self, **overrides) -> "RunConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config(path: str | os.PathLike | None = None) -> RunConfig:
    """Defaults overlaid with the JSON object at ``path`` (or $QUINTICCERT_CONFIG)."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return RunConfig()
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return RunConfig(**data)
