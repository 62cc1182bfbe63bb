"""Run configuration: defaults < ``key = value`` file < command-line flags."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields

ENV_VAR = "VAT_CONFIG"


@dataclass
class Config:
    max_n: int = 8
    edge_budget: int = 24
    node_budget: int = 10**8
    time_budget_s: float = 600
    seed: int = 0
    cache_path: str = "./cache.jsonl"

    def validate(self):
        for name in ("max_n", "edge_budget", "node_budget", "time_budget_s"):
            if getattr(self, name) <= 0:
                raise ValueError(f"config {name} must be positive")
        return self

    def digest_fields(self) -> dict:
        """Fields that can change a result (time and cache location cannot, except via budget hits)."""
        d = asdict(self)
        d.pop("cache_path")
        d.pop("time_budget_s")
        return d


_TYPES = {f.name: f.type for f in fields(Config)}


def _coerce(name, raw):
    kind = _TYPES[name]
    if kind == "int":
        return int(float(raw)) if "e" in raw.lower() else int(raw)
    if kind == "float":
        return float(raw)
    return raw


def parse_config_text(text: str) -> dict:
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in _TYPES:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        out[key] = _coerce(key, raw)
    return out


def load_config(path: str | None = None, overrides: dict | None = None) -> Config:
    path = path or os.environ.get(ENV_VAR)
    values = {}
    if path:
        with open(path) as fh:
            values.update(parse_config_text(fh.read()))
    for k, v in (overrides or {}).items():
        if v is not None:
            values[k] = v
    return Config(**values).validate()
