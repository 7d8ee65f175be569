"""Run configuration: every knob of the pipeline, validated up front."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from archrec.clustering.seeds import SEED_STRATEGIES
from archrec.similarity.combine import SignificanceFactors


class ConfigError(ValueError):
    """Invalid run configuration (exit code 1)."""


@dataclass
class RunConfig:
    corpus: str = ""
    rules: str = ""
    call_edges: str = ""
    out_dir: str = "archrec-out"
    factors: list[float] | str | None = None  # six floats, "auto", or None=defaults
    temp: float = 1000.0
    cooling: float = 0.7
    strategies: list[str] = field(default_factory=lambda: list(SEED_STRATEGIES))
    rng_seed: int = 0
    tau: float = 0.9
    label_k: int = 5
    theta: float = 0.1
    eps_stop: float = 1e-6
    eliminate_outliers: bool = False
    write_trace: bool = False

    def validate(self) -> "RunConfig":
        if isinstance(self.factors, str) and self.factors != "auto":
            raise ConfigError(f"factors must be six numbers or 'auto', got {self.factors!r}")
        if isinstance(self.factors, (list, tuple)):
            if len(self.factors) != 6:
                raise ConfigError(f"expected 6 significance factors, got {len(self.factors)}")
            try:
                SignificanceFactors.from_sequence(self.factors)
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
        if self.temp <= 0:
            raise ConfigError(f"temp must be positive, got {self.temp}")
        if not 0.0 <= self.cooling <= 1.0:
            raise ConfigError(f"cooling must be in [0,1], got {self.cooling}")
        unknown = set(self.strategies) - set(SEED_STRATEGIES)
        if unknown:
            raise ConfigError(f"unknown seed strategies: {sorted(unknown)}")
        if not 0.0 <= self.tau:
            raise ConfigError(f"tau must be nonnegative, got {self.tau}")
        if self.label_k < 1:
            raise ConfigError(f"label_k must be >= 1, got {self.label_k}")
        return self

    @classmethod
    def from_file(cls, path: str | Path) -> "RunConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data).validate()

    def merged(self, overrides: dict) -> "RunConfig":
        data = asdict(self)
        data.update({k: v for k, v in overrides.items() if v is not None})
        return RunConfig(**data).validate()

    def analysis_dict(self) -> dict:
        """Config fields that influence analysis results (output location
        and logging toggles excluded)."""
        data = asdict(self)
        for key in ("out_dir", "write_trace"):
            data.pop(key, None)
        return data

    def fingerprint(self) -> str:
        canonical = json.dumps(self.analysis_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:16]
