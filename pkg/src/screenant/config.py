"""JSON scenario configuration: loading with strict key checking, defaults,
and round-trippable serialization. dBm/dB fields live only here and in
LinkConfig; everything downstream is linear watts."""

import dataclasses
import json
from pathlib import Path

from .blockage import BlockageSpec
from .experiments import EdgeConfig, LinkConfig, ScenarioConfig, ScreenConfig
from .optimizer import OptimizerConfig


class ConfigError(ValueError):
    """Raised on unparseable or invalid configuration input."""


_SECTIONS = {
    "link": LinkConfig,
    "screen": ScreenConfig,
    "edge": EdgeConfig,
    "blockage": BlockageSpec,
    "optimizer": OptimizerConfig,
}

_RUN_KEYS = ("trials", "base_seed")


def _build_section(name: str, cls, data: dict):
    known = {f.name for f in dataclasses.fields(cls)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"validation-error: unknown key(s) in '{name}': {sorted(unknown)}")
    try:
        return cls(**data)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"validation-error in '{name}': {exc}") from exc


def config_from_dict(doc: dict) -> ScenarioConfig:
    if not isinstance(doc, dict):
        raise ConfigError("validation-error: top-level config must be a JSON object")
    unknown = set(doc) - set(_SECTIONS) - {"run"}
    if unknown:
        raise ConfigError(f"validation-error: unknown section(s): {sorted(unknown)}")
    kwargs = {}
    for name, cls in _SECTIONS.items():
        data = doc.get(name)
        if name == "blockage":
            kwargs[name] = None if data is None else _build_section(name, cls, data)
        else:
            kwargs[name] = _build_section(name, cls, data or {})
    run = doc.get("run") or {}
    unknown = set(run) - set(_RUN_KEYS)
    if unknown:
        raise ConfigError(f"validation-error: unknown key(s) in 'run': {sorted(unknown)}")
    try:
        return ScenarioConfig(**kwargs, **{k: run[k] for k in _RUN_KEYS if k in run})
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"validation-error in 'run': {exc}") from exc


def load_config(path) -> ScenarioConfig:
    """Parse a scenario JSON file; missing keys take the evaluation defaults,
    unknown keys are rejected."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"parse-error: cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"parse-error in {path} at line {exc.lineno}: {exc.msg}") from exc
    return config_from_dict(doc)


def config_to_dict(cfg: ScenarioConfig) -> dict:
    """Serialize so that config_from_dict round-trips to an equal config."""
    return {
        "link": dataclasses.asdict(cfg.link),
        "screen": dataclasses.asdict(cfg.screen),
        "edge": dataclasses.asdict(cfg.edge),
        "blockage": None if cfg.blockage is None else dataclasses.asdict(cfg.blockage),
        "optimizer": dataclasses.asdict(cfg.optimizer),
        "run": {"trials": cfg.trials, "base_seed": cfg.base_seed},
    }
