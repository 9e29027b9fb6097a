"""Configuration management for ringcode using TOML."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import toml

ORDER_CAP_ENV = "RINGCODE_ORDER_CAP"


def get_default_config_dir() -> Path:
    """Get the default configuration directory based on platform."""
    if os.name == "nt":  # Windows
        base = Path(os.environ.get("APPDATA", Path.home() / "AppData" / "Roaming"))
    else:  # Linux/Mac
        base = Path(os.environ.get("XDG_CONFIG_HOME", Path.home() / ".config"))
    return base / "ringcode"


@dataclass
class RingConfig:
    """Ring construction settings."""

    order_cap: int = 512
    # Rings up to this order get the full n^3 axiom check, larger ones are sampled
    exhaustive_axiom_limit: int = 64
    axiom_sample_triples: int = 100_000
    check_axioms: bool = True


@dataclass
class EnumerationConfig:
    """Limits for full scans of R^n."""

    cap: int = 10_000_000
    chunk_size: int = 65_536
    workers: int = 1


@dataclass
class SearchConfig:
    """Code search settings."""

    node_budget: int = 2_000_000
    max_vertices: int = 4096
    workers: int = 1
    ordering: str = "lex"  # lex, weight, random


@dataclass
class VerifyConfig:
    """Randomized verification settings."""

    seed: int = 0
    trials: int = 1000
    workers: int = 1


@dataclass
class OutputConfig:
    """Output rendering settings."""

    format: str = "table"  # table, json, csv
    table_width: int = 120


_SECTIONS = ("ring", "enumeration", "search", "verify", "output")


@dataclass
class RingcodeConfig:
    """Main configuration container for ringcode."""

    ring: RingConfig = field(default_factory=RingConfig)
    enumeration: EnumerationConfig = field(default_factory=EnumerationConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    # Runtime state (not saved to config)
    config_file: str = ""

    @classmethod
    def load(cls, config_path: str | Path | None = None) -> RingcodeConfig:
        """Load configuration from TOML file, then apply environment overrides."""
        if config_path is None:
            config_path = get_default_config_dir() / "config.toml"
        else:
            config_path = Path(config_path)

        config = cls()
        config.config_file = str(config_path)

        if config_path.exists():
            try:
                data = toml.load(config_path)
                config._load_from_dict(data)
            except (toml.TomlDecodeError, OSError, TypeError, ValueError):
                # If config is corrupted, use defaults
                pass

        config.apply_environment()
        return config

    def apply_environment(self) -> None:
        """Apply environment variable overrides."""
        cap = os.environ.get(ORDER_CAP_ENV, "").strip()
        if cap.isdigit():
            self.ring.order_cap = int(cap)

    def _load_from_dict(self, data: dict[str, Any]) -> None:
        """Load configuration from dictionary, keeping defaults for missing keys."""
        for name in _SECTIONS:
            if name not in data:
                continue
            section = getattr(self, name)
            for key, value in data[name].items():
                if hasattr(section, key):
                    current = getattr(section, key)
                    setattr(section, key, type(current)(value))

    def save(self, config_path: str | Path | None = None) -> None:
        """Save configuration to TOML file."""
        if config_path is None:
            config_path = Path(self.config_file) if self.config_file else (
                get_default_config_dir() / "config.toml"
            )
        else:
            config_path = Path(config_path)

        config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(config_path, "w") as f:
            toml.dump(self._to_dict(), f)

        self.config_file = str(config_path)

    def _to_dict(self) -> dict[str, Any]:
        """Convert configuration to dictionary."""
        return {name: dict(vars(getattr(self, name))) for name in _SECTIONS}

    def set_value(self, key: str, value: str) -> Any:
        """Set `section.key` from a string, converting to the field's type."""
        parts = key.split(".")
        if len(parts) != 2 or parts[0] not in _SECTIONS:
            raise KeyError(f"Key must be 'section.key' with section in {', '.join(_SECTIONS)}")
        section = getattr(self, parts[0])
        if not hasattr(section, parts[1]):
            raise KeyError(f"Unknown setting '{key}'")

        current = getattr(section, parts[1])
        typed_value: Any
        if isinstance(current, bool):
            typed_value = value.lower() in ("true", "yes", "1")
        elif isinstance(current, int):
            typed_value = int(value)
        else:
            typed_value = value
        setattr(section, parts[1], typed_value)
        return typed_value


# Global config instance (can be overridden)
_config: RingcodeConfig | None = None


def get_config() -> RingcodeConfig:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = RingcodeConfig.load()
    return _config


def set_config(config: RingcodeConfig) -> None:
    """Set the global configuration instance."""
    global _config
    _config = config


def reset_config() -> None:
    """Reset the global configuration instance."""
    global _config
    _config = None
