"""Run configuration for the verification suites.

A config file is flat `key = value` text: blank lines and `#` comments are
ignored, keys match the SuiteConfig field names. Precedence is
defaults < config file < command-line flags.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from pathlib import Path

from .quadrature import DENSITIES

__all__ = ["SuiteConfig", "ConfigError", "load_config_file", "merge_config"]


class ConfigError(ValueError):
    """Malformed config file or invalid field value."""


@dataclass(frozen=True)
class SuiteConfig:
    """Knobs shared by every verification suite.

    tol_exact covers identities that hold to roundoff; tol_quadrature covers
    numerically integrated quantities. Derived tolerances used by individual
    checks are fixed multiples of these two (documented at the check sites),
    never independent knobs.
    """

    tol_exact: float = 1e-10
    tol_quadrature: float = 1e-6
    r_min: float = 0.005
    r_max: float = 16.0
    grid_radial: int = 72
    grid_angular: int = 40
    fock_modes: int = 3
    fock_cutoff: int = 8
    slots: int = 6
    seed: int = 20260819
    density: str = "standard"
    suites: str = "all"

    def __post_init__(self) -> None:
        if not (0.0 < self.tol_exact < 1.0):
            raise ConfigError(f"tol_exact must be in (0, 1), got {self.tol_exact}")
        if not (0.0 < self.tol_quadrature < 1.0):
            raise ConfigError(
                f"tol_quadrature must be in (0, 1), got {self.tol_quadrature}"
            )
        if not (0.0 < self.r_min < self.r_max):
            raise ConfigError(
                f"need 0 < r_min < r_max, got r_min={self.r_min} r_max={self.r_max}"
            )
        if self.grid_radial < 8:
            raise ConfigError(f"grid_radial must be >= 8, got {self.grid_radial}")
        if self.grid_angular < 6:
            raise ConfigError(f"grid_angular must be >= 6, got {self.grid_angular}")
        if not (1 <= self.fock_modes <= 6):
            raise ConfigError(f"fock_modes must be in [1, 6], got {self.fock_modes}")
        if not (2 <= self.fock_cutoff <= 16):
            raise ConfigError(f"fock_cutoff must be in [2, 16], got {self.fock_cutoff}")
        if not (1 <= self.slots <= 12):
            raise ConfigError(f"slots must be in [1, 12], got {self.slots}")
        if self.seed < 0:
            raise ConfigError(f"seed must be >= 0, got {self.seed}")
        if self.density not in DENSITIES + ("both",):
            raise ConfigError(
                f"density must be one of {DENSITIES + ('both',)}, got {self.density!r}"
            )

    def selected_suites(self) -> tuple[str, ...]:
        """Suite names requested by the config; empty or 'all' means every suite."""
        raw = self.suites.strip()
        if not raw or raw == "all":
            return ()
        return tuple(name.strip() for name in raw.split(",") if name.strip())


_FIELD_TYPES = {f.name: f.type for f in dataclasses.fields(SuiteConfig)}


def _parse_value(key: str, raw: str, lineno: int | None = None):
    where = f" (line {lineno})" if lineno is not None else ""
    if key not in _FIELD_TYPES:
        known = ", ".join(sorted(_FIELD_TYPES))
        raise ConfigError(f"unknown config key {key!r}{where}; known keys: {known}")
    kind = _FIELD_TYPES[key]
    try:
        if kind == "float":
            return float(raw)
        if kind == "int":
            return int(raw)
        return raw
    except ValueError as exc:
        raise ConfigError(f"bad value for {key!r}{where}: {raw!r} ({exc})") from None


def load_config_file(path) -> dict:
    """Parse a key = value config file into a field dict (no defaults applied)."""
    text = Path(path).read_text()
    values: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key = value, got {line!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        raw = raw.strip()
        if not key or not raw:
            raise ConfigError(f"line {lineno}: empty key or value in {line!r}")
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values[key] = _parse_value(key, raw, lineno)
    return values


def merge_config(file_values: dict | None = None, overrides: dict | None = None) -> SuiteConfig:
    """defaults < file < overrides; validation happens in SuiteConfig."""
    merged: dict = {}
    if file_values:
        merged.update(file_values)
    if overrides:
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in _FIELD_TYPES:
                raise ConfigError(f"unknown override {key!r}")
            merged[key] = value
    return SuiteConfig(**merged)
