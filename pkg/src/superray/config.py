"""Plain-text sweep configuration.

Grammar, one statement per line::

    # comment
    [section]          optional; groups keys, must be one of SECTIONS
    key = value        lists are comma separated

Unknown sections or keys are hard errors that carry the line number.
"""
from __future__ import annotations

import math

from .errors import SuperrayError
from .sweep import GridRange, SweepConfig

SECTIONS = {
    "grid": (
        "v_lo", "v_hi", "v_points", "v_spacing",
        "delta_lo", "delta_hi", "delta_points", "delta_spacing",
        "a_values", "n_e_values", "omega_tilde_ev",
    ),
    "solver": ("rel_tol",),
    "output": ("format",),
}
KEY_SECTION = {k: sec for sec, keys in SECTIONS.items() for k in keys}

_FLOAT_KEYS = {"v_lo", "v_hi", "delta_lo", "delta_hi", "rel_tol"}
_INT_KEYS = {"v_points", "delta_points"}
_LIST_KEYS = {"a_values", "n_e_values", "omega_tilde_ev"}
_CHOICE_KEYS = {
    "v_spacing": ("linear", "log"),
    "delta_spacing": ("linear", "log"),
    "format": ("csv", "json"),
}


class ConfigError(SuperrayError, ValueError):
    def __init__(self, message, *, key=None, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.key = key
        self.line = line


def _parse_value(key, raw, line):
    try:
        if key in _FLOAT_KEYS:
            value = float(raw)
            if not math.isfinite(value):
                raise ValueError
            return value
        if key in _INT_KEYS:
            return int(raw)
        if key in _LIST_KEYS:
            items = [s.strip() for s in raw.split(",") if s.strip()]
            if not items:
                raise ValueError
            return tuple(float(s) for s in items)
    except ValueError:
        raise ConfigError(f"cannot parse {key} = {raw!r}", key=key, line=line)
    choices = _CHOICE_KEYS[key]
    if raw not in choices:
        raise ConfigError(f"{key} must be one of {choices}, got {raw!r}", key=key, line=line)
    return raw


def _check(key, value, line=None):
    """Per-key range checks so errors name the offending key."""
    bad = None
    if key in ("v_lo", "v_hi") and not 0.0 <= value <= 0.01:
        bad = "must lie in [0, 0.01]"
    elif key in ("delta_lo", "delta_hi") and not 1e-6 <= value <= 0.1:
        bad = "must lie in [1e-6, 0.1]"
    elif key in _INT_KEYS and value < 1:
        bad = "must be >= 1"
    elif key in _LIST_KEYS and any(not x > 0 for x in value):
        bad = "entries must be positive"
    elif key == "rel_tol" and not value >= 1e-15:
        bad = "must be >= 1e-15"
    if bad:
        raise ConfigError(f"{key} {bad}, got {value!r}", key=key, line=line)


def parse_config_text(text: str) -> dict:
    """Parse config text into a flat ``{key: value}`` mapping."""
    values = {}
    section = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigError(f"malformed section header {line!r}", line=lineno)
            section = line[1:-1].strip()
            if section not in SECTIONS:
                raise ConfigError(f"unknown section [{section}]", line=lineno)
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {line!r}", line=lineno)
        key, _, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if key not in KEY_SECTION:
            raise ConfigError(f"unknown key {key!r}", key=key, line=lineno)
        if section is not None and KEY_SECTION[key] != section:
            raise ConfigError(f"key {key!r} does not belong in [{section}]", key=key, line=lineno)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", key=key, line=lineno)
        value = _parse_value(key, raw, lineno)
        _check(key, value, lineno)
        values[key] = value
    return values


def config_from_values(values: dict) -> SweepConfig:
    """Build a validated :class:`SweepConfig`, filling unset keys with defaults."""
    for key, value in values.items():
        if key not in KEY_SECTION:
            raise ConfigError(f"unknown key {key!r}", key=key)
        _check(key, value)
    d = SweepConfig()
    if "n_e_values" in values and "omega_tilde_ev" in values:
        raise ConfigError("set only one of n_e_values or omega_tilde_ev", key="n_e_values")
    n_e = values.get("n_e_values")
    w_ev = values.get("omega_tilde_ev", None if n_e is not None else d.omega_tilde_ev)

    def rng(prefix, default):
        lo = values.get(f"{prefix}_lo", default.lo)
        hi = values.get(f"{prefix}_hi", default.hi if f"{prefix}_lo" not in values else max(lo, default.hi))
        try:
            return GridRange(
                lo, hi,
                values.get(f"{prefix}_points", default.points),
                values.get(f"{prefix}_spacing", default.spacing),
            )
        except ValueError as exc:
            raise ConfigError(str(exc), key=f"{prefix}_lo")

    try:
        return SweepConfig(
            v_range=rng("v", d.v_range),
            delta_range=rng("delta", d.delta_range),
            a_values=values.get("a_values", d.a_values),
            n_e_values=n_e,
            omega_tilde_ev=w_ev,
            rel_tol=values.get("rel_tol", d.rel_tol),
            output_format=values.get("format", d.output_format),
        )
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc))


def loads_config(text: str) -> SweepConfig:
    return config_from_values(parse_config_text(text))


def load_config(path) -> SweepConfig:
    with open(path) as fh:
        return loads_config(fh.read())


def config_values(config: SweepConfig) -> dict:
    """Flat key/value view of a config, the inverse of :func:`config_from_values`."""
    values = {
        "v_lo": config.v_range.lo, "v_hi": config.v_range.hi,
        "v_points": config.v_range.points, "v_spacing": config.v_range.spacing,
        "delta_lo": config.delta_range.lo, "delta_hi": config.delta_range.hi,
        "delta_points": config.delta_range.points, "delta_spacing": config.delta_range.spacing,
        "a_values": tuple(config.a_values),
        "rel_tol": config.rel_tol,
        "format": config.output_format,
    }
    if config.n_e_values is not None:
        values["n_e_values"] = tuple(config.n_e_values)
    else:
        values["omega_tilde_ev"] = tuple(config.omega_tilde_ev)
    return values


def _dump_value(value):
    if isinstance(value, tuple):
        return ", ".join(repr(float(v)) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def dumps_config(config: SweepConfig) -> str:
    values = config_values(config)
    lines = []
    for section, keys in SECTIONS.items():
        lines.append(f"[{section}]")
        lines.extend(f"{k} = {_dump_value(values[k])}" for k in keys if k in values)
        lines.append("")
    return "\n".join(lines)
