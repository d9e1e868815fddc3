"""Parameter sweeps mapping pole locations to photon energies."""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .constants import omega_to_ev, plasma_frequency
from .errors import DomainError
from .media import WeakShockPair
from .poles import find_pole
from .scattering import InterfaceScattering

CSV_FIELDS = (
    "v", "delta", "a", "n_e_cm3", "omega_tilde_ev",
    "pole_energy_ev", "x_offset", "f_residual", "status",
)
THREADS_ENV = "SUPERRAY_THREADS"


def emitted_energy_estimate(n_e: float, a: float) -> float:
    """Photon energy (eV) at the permittivity zero crossing, ``hbar w_p / sqrt(a)``."""
    if not n_e > 0:
        raise DomainError(f"electron density must be positive, got {n_e!r}")
    if not a > 0:
        raise DomainError(f"a must be positive, got {a!r}")
    return omega_to_ev(plasma_frequency(n_e)) / math.sqrt(a)


@dataclass(frozen=True)
class GridRange:
    lo: float
    hi: float
    points: int = 1
    spacing: str = "log"

    def __post_init__(self):
        if self.points < 1:
            raise DomainError("points must be >= 1")
        if not self.lo <= self.hi:
            raise DomainError(f"lo={self.lo!r} exceeds hi={self.hi!r}")
        if self.spacing not in ("linear", "log"):
            raise DomainError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        if self.spacing == "log" and self.points > 1 and not self.lo > 0:
            raise DomainError("log spacing needs lo > 0")

    def values(self) -> list[float]:
        if self.points == 1 or self.lo == self.hi:
            return [float(self.lo)]
        if self.spacing == "log":
            grid = np.geomspace(self.lo, self.hi, self.points)
        else:
            grid = np.linspace(self.lo, self.hi, self.points)
        return sorted(set(float(g) for g in grid))


@dataclass(frozen=True)
class SweepConfig:
    """Grid and solver settings for :func:`run_sweep`.

    Exactly one of ``n_e_values`` (cm^-3) or ``omega_tilde_ev`` fixes the
    energy scale of each grid point.
    """

    v_range: GridRange = GridRange(1e-5, 1e-5, 1)
    delta_range: GridRange = GridRange(1e-4, 1e-2, 9, "log")
    a_values: tuple[float, ...] = (1.0,)
    n_e_values: tuple[float, ...] | None = None
    omega_tilde_ev: tuple[float, ...] | None = (1.0,)
    rel_tol: float = 1e-14
    output_format: str = "csv"

    def __post_init__(self):
        if not (0.0 <= self.v_range.lo and self.v_range.hi <= 0.01):
            raise DomainError("v_range must lie within [0, 0.01]")
        if not (1e-6 <= self.delta_range.lo and self.delta_range.hi <= 0.1):
            raise DomainError("delta_range must lie within [1e-6, 0.1]")
        if not self.a_values or any(not a > 0 for a in self.a_values):
            raise DomainError("a_values must be non-empty and positive")
        if (self.n_e_values is None) == (self.omega_tilde_ev is None):
            raise DomainError("give exactly one of n_e_values or omega_tilde_ev")
        scale = self.n_e_values if self.n_e_values is not None else self.omega_tilde_ev
        if not scale or any(not s > 0 for s in scale):
            raise DomainError("energy-scale values must be non-empty and positive")
        if not self.rel_tol >= 1e-15:
            raise DomainError("rel_tol must be >= 1e-15")
        if self.output_format not in ("csv", "json"):
            raise DomainError(f"output format must be csv or json, got {self.output_format!r}")

    def grid(self):
        """Grid points in lexicographic ``(v, delta, a, scale)`` order."""
        scale = self.n_e_values if self.n_e_values is not None else self.omega_tilde_ev
        return list(itertools.product(
            self.v_range.values(),
            self.delta_range.values(),
            sorted({float(a) for a in self.a_values}),
            sorted({float(s) for s in scale}),
        ))


@dataclass(frozen=True)
class SpectrumRow:
    v: float
    delta: float
    a: float
    n_e_cm3: float | None
    omega_tilde_ev: float
    pole_energy_ev: float | None = None
    x_offset: float | None = None
    f_residual: float | None = None
    status: str = "no_pole"
    detail: str = field(default="", compare=False)

    def validate(self):
        if self.status == "pole":
            if not 0 < self.x_offset <= self.delta:
                raise AssertionError(f"x_offset {self.x_offset!r} outside (0, delta]")
            if not self.pole_energy_ev >= self.omega_tilde_ev:
                raise AssertionError("pole energy below the zero-crossing energy")
            if abs(self.pole_energy_ev / self.omega_tilde_ev - 1.0 - self.x_offset) > 1e-12:
                raise AssertionError("pole energy inconsistent with x_offset")
        elif self.status != "no_pole":
            raise AssertionError(f"unknown status {self.status!r}")


def _evaluate(point, n_e_mode, rel_tol):
    v, delta, a, scale = point
    if n_e_mode:
        n_e, w_ev = scale, emitted_energy_estimate(scale, a)
    else:
        n_e, w_ev = None, scale
    base = dict(v=v, delta=delta, a=a, n_e_cm3=n_e, omega_tilde_ev=w_ev)
    try:
        scatter = InterfaceScattering.from_pair(WeakShockPair(a, 1.0, delta), v)
        rec = find_pole(scatter, rel_tol)
    except (ArithmeticError, ValueError) as exc:
        return SpectrumRow(**base, detail=str(exc))
    if not rec:
        return SpectrumRow(**base, detail=rec.reason)
    return SpectrumRow(
        **base,
        pole_energy_ev=w_ev * (1.0 + rec.x_offset),
        x_offset=rec.x_offset,
        f_residual=rec.f_residual,
        status="pole",
    )


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "0")
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{THREADS_ENV} must be an integer, got {raw!r}")
    if n < 0:
        raise DomainError(f"{THREADS_ENV} must be >= 0")
    return n or (os.cpu_count() or 1)


def run_sweep(config: SweepConfig, threads: int | None = None) -> list[SpectrumRow]:
    """Solve for the pole at every grid point.

    Rows come back in grid order whatever the thread count; failures at a
    point are recorded in that row's status and never abort the sweep.
    """
    points = config.grid()
    n_e_mode = config.n_e_values is not None
    threads = default_threads() if threads is None else max(1, threads)
    if threads == 1 or len(points) < 2:
        rows = [_evaluate(p, n_e_mode, config.rel_tol) for p in points]
    else:
        with ThreadPoolExecutor(threads) as pool:
            rows = list(pool.map(
                _evaluate, points,
                itertools.repeat(n_e_mode), itertools.repeat(config.rel_tol),
            ))
    for row in rows:
        row.validate()
    return rows


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _record(row: SpectrumRow) -> dict:
    d = asdict(row)
    d.pop("detail")
    return d


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        rec = _record(row)
        writer.writerow([_fmt(rec[k]) for k in CSV_FIELDS])
    return buf.getvalue()


def rows_to_json(rows) -> str:
    # json.dumps uses repr() for floats, i.e. shortest round-trip form
    return json.dumps([_record(r) for r in rows], indent=1) + "\n"


def write_rows(rows, path=None, fmt="csv") -> str:
    text = rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows)
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text


def read_csv(text: str) -> list[dict]:
    """Parse sweep CSV back into dicts of floats (empty cells become None)."""
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        out.append({
            k: (rec[k] if k == "status" else (float(rec[k]) if rec[k] else None))
            for k in CSV_FIELDS
        })
    return out
