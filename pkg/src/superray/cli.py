"""Command-line interface: ``superray <command> [options]``.

Exit codes: 0 success, 1 usage error, 2 domain or convergence error,
3 validation failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

import numpy as np

from . import validation
from .config import KEY_SECTION, ConfigError, config_from_values, parse_config_text
from .errors import SuperrayError
from .media import WeakShockPair
from .poles import find_pole
from .scattering import (
    InterfaceScattering,
    Method,
    f_denominator,
    reflection,
)
from .sweep import run_sweep, write_rows

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VALIDATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _shock_args(p, v=True):
    p.add_argument("--a", type=float, default=1.0, help="band-model constant (default 1)")
    p.add_argument("--delta", type=float, default=1e-3, help="density jump dn/n (default 1e-3)")
    if v:
        p.add_argument("--v", type=float, default=1e-5, help="front speed / c (default 1e-5)")


def _freq_args(p, required=True):
    p.add_argument("--omega-x", type=float, help="offset x = omega/omega_tilde - 1")
    p.add_argument("--omega-ev", type=float, help="absolute frequency in eV (needs --omega-tilde-ev)")
    p.add_argument("--omega-tilde-ev", type=float, help="zero-crossing energy in eV")
    p.set_defaults(_freq_required=required)


def _output_args(p):
    p.add_argument("--json", action="store_true", help="print JSON instead of key: value lines")
    p.add_argument("--out", help="write results to this file instead of stdout")


def _plot_args(p):
    p.add_argument("--plot-data", metavar="FILE", help="write two-column (x, value) text for plotting")
    p.add_argument("--x-lo", type=float, default=1e-12)
    p.add_argument("--x-hi", type=float, default=1e-2)
    p.add_argument("--points", type=int, default=200)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superray", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("epsilon", help="linearized and exact permittivities")
    _shock_args(p, v=False)
    _freq_args(p)
    _output_args(p)
    _plot_args(p)

    p = sub.add_parser("reflect", help="reflection amplitude at the moving front")
    _shock_args(p)
    _freq_args(p)
    p.add_argument("--method", choices=[m.value for m in Method] + ["all"], default="full")
    _output_args(p)

    p = sub.add_parser("fdenom", help="first-order denominator f(omega)")
    _shock_args(p)
    _freq_args(p, required=False)
    _output_args(p)
    _plot_args(p)

    p = sub.add_parser("pole", help="locate the pole just above omega_tilde")
    _shock_args(p)
    p.add_argument("--rel-tol", type=float, default=1e-14)
    p.add_argument("--omega-tilde-ev", type=float, help="also report the pole energy in eV")
    _output_args(p)

    p = sub.add_parser("sweep", help="pole energies over a parameter grid")
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--threads", type=int, help="worker threads (default: $SUPERRAY_THREADS, 0 = auto)")
    p.add_argument("--out", help="output file (default stdout)")
    for key in KEY_SECTION:
        p.add_argument(f"--{key.replace('_', '-')}", dest=f"cfg_{key}", metavar="VALUE",
                       help=f"override config key {key}")

    p = sub.add_parser("validate", help="run the cross-module oracle checks")
    p.add_argument("--out", help="write the report to this file")
    return parser


def _resolve_x(args):
    has_x = args.omega_x is not None
    has_ev = args.omega_ev is not None
    if has_x and has_ev:
        raise UsageError("--omega-x and --omega-ev are mutually exclusive")
    if has_ev:
        if args.omega_tilde_ev is None:
            raise UsageError("--omega-ev needs --omega-tilde-ev")
        return args.omega_ev / args.omega_tilde_ev - 1.0
    if has_x:
        return args.omega_x
    if args._freq_required:
        raise UsageError("give --omega-x or --omega-ev")
    return None


def _emit(args, record: dict):
    if args.json:
        text = json.dumps(record, indent=1) + "\n"
    else:
        text = "".join(f"{k}: {v!r}\n" if isinstance(v, float) else f"{k}: {v}\n"
                       for k, v in record.items())
    _write(args.out, text)


def _write(path, text):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _write_plot(path, xs, ys):
    with open(path, "w") as fh:
        for x, y in zip(xs, ys):
            fh.write(f"{x!r} {y!r}\n")


def _plot_grid(args):
    if not 0 < args.x_lo < args.x_hi or args.points < 2:
        raise UsageError("plot grid needs 0 < --x-lo < --x-hi and --points >= 2")
    return [float(x) for x in np.geomspace(args.x_lo, args.x_hi, args.points)]


def cmd_epsilon(args):
    x = _resolve_x(args)
    pair = WeakShockPair(args.a, 1.0, args.delta)
    exact = pair.exact_medium()
    record = {
        "x": x,
        "eps1": pair.side1.eps_at(1.0, x),
        "eps2": pair.side2.eps_at(1.0, x),
        "eps_exact": exact.eps_at(exact.omega_tilde, x),
        "deps_domega": pair.side2.depsilon_domega(1.0 + x),
    }
    if args.plot_data:
        xs = _plot_grid(args)
        _write_plot(args.plot_data, xs, [pair.side2.eps_at(1.0, xi) for xi in xs])
    _emit(args, record)


def _scatter(args):
    return InterfaceScattering.from_pair(WeakShockPair(args.a, 1.0, args.delta), args.v)


def cmd_reflect(args):
    x = _resolve_x(args)
    scatter = _scatter(args)
    methods = list(Method) if args.method == "all" else [Method(args.method)]
    record = {"x": x}
    for m in methods:
        sol = reflection(scatter, x=x, method=m)
        prefix = "" if len(methods) == 1 else f"{m.value}_"
        record.update({
            f"{prefix}r": sol.r,
            f"{prefix}t": sol.t,
            f"{prefix}denominator": sol.denominator_value,
            f"{prefix}near_pole": sol.near_pole,
        })
        if len(methods) == 1:
            record["method"] = m.value
            record.update({f"triple_{k}": v for k, v in asdict(sol.triple).items()})
    _emit(args, record)


def cmd_fdenom(args):
    scatter = _scatter(args)
    x = _resolve_x(args)
    record = {}
    if x is not None:
        record = {"x": x, "f": f_denominator(scatter, x=x)}
    if args.plot_data:
        xs = _plot_grid(args)
        _write_plot(args.plot_data, xs, [f_denominator(scatter, x=xi) for xi in xs])
    elif x is None:
        raise UsageError("give --omega-x/--omega-ev or --plot-data")
    if record:
        _emit(args, record)


def cmd_pole(args):
    rec = find_pole(_scatter(args), args.rel_tol)
    if not rec:
        record = {"status": "no_pole", "reason": rec.reason}
    else:
        record = {"status": "pole", **asdict(rec)}
        record["bracket"] = list(rec.bracket)
        if args.omega_tilde_ev is not None:
            record["pole_energy_ev"] = args.omega_tilde_ev * (1.0 + rec.x_offset)
    if not args.json:
        record = {k: (" ".join(repr(b) for b in v) if isinstance(v, list) else v)
                  for k, v in record.items()}
    _emit(args, record)


def cmd_sweep(args):
    values = {}
    if args.config:
        try:
            with open(args.config) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read config {args.config!r}: {exc.strerror}")
        values = parse_config_text(text)
    overrides = {k: getattr(args, f"cfg_{k}") for k in KEY_SECTION
                 if getattr(args, f"cfg_{k}") is not None}
    if overrides:
        override_text = "\n".join(f"{k} = {v}" for k, v in overrides.items())
        parsed = parse_config_text(override_text)
        if "n_e_values" in parsed:
            values.pop("omega_tilde_ev", None)
        if "omega_tilde_ev" in parsed:
            values.pop("n_e_values", None)
        values.update(parsed)
    config = config_from_values(values)
    rows = run_sweep(config, threads=args.threads)
    text = write_rows(rows, None, config.output_format)
    _write(args.out, text)


def cmd_validate(args):
    results = validation.run_all()
    text = "".join(r.line() + "\n" for r in results)
    _write(args.out, text)
    if args.out:
        sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VALIDATION


COMMANDS = {
    "epsilon": cmd_epsilon,
    "reflect": cmd_reflect,
    "fdenom": cmd_fdenom,
    "pole": cmd_pole,
    "sweep": cmd_sweep,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args) or EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SuperrayError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
