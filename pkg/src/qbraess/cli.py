"""Command-line front end.

Subcommands::

    equilibrium      best-response equilibrium of one network
    sweep-x          average concurrence along y = z as x varies
    surface          path concurrences over the whole (x, y) grid
    paradox-region   Braess detection over a grid of Werner parameters
    traffic          the classical road-network equilibrium
    oracle-check     density-matrix check of the swap product rule

Exit codes: 0 success, 1 invalid input, 2 numeric or convergence failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from . import __version__
from .concurrence import (
    Bell,
    DomainError,
    PureSchmidtState,
    WernerState,
    chain_concurrence,
    concurrence_pure,
    concurrence_werner,
)
from .distillation import ResourceError
from .game import (
    candidate_paradox_interval,
    find_nash,
    paradox_interval,
    paradox_region,
)
from .network import (
    DEFAULT_ALPHA,
    FlowAllocation,
    NetworkConfig,
    PathId,
    average_concurrence,
    enumerate_allocations,
    path_concurrence,
)
from .oracle import bell_swap_average_concurrence
from .traffic import traffic_nash

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2
ORACLE_TOL = 1e-6
ORACLE_GRID_CAP = 100

DEFAULTS = {
    "n": 20,
    "p": 0.9,
    "alpha": DEFAULT_ALPHA,
    "cd": True,
    "start": None,
    "format": "csv",
    "out": "-",
    "p_min": 0.335,
    "p_max": 1.0,
    "p_step": 0.005,
    "vehicles": 6,
    "with_link5": False,
    "alphas": "0.7071067811865476,0.7711,0.8409,0.92,0.98",
    "ps": "0.4,0.6,0.8,0.9,1.0",
}

SWEEP_COLUMNS = ["x", "y", "z", "c_acdb", "c_acb", "c_adb", "c_avg_modified", "c_avg_original_eq"]
SURFACE_COLUMNS = SWEEP_COLUMNS + ["d_acdb_adb", "d_acdb_acb", "d_avg"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return f"{float(value):.9g}"


def _json_value(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return float(fmt(value))
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return float(fmt(value))


def render_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(row[c]) for c in columns])
    return buf.getvalue()


def render_json(payload) -> str:
    return json.dumps(_json_value(payload), indent=2) + "\n"


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit(opts, columns, rows, payload=None):
    text = render_csv(columns, rows) if opts["format"] == "csv" else render_json(
        payload if payload is not None else [{c: r[c] for c in columns} for r in rows]
    )
    with _output(opts["out"]) as fh:
        fh.write(text)


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in str(text).split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad number list {text!r}") from exc


def _config(opts, cd=None) -> NetworkConfig:
    return NetworkConfig(
        opts["n"], opts["p"], opts["alpha"], opts["cd"] if cd is None else cd
    )


def _parse_start(text):
    if text is None:
        return None
    if isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        parts = str(text).split(",")
    if len(parts) != 3:
        raise UsageError("--start expects x,y,z")
    try:
        return FlowAllocation(*(int(v) for v in parts))
    except ValueError as exc:
        raise UsageError(f"bad --start {text!r}") from exc


def _grid_row(modified: NetworkConfig, alloc, original_avg: float) -> dict:
    row = {"x": alloc.x, "y": alloc.y, "z": alloc.z}
    row["c_acdb"] = path_concurrence(modified, alloc, PathId.ACDB)
    row["c_acb"] = path_concurrence(modified, alloc, PathId.ACB)
    row["c_adb"] = path_concurrence(modified, alloc, PathId.ADB)
    row["c_avg_modified"] = average_concurrence(modified, alloc)
    row["c_avg_original_eq"] = original_avg
    return row


def cmd_equilibrium(opts) -> int:
    config = _config(opts)
    for w in config.warnings:
        print(f"warning: {w}", file=sys.stderr)
    report = find_nash(config, _parse_start(opts["start"]))
    a = report.allocation
    row = {
        "x": a.x,
        "y": a.y,
        "z": a.z,
        "avg_concurrence": report.avg_concurrence,
        "c_acdb": report.path_concurrences.get(PathId.ACDB),
        "c_acb": report.path_concurrences[PathId.ACB],
        "c_adb": report.path_concurrences[PathId.ADB],
        "is_nash": report.is_nash,
        "passes": report.passes,
        "converged": report.converged,
    }
    payload = {
        "config": {"n": config.n_half, "p": config.p, "alpha": config.alpha, "cd": config.has_cd_edge},
        **report.to_dict(),
    }
    _emit(opts, list(row), [row], payload)
    return EXIT_OK if report.converged else EXIT_NUMERIC


def cmd_sweep_x(opts) -> int:
    modified = _config(opts, cd=True)
    original = find_nash(modified.without_cd())
    n = modified.n_half
    rows = [
        _grid_row(modified, FlowAllocation(x, n - x // 2, n - x // 2), original.avg_concurrence)
        for x in range(0, 2 * n + 1, 2)
    ]
    _emit(opts, SWEEP_COLUMNS, rows)
    return EXIT_OK if original.converged else EXIT_NUMERIC


def cmd_surface(opts) -> int:
    modified = _config(opts, cd=True)
    original = find_nash(modified.without_cd())
    rows = []
    for alloc in enumerate_allocations(modified):
        row = _grid_row(modified, alloc, original.avg_concurrence)
        row["d_acdb_adb"] = row["c_acdb"] - row["c_adb"]
        row["d_acdb_acb"] = row["c_acdb"] - row["c_acb"]
        row["d_avg"] = row["c_avg_modified"] - row["c_avg_original_eq"]
        rows.append(row)
    _emit(opts, SURFACE_COLUMNS, rows)
    return EXIT_OK if original.converged else EXIT_NUMERIC


def p_grid(p_min: float, p_max: float, p_step: float) -> list[float]:
    if p_step <= 0:
        raise UsageError("--p-step must be positive")
    if p_min > p_max:
        raise UsageError("--p-min exceeds --p-max")
    if p_min < 1.0 / 3.0 - 1e-12 or p_max > 1.0 + 1e-12:
        raise UsageError("p grid must lie inside [1/3, 1]")
    count = int(round((p_max - p_min) / p_step + 1e-9)) + 1
    grid = [round(p_min + k * p_step, 12) for k in range(count)]
    return [p for p in grid if p <= p_max + 1e-12]


def cmd_paradox_region(opts) -> int:
    grid = p_grid(opts["p_min"], opts["p_max"], opts["p_step"])
    scan = paradox_region(opts["n"], opts["alpha"], grid)
    rows = [{"p": p, "paradox": r.paradox, "gap": r.gap} for p, r in scan]
    interval = paradox_interval(scan)
    candidate = candidate_paradox_interval(opts["n"], opts["alpha"])
    payload = {
        "rows": rows,
        "interval": list(interval) if interval else None,
        "candidate_interval": list(candidate),
    }
    _emit(opts, ["p", "paradox", "gap"], rows, payload)
    if interval:
        print(
            f"paradox interval: p in [{fmt(interval[0])}, {fmt(interval[1])}]; "
            f"closed-form bounds ({fmt(candidate[0])}, {fmt(candidate[1])})",
            file=sys.stderr,
        )
    else:
        print("paradox interval: none on this grid", file=sys.stderr)
    converged = all(r.original_eq.converged and r.modified_eq.converged for _, r in scan)
    return EXIT_OK if converged else EXIT_NUMERIC


def cmd_traffic(opts) -> int:
    vehicles = opts["vehicles"]
    if vehicles < 1:
        raise UsageError("--vehicles must be at least 1")
    alloc, avg = traffic_nash(vehicles, opts["with_link5"])
    row = {
        "vehicles": vehicles,
        "with_link5": bool(opts["with_link5"]),
        "abd": alloc.abd,
        "acd": alloc.acd,
        "abcd": alloc.abcd,
        "avg_time": float(avg),
    }
    _emit(opts, list(row), [row], row)
    return EXIT_OK


def cmd_oracle_check(opts) -> int:
    alphas = _float_list(opts["alphas"])
    ps = _float_list(opts["ps"])
    if len(alphas) * (len(ps) + 1) > ORACLE_GRID_CAP:
        raise UsageError(f"oracle grid exceeds {ORACLE_GRID_CAP} points")
    rows = []
    for alpha in alphas:
        pure = PureSchmidtState(alpha)
        partners = [("werner", p, WernerState(p), concurrence_werner(p)) for p in ps]
        partners.append(("bell", None, Bell, 1.0))
        for kind, p, partner, c_partner in partners:
            oracle = bell_swap_average_concurrence(pure, partner)
            closed = chain_concurrence([concurrence_pure(alpha), c_partner])
            dev = abs(oracle - closed)
            rows.append({
                "alpha": alpha, "partner": kind, "p": p,
                "oracle": oracle, "closed_form": closed,
                "deviation": dev, "pass": dev <= ORACLE_TOL,
            })
    columns = ["alpha", "partner", "p", "oracle", "closed_form", "deviation", "pass"]
    _emit(opts, columns, rows)
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_NUMERIC


COMMANDS = {
    "equilibrium": cmd_equilibrium,
    "sweep-x": cmd_sweep_x,
    "surface": cmd_surface,
    "paradox-region": cmd_paradox_region,
    "traffic": cmd_traffic,
    "oracle-check": cmd_oracle_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="JSON file of flag values; flags override it")
    common.add_argument("--n", type=int, help="N, half the number of A-B pairs (default 20)")
    common.add_argument("--p", type=float, help="Werner parameter (default 0.9)")
    common.add_argument("--alpha", type=float, help="pure-edge Schmidt coefficient (default 2^-1/4)")
    common.add_argument("--cd", dest="cd", action="store_true", default=None, help="include the CD edge")
    common.add_argument("--no-cd", dest="cd", action="store_false", help="omit the CD edge")
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--out", help="output path, '-' for stdout")

    parser = _Parser(prog="qbraess", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    eq = sub.add_parser("equilibrium", parents=[common], help="best-response equilibrium")
    eq.add_argument("--start", help="start allocation x,y,z (default 0,N,N)")
    sub.add_parser("sweep-x", parents=[common], help="average concurrence along y = z")
    sub.add_parser("surface", parents=[common], help="full (x, y) grid")
    pr = sub.add_parser("paradox-region", parents=[common], help="scan p for the paradox")
    pr.add_argument("--p-min", type=float)
    pr.add_argument("--p-max", type=float)
    pr.add_argument("--p-step", type=float)
    tr = sub.add_parser("traffic", parents=[common], help="classical road network")
    tr.add_argument("--vehicles", type=int)
    tr.add_argument("--with-link5", action="store_true", default=None)
    oc = sub.add_parser("oracle-check", parents=[common], help="density-matrix oracle")
    oc.add_argument("--alphas", help="comma-separated Schmidt coefficients")
    oc.add_argument("--ps", help="comma-separated Werner parameters")
    return parser


def resolve_options(args: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                file_opts = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config!r}: {exc}") from exc
        if not isinstance(file_opts, dict):
            raise UsageError("config file must hold a flat JSON object")
        for key, value in file_opts.items():
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise UsageError(f"unknown config key {key!r}")
            opts[key] = value
    for key, value in vars(args).items():
        if key in DEFAULTS and value is not None:
            opts[key] = value
    if opts["format"] not in ("csv", "json"):
        raise UsageError("format must be csv or json")
    return opts


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = resolve_options(args)
        return COMMANDS[args.command](opts)
    except (UsageError, DomainError, ValueError, TypeError, ResourceError) as exc:
        print(f"qbraess {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
