"""Command-line front end.

Every subcommand writes one or more CSV (or JSON) tables into ``--out`` and
prints a one-line summary.  Settings resolve as: command-line flag, then a
``key = value`` config file given by ``--config``, then the built-in default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import analysis, dynamics
from .hamiltonian import CoupledModel, analytic_n1, model_zetas, solve
from .overlaps import overlap_table

COMMANDS = ("spectrum", "evolve", "sweep-c", "sweep-n", "minima", "constants")
EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    big_m: float = 1.0
    xi: float = 1.0
    m: float = 1.0
    alpha: float = 10.0
    c: float = 1.0
    d: int = 1
    n: int = 1
    packet: str = "two-term"
    threshold: float = 0.99
    grid: int = 121
    frames: int = 6
    samples: int = 256
    n_max: int = 10
    c_max: float = 2.0
    c_steps: int = 41
    out: str = "results"
    format: str = "csv"
    jobs: int = 0  # 0 -> os.cpu_count()

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.d not in (1, 2):
            raise UsageError("d must be 1 or 2")
        for name in ("big_m", "xi", "m", "alpha"):
            if not getattr(self, name) > 0:
                raise UsageError(f"{name.replace('_', '-')} must be positive")
        if self.c < 0 or self.c_max < 0:
            raise UsageError("c must be non-negative")
        if not 0 <= self.n <= 10:
            raise UsageError("n must lie in [0, 10]")
        if not 0 <= self.n_max <= 10:
            raise UsageError("n-max must lie in [0, 10]")
        if self.packet not in ("two-term", "four-term"):
            raise UsageError("packet must be two-term or four-term")
        if not 0.9 < self.threshold <= 1.0:
            raise UsageError("threshold must lie in (0.9, 1]")
        if self.grid < 2 or self.samples < 2 or self.c_steps < 1 or self.frames < 0:
            raise UsageError("grid, samples and c-steps must be positive counts")
        if self.format not in ("csv", "json"):
            raise UsageError("format must be csv or json")
        if self.jobs < 0:
            raise UsageError("jobs must be non-negative")
        return self

    def model(self, **overrides):
        params = dict(m=self.m, alpha=self.alpha, c=self.c, d=self.d, N=self.n, M=self.big_m, xi=self.xi)
        params.update(overrides)
        return CoupledModel.build(**params)

    @property
    def workers(self):
        return self.jobs or os.cpu_count() or 1


_TYPES = {f.name: f.type for f in fields(RunConfig)}
_CASTS = {"float": float, "int": int, "str": str}


def _cast(key, raw):
    kind = _TYPES[key]
    try:
        return _CASTS[kind](raw)
    except ValueError:
        raise UsageError(f"{key.replace('_', '-')}: cannot read {raw!r} as {kind}") from None


def read_config_file(path):
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc.strerror}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, raw = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in _TYPES or key == "command":
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _cast(key, raw)
    return values


def build_parser():
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    model = common.add_argument_group("model")
    model.add_argument("--xi", type=float, help="double-well shape parameter (default 1)")
    model.add_argument("--big-m", dest="big_m", type=float, help="double-well mass M (default 1)")
    model.add_argument("--m", type=float, help="oscillator mass (default 1)")
    model.add_argument("--alpha", type=float, help="hbar*omega in units of the doublet splitting (default 10)")
    model.add_argument("--c", type=float, help="coupling strength (default 1)")
    model.add_argument("--d", type=int, help="coupling order, 1 or 2 (default 1)")
    model.add_argument("--n", type=int, help="oscillator cutoff N (default 1)")
    run = common.add_argument_group("run")
    run.add_argument("--packet", help="two-term or four-term (default two-term)")
    run.add_argument("--threshold", type=float, help="recurrence level for multi-term periods (default 0.99)")
    run.add_argument("--grid", type=int, help="points per axis of density/potential grids (default 121)")
    run.add_argument("--frames", type=int, help="density snapshots over half a period (default 6)")
    run.add_argument("--samples", type=int, help="time samples per period (default 256)")
    run.add_argument("--n-max", dest="n_max", type=int, help="largest N for sweep-n (default 10)")
    run.add_argument("--c-max", dest="c_max", type=float, help="largest c for sweep-c (default 2)")
    run.add_argument("--c-steps", dest="c_steps", type=int, help="number of c values for sweep-c (default 41)")
    run.add_argument("--out", help="output directory (default ./results)")
    run.add_argument("--format", help="csv or json (default csv)")
    run.add_argument("--jobs", type=int, help="worker processes for sweeps (default: all cores)")
    run.add_argument("--config", help="key = value file with defaults for any flag")

    parser = argparse.ArgumentParser(
        prog="razavy-dw",
        description="Wavepacket dynamics of a Razavy double well coupled to a harmonic oscillator.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    helps = {
        "spectrum": "eigenvalues of the coupled Hamiltonian",
        "evolve": "time series of observables and density snapshots",
        "sweep-c": "tunneling period versus coupling strength",
        "sweep-n": "tunneling period versus oscillator cutoff",
        "minima": "minima of the composite potential and a U(x, y) grid",
        "constants": "overlap constants of the basis functions",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], argument_default=argparse.SUPPRESS)
    return parser


def parse_config(argv):
    parser = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)
    ns = vars(parser.parse_args(argv))
    command = ns.pop("command", None)
    if command is None:
        parser.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)
    settings = {}
    config_path = ns.pop("config", None)
    if config_path is not None:
        settings.update(read_config_file(config_path))
    settings.update(ns)
    return RunConfig(command=command, **settings).validate()


# -- output -----------------------------------------------------------------


def _fmt(value):
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    if isinstance(value, str):
        return value
    return format(float(value), ".9g")


def _plain(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    return value


def write_table(cfg, name, columns, rows):
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{name}.{cfg.format}"
    if cfg.format == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    else:
        records = [{k: _plain(v) for k, v in zip(columns, row)} for row in rows]
        path.write_text(json.dumps(records, indent=1) + "\n", encoding="utf-8")
    return path


# -- commands ---------------------------------------------------------------


def cmd_constants(cfg):
    model = cfg.model()
    table = overlap_table(model.dw, model.ho)
    write_table(cfg, "constants", ("name", "value"), table.rows())
    return f"gamma={table.gamma:.6f} b={table.b:.6f}"


def cmd_spectrum(cfg):
    model = cfg.model()
    dec = solve(model)
    columns = ["kappa", "E_kappa"]
    rows = [(k, e) for k, e in enumerate(dec.energies)]
    if model.N == 1:
        exact = sorted(analytic_n1(model, model_zetas(model, dec.table)).energies)
        columns += ["E_analytic", "abs_diff"]
        rows = [(k, e, a, abs(e - a)) for (k, e), a in zip(rows, exact)]
    write_table(cfg, "spectrum", columns, rows)
    return f"Omega1={dec.omega1:.9g} T={dec.period:.3f}"


def cmd_evolve(cfg):
    model = cfg.model()
    dec = solve(model)
    wp = dynamics.Wavepacket.from_kind(cfg.packet, dec)
    period = dynamics.tunneling_period(wp, threshold=cfg.threshold)
    times = np.linspace(0.0, period, cfg.samples + 1)
    series = dynamics.observable_series(wp, times)
    write_table(cfg, "series", dynamics.SERIES_COLUMNS, series.rows())
    if cfg.frames:
        xs, ys = dynamics.default_grid(model, cfg.grid)
        rows = []
        for t in np.arange(cfg.frames) * period / (2 * (cfg.frames - 1) if cfg.frames > 1 else 1):
            dens = dynamics.density_grid(wp, t, xs, ys)
            rows.extend((t, x, y, dens[i, j]) for i, x in enumerate(xs) for j, y in enumerate(ys))
        write_table(cfg, "frames", ("t", "x", "y", "density"), rows)
    return f"T={period:.3f}"


def cmd_sweep_c(cfg):
    base = cfg.model()
    cs = np.linspace(0.0, cfg.c_max, cfg.c_steps)
    res = analysis.sweep_c(base, cs, jobs=cfg.workers)
    write_table(cfg, "sweep_c", ("param", "T", "omega1"), res.rows())
    return f"c={res.params[-1]:g} T={res.periods[-1]:.3f}"


def cmd_sweep_n(cfg):
    base = cfg.model()
    res = analysis.sweep_N(base, range(0, cfg.n_max + 1), jobs=cfg.workers)
    write_table(cfg, "sweep_n", ("param", "T", "omega1"), res.rows())
    return f"N={res.params[-1]} T={res.periods[-1]:.1f}"


def cmd_minima(cfg):
    model = cfg.model()
    minima = analysis.find_minima(model)
    write_table(cfg, "minima", ("x", "y", "value"), [(p.x, p.y, p.value) for p in minima])
    xs, ys, u = analysis.potential_grid(model, cfg.grid)
    rows = [(x, y, u[i, j]) for i, x in enumerate(xs) for j, y in enumerate(ys)]
    write_table(cfg, "potential", ("x", "y", "U"), rows)
    deepest = [p for p in minima if p.value - minima[0].value < 1e-9]
    right = max(deepest, key=lambda p: p.x)
    return f"U_min={right.value:.4f} at ({right.x:.4f}, {right.y:.4f})"


HANDLERS = {
    "constants": cmd_constants,
    "spectrum": cmd_spectrum,
    "evolve": cmd_evolve,
    "sweep-c": cmd_sweep_c,
    "sweep-n": cmd_sweep_n,
    "minima": cmd_minima,
}


def run(cfg):
    try:
        summary = HANDLERS[cfg.command](cfg)
    except (ArithmeticError, RuntimeError, ValueError, OSError) as exc:
        print(f"razavy-dw {cfg.command}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    print(summary)
    return EXIT_OK


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"razavy-dw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
