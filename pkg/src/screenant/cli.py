"""Command-line interface: run, sweep, figures, validate.

Exit codes: 0 success, 1 usage error, 2 validation failure, 3 runtime error.
"""

import argparse
import os
import sys
from dataclasses import replace

from . import __version__
from .config import ConfigError, config_to_dict, load_config
from .experiments import (
    DEFAULT_SWEEP_GRIDS,
    SWEEP_NAMES,
    ScenarioConfig,
    aggregate,
    run_sweep,
    run_trials,
)
from .results import build_manifest, write_results
from .validate import run_all

SEED_ENV = "SCREENANT_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_values(text: str, as_int: bool = False):
    """Sweep values: 'start:stop:step' (endpoints inclusive within half a
    step) or a comma-separated list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise UsageError(f"bad range {text!r}, expected start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise UsageError("range step must be > 0")
        values = []
        v = start
        while v <= stop + step / 2:
            values.append(round(v, 12))
            v += step
    else:
        values = [float(p) for p in text.split(",") if p.strip()]
    if not values:
        raise UsageError(f"no values in {text!r}")
    if as_int:
        values = [int(round(v)) for v in values]
    return values


def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="scenario JSON file")
    common.add_argument("--out", help="output directory")
    common.add_argument("--seed", type=int, help=f"base seed (or env {SEED_ENV})")
    common.add_argument("--trials", type=int, help="Monte Carlo trials per point")
    common.add_argument("--threads", type=int, default=1, help="worker processes; 0 = all CPUs")
    common.add_argument("--force", action="store_true", help="overwrite existing outputs")

    parser = _Parser(prog="screenant", description=__doc__)
    parser.add_argument("--version", action="version", version=f"screenant {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("run", parents=[common], help="single scenario, prints mean SEs")
    p_sweep = sub.add_parser("sweep", parents=[common], help="one parameter sweep")
    p_sweep.add_argument("--name", required=True, choices=SWEEP_NAMES)
    p_sweep.add_argument("--values", required=True, help="start:stop:step or comma list")
    p_fig = sub.add_parser("figures", parents=[common], help="run the evaluation sweeps")
    p_fig.add_argument("--all", action="store_true", help="all eight sweeps at default grids")
    p_fig.add_argument("--name", choices=SWEEP_NAMES, help="a single figure's sweep")
    p_val = sub.add_parser("validate", parents=[common], help="gradient and oracle self-checks")
    return parser


def resolve_config(args) -> ScenarioConfig:
    cfg = load_config(args.config) if args.config else ScenarioConfig()
    seed = args.seed
    if seed is None and os.environ.get(SEED_ENV):
        seed = int(os.environ[SEED_ENV])
    if seed is not None:
        cfg = replace(cfg, base_seed=seed)
    if args.trials is not None:
        cfg = replace(cfg, trials=args.trials)
    return cfg


def _write_sweep(args, cfg, name, values, sweep, subdir=None):
    out = args.out or "results"
    out_dir = os.path.join(out, subdir) if subdir else out
    manifest = build_manifest(__version__, config_to_dict(cfg), name, values, cfg.base_seed, [])
    write_results(sweep, out_dir, manifest=manifest, force=args.force)
    print(f"wrote {out_dir}/summary.csv ({len(values)} points, {cfg.trials} trials each)")


def cmd_run(args) -> int:
    cfg = resolve_config(args)
    records = run_trials(cfg, threads=args.threads)
    for label, attr in (("ScreenAnt", "se_screenant"), ("Oracle", "se_oracle"), ("EdgeAnt", "se_edgeant")):
        mean, _std, ci = aggregate([getattr(r, attr) for r in records])
        print(f"{label:9s} mean SE {mean:.6f} bps/Hz (95% CI +/- {ci:.6f}, {cfg.trials} trials)")
    return 0


def cmd_sweep(args) -> int:
    cfg = resolve_config(args)
    values = parse_values(args.values, as_int=args.name == "elements")
    sweep = run_sweep(args.name, cfg, values, threads=args.threads)
    _write_sweep(args, cfg, args.name, values, sweep)
    return 0


def cmd_figures(args) -> int:
    cfg = resolve_config(args)
    names = list(SWEEP_NAMES) if args.all or not args.name else [args.name]
    for name in names:
        values = DEFAULT_SWEEP_GRIDS[name]
        sweep = run_sweep(name, cfg, values, threads=args.threads)
        _write_sweep(args, cfg, name, values, sweep, subdir=name)
    return 0


def cmd_validate(args) -> int:
    seed = args.seed if args.seed is not None else int(os.environ.get(SEED_ENV, "1"))
    ok, checks = run_all(seed=seed)
    for name, passed, detail in checks:
        print(f"[{'PASS' if passed else 'FAIL'}] {name} ({detail})")
    return 0 if ok else 2


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    try:
        handler = {"run": cmd_run, "sweep": cmd_sweep, "figures": cmd_figures, "validate": cmd_validate}
        return handler[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
