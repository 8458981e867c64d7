"""Monte Carlo sweep over the transparency efficiency factor.

Runs a reduced-size sweep (1000 trials per point), prints the aggregate table,
and writes summary.csv / manifest.json to demos/out/ — the same files the
command-line interface produces.
"""

from screenant import __version__
from screenant.config import config_to_dict
from screenant.experiments import ScenarioConfig, run_sweep
from screenant.results import build_manifest, write_results

cfg = ScenarioConfig(trials=1000, base_seed=1)
values = [round(0.1 * i, 1) for i in range(1, 11)]
sweep = run_sweep("alpha", cfg, values)

print(f"{'alpha':>6} {'screen SE':>10} {'edge SE':>9} {'gain':>7}")
for i, a in enumerate(values):
    print(
        f"{a:6.1f} {sweep.screenant.mean[i]:10.3f} {sweep.edgeant.mean[i]:9.3f} "
        f"{sweep.relative_gain[i]:7.1%}"
    )

manifest = build_manifest(__version__, config_to_dict(cfg), "alpha", values, cfg.base_seed, [])
paths = write_results(sweep, "demos/out", manifest=manifest, force=True)
print("\nwrote", ", ".join(str(p) for p in paths))
print("render it with: plot --figure transparency --csv demos/out/summary.csv --out demos/out/transparency")
