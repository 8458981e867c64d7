"""Result serialization: summary.csv, optional trials.csv, and the run
manifest that makes every output directory reproducible."""

import json
from datetime import datetime, timezone
from pathlib import Path

from .experiments import SweepResult

SUMMARY_HEADER = (
    "param,value,"
    "se_screenant_mean,se_screenant_std,se_screenant_ci95,"
    "se_oracle_mean,se_oracle_std,se_oracle_ci95,"
    "se_edgeant_mean,se_edgeant_std,se_edgeant_ci95,"
    "relative_gain,trials"
)

TRIALS_HEADER = "trial_index,se_screenant,se_oracle,se_edgeant,optimizer_iters,mask_popcount"


def _fmt(x) -> str:
    return format(float(x), ".9g")


def summary_rows(sweep: SweepResult):
    for i, value in enumerate(sweep.values):
        cells = [sweep.param, _fmt(value)]
        for stats in (sweep.screenant, sweep.oracle, sweep.edgeant):
            cells += [_fmt(stats.mean[i]), _fmt(stats.std[i]), _fmt(stats.ci95[i])]
        cells += [_fmt(sweep.relative_gain[i]), str(sweep.trials)]
        yield ",".join(cells)


def build_manifest(version, cfg_dict, sweep_name, values, base_seed, out_files) -> dict:
    return {
        "tool_version": version,
        "config": cfg_dict,
        "sweep": {"name": sweep_name, "values": list(values)},
        "base_seed": base_seed,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "outputs": [str(p) for p in out_files],
    }


def write_results(
    sweep: SweepResult,
    out_dir,
    records=None,
    manifest: dict | None = None,
    force: bool = False,
):
    """Write summary.csv (+ optional trials.csv, manifest.json) into out_dir.

    Refuses to overwrite existing result files unless force is set. Returns
    the list of written paths.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    targets = [out_dir / "summary.csv"]
    if records is not None:
        targets.append(out_dir / "trials.csv")
    if manifest is not None:
        targets.append(out_dir / "manifest.json")
    if not force:
        existing = [p for p in targets if p.exists()]
        if existing:
            raise FileExistsError(f"io-error: refusing to overwrite {existing[0]} (use --force)")

    lines = [SUMMARY_HEADER, *summary_rows(sweep)]
    (out_dir / "summary.csv").write_text("\n".join(lines) + "\n")
    if records is not None:
        rows = [TRIALS_HEADER] + [
            f"{r.trial_index},{_fmt(r.se_screenant)},{_fmt(r.se_oracle)},"
            f"{_fmt(r.se_edgeant)},{r.optimizer_iters},{r.mask_popcount}"
            for r in records
        ]
        (out_dir / "trials.csv").write_text("\n".join(rows) + "\n")
    if manifest is not None:
        manifest = dict(manifest, outputs=[str(p) for p in targets])
        (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return targets
