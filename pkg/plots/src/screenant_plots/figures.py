"""Render line charts from screenant summary.csv sweep files.

Each figure plots mean spectral efficiency versus the swept parameter for the
on-screen array and the edge-mounted baseline, with shaded 95% confidence
bands. Rendering is deterministic: fixed styling, no timestamps, fixed SVG
hash salt, so the same CSV always produces byte-identical SVG output.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "screenant-plots"

import matplotlib.pyplot as plt

REQUIRED_COLUMNS = (
    "param", "value",
    "se_screenant_mean", "se_screenant_std", "se_screenant_ci95",
    "se_oracle_mean", "se_oracle_std", "se_oracle_ci95",
    "se_edgeant_mean", "se_edgeant_std", "se_edgeant_ci95",
    "relative_gain", "trials",
)

# figure id -> (sweep param in the CSV, x-axis label, x scale factor)
FIGURES = {
    "transparency": ("alpha", "Transparency efficiency factor α", 1.0),
    "size": ("elements", "Number of antenna elements S", 1.0),
    "power": ("power", "Transmit power (dBm)", 1.0),
    "distance": ("distance", "UE–AP distance (m)", 1.0),
    "frequency": ("frequency", "Carrier frequency (GHz)", 1e-9),
    "blockage": ("beta", "Blockage attenuation factor β", 1.0),
    "ratio": ("ratio", "Blockage ratio", 1.0),
    "frequency_blk": ("frequency_blk", "Carrier frequency (GHz), with blockage", 1e-9),
}

SERIES = (
    ("se_screenant", "ScreenAnt", "tab:blue"),
    ("se_edgeant", "EdgeAnt", "tab:orange"),
)
ORACLE_SERIES = ("se_oracle", "Closed-form optimum", "tab:green")


class SchemaMismatchError(ValueError):
    """The CSV does not conform to the summary.csv schema."""


@dataclass(frozen=True)
class FigureSpec:
    figure: str  # one of FIGURES
    csv_path: Path
    out_path: Path
    with_oracle: bool = False
    share_csv: Path | None = None  # second CSV whose data extends the axis ranges

    def __post_init__(self):
        if self.figure not in FIGURES:
            raise ValueError(f"unknown figure id {self.figure!r}; expected one of {sorted(FIGURES)}")


@dataclass(frozen=True)
class RenderResult:
    svg_path: Path
    png_path: Path
    n_points: int
    n_series: int


def read_summary(path) -> list[dict]:
    """Parse a summary.csv into row dicts, verifying the schema."""
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise SchemaMismatchError(
                f"schema-mismatch: {path} is missing column(s) {missing}"
            )
        rows = list(reader)
    if not rows:
        raise SchemaMismatchError(f"schema-mismatch: {path} has no data rows")
    return rows


def _series(rows, prefix, x_scale):
    x = [float(r["value"]) * x_scale for r in rows]
    mean = [float(r[f"{prefix}_mean"]) for r in rows]
    ci = [float(r[f"{prefix}_ci95"]) for r in rows]
    return x, mean, ci


def render(spec: FigureSpec) -> RenderResult:
    """Draw the figure and write SVG + PNG next to each other.

    Every CSV row becomes one marker on each line; nothing is filtered. When
    share_csv is given, axis limits are widened to cover both files so the
    pair of figures can be compared visually.
    """
    param, xlabel, x_scale = FIGURES[spec.figure]
    rows = read_summary(spec.csv_path)
    got_params = {r["param"] for r in rows}
    if got_params != {param}:
        raise SchemaMismatchError(
            f"schema-mismatch: {spec.csv_path} sweeps {sorted(got_params)}, figure "
            f"{spec.figure!r} expects {param!r}"
        )

    series = list(SERIES) + ([ORACLE_SERIES] if spec.with_oracle else [])
    fig, ax = plt.subplots(figsize=(5.2, 3.6), dpi=150)
    for prefix, label, color in series:
        x, mean, ci = _series(rows, prefix, x_scale)
        ax.plot(x, mean, marker="o", markersize=4, color=color, label=label)
        lo = [m - c for m, c in zip(mean, ci)]
        hi = [m + c for m, c in zip(mean, ci)]
        ax.fill_between(x, lo, hi, color=color, alpha=0.2, linewidth=0)

    if spec.share_csv is not None:
        _widen_limits(ax, spec, x_scale)

    ax.set_xlabel(xlabel)
    ax.set_ylabel("SE (bps/Hz)")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()

    out = Path(spec.out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    svg_path = out.with_suffix(".svg")
    png_path = out.with_suffix(".png")
    fig.savefig(svg_path, format="svg", metadata={"Date": None})
    fig.savefig(png_path, format="png")
    plt.close(fig)
    return RenderResult(svg_path=svg_path, png_path=png_path, n_points=len(rows), n_series=len(series))


def _widen_limits(ax, spec: FigureSpec, x_scale: float):
    other = read_summary(spec.share_csv)
    xs, ys = [], []
    prefixes = [s[0] for s in SERIES] + ([ORACLE_SERIES[0]] if spec.with_oracle else [])
    for prefix in prefixes:
        x, mean, ci = _series(other, prefix, x_scale)
        xs += x
        ys += [m - c for m, c in zip(mean, ci)] + [m + c for m, c in zip(mean, ci)]
    x0, x1 = ax.get_xlim()
    y0, y1 = ax.get_ylim()
    pad_x = 0.05 * (max(xs) - min(xs) or 1.0)
    pad_y = 0.05 * (max(ys) - min(ys) or 1.0)
    ax.set_xlim(min(x0, min(xs) - pad_x), max(x1, max(xs) + pad_x))
    ax.set_ylim(min(y0, min(ys) - pad_y), max(y1, max(ys) + pad_y))
