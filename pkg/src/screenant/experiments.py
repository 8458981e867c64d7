"""Monte Carlo harness: scenario configuration, per-trial execution, and the
parameter sweeps behind the evaluation figures.

Every trial derives its random streams from (base_seed, trial_index, stream),
so the record multiset is identical for any worker count or chunking.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import beamforming, blockage, channel, geometry
from .blockage import BlockageSpec
from .channel import LinkParams, dbm_to_watts
from .optimizer import OptimizerConfig, draw_inits, optimize_batch

SWEEP_NAMES = (
    "alpha", "elements", "power", "distance", "frequency", "beta", "ratio", "frequency_blk",
)

# random streams per trial, in fixed order
_STREAM_SCREEN_CHANNEL = 0
_STREAM_EDGE_CHANNEL = 1
_STREAM_SCREEN_MASK = 2
_STREAM_EDGE_MASK = 3
_STREAM_OPTIMIZER = 4


@dataclass(frozen=True)
class LinkConfig:
    """Link budget at the configuration boundary (dBm fields end in _dbm)."""

    f0_hz: float = 28e9
    d_ap_m: float = 3.0
    d0_m: float = 1.0
    eta: float = 2.5
    alpha: float = 0.85
    noise_power_dbm: float = -110.0
    tx_power_dbm: float = 23.0
    extra_loss_db: float = 0.0

    def __post_init__(self):
        # mirror the physical-layer invariants so bad values fail at the
        # configuration boundary rather than mid-run
        if not 0 < self.alpha <= 1:
            raise ValueError(f"invalid-config: transparency efficiency must be in (0, 1], got {self.alpha}")
        if not self.eta > 2:
            raise ValueError(f"invalid-config: path-loss exponent must exceed 2, got {self.eta}")
        if not self.d0_m > 0 or self.d_ap_m < self.d0_m:
            raise ValueError(f"invalid-config: require d_ap >= d0 > 0, got {self.d_ap_m}, {self.d0_m}")
        if not self.f0_hz > 0:
            raise ValueError(f"invalid-config: carrier frequency must be > 0, got {self.f0_hz}")


@dataclass(frozen=True)
class ScreenConfig:
    s_x: int = 7
    s_y: int = 7
    spacing_wavelengths: float = 0.5
    # when set, the element spacing is this many meters regardless of carrier
    # frequency (fixed-physical-size mode for frequency sweeps)
    spacing_fixed_m: float | None = None

    def __post_init__(self):
        if not self.spacing_wavelengths > 0:
            raise ValueError("invalid-config: spacing multiple must be > 0")


@dataclass(frozen=True)
class EdgeConfig:
    chassis_width_m: float = 0.07
    chassis_height_m: float = 0.15


@dataclass(frozen=True)
class ScenarioConfig:
    link: LinkConfig = field(default_factory=LinkConfig)
    screen: ScreenConfig = field(default_factory=ScreenConfig)
    edge: EdgeConfig = field(default_factory=EdgeConfig)
    blockage: BlockageSpec | None = None
    optimizer: OptimizerConfig = field(default_factory=OptimizerConfig)
    trials: int = 10_000
    base_seed: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"invalid-config: trials must be >= 1, got {self.trials}")


@dataclass(frozen=True)
class TrialRecord:
    trial_index: int
    se_screenant: float
    se_oracle: float
    se_edgeant: float
    optimizer_iters: int
    mask_popcount: int


@dataclass(frozen=True)
class PointStats:
    mean: np.ndarray
    std: np.ndarray
    ci95: np.ndarray


@dataclass(frozen=True)
class SweepResult:
    param: str
    values: list
    trials: int
    screenant: PointStats
    oracle: PointStats
    edgeant: PointStats
    relative_gain: np.ndarray


def link_params(cfg: ScenarioConfig, alpha: float | None = None) -> LinkParams:
    link = cfg.link
    return LinkParams(
        f0=link.f0_hz,
        d_ap=link.d_ap_m,
        eta=link.eta,
        d0=link.d0_m,
        alpha=link.alpha if alpha is None else alpha,
        noise_power=dbm_to_watts(link.noise_power_dbm),
        tx_power_total=dbm_to_watts(link.tx_power_dbm),
        extra_loss_db=link.extra_loss_db,
    )


@dataclass(frozen=True)
class CompiledScenario:
    """Per-scenario precomputation shared by all trials: geometries, spatial
    correlation factors, and link parameters."""

    cfg: ScenarioConfig
    screen_params: LinkParams  # transparency-scaled array
    edge_params: LinkParams  # metallic baseline, alpha = 1
    screen_geom: geometry.ArrayGeometry
    edge_geom: geometry.ArrayGeometry
    screen_corr: channel.CorrelationMatrix
    edge_corr: channel.CorrelationMatrix


def compile_scenario(cfg: ScenarioConfig) -> CompiledScenario:
    screen_params = link_params(cfg)
    edge_params = link_params(cfg, alpha=1.0)
    wavelength = screen_params.wavelength
    d_e = cfg.screen.spacing_fixed_m
    if d_e is None:
        d_e = cfg.screen.spacing_wavelengths * wavelength
    screen_geom = geometry.screen_layout(geometry.ScreenArrayConfig(cfg.screen.s_x, cfg.screen.s_y, d_e))
    edge_geom = geometry.edge_layout(
        geometry.EdgeArrayConfig(screen_geom.n_elements, cfg.edge.chassis_width_m, cfg.edge.chassis_height_m)
    )
    return CompiledScenario(
        cfg=cfg,
        screen_params=screen_params,
        edge_params=edge_params,
        screen_geom=screen_geom,
        edge_geom=edge_geom,
        screen_corr=channel.correlation_matrix(screen_geom, wavelength),
        edge_corr=channel.correlation_matrix(edge_geom, wavelength),
    )


def trial_rng(base_seed: int, trial_index: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence((base_seed, trial_index, stream)))


def _sample_trial(comp: CompiledScenario, trial_index: int):
    """Draw everything random for one trial: both channels, both masks, and
    the optimizer's initial points."""
    cfg = comp.cfg
    h_screen = channel.sample_channel(
        comp.screen_corr, comp.screen_params,
        trial_rng(cfg.base_seed, trial_index, _STREAM_SCREEN_CHANNEL), seed_tag=trial_index,
    )
    h_edge = channel.sample_channel(
        comp.edge_corr, comp.edge_params,
        trial_rng(cfg.base_seed, trial_index, _STREAM_EDGE_CHANNEL), seed_tag=trial_index,
    )
    popcount = 0
    if cfg.blockage is not None:
        spec = cfg.blockage
        # perimeter layouts are not grids; grip blockage maps to a contiguous
        # perimeter segment there
        edge_spec = replace(spec, pattern="edge-segment") if spec.pattern == "rectangle" else spec
        mask_s = blockage.generate_mask(
            spec, comp.screen_geom, trial_rng(cfg.base_seed, trial_index, _STREAM_SCREEN_MASK)
        )
        mask_e = blockage.generate_mask(
            edge_spec, comp.edge_geom, trial_rng(cfg.base_seed, trial_index, _STREAM_EDGE_MASK)
        )
        h_screen = blockage.apply_static(h_screen, mask_s, spec.beta)
        h_edge = blockage.apply_static(h_edge, mask_e, spec.beta)
        popcount = mask_s.popcount
    inits = draw_inits(
        trial_rng(cfg.base_seed, trial_index, _STREAM_OPTIMIZER),
        cfg.optimizer.num_inits, comp.screen_geom.n_elements, comp.screen_params.tx_power_total,
    )
    return h_screen, h_edge, popcount, inits


def run_trials_compiled(comp: CompiledScenario, indices) -> list:
    """Run a batch of trials through the vectorized optimizer."""
    cfg = comp.cfg
    p_total = comp.screen_params.tx_power_total
    sigma2 = comp.screen_params.noise_power
    s = comp.screen_geom.n_elements
    indices = list(indices)
    n = len(indices)

    h_blk = np.empty((n, s), dtype=complex)
    init_thetas = np.empty((n, cfg.optimizer.num_inits, s))
    init_powers = np.empty_like(init_thetas)
    se_oracle = np.empty(n)
    se_edge = np.empty(n)
    popcounts = np.empty(n, dtype=np.int64)
    edge_vec = beamforming.edgeant_weights(s, p_total)

    for i, idx in enumerate(indices):
        h_s, h_e, pop, (thetas, powers) = _sample_trial(comp, idx)
        h_blk[i] = h_s.h
        init_thetas[i], init_powers[i] = thetas, powers
        se_oracle[i] = beamforming.mrt_oracle(h_s, p_total, sigma2).se
        se_edge[i] = beamforming.evaluate_se(h_e, edge_vec, sigma2)
        popcounts[i] = pop

    _, _, se, iters, _, _, _ = optimize_batch(
        h_blk, p_total, sigma2, cfg.optimizer, init_thetas, init_powers
    )
    return [
        TrialRecord(
            trial_index=idx,
            se_screenant=float(se[i]),
            se_oracle=float(se_oracle[i]),
            se_edgeant=float(se_edge[i]),
            optimizer_iters=int(iters[i]),
            mask_popcount=int(popcounts[i]),
        )
        for i, idx in enumerate(indices)
    ]


def run_trial(cfg: ScenarioConfig, trial_index: int) -> TrialRecord:
    """One Monte Carlo trial; randomness depends only on (base_seed, trial_index)."""
    return run_trials_compiled(compile_scenario(cfg), [trial_index])[0]


def _worker_chunk(cfg: ScenarioConfig, chunk: list) -> list:
    return run_trials_compiled(compile_scenario(cfg), chunk)


def run_trials(cfg: ScenarioConfig, threads: int = 1) -> list:
    """All trials of a scenario, optionally split across worker processes.

    threads = 0 means all available CPUs. Records come back sorted by
    trial_index and are identical for any worker count.
    """
    if threads == 0:
        threads = os.cpu_count() or 1
    indices = list(range(cfg.trials))
    if threads <= 1 or cfg.trials == 1:
        return run_trials_compiled(compile_scenario(cfg), indices)
    chunks = [list(c) for c in np.array_split(indices, threads) if len(c)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(_worker_chunk, [cfg] * len(chunks), chunks))
    records = [rec for part in parts for rec in part]
    records.sort(key=lambda r: r.trial_index)
    return records


def aggregate(values) -> tuple:
    """(mean, sample std, 95% normal-approximation CI half-width)."""
    arr = np.asarray(values, dtype=float)
    if arr.size < 1:
        raise ValueError("invalid-config: aggregate needs at least one record")
    mean = float(arr.mean())
    std = float(arr.std(ddof=1)) if arr.size > 1 else 0.0
    return mean, std, 1.96 * std / np.sqrt(arr.size)


def _default_blockage(spec: BlockageSpec | None) -> BlockageSpec:
    return spec if spec is not None else BlockageSpec(ratio=0.5, beta=0.1)


def apply_sweep_value(cfg: ScenarioConfig, name: str, value) -> ScenarioConfig:
    """Scenario for one sweep point; raises invalid-sweep-value on bad input."""
    if name == "alpha":
        return replace(cfg, link=replace(cfg.link, alpha=float(value)))
    if name == "elements":
        root = int(round(np.sqrt(value)))
        if root * root != int(value) or int(value) < 1:
            raise ValueError(f"invalid-sweep-value: element count {value} is not a perfect square")
        return replace(cfg, screen=replace(cfg.screen, s_x=root, s_y=root))
    if name == "power":
        return replace(cfg, link=replace(cfg.link, tx_power_dbm=float(value)))
    if name == "distance":
        return replace(cfg, link=replace(cfg.link, d_ap_m=float(value)))
    if name == "frequency":
        return replace(cfg, link=replace(cfg.link, f0_hz=float(value)))
    if name == "beta":
        spec = replace(_default_blockage(cfg.blockage), beta=float(value))
        return replace(cfg, blockage=spec)
    if name == "ratio":
        spec = replace(_default_blockage(cfg.blockage), ratio=float(value))
        return replace(cfg, blockage=spec)
    if name == "frequency_blk":
        return replace(
            cfg,
            link=replace(cfg.link, f0_hz=float(value)),
            blockage=_default_blockage(cfg.blockage),
        )
    raise ValueError(f"invalid-sweep-value: unknown sweep {name!r}")


def run_sweep(name: str, cfg: ScenarioConfig, values, threads: int = 1) -> SweepResult:
    """Run every sweep point and aggregate per-point statistics."""
    if name not in SWEEP_NAMES:
        raise ValueError(f"invalid-sweep-value: unknown sweep {name!r}")
    values = list(values)
    if not values:
        raise ValueError("invalid-sweep-value: empty value list")
    stats = {m: ([], [], []) for m in ("screenant", "oracle", "edgeant")}
    gains = []
    for value in values:
        records = run_trials(apply_sweep_value(cfg, name, value), threads=threads)
        for metric, attr in (("screenant", "se_screenant"), ("oracle", "se_oracle"), ("edgeant", "se_edgeant")):
            mean, std, ci = aggregate([getattr(r, attr) for r in records])
            for lst, v in zip(stats[metric], (mean, std, ci)):
                lst.append(v)
        gains.append(stats["screenant"][0][-1] / stats["edgeant"][0][-1] - 1)
    points = {m: PointStats(*(np.asarray(a) for a in stats[m])) for m in stats}
    return SweepResult(
        param=name,
        values=values,
        trials=cfg.trials,
        screenant=points["screenant"],
        oracle=points["oracle"],
        edgeant=points["edgeant"],
        relative_gain=np.asarray(gains),
    )


# default grids used by the figures subcommand and the acceptance suite
DEFAULT_SWEEP_GRIDS = {
    "alpha": [round(0.1 * i, 10) for i in range(1, 11)],
    "elements": [16, 25, 36, 49, 64, 81, 100],
    "power": [15.0, 19.0, 23.0, 27.0, 31.0],  # dBm
    "distance": [1.0, 2.0, 3.0, 4.0, 5.0],  # m
    "frequency": [28e9, 100e9, 300e9],  # Hz
    "beta": [round(0.1 * i, 10) for i in range(1, 11)],
    "ratio": [0.0, 0.2, 0.4, 0.6, 0.8, 1.0],
    "frequency_blk": [28e9, 100e9, 300e9],  # Hz
}
