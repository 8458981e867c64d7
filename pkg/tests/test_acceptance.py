"""Acceptance suite: one test (and one printed pass/fail line) per criterion.

Criteria 5, 6, and 8 run full-scale Monte Carlo sweeps and take several
minutes combined; everything else finishes in seconds.
"""

import filecmp

import numpy as np
import pytest

from screenant import cli
from screenant.blockage import BlockageSpec
from screenant.channel import correlation_matrix, path_loss, sample_channel
from screenant.experiments import (
    DEFAULT_SWEEP_GRIDS,
    ScenarioConfig,
    ScreenConfig,
    link_params,
    run_sweep,
    run_trials,
)
from screenant.geometry import ScreenArrayConfig, screen_layout
from screenant.validate import _random_point, fd_gradient
from screenant.optimizer import grad_power, grad_theta

TRIALS_FULL = 10_000


def report(num, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {name} — {detail}"
    print(line)
    assert ok, line


@pytest.fixture(scope="session")
def default_records():
    """10^4 trials of the default scenario (S=49, alpha=0.85, no blockage)."""
    return run_trials(ScenarioConfig(trials=TRIALS_FULL, base_seed=1))


@pytest.fixture(scope="session")
def full_sweeps():
    """All default sweep grids at 10^4 trials per point."""
    cfg = ScenarioConfig(trials=TRIALS_FULL, base_seed=1)
    return {name: run_sweep(name, cfg, DEFAULT_SWEEP_GRIDS[name]) for name in DEFAULT_SWEEP_GRIDS}


def test_criterion_1_gradient_correctness():
    rng = np.random.default_rng(2024)
    sizes = (2, 5, 49)
    worst_theta = worst_power = 0.0
    n_points = 0
    while n_points < 200:
        for s in sizes:
            h, v = _random_point(rng, s)
            fd_t = fd_gradient(h, v, 1.0, "theta", 1e-6)
            fd_p = fd_gradient(h, v, 1.0, "power", 1e-8)
            gt = grad_theta(h, v, 1.0)
            gp = grad_power(h, v, 1.0)
            worst_theta = max(worst_theta, np.max(np.abs(gt - fd_t) / np.maximum(np.abs(fd_t), 1e-12)))
            worst_power = max(worst_power, np.max(np.abs(gp - fd_p) / np.maximum(np.abs(fd_p), 1e-12)))
            n_points += 1
    report(
        1, "analytic gradients match finite differences",
        worst_theta < 1e-5 and worst_power < 1e-4,
        f"{n_points} points, max rel err theta {worst_theta:.2e} (<1e-5), power {worst_power:.2e} (<1e-4)",
    )


def test_criterion_2_oracle_equivalence(default_records):
    se_opt = np.array([r.se_screenant for r in default_records])
    se_orc = np.array([r.se_oracle for r in default_records])
    never_exceeds = bool((se_opt <= se_orc + 1e-9).all())
    within_1pct = float(np.mean((se_orc - se_opt) / se_orc <= 0.01))
    report(
        2, "optimizer within 1% of the closed-form optimum in >=99% of trials",
        within_1pct >= 0.99 and never_exceeds,
        f"within 1%: {within_1pct:.1%} (need >=99%); never exceeds oracle: {never_exceeds}",
    )


def test_criterion_3_convergence_speed(default_records):
    iters = np.array([r.optimizer_iters for r in default_records])
    median = float(np.median(iters))
    report(
        3, "median outer iterations to convergence <= 2 (tolerance 3)",
        median <= 3,
        f"median {median:g} iterations over {len(iters)} trials",
    )


def test_criterion_4_channel_statistics():
    n = 100_000
    cfg = ScenarioConfig(screen=ScreenConfig(s_x=3, s_y=3))
    params = link_params(cfg)
    geom = screen_layout(ScreenArrayConfig(3, 3, 0.5 * params.wavelength))
    corr = correlation_matrix(geom, params.wavelength)
    rng = np.random.default_rng(404)
    draws = np.empty((n, 9), dtype=complex)
    for i in range(n):
        draws[i] = sample_channel(corr, params, rng).h
    scale = params.alpha * path_loss(params)
    target = scale * (corr.factor @ corr.factor.T)
    emp_cov = (draws.conj().T @ draws) / n
    frob_rel = np.linalg.norm(emp_cov - target) / np.linalg.norm(target)
    mean = draws.mean(axis=0)
    mean_ok = bool((np.abs(mean) <= 4 * np.sqrt(scale / n)).all())
    report(
        4, "empirical covariance and mean of the channel generator",
        frob_rel < 0.05 and mean_ok,
        f"S=9, {n} samples: Frobenius rel err {frob_rel:.3%} (<5%), mean within 4-sigma: {mean_ok}",
    )


def _strictly(values, direction):
    diffs = np.diff(np.asarray(values))
    return bool((diffs > 0).all()) if direction == "up" else bool((diffs < 0).all())


def test_criterion_5_trend_reproduction(full_sweeps):
    checks = {
        "screenant increasing in transparency": _strictly(full_sweeps["alpha"].screenant.mean, "up"),
        "screenant increasing in element count": _strictly(full_sweeps["elements"].screenant.mean, "up"),
        "screenant increasing in transmit power": _strictly(full_sweeps["power"].screenant.mean, "up"),
        "screenant increasing in attenuation factor": _strictly(full_sweeps["beta"].screenant.mean, "up"),
        "screenant decreasing in distance": _strictly(full_sweeps["distance"].screenant.mean, "down"),
        "screenant decreasing in frequency": _strictly(full_sweeps["frequency"].screenant.mean, "down"),
        "screenant decreasing in blockage ratio": _strictly(full_sweeps["ratio"].screenant.mean, "down"),
    }
    alpha = full_sweeps["alpha"]
    checks["edgeant constant across transparency"] = bool(
        (np.abs(alpha.edgeant.mean - alpha.edgeant.mean[0]) <= alpha.edgeant.ci95).all()
    )
    failed = [k for k, ok in checks.items() if not ok]
    report(
        5, "monotone trends across all default sweep grids",
        not failed,
        "all 8 trend checks hold" if not failed else f"failed: {failed}",
    )


def _gain_ci(sweep, i):
    # 95% half-width of relative_gain = mS/mE - 1 by first-order error propagation
    ms, me = sweep.screenant.mean[i], sweep.edgeant.mean[i]
    return (ms / me) * np.sqrt((sweep.screenant.ci95[i] / ms) ** 2 + (sweep.edgeant.ci95[i] / me) ** 2)


def test_criterion_6_frequency_gain_amplification(full_sweeps):
    details = []
    ok = True
    for name in ("frequency", "frequency_blk"):
        sweep = full_sweeps[name]
        gains = sweep.relative_gain
        cis = [_gain_ci(sweep, i) for i in range(len(gains))]
        ordered = all(
            gains[i + 1] - cis[i + 1] > gains[i] + cis[i] for i in range(len(gains) - 1)
        )
        ok = ok and ordered
        details.append(f"{name}: gains {[f'{g:.1%}' for g in gains]} ordered={ordered}")
    report(
        6, "relative gain over the edge baseline grows with carrier frequency",
        ok, "; ".join(details),
    )


def test_criterion_7_blockage_identities():
    base = ScenarioConfig(trials=500, base_seed=11)
    no_blk = run_trials(base)

    ok_identity = True
    for spec in (BlockageSpec(ratio=0.0, beta=0.1), BlockageSpec(ratio=0.6, beta=1.0)):
        cfg = ScenarioConfig(trials=500, base_seed=11, blockage=spec)
        recs = run_trials(cfg)
        ok_identity = ok_identity and all(
            (a.se_screenant, a.se_oracle, a.se_edgeant)
            == (b.se_screenant, b.se_oracle, b.se_edgeant)
            for a, b in zip(no_blk, recs)
        )

    beta = 0.1
    full = run_trials(ScenarioConfig(trials=500, base_seed=11, blockage=BlockageSpec(ratio=1.0, beta=beta)))
    scale_errs = [
        abs((2**b.se_oracle - 1) - beta**2 * (2**a.se_oracle - 1)) / (beta**2 * (2**a.se_oracle - 1))
        for a, b in zip(no_blk, full)
    ]
    ok_scale = max(scale_errs) < 1e-9
    report(
        7, "blockage identities (null blockage bit-identical; full blockage scales SNR by beta^2)",
        ok_identity and ok_scale,
        f"bit-identical null cases: {ok_identity}; max beta^2 scaling rel err {max(scale_errs):.2e} (<1e-9)",
    )


def test_criterion_8_determinism_across_thread_counts(tmp_path):
    outs = {}
    for threads in (1, 8):
        out = tmp_path / f"t{threads}"
        rc = cli.main([
            "figures", "--all", "--trials", "100", "--seed", "42",
            "--threads", str(threads), "--out", str(out),
        ])
        assert rc == 0
        outs[threads] = out
    mismatched = [
        name for name in DEFAULT_SWEEP_GRIDS
        if not filecmp.cmp(outs[1] / name / "summary.csv", outs[8] / name / "summary.csv", shallow=False)
    ]
    report(
        8, "summary outputs byte-identical for 1 vs 8 worker processes",
        not mismatched,
        "all 8 sweep CSVs identical" if not mismatched else f"mismatched: {mismatched}",
    )
