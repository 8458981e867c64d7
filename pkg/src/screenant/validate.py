"""Self-checks for the `validate` subcommand: finite-difference gradient
verification and optimizer/oracle consistency on small instances."""

import numpy as np

from . import beamforming
from .beamforming import BeamformingVector, canonical_phase
from .optimizer import OptimizerConfig, grad_power, grad_theta, optimize


def _random_point(rng, s, total_power=1.0):
    h = (rng.standard_normal(s) + 1j * rng.standard_normal(s)) / np.sqrt(2)
    e = rng.standard_exponential(s)
    p = 0.9 * total_power * e / e.sum() + 0.01 * total_power  # interior point
    theta = canonical_phase(rng.uniform(0, 2 * np.pi, s))
    return h, BeamformingVector(p=p, theta=theta)


def fd_gradient(h, v, noise_power, which, step):
    n = v.n_elements
    grad = np.empty(n)
    for i in range(n):
        e = np.zeros(n)
        e[i] = step
        if which == "theta":
            up = BeamformingVector(p=v.p, theta=v.theta + e)
            dn = BeamformingVector(p=v.p, theta=v.theta - e)
        else:
            up = BeamformingVector(p=v.p + e, theta=v.theta)
            dn = BeamformingVector(p=v.p - e, theta=v.theta)
        grad[i] = (
            beamforming.evaluate_se(h, up, noise_power) - beamforming.evaluate_se(h, dn, noise_power)
        ) / (2 * step)
    return grad


def check_gradients(seed=1, n_points=20, sizes=(2, 5, 9), tol_theta=1e-5, tol_power=1e-4):
    """Analytic vs central-difference gradients on random interior points."""
    rng = np.random.default_rng(seed)
    worst_t = worst_p = 0.0
    for _ in range(n_points):
        for s in sizes:
            h, v = _random_point(rng, s)
            gt = grad_theta(h, v, 1.0)
            gp = grad_power(h, v, 1.0)
            fd_t = fd_gradient(h, v, 1.0, "theta", 1e-6)
            fd_p = fd_gradient(h, v, 1.0, "power", 1e-8)
            worst_t = max(worst_t, np.max(np.abs(gt - fd_t) / np.maximum(np.abs(fd_t), 1e-12)))
            worst_p = max(worst_p, np.max(np.abs(gp - fd_p) / np.maximum(np.abs(fd_p), 1e-12)))
    return [
        ("gradient theta vs finite differences", worst_t < tol_theta, f"max rel err {worst_t:.3g}"),
        ("gradient power vs finite differences", worst_p < tol_power, f"max rel err {worst_p:.3g}"),
    ]


def check_oracle(seed=2, n_points=50):
    """Closed-form optimum consistency and optimizer upper bound on small instances."""
    rng = np.random.default_rng(seed)
    cfg = OptimizerConfig()
    consistent = True
    bounded = True
    scalar_ok = True
    for _ in range(n_points):
        s = int(rng.integers(1, 6))
        h, _ = _random_point(rng, s)
        res = beamforming.mrt_oracle(h, 1.0, 1.0)
        replayed = beamforming.evaluate_se(h, res.vector, 1.0)
        if abs(replayed - res.se) > 1e-12 * max(res.se, 1.0):
            consistent = False
        v, _tr = optimize(h, 1.0, 1.0, cfg, np.random.default_rng(rng.integers(2**32)))
        if beamforming.evaluate_se(h, v, 1.0) > res.se + 1e-9:
            bounded = False
        if s == 1:
            se1 = beamforming.evaluate_se(h, optimize(h, 1.0, 1.0, cfg, np.random.default_rng(0))[0], 1.0)
            if abs(se1 - res.se) > 1e-9:
                scalar_ok = False
    return [
        ("oracle weights reproduce closed-form SE", consistent, "12 significant digits"),
        ("optimizer never exceeds the oracle", bounded, "slack 1e-9"),
        ("scalar channel solved exactly", scalar_ok, "S=1 closed form"),
    ]


def run_all(seed=1):
    """All validation checks; returns (ok, [(name, passed, detail), ...])."""
    checks = check_gradients(seed=seed) + check_oracle(seed=seed + 1)
    return all(passed for _, passed, _ in checks), checks
