"""Multi-start gradient ascent over phases and powers: analytic gradients,
max-normalization, Armijo backtracking, and feasibility projection.

The batched functions operate on (N, S) arrays so the Monte Carlo harness can
drive many realizations through the same instruction stream; all reductions run
along the last axis, so results are independent of how trials are batched.
"""

from dataclasses import dataclass, field

import numpy as np

from .beamforming import LN2, TWO_PI, BeamformingVector, canonical_phase

_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class OptimizerConfig:
    num_inits: int = 10
    max_iters: int = 5
    rel_tol: float = 1e-4
    armijo_c1: float = 1e-4
    armijo_shrink: float = 0.5
    armijo_mu0: float = 1.0
    max_backtracks: int = 30
    power_floor_frac: float = 1e-8  # floor = power_floor_frac * P
    optimize_all_inits: bool = False  # optimize every init and keep the best

    def __post_init__(self):
        if self.num_inits < 1 or self.max_iters < 1 or self.max_backtracks < 1:
            raise ValueError("invalid-config: counts must be >= 1")
        if not self.rel_tol > 0 or not self.armijo_mu0 > 0 or not self.power_floor_frac > 0:
            raise ValueError("invalid-config: tolerances and step sizes must be > 0")
        if not 0 < self.armijo_c1 < 1 or not 0 < self.armijo_shrink < 1:
            raise ValueError("invalid-config: Armijo constants must be in (0, 1)")


@dataclass
class OptimizerTrace:
    se_per_iter: list
    iters_used: int
    converged: bool
    init_index_chosen: int
    degenerate: bool = field(default=False)


def _as_channel_vector(h) -> np.ndarray:
    return h.h if hasattr(h, "h") else np.asarray(h)


def _se_rows(h, p, theta, noise_power):
    f = np.sum(h * (np.sqrt(p) * np.exp(1j * theta)), axis=-1)
    return np.log2(1 + np.abs(f) ** 2 / noise_power)


def _grads_rows(h, p, theta, noise_power):
    """Analytic SE gradients w.r.t. theta and p, rows independent."""
    phi = np.exp(1j * theta)
    sqrt_p = np.sqrt(p)
    f = np.sum(h * (sqrt_p * phi), axis=-1, keepdims=True)
    gamma = np.abs(f[..., 0]) ** 2 / noise_power
    common = h * phi * np.conj(f)
    denom = (LN2 * (1 + gamma) * noise_power)[..., None]
    g_theta = -2 * sqrt_p * common.imag / denom
    # d|f|^2/dp_s = Re{h_s phi_s f*} / sqrt(p_s); no extra 1/2 (the scalar case
    # must reduce to d/dp log2(1 + p |h|^2 / sigma^2), which finite differences
    # confirm)
    g_power = common.real / (denom * sqrt_p)
    return g_theta, g_power


def _normalize_rows(g_theta, g_power, total_power):
    rho = np.max(np.abs(g_theta), axis=-1, keepdims=True)
    delta = np.max(np.abs(g_power), axis=-1, keepdims=True)
    ng_theta = np.where(rho > 0, TWO_PI * g_theta / np.where(rho > 0, rho, 1.0), g_theta)
    ng_power = np.where(delta > 0, total_power * g_power / np.where(delta > 0, delta, 1.0), g_power)
    return ng_theta, ng_power


def _step_rows(theta, p, g_theta, g_power, mu, total_power, power_floor):
    theta_new = canonical_phase(theta + mu[..., None] * g_theta)
    p_new = p + mu[..., None] * g_power
    p_new = np.where(p_new < 0, power_floor, p_new)
    tot = p_new.sum(axis=-1, keepdims=True)
    p_new = np.where(tot > total_power, p_new * (total_power / tot), p_new)
    return theta_new, p_new


def grad_theta(h, v: BeamformingVector, noise_power: float) -> np.ndarray:
    """dSE/dtheta_s; zero at p_s = 0 and at the maximum-ratio optimum."""
    gt, _ = _grads_rows(_as_channel_vector(h), np.maximum(v.p, _TINY), v.theta, noise_power)
    return np.where(v.p > 0, gt, 0.0)


def grad_power(h, v: BeamformingVector, noise_power: float, power_floor: float = 0.0) -> np.ndarray:
    """dSE/dp_s; the 1/sqrt(p_s) factor requires powers clamped above zero."""
    if np.any(v.p <= 0) or np.any(v.p < power_floor):
        raise ValueError("singularity-guard: clamp powers to the floor before grad_power")
    _, gp = _grads_rows(_as_channel_vector(h), v.p, v.theta, noise_power)
    return gp


def normalize_gradients(g_theta, g_power, total_power):
    """Scale so max |theta component| = 2pi and max |power component| = P;
    all-zero vectors pass through unscaled."""
    return _normalize_rows(np.asarray(g_theta, float), np.asarray(g_power, float), total_power)


def ascend_step(
    v: BeamformingVector,
    g_theta,
    g_power,
    mu: float,
    total_power: float,
    power_floor: float,
) -> BeamformingVector:
    """One gradient-ascent update with phase wrap into (0, 2pi] and power
    projection: negatives clamped to the floor, budget overshoot rescaled."""
    if mu < 0:
        raise ValueError(f"invalid-config: step size must be >= 0, got {mu}")
    theta_new, p_new = _step_rows(
        v.theta, v.p, np.asarray(g_theta, float), np.asarray(g_power, float),
        np.asarray(mu, float), total_power, power_floor,
    )
    return BeamformingVector(p=p_new, theta=theta_new)


def draw_inits(rng: np.random.Generator, num_inits: int, n_elements: int, total_power: float):
    """Random starts: phases uniform on (0, 2pi], powers a uniform simplex
    sample scaled to the budget."""
    thetas = canonical_phase(rng.uniform(0.0, TWO_PI, size=(num_inits, n_elements)))
    e = rng.standard_exponential(size=(num_inits, n_elements))
    powers = total_power * e / e.sum(axis=-1, keepdims=True)
    return thetas, powers


def optimize_batch(
    h: np.ndarray,
    total_power: float,
    noise_power: float,
    cfg: OptimizerConfig,
    init_thetas: np.ndarray,
    init_powers: np.ndarray,
):
    """Run the ascent on N realizations at once.

    h is (N, S); init_thetas/init_powers are (N, num_inits, S) pre-drawn from
    each trial's own random stream. Returns (theta, p, se, iters, converged,
    init_chosen, se_history) where se_history[t] is the SE state after outer
    iteration t (entry 0 is the selected initial SE).
    """
    h = np.asarray(h)
    n, s = h.shape
    floor = cfg.power_floor_frac * total_power

    se_inits = _se_rows(h[:, None, :], init_powers, init_thetas, noise_power)
    chosen = se_inits.argmax(axis=1)
    rows = np.arange(n)
    theta = init_thetas[rows, chosen].copy()
    p = init_powers[rows, chosen].copy()
    se = se_inits[rows, chosen].copy()

    degenerate = np.sum(np.abs(h) ** 2, axis=-1) == 0.0
    active = ~degenerate
    iters = np.zeros(n, dtype=np.int64)
    converged = np.zeros(n, dtype=bool)
    se_history = [se.copy()]

    for _ in range(cfg.max_iters):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        p[idx] = np.maximum(p[idx], floor)
        g_theta, g_power = _grads_rows(h[idx], p[idx], theta[idx], noise_power)
        g_theta, g_power = _normalize_rows(g_theta, g_power, total_power)
        gg = np.sum(g_theta**2 + g_power**2, axis=-1)

        mu = np.full(idx.shape[0], cfg.armijo_mu0)
        pending = gg > 0  # zero gradient: nothing to try, terminate
        accepted = np.zeros(idx.shape[0], dtype=bool)
        cand_theta = theta[idx].copy()
        cand_p = p[idx].copy()
        cand_se = se[idx].copy()
        for _bt in range(cfg.max_backtracks):
            if not pending.any():
                break
            t_new, p_new = _step_rows(
                theta[idx][pending], p[idx][pending],
                g_theta[pending], g_power[pending],
                mu[pending], total_power, floor,
            )
            se_new = _se_rows(h[idx][pending], p_new, t_new, noise_power)
            ok = se_new >= se[idx][pending] + cfg.armijo_c1 * mu[pending] * gg[pending]
            sub = np.flatnonzero(pending)
            ok_rows = sub[ok]
            cand_theta[ok_rows] = t_new[ok]
            cand_p[ok_rows] = p_new[ok]
            cand_se[ok_rows] = se_new[ok]
            accepted[ok_rows] = True
            pending[ok_rows] = False
            mu[sub[~ok]] *= cfg.armijo_shrink

        # rows whose line search found no acceptable step terminate here
        active[idx[~accepted]] = False
        acc = idx[accepted]
        frac = (cand_se[accepted] - se[acc]) / np.maximum(se[acc], _TINY)
        theta[acc] = cand_theta[accepted]
        p[acc] = cand_p[accepted]
        se[acc] = cand_se[accepted]
        iters[acc] += 1
        hit_tol = acc[frac < cfg.rel_tol]
        converged[hit_tol] = True
        active[hit_tol] = False
        se_history.append(se.copy())

    return theta, p, se, iters, converged, chosen, se_history


def optimize(
    h,
    total_power: float,
    noise_power: float,
    cfg: OptimizerConfig,
    rng: np.random.Generator,
):
    """Full multi-start ascent on one realization; returns the beamforming
    vector and a trace. Deterministic given (h, cfg, rng seed)."""
    hv = np.asarray(_as_channel_vector(h))
    s = hv.shape[0]
    init_thetas, init_powers = draw_inits(rng, cfg.num_inits, s, total_power)

    if np.sum(np.abs(hv) ** 2) == 0.0:
        vec = BeamformingVector(p=np.full(s, total_power / s), theta=np.full(s, TWO_PI))
        trace = OptimizerTrace([0.0], 0, False, 0, degenerate=True)
        return vec, trace

    if cfg.optimize_all_inits:
        # treat each init as its own single-start problem, keep the best end point
        theta, p, se, iters, conv, _, hist = optimize_batch(
            np.broadcast_to(hv, (cfg.num_inits, s)), total_power, noise_power, cfg,
            init_thetas[:, None, :], init_powers[:, None, :],
        )
        best = int(se.argmax())
        path = [float(hist[t][best]) for t in range(int(iters[best]) + 1)]
        trace = OptimizerTrace(path, int(iters[best]), bool(conv[best]), best)
        return BeamformingVector(p=p[best], theta=theta[best]), trace

    theta, p, se, iters, conv, chosen, hist = optimize_batch(
        hv[None, :], total_power, noise_power, cfg,
        init_thetas[None, :, :], init_powers[None, :, :],
    )
    path = [float(hist[t][0]) for t in range(int(iters[0]) + 1)]
    trace = OptimizerTrace(path, int(iters[0]), bool(conv[0]), int(chosen[0]))
    return BeamformingVector(p=p[0], theta=theta[0]), trace
