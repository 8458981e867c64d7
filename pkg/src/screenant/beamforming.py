"""Beamforming vectors, SNR/SE evaluation, the non-coherent edge baseline, and
the closed-form maximum-ratio optimum used as an optimizer oracle."""

from dataclasses import dataclass

import numpy as np

TWO_PI = 2 * np.pi

LN2 = np.log(2.0)


def canonical_phase(theta):
    """Wrap angles into the half-open interval (0, 2pi], mapping 0 to 2pi."""
    wrapped = np.mod(theta, TWO_PI)
    return np.where(wrapped == 0.0, TWO_PI, wrapped)


@dataclass(frozen=True)
class BeamformingVector:
    """Per-element transmit power p (W) and phase angle theta in (0, 2pi]."""

    p: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        if self.p.shape != self.theta.shape:
            raise ValueError("dimension-mismatch: power and phase vectors differ in length")
        if np.any(self.p < 0):
            raise ValueError("invalid-config: per-element powers must be >= 0")

    @property
    def n_elements(self) -> int:
        return self.p.shape[0]

    @property
    def total_power(self) -> float:
        return float(self.p.sum())


def _as_channel_vector(h) -> np.ndarray:
    return h.h if hasattr(h, "h") else np.asarray(h)


def weights(v: BeamformingVector) -> np.ndarray:
    """Complex weights w_s = sqrt(p_s) exp(j theta_s)."""
    return np.sqrt(v.p) * np.exp(1j * v.theta)


def snr(h, v: BeamformingVector, noise_power: float) -> float:
    """gamma = |h . W|^2 / sigma^2."""
    hv = _as_channel_vector(h)
    if hv.shape[0] != v.n_elements:
        raise ValueError("dimension-mismatch: channel and beamforming lengths differ")
    if not noise_power > 0:
        raise ValueError(f"invalid-params: noise power must be > 0, got {noise_power}")
    return float(np.abs(np.sum(hv * weights(v))) ** 2 / noise_power)


def spectral_efficiency(gamma) -> float:
    """SE = log2(1 + gamma), bps/Hz."""
    return np.log2(1 + gamma)


def evaluate_se(h, v: BeamformingVector, noise_power: float) -> float:
    return float(spectral_efficiency(snr(h, v, noise_power)))


def edgeant_weights(n_elements: int, total_power: float) -> BeamformingVector:
    """Edge baseline: equal per-element power, no phase control (common phase)."""
    if n_elements < 1 or not total_power > 0:
        raise ValueError("invalid-config: need n_elements >= 1 and total power > 0")
    return BeamformingVector(
        p=np.full(n_elements, total_power / n_elements),
        theta=np.full(n_elements, TWO_PI),
    )


@dataclass(frozen=True)
class OracleResult:
    vector: BeamformingVector
    se: float
    degenerate: bool = False


def mrt_oracle(h, total_power: float, noise_power: float) -> OracleResult:
    """Closed-form optimum of the SE maximization.

    Phases cancel the channel (theta_s = -arg h_s) and power is allocated
    proportionally to |h_s|^2, giving SE* = log2(1 + P ||h||^2 / sigma^2) by
    Cauchy-Schwarz. A zero channel is returned degenerate (uniform power,
    SE 0) rather than raising, since Monte Carlo never draws it but tests may
    construct it.
    """
    hv = _as_channel_vector(h)
    if not total_power > 0 or not noise_power > 0:
        raise ValueError("invalid-params: powers must be > 0")
    norm2 = float(np.sum(np.abs(hv) ** 2))
    s = hv.shape[0]
    if norm2 == 0.0:
        vec = BeamformingVector(p=np.full(s, total_power / s), theta=np.full(s, TWO_PI))
        return OracleResult(vector=vec, se=0.0, degenerate=True)
    theta = canonical_phase(-np.angle(hv))
    p = total_power * np.abs(hv) ** 2 / norm2
    se = float(spectral_efficiency(total_power * norm2 / noise_power))
    return OracleResult(vector=BeamformingVector(p=p, theta=theta), se=se)
