"""Large-scale path loss, spatial correlation, and correlated Rayleigh sampling."""

from dataclasses import dataclass, field

import numpy as np

from .geometry import ArrayGeometry

C_LIGHT = 299_792_458.0  # m/s

# eigenvalues below this fraction of the largest are treated as numerical noise
EIG_CLIP_REL = 1e-12


@dataclass(frozen=True)
class LinkParams:
    """Link budget in linear units; dBm/dB appear only at the config boundary."""

    f0: float  # carrier frequency, Hz
    d_ap: float  # UE-AP distance, m
    eta: float  # path-loss exponent
    d0: float  # reference distance, m
    alpha: float  # transparency efficiency factor, (0, 1]
    noise_power: float  # W
    tx_power_total: float  # W
    extra_loss_db: float = 0.0  # calibration offset, default off

    def __post_init__(self):
        if not self.f0 > 0:
            raise ValueError(f"invalid-params: carrier frequency must be > 0, got {self.f0}")
        if not self.d0 > 0 or self.d_ap < self.d0:
            raise ValueError(f"invalid-params: require d_ap >= d0 > 0, got d_ap={self.d_ap}, d0={self.d0}")
        if not self.eta > 2:
            raise ValueError(f"invalid-params: path-loss exponent must exceed 2, got {self.eta}")
        if not 0 < self.alpha <= 1:
            raise ValueError(f"invalid-params: transparency efficiency must be in (0, 1], got {self.alpha}")
        if not self.noise_power > 0 or not self.tx_power_total > 0:
            raise ValueError("invalid-params: noise and transmit power must be > 0")
        if not np.isfinite(self.extra_loss_db):
            raise ValueError("invalid-params: extra_loss_db must be finite")

    @property
    def wavelength(self) -> float:
        return C_LIGHT / self.f0


@dataclass(frozen=True)
class CorrelationMatrix:
    """Spatial correlation R and a factor C with C @ C.T equal to R with
    negative eigenvalues clipped to zero (for sampling)."""

    r: np.ndarray
    factor: np.ndarray

    @property
    def n_elements(self) -> int:
        return self.r.shape[0]


@dataclass(frozen=True)
class ChannelRealization:
    """One uplink channel draw: complex row vector of length S."""

    h: np.ndarray
    params: LinkParams
    seed_tag: int = field(default=0)

    @property
    def n_elements(self) -> int:
        return self.h.shape[0]


def path_loss(params: LinkParams) -> float:
    """Distance-dependent linear power gain.

    l(d_ap) = (lambda / (4 pi d0))^2 * (d_ap / d0)^(-eta), times the optional
    extra_loss_db calibration offset.
    """
    l_d0 = (params.wavelength / (4 * np.pi * params.d0)) ** 2
    return l_d0 * (params.d_ap / params.d0) ** (-params.eta) * 10 ** (-params.extra_loss_db / 10)


def correlation_matrix(geom: ArrayGeometry, wavelength: float) -> CorrelationMatrix:
    """Isotropic-scattering correlation: R[s, s'] = sinc(2 d_{s,s'} / lambda).

    np.sinc is the normalized convention sin(pi x)/(pi x), so elements exactly
    half a wavelength apart are uncorrelated. The sampling factor comes from the
    symmetric eigendecomposition with small/negative eigenvalues clipped to 0.
    """
    if not wavelength > 0:
        raise ValueError(f"invalid-params: wavelength must be > 0, got {wavelength}")
    r = np.sinc(2 * geom.pairwise_dist / wavelength)
    eigvals, eigvecs = np.linalg.eigh(r)
    clipped = np.where(eigvals < EIG_CLIP_REL * eigvals.max(), 0.0, eigvals)
    factor = eigvecs * np.sqrt(clipped)
    return CorrelationMatrix(r=r, factor=factor)


def sample_channel(
    corr: CorrelationMatrix,
    params: LinkParams,
    rng: np.random.Generator,
    seed_tag: int = 0,
) -> ChannelRealization:
    """Draw h = sqrt(alpha * l) * C z with z iid CN(0, 1).

    CN(0, 1) means unit total variance, 1/2 per real/imaginary part; the
    covariance of h is alpha * l * R_clipped.
    """
    s = corr.n_elements
    z = (rng.standard_normal(s) + 1j * rng.standard_normal(s)) / np.sqrt(2)
    scale = np.sqrt(params.alpha * path_loss(params))
    return ChannelRealization(h=scale * (corr.factor @ z), params=params, seed_tag=seed_tag)


def dbm_to_watts(x_dbm: float) -> float:
    return 10 ** ((x_dbm - 30) / 10)


def watts_to_dbm(x_watts: float) -> float:
    if not x_watts > 0:
        raise ValueError(f"invalid-params: watts must be > 0 for dBm conversion, got {x_watts}")
    return 10 * np.log10(x_watts) + 30
