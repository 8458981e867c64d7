"""Antenna array layouts: on-screen uniform planar array and edge-mounted baseline."""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class ScreenArrayConfig:
    """On-screen UPA: s_x x s_y elements with spacing d_e (meters)."""

    s_x: int
    s_y: int
    d_e: float

    def __post_init__(self):
        if self.s_x < 1 or self.s_y < 1:
            raise ValueError(f"invalid-config: element counts must be >= 1, got {self.s_x}x{self.s_y}")
        if not self.d_e > 0:
            raise ValueError(f"invalid-config: element spacing must be > 0, got {self.d_e}")

    @property
    def n_elements(self) -> int:
        return self.s_x * self.s_y


@dataclass(frozen=True)
class EdgeArrayConfig:
    """Edge-mounted baseline: n elements spread along the chassis perimeter."""

    n_elements: int
    chassis_width: float = 0.07
    chassis_height: float = 0.15

    def __post_init__(self):
        if self.n_elements < 1:
            raise ValueError(f"invalid-config: element count must be >= 1, got {self.n_elements}")
        if not (self.chassis_width > 0 and self.chassis_height > 0):
            raise ValueError("invalid-config: chassis dimensions must be > 0")


@dataclass(frozen=True)
class ArrayGeometry:
    """Planar element coordinates (S, 2) and the symmetric pairwise-distance matrix (S, S).

    grid_shape is (s_x, s_y) for screen layouts and None for edge layouts; the
    blockage module uses it to map elements back onto the grid.
    """

    coords: np.ndarray
    pairwise_dist: np.ndarray
    grid_shape: tuple | None = field(default=None)

    @property
    def n_elements(self) -> int:
        return self.coords.shape[0]


def _pairwise_distances(coords: np.ndarray) -> np.ndarray:
    diff = coords[:, None, :] - coords[None, :, :]
    return np.sqrt((diff**2).sum(axis=-1))


def screen_layout(cfg: ScreenArrayConfig, centered: bool = False) -> ArrayGeometry:
    """Element coordinates of the on-screen UPA, row-major with 1-based index maps.

    For element s (1-based), with sx_bar = mod(s-1, S_x) + 1 and
    sy_bar = floor((s-1)/S_x) + 1:

        x = d_e * (-(S_x - 1)/2 + sx_bar)
        y = d_e * ( (S_y - 1)/2 - sy_bar)

    This mapping is applied literally; its centroid sits at (+d_e, -d_e), not at
    the origin. Only pairwise distances feed the channel statistics, so the
    offset is inconsequential; pass centered=True to subtract the centroid for
    presentation.
    """
    s = np.arange(1, cfg.n_elements + 1)
    sx_bar = (s - 1) % cfg.s_x + 1
    sy_bar = (s - 1) // cfg.s_x + 1
    x = cfg.d_e * (-(cfg.s_x - 1) / 2 + sx_bar)
    y = cfg.d_e * ((cfg.s_y - 1) / 2 - sy_bar)
    coords = np.column_stack([x, y]).astype(float)
    if centered:
        coords = coords - coords.mean(axis=0)
    return ArrayGeometry(
        coords=coords,
        pairwise_dist=_pairwise_distances(coords),
        grid_shape=(cfg.s_x, cfg.s_y),
    )


def edge_layout(cfg: EdgeArrayConfig) -> ArrayGeometry:
    """Elements at equal arc-length intervals along the chassis rectangle.

    The walk starts at the top-left corner and proceeds clockwise (top edge
    first); element i sits at arc length i * perimeter / S.
    """
    w, h = cfg.chassis_width, cfg.chassis_height
    perimeter = 2 * (w + h)
    arcs = np.arange(cfg.n_elements) * perimeter / cfg.n_elements
    coords = np.array([_perimeter_point(t, w, h) for t in arcs])
    return ArrayGeometry(coords=coords, pairwise_dist=_pairwise_distances(coords), grid_shape=None)


def _perimeter_point(t: float, w: float, h: float) -> tuple:
    # clockwise from the top-left corner (0, 0): right, down, left, up
    if t < w:
        return (t, 0.0)
    t -= w
    if t < h:
        return (w, -t)
    t -= h
    if t < w:
        return (w - t, -h)
    t -= w
    return (0.0, -(h - t))
