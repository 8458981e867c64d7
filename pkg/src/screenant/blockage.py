"""User-induced blockage: mask generation and static/dynamic channel attenuation."""

from dataclasses import dataclass, replace

import numpy as np

from .channel import ChannelRealization
from .geometry import ArrayGeometry

PATTERNS = ("random-subset", "rectangle", "edge-segment")


@dataclass(frozen=True)
class BlockageSpec:
    ratio: float  # fraction of elements blocked
    beta: float  # amplitude fraction retained on blocked elements
    pattern: str = "random-subset"

    def __post_init__(self):
        if not 0 <= self.ratio <= 1:
            raise ValueError(f"invalid-config: blockage ratio must be in [0, 1], got {self.ratio}")
        if not 0 < self.beta <= 1:
            raise ValueError(f"invalid-config: attenuation factor must be in (0, 1], got {self.beta}")
        if self.pattern not in PATTERNS:
            raise ValueError(f"invalid-config: unknown blockage pattern {self.pattern!r}")


@dataclass(frozen=True)
class BlockageMask:
    b: np.ndarray  # {0,1} vector of length S

    @property
    def popcount(self) -> int:
        return int(self.b.sum())


@dataclass(frozen=True)
class DynamicBlockageFrame:
    b: np.ndarray  # {0,1} vector of length S
    beta: np.ndarray  # per-element attenuation in (0, 1]


def mask_size(ratio: float, n_elements: int) -> int:
    """Number of blocked elements: round(ratio * S), half away from zero."""
    return int(np.floor(ratio * n_elements + 0.5))


def generate_mask(spec: BlockageSpec, geom: ArrayGeometry, rng: np.random.Generator) -> BlockageMask:
    """Draw a mask with exactly round(ratio * S) blocked elements.

    random-subset: uniform k-subset of elements.
    rectangle: contiguous sub-grid anchored at its bottom-right cell, anchor
      jittered uniformly among in-grid positions, trimmed to the k cells
      nearest the anchor (grid geometry only).
    edge-segment: k consecutive elements in perimeter order from a uniformly
      random start.
    """
    s = geom.n_elements
    k = mask_size(spec.ratio, s)
    b = np.zeros(s, dtype=np.int64)
    if k == 0:
        return BlockageMask(b=b)
    if spec.pattern == "random-subset":
        idx = rng.choice(s, size=k, replace=False)
    elif spec.pattern == "rectangle":
        idx = _rectangle_indices(geom, k, rng)
    else:  # edge-segment
        start = int(rng.integers(s))
        idx = (start + np.arange(k)) % s
    b[idx] = 1
    return BlockageMask(b=b)


def _grid_shape(geom: ArrayGeometry) -> tuple:
    if geom.grid_shape is None:
        raise ValueError("pattern-mismatch: rectangle blockage requires a grid geometry")
    return geom.grid_shape


def _rect_dims(k: int, s_x: int, s_y: int) -> tuple:
    # smallest in-grid sub-grid with rows*cols >= k, preferring near-square
    best = None
    for rows in range(1, s_y + 1):
        cols = -(-k // rows)
        if cols > s_x:
            continue
        key = (rows * cols, abs(rows - cols))
        if best is None or key < best[0]:
            best = (key, rows, cols)
    if best is None:
        # k <= s_x*s_y always admits rows=s_y
        raise ValueError(f"pattern-mismatch: cannot fit {k} elements in {s_x}x{s_y} grid")
    return best[1], best[2]


def _rectangle_indices(geom: ArrayGeometry, k: int, rng: np.random.Generator) -> np.ndarray:
    s_x, s_y = _grid_shape(geom)
    rows, cols = _rect_dims(k, s_x, s_y)
    # anchor = bottom-right cell of the sub-grid, jittered among feasible spots
    ax = int(rng.integers(cols - 1, s_x))
    ay = int(rng.integers(rows - 1, s_y))
    ii, jj = np.meshgrid(np.arange(ax - cols + 1, ax + 1), np.arange(ay - rows + 1, ay + 1))
    ii, jj = ii.ravel(), jj.ravel()
    # keep the k cells nearest the anchor, ties broken by element index
    dist2 = (ii - ax) ** 2 + (jj - ay) ** 2
    idx = jj * s_x + ii
    order = np.lexsort((idx, dist2))
    return idx[order[:k]]


def _check_length(h: ChannelRealization, n: int):
    if h.n_elements != n:
        raise ValueError(f"dimension-mismatch: channel has {h.n_elements} elements, mask has {n}")


def apply_static(h: ChannelRealization, mask: BlockageMask, beta: float) -> ChannelRealization:
    """h_blk = h - (1 - beta) (b * h): blocked entries scaled by beta,
    unblocked entries returned bit-identical."""
    if not 0 < beta <= 1:
        raise ValueError(f"invalid-config: attenuation factor must be in (0, 1], got {beta}")
    _check_length(h, mask.b.shape[0])
    h_blk = h.h - (1 - beta) * (mask.b * h.h)
    return replace(h, h=h_blk)


def apply_dynamic(h: ChannelRealization, frames) -> list:
    """Per frame t: element s scaled by beta_s(t) wherever b_t[s] = 1."""
    out = []
    for frame in frames:
        _check_length(h, frame.b.shape[0])
        h_blk = h.h - (1 - frame.beta) * (frame.b * h.h)
        out.append(replace(h, h=h_blk))
    return out


def generate_finger_trajectory(
    geom: ArrayGeometry,
    n_frames: int,
    rng: np.random.Generator,
    core_shape: tuple = (2, 2),
    beta_near: float = 0.1,
    beta_far: float = 0.5,
) -> list:
    """Synthesize a finger-touch rectangle whose anchor random-walks on the grid.

    The core rectangle gets beta_near; its one-cell boundary ring gets
    beta_far. The anchor moves one cell per frame and reflects at grid edges.
    """
    if n_frames < 1:
        raise ValueError(f"invalid-config: frame count must be >= 1, got {n_frames}")
    s_x, s_y = _grid_shape(geom)
    rows, cols = core_shape
    if rows > s_y or cols > s_x:
        raise ValueError("pattern-mismatch: core rectangle does not fit the grid")
    # anchor = bottom-right cell of the core
    ax = int(rng.integers(cols - 1, s_x))
    ay = int(rng.integers(rows - 1, s_y))
    steps = np.array([(-1, 0), (1, 0), (0, -1), (0, 1)])
    frames = []
    for t in range(n_frames):
        if t > 0:
            dx, dy = steps[int(rng.integers(4))]
            ax = _reflect(ax + dx, cols - 1, s_x - 1)
            ay = _reflect(ay + dy, rows - 1, s_y - 1)
        frames.append(_finger_frame(ax, ay, rows, cols, s_x, s_y, beta_near, beta_far))
    return frames


def _reflect(v: int, lo: int, hi: int) -> int:
    if v < lo:
        return 2 * lo - v
    if v > hi:
        return 2 * hi - v
    return v


def _finger_frame(ax, ay, rows, cols, s_x, s_y, beta_near, beta_far) -> DynamicBlockageFrame:
    ii, jj = np.meshgrid(np.arange(s_x), np.arange(s_y))
    in_core = (ii >= ax - cols + 1) & (ii <= ax) & (jj >= ay - rows + 1) & (jj <= ay)
    in_ring = (
        (ii >= ax - cols) & (ii <= ax + 1) & (jj >= ay - rows) & (jj <= ay + 1) & ~in_core
    )
    b = (in_core | in_ring).astype(np.int64).ravel()
    beta = np.ones(s_x * s_y)
    beta[in_ring.ravel()] = beta_far
    beta[in_core.ravel()] = beta_near
    return DynamicBlockageFrame(b=b, beta=beta)
