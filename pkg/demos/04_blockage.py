"""User-induced blockage: static masks and a moving finger-touch trajectory.

Renders a rectangle mask on the 7x7 grid as ASCII art, then steps a dynamic
finger trajectory across frames and tracks the spectral-efficiency dips.
"""

import numpy as np

from screenant.beamforming import evaluate_se, mrt_oracle
from screenant.blockage import (
    BlockageSpec,
    apply_dynamic,
    apply_static,
    generate_finger_trajectory,
    generate_mask,
)
from screenant.channel import correlation_matrix, sample_channel
from screenant.experiments import ScenarioConfig, link_params
from screenant.geometry import ScreenArrayConfig, screen_layout

cfg = ScenarioConfig()
params = link_params(cfg)
geom = screen_layout(ScreenArrayConfig(7, 7, 0.5 * params.wavelength))
corr = correlation_matrix(geom, params.wavelength)
rng = np.random.default_rng(5)
h = sample_channel(corr, params, rng)
P, sigma2 = params.tx_power_total, params.noise_power


def show(mask_vec):
    for row in mask_vec.reshape(7, 7):
        print("  " + " ".join("#" if c else "." for c in row))


spec = BlockageSpec(ratio=0.5, beta=0.1, pattern="rectangle")
mask = generate_mask(spec, geom, rng)
print(f"rectangle mask, ratio {spec.ratio} -> {mask.popcount}/49 blocked:")
show(mask.b)

se_clear = mrt_oracle(h, P, sigma2).se
h_blk = apply_static(h, mask, spec.beta)
se_blocked = mrt_oracle(h_blk, P, sigma2).se
print(f"optimal SE clear {se_clear:.3f} -> blocked {se_blocked:.3f} bps/Hz "
      f"({1 - se_blocked / se_clear:.1%} loss)")

print("\nfinger trajectory, 6 frames (core beta 0.1, ring beta 0.5):")
frames = generate_finger_trajectory(geom, 6, np.random.default_rng(9))
for t, h_t in enumerate(apply_dynamic(h, frames)):
    se_t = evaluate_se(h_t, mrt_oracle(h_t, P, sigma2).vector, sigma2)
    touched = int(frames[t].b.sum())
    print(f"  frame {t}: {touched:2d} elements touched, optimal SE {se_t:.3f} bps/Hz")
