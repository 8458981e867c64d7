"""Array layouts: the on-screen planar grid and the edge-mounted baseline.

Builds both geometries for a 7x7 phone-screen array at 28 GHz half-wavelength
spacing and prints the spacing statistics that drive spatial correlation.
"""

import numpy as np

from screenant.channel import C_LIGHT
from screenant.geometry import EdgeArrayConfig, ScreenArrayConfig, edge_layout, screen_layout

f0 = 28e9
wavelength = C_LIGHT / f0
d_e = 0.5 * wavelength

screen = screen_layout(ScreenArrayConfig(s_x=7, s_y=7, d_e=d_e), centered=True)
edge = edge_layout(EdgeArrayConfig(n_elements=49, chassis_width=0.07, chassis_height=0.15))

print(f"carrier {f0 / 1e9:.0f} GHz, wavelength {wavelength * 1000:.2f} mm, spacing {d_e * 1000:.2f} mm")
print(f"screen array: {screen.n_elements} elements on a {screen.grid_shape} grid")
print(f"  aperture: {np.ptp(screen.coords[:, 0]) * 1000:.1f} x {np.ptp(screen.coords[:, 1]) * 1000:.1f} mm")
print(f"  nearest-neighbor distance: {np.min(screen.pairwise_dist[screen.pairwise_dist > 0]) * 1000:.2f} mm")
print(f"  largest separation: {screen.pairwise_dist.max() * 1000:.2f} mm")

print(f"edge array: {edge.n_elements} elements along a 70 x 150 mm chassis perimeter")
print(f"  nearest-neighbor distance: {np.min(edge.pairwise_dist[edge.pairwise_dist > 0]) * 1000:.2f} mm")
print(f"  largest separation: {edge.pairwise_dist.max() * 1000:.2f} mm")

# the screen packs the same element count into a far smaller aperture, which is
# exactly why its spatial correlation structure differs from the edge layout
ratio = edge.pairwise_dist.max() / screen.pairwise_dist.max()
print(f"edge spread exceeds the screen aperture by {ratio:.1f}x")
