import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from screenant.geometry import (
    ArrayGeometry,
    EdgeArrayConfig,
    ScreenArrayConfig,
    edge_layout,
    screen_layout,
)


class TestScreenLayout:
    def test_first_element_coordinates(self):
        geom = screen_layout(ScreenArrayConfig(7, 7, 1.0))
        # s = 1 maps to sx_bar = sy_bar = 1: x = -(7-1)/2 + 1 = -2, y = (7-1)/2 - 1 = 2
        np.testing.assert_allclose(geom.coords[0], [-2.0, 2.0])

    def test_self_distance_zero(self):
        geom = screen_layout(ScreenArrayConfig(7, 7, 0.003))
        np.testing.assert_array_equal(np.diag(geom.pairwise_dist), 0.0)

    def test_adjacent_distance_is_spacing(self):
        d = 0.0054
        geom = screen_layout(ScreenArrayConfig(7, 7, d))
        assert geom.pairwise_dist[0, 1] == pytest.approx(d)

    def test_diagonal_neighbor_distance(self):
        d = 0.0054
        geom = screen_layout(ScreenArrayConfig(7, 7, d))
        # row-major 7-wide grid: element 9 (index 8) is the diagonal neighbor of element 1
        assert geom.pairwise_dist[0, 8] == pytest.approx(d * np.sqrt(2))

    def test_centered_subtracts_centroid_without_changing_distances(self):
        raw = screen_layout(ScreenArrayConfig(5, 3, 0.01))
        cen = screen_layout(ScreenArrayConfig(5, 3, 0.01), centered=True)
        np.testing.assert_allclose(cen.coords.mean(axis=0), 0.0, atol=1e-15)
        np.testing.assert_allclose(cen.pairwise_dist, raw.pairwise_dist, atol=1e-12)

    @given(
        s_x=st.integers(1, 8),
        s_y=st.integers(1, 8),
        d_e=st.floats(1e-4, 1.0),
    )
    @settings(max_examples=50, deadline=None)
    def test_distance_matrix_symmetric_nonnegative(self, s_x, s_y, d_e):
        geom = screen_layout(ScreenArrayConfig(s_x, s_y, d_e))
        assert geom.n_elements == s_x * s_y
        np.testing.assert_array_equal(geom.pairwise_dist, geom.pairwise_dist.T)
        assert (geom.pairwise_dist >= 0).all()

    def test_invalid_config_rejected(self):
        with pytest.raises(ValueError, match="invalid-config"):
            ScreenArrayConfig(0, 7, 0.01)
        with pytest.raises(ValueError, match="invalid-config"):
            ScreenArrayConfig(7, 7, 0.0)


class TestEdgeLayout:
    def test_four_elements_arc_lengths(self):
        # 0.07 x 0.15 chassis: perimeter 0.44, elements every 0.11 along it
        geom = edge_layout(EdgeArrayConfig(4, 0.07, 0.15))
        expected = [
            (0.0, 0.0),  # arc 0.00: top-left corner
            (0.07, -0.04),  # arc 0.11: 0.04 down the right edge
            (0.07, -0.15),  # arc 0.22: bottom-right corner
            (0.0, -0.11),  # arc 0.33: 0.04 up the left edge
        ]
        np.testing.assert_allclose(geom.coords, expected, atol=1e-12)

    def test_single_element(self):
        geom = edge_layout(EdgeArrayConfig(1, 0.07, 0.15))
        np.testing.assert_allclose(geom.coords, [[0.0, 0.0]])
        np.testing.assert_array_equal(geom.pairwise_dist, [[0.0]])

    def test_two_elements_on_square(self):
        # arcs 0 and 2L land on opposite corners of an L x L square
        L = 0.1
        geom = edge_layout(EdgeArrayConfig(2, L, L))
        assert geom.pairwise_dist[0, 1] == pytest.approx(L * np.sqrt(2))

    def test_no_grid_shape(self):
        assert edge_layout(EdgeArrayConfig(5)).grid_shape is None
        assert screen_layout(ScreenArrayConfig(3, 3, 0.01)).grid_shape == (3, 3)

    @given(n=st.integers(1, 60))
    @settings(max_examples=30, deadline=None)
    def test_all_elements_on_perimeter(self, n):
        w, h = 0.07, 0.15
        geom = edge_layout(EdgeArrayConfig(n, w, h))
        x, y = geom.coords[:, 0], geom.coords[:, 1]
        on_edge = (
            np.isclose(x, 0) | np.isclose(x, w) | np.isclose(y, 0) | np.isclose(y, -h)
        )
        assert on_edge.all()
        assert (x >= -1e-12).all() and (x <= w + 1e-12).all()
        assert (y <= 1e-12).all() and (y >= -h - 1e-12).all()

    def test_invalid_config_rejected(self):
        with pytest.raises(ValueError, match="invalid-config"):
            EdgeArrayConfig(0)
        with pytest.raises(ValueError, match="invalid-config"):
            EdgeArrayConfig(4, chassis_width=-1.0)


def test_geometry_n_elements():
    geom = ArrayGeometry(coords=np.zeros((3, 2)), pairwise_dist=np.zeros((3, 3)))
    assert geom.n_elements == 3
