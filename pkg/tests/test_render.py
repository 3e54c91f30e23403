import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from PIL import Image

from animtracks.render import (
    FrameBuffer,
    Style,
    Viewport,
    connect,
    draw_debug_overlay,
    draw_fragments,
    draw_segment,
    encode_png,
    fill_circle,
    fill_polygon,
    world_to_pixel,
)
from animtracks.render.overlay import OVERLAY_COLOR, format_clock
from animtracks.timeline import timeline_from_track_data
from animtracks.typeset import fragment

VP = Viewport()
W, H = 480, 270


def decode(data):
    img = Image.open(io.BytesIO(data))
    assert img.mode == "RGBA"
    return np.asarray(img)


def px(fb, p):
    x, y = world_to_pixel(VP, p, fb.width, fb.height)
    return fb[int(x), int(y)]


class TestViewport:
    def test_center(self):
        assert VP.canvas_center == (0, 9)
        assert world_to_pixel(VP, VP.canvas_center, 1920, 1080) == (960, 540)

    def test_corners(self):
        assert world_to_pixel(VP, (VP.x_min, VP.y_max), 1920, 1080) == (0, 0)
        assert world_to_pixel(VP, (0, 18), 1920, 1080) == (960, 0)
        assert world_to_pixel(VP, (16, 0), 1920, 1080) == (1920, 1080)

    def test_fit_expands_short_axis(self):
        square = VP.fitted(1000, 1000)
        assert square.canvas_center == VP.canvas_center
        assert square.width == square.height == 32
        tall = Viewport(0, 10, 0, 10).fitted(200, 100)
        assert (tall.x_min, tall.x_max) == (-5, 15)

    @given(st.lists(st.floats(-100, 100), min_size=4, max_size=4))
    def test_affine_midpoints(self, v):
        a, b = (v[0], v[1]), (v[2], v[3])
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        pa, pb, pm = (world_to_pixel(VP, p, 1920, 1080) for p in (a, b, mid))
        assert pm[0] == pytest.approx((pa[0] + pb[0]) / 2, abs=1e-9)
        assert pm[1] == pytest.approx((pa[1] + pb[1]) / 2, abs=1e-9)


class TestStyle:
    def test_clamps(self):
        s = Style(color=(1.5, -1, 0.5), alpha=3)
        assert s.color == (1, 0, 0.5) and s.alpha == 1


class TestDraw:
    def test_segment_color(self):
        fb = FrameBuffer(W, H)
        draw_segment(fb, VP, (-4, 9), (4, 9), Style(size=10, color=(0.8, 0.2, 0.3)))
        r, g, b, a = px(fb, (0, 9))
        assert abs(r - 204) <= 2 and abs(g - 51) <= 2 and abs(b - 77) <= 2 and a == 255

    def test_alpha_zero_noop(self):
        fb = FrameBuffer(W, H)
        before = fb.pixels.copy()
        draw_segment(fb, VP, (-4, 9), (4, 9), Style(size=10, alpha=0))
        fill_circle(fb, VP, (0, 9), 3, Style(alpha=0))
        draw_fragments(fb, VP, (0, 9), fragment("abc", 30), 1, "up", Style(alpha=0))
        assert np.array_equal(fb.pixels, before)

    def test_clipped_segment_noop(self):
        fb = FrameBuffer(W, H)
        before = fb.pixels.copy()
        draw_segment(fb, VP, (100, 100), (200, 150), Style(size=10))
        assert np.array_equal(fb.pixels, before)

    def test_degenerate_segment_is_dot(self):
        fb = FrameBuffer(W, H)
        draw_segment(fb, VP, (0, 9), (0, 9), Style(size=20))
        assert px(fb, (0, 9))[:3] == (0, 0, 0)

    def test_arrowhead_drawn(self):
        fb = FrameBuffer(W, H)
        draw_segment(fb, VP, (-4, 9), (4, 9), Style(size=1, arrow=True, arrowsize=4))
        # inside a barb, off the shaft
        assert px(fb, (3.2, 9.3))[:3] == (0, 0, 0)
        plain = FrameBuffer(W, H)
        draw_segment(plain, VP, (-4, 9), (4, 9), Style(size=1))
        assert px(plain, (3.2, 9.3))[:3] == (255, 255, 255)

    def test_circle_probes(self):
        fb = FrameBuffer(W, H)
        fill_circle(fb, VP, (0, 9), 3, Style(color=(0.8, 0.2, 0.3)))
        want = (204, 51, 77)
        for p in [(0, 9), (2.9, 9), (0, 9 - 2.9)]:
            assert all(abs(a - b) <= 1 for a, b in zip(px(fb, p)[:3], want))
        assert px(fb, (3.2, 9))[:3] == (255, 255, 255)

    def test_circle_zero_radius(self):
        fb = FrameBuffer(W, H)
        fill_circle(fb, VP, (0, 9), 0, Style())
        assert np.all(fb.pixels == 255)

    def test_full_viewport_disc(self):
        fb = FrameBuffer(W, H)
        fill_circle(fb, VP, (0, 9), 100, Style(color=(0.1, 0.2, 0.3)))
        assert np.all(fb.pixels[..., :3] == np.array([26, 51, 77]))

    def test_connect_two_points_equals_segment(self):
        a, b = FrameBuffer(W, H), FrameBuffer(W, H)
        connect(a, VP, [(-3, 7), (5, 10)], Style(size=7))
        draw_segment(b, VP, (-3, 7), (5, 10), Style(size=7))
        assert np.array_equal(a.pixels, b.pixels)

    def test_connect_single_point_noop(self):
        fb = FrameBuffer(W, H)
        connect(fb, VP, [(0, 9)], Style(size=10))
        assert np.all(fb.pixels == 255)

    def test_connect_no_double_darkening(self):
        # a translucent polyline doubling back on itself composites once
        fb = FrameBuffer(W, H)
        connect(fb, VP, [(-4, 9), (4, 9), (-4, 9)], Style(size=10, alpha=0.5))
        single = FrameBuffer(W, H)
        draw_segment(single, VP, (-4, 9), (4, 9), Style(size=10, alpha=0.5))
        assert np.array_equal(fb.pixels, single.pixels)

    def test_example_stroke_has_no_gaps(self):
        from animtracks.geometry import sample_bezier_curve
        stroke = sample_bezier_curve([(8, 12), (0, 15), (10, 4), (-2, 4)], 256)
        fb = FrameBuffer(1920, 1080)
        connect(fb, VP, stroke.points, Style(size=5))
        for p in stroke.points:
            assert px(fb, p)[:3] == (0, 0, 0)
        # midpoints between consecutive samples are inked too
        for p, q in zip(stroke.points, stroke.points[1:]):
            assert px(fb, (p + q) / 2)[:3] == (0, 0, 0)

    def test_polygon_fill(self):
        fb = FrameBuffer(W, H)
        fill_polygon(fb, VP, [(-2, 8), (2, 8), (0, 11)], Style(color=(0, 0, 1)))
        assert px(fb, (0, 9))[:3] == (0, 0, 255)
        assert px(fb, (3, 9))[:3] == (255, 255, 255)

    @settings(max_examples=60)
    @given(st.lists(st.floats(-1e12, 1e12), min_size=4, max_size=4), st.floats(0, 1e6))
    def test_huge_coordinates_never_fail(self, v, size):
        fb = FrameBuffer(64, 36)
        draw_segment(fb, VP, (v[0], v[1]), (v[2], v[3]), Style(size=size, arrow=True))
        fill_circle(fb, VP, (v[0], v[1]), size, Style())
        assert fb.pixels.shape == (36, 64, 4)


class TestFragments:
    def test_t0_unchanged(self):
        fb = FrameBuffer(W, H)
        draw_fragments(fb, VP, (-5, 12), fragment("abc", 30), 0, "up", Style())
        assert np.all(fb.pixels == 255)

    def test_settled_modes_agree(self):
        fs = fragment(r"This is $q^i$", 30)
        a, b = FrameBuffer(W, H), FrameBuffer(W, H)
        draw_fragments(a, VP, (-5, 12), fs, 1, "up", Style(color=(0.8, 0.2, 0.3)))
        draw_fragments(b, VP, (-5, 12), fs, 1, "fade", Style(color=(0.8, 0.2, 0.3)))
        assert np.array_equal(a.pixels, b.pixels)
        assert not np.all(a.pixels == 255)

    def test_half_of_two_glyphs(self):
        fs = fragment("HH", 60)
        fb = FrameBuffer(1920, 1080)
        draw_fragments(fb, VP, (0, 9), fs, 0.5, "up", Style())
        first, second = fs.fragments
        ax, ay = world_to_pixel(VP, (0, 9), 1920, 1080)

        def centre(f):
            return int(ax + f.offset[0] + f.width / 2), int(ay - f.ascent / 2)

        assert fb[centre(first)][:3] == (0, 0, 0)
        assert fb[centre(second)][:3] == (255, 255, 255)

    def test_unknown_mode(self):
        from animtracks.typeset import UnknownModeError
        with pytest.raises(UnknownModeError):
            draw_fragments(FrameBuffer(W, H), VP, (0, 0), fragment("a", 30), 0.5, "spin", Style())


class TestOverlay:
    TL = timeline_from_track_data([1, 0.3, 2, 0.5], 0.3)

    def bar_row(self, fb, track):
        unit = max(1, fb.height // 270)
        y = 4 * unit + 8 * unit + track * 4 * unit
        return fb.pixels[y, 4 * unit : 4 * unit + 60 * unit, :3]

    def test_clock_format(self):
        assert format_clock(4.1) == "T=04.100"
        assert format_clock(0) == "T=00.000"

    def test_empty_and_full_bars(self):
        gray = np.array(OVERLAY_COLOR)
        fb = FrameBuffer(W, H)
        draw_debug_overlay(fb, self.TL, 0)
        for i in range(2):
            assert not np.any(np.all(self.bar_row(fb, i) == gray, axis=1))
        fb = FrameBuffer(W, H)
        draw_debug_overlay(fb, self.TL, self.TL.total)
        for i in range(2):
            assert np.all(self.bar_row(fb, i) == gray)

    def test_partial_bar(self):
        gray = np.array(OVERLAY_COLOR)
        fb = FrameBuffer(W, H)
        draw_debug_overlay(fb, self.TL, 0.8)
        row = np.all(self.bar_row(fb, 0) == gray, axis=1)
        assert row.sum() == 60 * (H // 270) // 2

    def test_overlay_changes_top_left_only(self):
        fb = FrameBuffer(W, H)
        draw_debug_overlay(fb, self.TL, 2.0)
        changed = np.argwhere(np.any(fb.pixels != 255, axis=2))
        assert changed[:, 0].max() < H // 4 and changed[:, 1].max() < W // 4


class TestPng:
    def test_red_pixel(self):
        fb = FrameBuffer(1, 1, background=(255, 0, 0, 255))
        assert decode(encode_png(fb))[0, 0].tolist() == [255, 0, 0, 255]

    def test_deterministic(self):
        fb = FrameBuffer(W, H)
        fill_circle(fb, VP, (0, 9), 3, Style(color=(0.3, 0.8, 0.2)))
        assert encode_png(fb) == encode_png(fb)

    def test_full_hd_round_trip(self):
        rng = np.random.default_rng(0)
        fb = FrameBuffer.from_array(rng.integers(0, 256, size=(1080, 1920, 4), dtype=np.uint8))
        out = decode(encode_png(fb))
        assert out.shape == (1080, 1920, 4)
        assert np.array_equal(out, fb.pixels)

    def test_header(self):
        data = encode_png(FrameBuffer(3, 2))
        assert data[:8] == b"\x89PNG\r\n\x1a\n"
        assert data[12:16] == b"IHDR"
        # bit depth 8, colour type 6 (RGBA), interlace 0
        assert data[24:29] == bytes([8, 6, 0, 0, 0])

    @settings(max_examples=25)
    @given(st.integers(1, 40), st.integers(1, 40), st.integers(0, 2**32 - 1))
    def test_random_round_trip(self, w, h, seed):
        rng = np.random.default_rng(seed)
        fb = FrameBuffer.from_array(rng.integers(0, 256, size=(h, w, 4), dtype=np.uint8))
        assert np.array_equal(decode(encode_png(fb)), fb.pixels)
