"""Software rasterizer: logical viewport, RGBA framebuffer and drawing.

Shapes are rasterized by 4x4 supersampled coverage and composited
source-over with straight alpha. Stroke widths and text sizes are given in
pixels at a 1080-pixel-high reference frame and scale with the output
height, so a scene looks the same at every resolution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from ..geometry import arrowhead
from ..typeset.layout import FragmentedString, typing_states

__all__ = [
    "BACKGROUND",
    "DEFAULT_HEIGHT",
    "DEFAULT_VIEWPORT",
    "DEFAULT_WIDTH",
    "REFERENCE_HEIGHT",
    "Canvas",
    "FrameBuffer",
    "Style",
    "Viewport",
    "connect",
    "draw_fragments",
    "draw_segment",
    "fill_circle",
    "fill_polygon",
    "world_to_pixel",
]

DEFAULT_WIDTH = 1920
DEFAULT_HEIGHT = 1080
REFERENCE_HEIGHT = 1080
BACKGROUND = (255, 255, 255, 255)
SUPERSAMPLE = 4
# Horizontal inset of placeholder glyph boxes, as a fraction of the advance.
GLYPH_SIDE_BEARING = 0.08


@dataclass(frozen=True)
class Viewport:
    """Logical rectangle shown on screen; y increases upward."""

    x_min: float = -16.0
    x_max: float = 16.0
    y_min: float = 0.0
    y_max: float = 18.0

    def __post_init__(self):
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise ValueError(f"degenerate viewport {self}")

    @property
    def canvas_center(self) -> tuple[float, float]:
        return ((self.x_min + self.x_max) / 2, (self.y_min + self.y_max) / 2)

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def fitted(self, width: int, height: int) -> "Viewport":
        """Expand the short axis symmetrically to match a pixel aspect ratio."""
        target = width / height
        aspect = self.width / self.height
        if math.isclose(aspect, target, rel_tol=1e-12):
            return self
        cx, cy = self.canvas_center
        if aspect < target:
            half = self.height * target / 2
            return Viewport(cx - half, cx + half, self.y_min, self.y_max)
        half = self.width / target / 2
        return Viewport(self.x_min, self.x_max, cy - half, cy + half)


DEFAULT_VIEWPORT = Viewport()


def world_to_pixel(vp: Viewport, p, width: int, height: int) -> tuple[float, float]:
    """Map a logical point to real-valued pixel coordinates (y down)."""
    px = (p[0] - vp.x_min) / vp.width * width
    py = (vp.y_max - p[1]) / vp.height * height
    return (px, py)


def _clamp01(v: float) -> float:
    return min(max(float(v), 0.0), 1.0)


@dataclass(frozen=True)
class Style:
    size: float = 1.0
    color: tuple = (0.0, 0.0, 0.0)
    alpha: float = 1.0
    arrow: bool = False
    arrowsize: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "color", tuple(_clamp01(c) for c in self.color))
        object.__setattr__(self, "alpha", _clamp01(self.alpha))
        object.__setattr__(self, "arrowsize", max(float(self.arrowsize), 0.0))


class FrameBuffer:
    """Straight-alpha RGBA image, 8 bits per channel, row-major (H, W, 4)."""

    def __init__(self, width: int, height: int, background: Optional[Sequence[int]] = BACKGROUND):
        if width <= 0 or height <= 0:
            raise ValueError(f"framebuffer size must be positive, got {width}x{height}")
        self.width = int(width)
        self.height = int(height)
        if background is None:
            self.pixels = np.zeros((self.height, self.width, 4), dtype=np.uint8)
        else:
            fill = np.frombuffer(bytes(bytearray(background)), dtype=np.uint32)[0]
            self.pixels = np.full((self.height, self.width), fill, dtype=np.uint32).view(np.uint8).reshape(
                self.height, self.width, 4
            )

    @classmethod
    def from_array(cls, pixels: np.ndarray) -> "FrameBuffer":
        fb = cls.__new__(cls)
        fb.pixels = np.ascontiguousarray(pixels, dtype=np.uint8)
        fb.height, fb.width = fb.pixels.shape[:2]
        return fb

    def copy(self) -> "FrameBuffer":
        return FrameBuffer.from_array(self.pixels.copy())

    def __getitem__(self, xy):
        x, y = xy
        return tuple(int(v) for v in self.pixels[y, x])

    @property
    def unit(self) -> float:
        """Pixels per reference pixel."""
        return self.height / REFERENCE_HEIGHT

    def composite(self, x0: int, y0: int, coverage: np.ndarray, color, alpha: float) -> None:
        """Blend ``color`` over the region at (x0, y0) weighted by ``coverage``."""
        h, w = coverage.shape
        if h == 0 or w == 0 or alpha <= 0:
            return
        a = coverage * alpha
        touched = a > 0
        if not touched.any():
            return
        region = self.pixels[y0 : y0 + h, x0 : x0 + w]
        dst = region.astype(np.float64) / 255.0
        dst_a = dst[..., 3]
        out_a = a + dst_a * (1 - a)
        src = np.asarray(color, dtype=np.float64)
        with np.errstate(invalid="ignore", divide="ignore"):
            rgb = (src * a[..., None] + dst[..., :3] * (dst_a * (1 - a))[..., None]) / out_a[..., None]
        rgb = np.where(out_a[..., None] > 0, rgb, 0.0)
        blended = np.empty_like(dst)
        blended[..., :3] = rgb
        blended[..., 3] = out_a
        new = np.floor(np.clip(blended, 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)
        region[touched] = new[touched]


class _Mask:
    """Supersampled coverage accumulator over a clipped pixel rectangle."""

    def __init__(self, fb: FrameBuffer, bbox):
        x0, y0, x1, y1 = bbox
        lim = np.array([fb.width, fb.height, fb.width, fb.height], dtype=float)
        lo = np.clip(np.floor(np.nan_to_num([x0, y0], nan=0.0, posinf=1e18, neginf=-1e18)), 0, lim[:2])
        hi = np.clip(np.ceil(np.nan_to_num([x1, y1], nan=0.0, posinf=1e18, neginf=-1e18)), 0, lim[2:])
        self.x0, self.y0 = int(lo[0]), int(lo[1])
        self.x1, self.y1 = int(hi[0]), int(hi[1])
        w, h = max(self.x1 - self.x0, 0), max(self.y1 - self.y0, 0)
        self.samples = np.zeros((h * SUPERSAMPLE, w * SUPERSAMPLE), dtype=bool)

    @property
    def empty(self) -> bool:
        return self.samples.size == 0

    def _grid(self, bx0, by0, bx1, by1):
        """Sample coordinates of the part of the mask inside a bbox."""
        s = SUPERSAMPLE
        h, w = self.samples.shape
        with np.errstate(invalid="ignore"):
            c0 = int(np.clip(math.floor((min(max(bx0, -1e18), 1e18) - self.x0) * s), 0, w))
            c1 = int(np.clip(math.ceil((min(max(bx1, -1e18), 1e18) - self.x0) * s), 0, w))
            r0 = int(np.clip(math.floor((min(max(by0, -1e18), 1e18) - self.y0) * s), 0, h))
            r1 = int(np.clip(math.ceil((min(max(by1, -1e18), 1e18) - self.y0) * s), 0, h))
        xs = self.x0 + (np.arange(c0, c1) + 0.5) / s
        ys = self.y0 + (np.arange(r0, r1) + 0.5) / s
        return (r0, r1, c0, c1), xs[None, :], ys[:, None]

    def add_capsule(self, a, b, radius: float) -> None:
        if radius <= 0:
            return
        ax, ay = a
        bx, by = b
        (r0, r1, c0, c1), X, Y = self._grid(
            min(ax, bx) - radius, min(ay, by) - radius, max(ax, bx) + radius, max(ay, by) + radius
        )
        if r1 <= r0 or c1 <= c0:
            return
        dx, dy = bx - ax, by - ay
        ll = dx * dx + dy * dy
        with np.errstate(invalid="ignore", over="ignore"):
            if ll > 0:
                u = np.clip(((X - ax) * dx + (Y - ay) * dy) / ll, 0.0, 1.0)
            else:
                u = np.zeros((1, 1))
            ex = X - (ax + u * dx)
            ey = Y - (ay + u * dy)
            inside = ex * ex + ey * ey <= radius * radius
        self.samples[r0:r1, c0:c1] |= inside

    def add_disc(self, center, radius: float) -> None:
        self.add_capsule(center, center, radius)

    def add_polygon(self, pts) -> None:
        """Fill a convex polygon given in pixel coordinates."""
        pts = [(float(x), float(y)) for x, y in pts]
        area2 = sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]))
        if not area2 or not math.isfinite(area2):
            return
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        (r0, r1, c0, c1), X, Y = self._grid(min(xs), min(ys), max(xs), max(ys))
        if r1 <= r0 or c1 <= c0:
            return
        sign = 1.0 if area2 > 0 else -1.0
        inside = np.ones((r1 - r0, c1 - c0), dtype=bool)
        for (px, py), (qx, qy) in zip(pts, pts[1:] + pts[:1]):
            inside &= sign * ((qx - px) * (Y - py) - (qy - py) * (X - px)) >= 0
        self.samples[r0:r1, c0:c1] |= inside

    def add_rect(self, x0, y0, x1, y1) -> None:
        (r0, r1, c0, c1), X, Y = self._grid(x0, y0, x1, y1)
        if r1 <= r0 or c1 <= c0:
            return
        inside = (X >= x0) & (X <= x1) & (Y >= y0) & (Y <= y1)
        self.samples[r0:r1, c0:c1] |= inside

    def coverage(self) -> np.ndarray:
        s = SUPERSAMPLE
        h, w = self.samples.shape
        return self.samples.reshape(h // s, s, w // s, s).sum(axis=(1, 3), dtype=np.uint8) / (s * s)

    def paint(self, fb: FrameBuffer, color, alpha: float) -> None:
        if not self.empty:
            fb.composite(self.x0, self.y0, self.coverage(), color, alpha)


def _to_pixels(fb: FrameBuffer, vp: Viewport, points) -> np.ndarray:
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    out = np.empty_like(pts)
    out[:, 0] = (pts[:, 0] - vp.x_min) / vp.width * fb.width
    out[:, 1] = (vp.y_max - pts[:, 1]) / vp.height * fb.height
    return out


def connect(fb: FrameBuffer, vp: Viewport, points, style: Style) -> None:
    """Stroke a polyline with round caps and joins in one compositing pass.

    With ``style.arrow`` an arrowhead is added at the last point.
    """
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) < 2 or style.alpha <= 0:
        return
    radius = style.size * fb.unit / 2
    px = _to_pixels(fb, vp, pts)
    tri = None
    if style.arrow and style.arrowsize > 0 and not np.array_equal(pts[-2], pts[-1]):
        tri = _to_pixels(fb, vp, arrowhead(pts[-2], pts[-1], style.arrowsize))
    if radius <= 0 and tri is None:
        return
    lo = px.min(axis=0) - max(radius, 0)
    hi = px.max(axis=0) + max(radius, 0)
    if tri is not None:
        lo = np.minimum(lo, tri.min(axis=0))
        hi = np.maximum(hi, tri.max(axis=0))
    mask = _Mask(fb, (lo[0], lo[1], hi[0], hi[1]))
    if mask.empty:
        return
    for a, b in zip(px[:-1], px[1:]):
        mask.add_capsule(a, b, radius)
    if tri is not None:
        mask.add_polygon(tri)
    mask.paint(fb, style.color, style.alpha)


def draw_segment(fb: FrameBuffer, vp: Viewport, a, b, style: Style) -> None:
    """Stroke the segment ``a``-``b``; a zero-length segment draws a dot."""
    connect(fb, vp, [a, b], style)


def fill_circle(fb: FrameBuffer, vp: Viewport, center, radius: float, style: Style) -> None:
    if radius <= 0 or style.alpha <= 0:
        return
    c = _to_pixels(fb, vp, center)[0]
    r = radius * fb.width / vp.width
    mask = _Mask(fb, (c[0] - r, c[1] - r, c[0] + r, c[1] + r))
    if mask.empty:
        return
    mask.add_disc(c, r)
    mask.paint(fb, style.color, style.alpha)


def fill_polygon(fb: FrameBuffer, vp: Viewport, points, style: Style) -> None:
    """Fill a convex polygon given in logical coordinates."""
    if style.alpha <= 0:
        return
    px = _to_pixels(fb, vp, points)
    lo, hi = px.min(axis=0), px.max(axis=0)
    mask = _Mask(fb, (lo[0], lo[1], hi[0], hi[1]))
    if mask.empty:
        return
    mask.add_polygon(px)
    mask.paint(fb, style.color, style.alpha)


def draw_fragments(
    fb: FrameBuffer,
    vp: Viewport,
    anchor,
    fs: FragmentedString,
    t: float,
    mode: str,
    style: Style,
) -> None:
    """Draw a fragmented string at typing progress ``t``.

    Glyphs are placeholder boxes spanning each fragment's metric box.
    """
    states = typing_states(fs, t, mode)
    if style.alpha <= 0:
        return
    ax, ay = _to_pixels(fb, vp, anchor)[0]
    k = fb.unit
    for frag, state in zip(fs.fragments, states):
        alpha = style.alpha * state.alpha
        if alpha <= 0:
            continue
        ox = frag.offset[0] + state.extra_offset[0]
        oy = frag.offset[1] + state.extra_offset[1]
        inset = 0.0 if frag.math_mode and frag.glyph == "fraction-rule" else GLYPH_SIDE_BEARING * frag.width
        x0 = ax + (ox + inset) * k
        x1 = ax + (ox + frag.width - inset) * k
        base = ay - oy * k
        y0 = base - frag.ascent * k
        y1 = base + frag.descent * k
        mask = _Mask(fb, (x0, y0, x1, y1))
        if mask.empty:
            continue
        mask.add_rect(x0, y0, x1, y1)
        mask.paint(fb, style.color, alpha)


@dataclass
class Canvas:
    """A framebuffer bound to a viewport; the drawing surface scenes see."""

    fb: FrameBuffer
    vp: Viewport = field(default=DEFAULT_VIEWPORT)

    @property
    def canvas_center(self):
        return self.vp.canvas_center

    def draw(self, a, b, style: Style) -> None:
        draw_segment(self.fb, self.vp, a, b, style)

    def connect(self, points, style: Style) -> None:
        connect(self.fb, self.vp, points, style)

    def fillcircle(self, center, radius: float, style: Style) -> None:
        fill_circle(self.fb, self.vp, center, radius, style)

    def fillpolygon(self, points, style: Style) -> None:
        fill_polygon(self.fb, self.vp, points, style)

    def draw_fragments(self, anchor, fs, t, mode, style: Style) -> None:
        draw_fragments(self.fb, self.vp, anchor, fs, t, mode, style)
