"""Debug overlay: elapsed time and one progress bar per track."""
from __future__ import annotations

import numpy as np

from ..timeline import Timeline, progress_vector
from .raster import FrameBuffer

__all__ = ["OVERLAY_COLOR", "draw_debug_overlay", "format_clock"]

OVERLAY_COLOR = (128, 128, 128)
BAR_TRACK_ALPHA = 0.25

# 3x5 bitmap glyphs, one string per row, "#" = lit.
_FONT = {
    "0": ("###", "#.#", "#.#", "#.#", "###"),
    "1": (".#.", "##.", ".#.", ".#.", "###"),
    "2": ("###", "..#", "###", "#..", "###"),
    "3": ("###", "..#", "###", "..#", "###"),
    "4": ("#.#", "#.#", "###", "..#", "..#"),
    "5": ("###", "#..", "###", "..#", "###"),
    "6": ("###", "#..", "###", "#.#", "###"),
    "7": ("###", "..#", "..#", "..#", "..#"),
    "8": ("###", "#.#", "###", "#.#", "###"),
    "9": ("###", "#.#", "###", "..#", "###"),
    "T": ("###", ".#.", ".#.", ".#.", ".#."),
    "=": ("...", "###", "...", "###", "..."),
    ".": ("...", "...", "...", "...", ".#."),
    "-": ("...", "...", "###", "...", "..."),
}


def format_clock(now: float) -> str:
    return f"T={now:06.3f}"


def _fill(fb: FrameBuffer, x0: int, y0: int, x1: int, y1: int, alpha: float = 1.0) -> None:
    x0, x1 = max(x0, 0), min(x1, fb.width)
    y0, y1 = max(y0, 0), min(y1, fb.height)
    if x1 <= x0 or y1 <= y0:
        return
    fb.composite(x0, y0, np.ones((y1 - y0, x1 - x0)), np.array(OVERLAY_COLOR) / 255.0, alpha)


def _bitmap(text: str, unit: int) -> np.ndarray:
    """Coverage image of ``text`` in the bitmap font, scaled by ``unit``."""
    cells = []
    for ch in text:
        rows = _FONT.get(ch, ("...",) * 5)
        glyph = np.array([[bit == "#" for bit in row] + [False] for row in rows], dtype=float)
        cells.append(glyph)
    img = np.hstack(cells) if cells else np.zeros((5, 0))
    return np.kron(img, np.ones((unit, unit)))


def _text(fb: FrameBuffer, x: int, y: int, text: str, unit: int) -> None:
    img = _bitmap(text, unit)
    h = min(img.shape[0], fb.height - y)
    w = min(img.shape[1], fb.width - x)
    if h > 0 and w > 0:
        fb.composite(x, y, img[:h, :w], np.array(OVERLAY_COLOR) / 255.0, 1.0)


def draw_debug_overlay(fb: FrameBuffer, tl: Timeline, now: float) -> None:
    """Draw the clock and per-track progress bars in the top-left corner."""
    unit = max(1, fb.height // 270)
    margin = 4 * unit
    _text(fb, margin, margin, format_clock(now), unit)
    bar_w, bar_h = 60 * unit, 2 * unit
    y = margin + 8 * unit
    for progress in progress_vector(tl, now):
        _fill(fb, margin, y, margin + bar_w, y + bar_h, BAR_TRACK_ALPHA)
        filled = int(round(progress * bar_w))
        _fill(fb, margin, y, margin + filled, y + bar_h)
        y += bar_h + 2 * unit
