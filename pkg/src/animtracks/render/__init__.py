"""Rasterization, debug overlay and PNG output."""
from .overlay import draw_debug_overlay
from .png import encode_png, write_png
from .raster import (
    DEFAULT_VIEWPORT,
    Canvas,
    FrameBuffer,
    Style,
    Viewport,
    connect,
    draw_fragments,
    draw_segment,
    fill_circle,
    fill_polygon,
    world_to_pixel,
)

__all__ = [
    "DEFAULT_VIEWPORT",
    "Canvas",
    "FrameBuffer",
    "Style",
    "Viewport",
    "connect",
    "draw_debug_overlay",
    "draw_fragments",
    "draw_segment",
    "encode_png",
    "fill_circle",
    "fill_polygon",
    "world_to_pixel",
    "write_png",
]
