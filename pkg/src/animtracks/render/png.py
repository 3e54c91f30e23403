"""Minimal deterministic PNG writer (8-bit RGBA, non-interlaced)."""
from __future__ import annotations

import struct
import zlib

import numpy as np

from .raster import FrameBuffer

__all__ = ["encode_png", "write_png"]

_SIGNATURE = b"\x89PNG\r\n\x1a\n"
_COMPRESSION_LEVEL = 6
_FILTER_UP = 2


def _chunk(tag: bytes, data: bytes) -> bytes:
    crc = zlib.crc32(data, zlib.crc32(tag)) & 0xFFFFFFFF
    return struct.pack("!I", len(data)) + tag + data + struct.pack("!I", crc)


def encode_png(fb: FrameBuffer) -> bytes:
    pixels = np.ascontiguousarray(fb.pixels, dtype=np.uint8)
    h, w = pixels.shape[:2]
    rows = pixels.reshape(h, w * 4)
    prev = np.zeros_like(rows)
    prev[1:] = rows[:-1]
    filtered = np.empty((h, w * 4 + 1), dtype=np.uint8)
    filtered[:, 0] = _FILTER_UP
    filtered[:, 1:] = rows - prev  # uint8 arithmetic wraps mod 256
    comp = zlib.compressobj(_COMPRESSION_LEVEL, zlib.DEFLATED, 15, 9, zlib.Z_DEFAULT_STRATEGY)
    data = comp.compress(filtered.tobytes()) + comp.flush()
    header = struct.pack("!2I5B", w, h, 8, 6, 0, 0, 0)
    return _SIGNATURE + _chunk(b"IHDR", header) + _chunk(b"IDAT", data) + _chunk(b"IEND", b"")


def write_png(fb: FrameBuffer, path) -> None:
    with open(path, "wb") as f:
        f.write(encode_png(fb))
