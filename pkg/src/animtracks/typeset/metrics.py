"""Glyph metrics providers.

Layout only needs three numbers per glyph: advance width, ascent and
descent, all in the same units as the text size (reference pixels at 1080p).
The built-in provider uses a fixed table of Helvetica-like advance widths so
layout is deterministic and needs no font files.
"""
from __future__ import annotations

from typing import Protocol, runtime_checkable

__all__ = ["GlyphMetrics", "TableMetrics", "PROVISIONAL_ADVANCE"]

# Advance widths in thousandths of an em, printable ASCII.
_ASCII_ADVANCE = dict(zip(
    " !\"#$%&'()*+,-./0123456789:;<=>?@ABCDEFGHIJKLMNOPQRSTUVWXYZ[\\]^_`abcdefghijklmnopqrstuvwxyz{|}~",
    [278, 278, 355, 556, 556, 889, 667, 191, 333, 333, 389, 584, 278, 333, 278, 278,
     556, 556, 556, 556, 556, 556, 556, 556, 556, 556, 278, 278, 584, 584, 584, 556,
     1015, 667, 667, 722, 722, 667, 611, 778, 722, 278, 500, 667, 556, 833, 722, 778,
     667, 778, 722, 667, 611, 722, 667, 944, 667, 667, 611, 278, 278, 278, 469, 556,
     333, 556, 556, 500, 556, 556, 278, 556, 556, 222, 222, 500, 222, 833, 556, 556,
     556, 556, 333, 500, 278, 556, 500, 722, 500, 500, 500, 334, 260, 334, 584],
))
_SYMBOL_ADVANCE = {"∑": 1000, "∏": 1000, "∫": 500, "∞": 1000}
_DEFAULT_ADVANCE = 600

_TALL = set("ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789bdfhklt()[]{}|/\\!?&%$#@∑∏∫")
_DESCENDING = set("gjpqy()[]{}|,;∫")

# Until real metrics are available every glyph advances by this fraction of
# the text size; only positions depend on it, never the glyph count.
PROVISIONAL_ADVANCE = 0.6


@runtime_checkable
class GlyphMetrics(Protocol):
    name: str
    ready: bool

    def measure(self, glyph: str, size: float) -> tuple[float, float, float]:
        """Return ``(advance, ascent, descent)`` for ``glyph`` at ``size``."""
        ...


class TableMetrics:
    """Deterministic metrics from an embedded width table.

    Created not ready to mimic fonts that load after initial setup; call
    :meth:`mark_ready` once to switch from provisional to table metrics.
    """

    name = "builtin-table"

    def __init__(self, ready: bool = True):
        self._ready = bool(ready)

    @property
    def ready(self) -> bool:
        return self._ready

    def mark_ready(self) -> None:
        self._ready = True

    def advance(self, glyph: str, size: float) -> float:
        if not self._ready:
            return PROVISIONAL_ADVANCE * size
        if glyph in _ASCII_ADVANCE:
            units = _ASCII_ADVANCE[glyph]
        elif glyph in _SYMBOL_ADVANCE:
            units = _SYMBOL_ADVANCE[glyph]
        else:
            units = _DEFAULT_ADVANCE
        return units / 1000 * size

    def measure(self, glyph: str, size: float) -> tuple[float, float, float]:
        adv = self.advance(glyph, size)
        if not self._ready:
            return adv, 0.72 * size, 0.0
        if glyph in ("∑", "∏"):
            return adv, 0.75 * size, 0.25 * size
        ascent = 0.72 * size if glyph in _TALL or not glyph.isascii() else 0.52 * size
        descent = 0.21 * size if glyph in _DESCENDING else 0.0
        return adv, ascent, descent

    def __repr__(self):
        return f"TableMetrics(ready={self._ready})"
