"""Glyph decomposition of Nyka strings and per-glyph typing animation.

Offsets, sizes and boxes are expressed in text units (pixels at the 1080p
reference height) with y pointing up; the renderer scales them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..easing import ease
from ..errors import ValidationError
from .metrics import GlyphMetrics, TableMetrics
from .nyka import (
    Atom,
    BigOperator,
    Fraction,
    MathGroup,
    StyleFlag,
    Subscript,
    Superscript,
    Symbol,
    TextRun,
    parse_nyka,
)

__all__ = [
    "Fragment",
    "FragmentedString",
    "GlyphState",
    "NonPositiveSizeError",
    "UnknownModeError",
    "TYPING_MODES",
    "fragment",
    "fragment_length",
    "typing_states",
]

# Layout constants (fractions of the current text size).
SCRIPT_SCALE = 0.7
SCRIPT_SHIFT = 0.45
DISPLAY_OPERATOR_SCALE = 1.4
LIMIT_GAP = 0.12
MATH_AXIS = 0.25
RULE_THICKNESS = 0.06
FRACTION_GAP = 0.1
FRACTION_PAD = 0.08
RISE_DISTANCE = 0.4

RULE_GLYPH = "fraction-rule"
TYPING_MODES = ("up", "fade", "appear")


class NonPositiveSizeError(ValidationError):
    pass


class UnknownModeError(ValidationError):
    pass


@dataclass(frozen=True)
class Fragment:
    glyph: str
    offset: tuple[float, float]
    size: float
    math_mode: bool = False
    script_level: int = 0
    width: float = 0.0
    ascent: float = 0.0
    descent: float = 0.0


@dataclass(frozen=True)
class FragmentedString:
    fragments: tuple[Fragment, ...]
    source: str
    size: float
    metrics_ready: bool = field(default=True, compare=False)

    def __len__(self):
        return len(self.fragments)

    def __iter__(self):
        return iter(self.fragments)


@dataclass(frozen=True)
class GlyphState:
    alpha: float
    extra_offset: tuple[float, float]


@dataclass
class _Box:
    frags: list
    width: float = 0.0
    ascent: float = 0.0
    descent: float = 0.0

    def shifted(self, dx: float, dy: float) -> list:
        return [
            Fragment(f.glyph, (f.offset[0] + dx, f.offset[1] + dy), f.size, f.math_mode,
                     f.script_level, f.width, f.ascent, f.descent)
            for f in self.frags
        ]


class _Layout:
    def __init__(self, metrics: GlyphMetrics):
        self.metrics = metrics

    def glyph(self, ch: str, size: float, level: int, math: bool) -> _Box:
        adv, asc, desc = self.metrics.measure(ch, size)
        frag = Fragment(ch, (0.0, 0.0), size, math, level, adv, asc, desc)
        return _Box([frag], adv, asc, desc)

    def hlist(self, boxes) -> _Box:
        out = _Box([])
        for box in boxes:
            out.frags.extend(box.shifted(out.width, 0.0))
            out.width += box.width
            out.ascent = max(out.ascent, box.ascent)
            out.descent = max(out.descent, box.descent)
        return out

    def text(self, run: str, size: float) -> _Box:
        boxes = []
        for ch in run:
            if ch.isspace():
                adv = self.metrics.measure(" ", size)[0]
                boxes.append(_Box([], adv))
            else:
                boxes.append(self.glyph(ch, size, 0, False))
        return self.hlist(boxes)

    def math(self, node, size: float, level: int, display: bool) -> _Box:
        if node is None:
            return _Box([])
        if isinstance(node, Atom):
            return self.glyph(node.char, size, level, True)
        if isinstance(node, Symbol):
            return self.glyph(node.glyph, size, level, True)
        if isinstance(node, MathGroup):
            return self.hlist(self.math(c, size, level, display) for c in node.children)
        if isinstance(node, StyleFlag):
            return self.math(node.child, size, level, display=True)
        if isinstance(node, (Superscript, Subscript)):
            base = self.math(node.base, size, level, display)
            arg = node.exponent if isinstance(node, Superscript) else node.index
            script = self.math(arg, size * SCRIPT_SCALE, level + 1, False)
            dy = SCRIPT_SHIFT * size if isinstance(node, Superscript) else -SCRIPT_SHIFT * size
            out = _Box(base.frags + script.shifted(base.width, dy))
            out.width = base.width + script.width
            out.ascent = max(base.ascent, script.ascent + dy)
            out.descent = max(base.descent, script.descent - dy)
            return out
        if isinstance(node, BigOperator):
            return self.operator(node, size, level, display)
        if isinstance(node, Fraction):
            return self.fraction(node, size, level, display)
        raise TypeError(f"cannot lay out {node!r}")

    def operator(self, node: BigOperator, size, level, display) -> _Box:
        op_size = size * DISPLAY_OPERATOR_SCALE if display else size
        op = self.glyph(node.glyph, op_size, level, True)
        lower = self.math(node.lower, size * SCRIPT_SCALE, level + 1, False)
        upper = self.math(node.upper, size * SCRIPT_SCALE, level + 1, False)
        if not display:
            frags = op.frags + lower.shifted(op.width, -SCRIPT_SHIFT * size)
            frags += upper.shifted(op.width, SCRIPT_SHIFT * size)
            return _Box(frags, op.width + max(lower.width, upper.width),
                        max(op.ascent, upper.ascent + SCRIPT_SHIFT * size),
                        max(op.descent, lower.descent + SCRIPT_SHIFT * size))
        width = max(op.width, lower.width, upper.width)
        gap = LIMIT_GAP * size
        low_y = -(op.descent + gap + lower.ascent)
        up_y = op.ascent + gap + upper.descent
        frags = op.shifted((width - op.width) / 2, 0.0)
        frags += lower.shifted((width - lower.width) / 2, low_y)
        frags += upper.shifted((width - upper.width) / 2, up_y)
        ascent = up_y + upper.ascent if node.upper is not None else op.ascent
        descent = -low_y + lower.descent if node.lower is not None else op.descent
        return _Box(frags, width, ascent, descent)

    def fraction(self, node: Fraction, size, level, display) -> _Box:
        part_size = size if display else size * SCRIPT_SCALE
        part_level = level if display else level + 1
        num = self.math(node.numerator, part_size, part_level, display)
        den = self.math(node.denominator, part_size, part_level, display)
        pad = FRACTION_PAD * size
        width = max(num.width, den.width) + 2 * pad
        axis = MATH_AXIS * size
        half = RULE_THICKNESS * size / 2
        gap = FRACTION_GAP * size
        num_y = axis + half + gap + num.descent
        den_y = axis - half - gap - den.ascent
        rule = Fragment(RULE_GLYPH, (0.0, axis - half), size, True, level, width, 2 * half, 0.0)
        frags = num.shifted((width - num.width) / 2, num_y)
        frags.append(rule)
        frags += den.shifted((width - den.width) / 2, den_y)
        return _Box(frags, width, num_y + num.ascent, max(0.0, -den_y + den.descent))


def fragment(s: str, size: float, metrics: Optional[GlyphMetrics] = None) -> FragmentedString:
    """Split ``s`` into positioned glyph fragments.

    Spaces in text runs advance the cursor without producing a fragment.
    Offsets are relative to the anchor at the start of the baseline. With
    metrics that are not ready yet the positions are provisional, but the
    number and order of fragments are already final.
    """
    if not size > 0:
        raise NonPositiveSizeError(f"text size must be > 0, got {size!r}")
    metrics = metrics if metrics is not None else TableMetrics()
    lay = _Layout(metrics)
    boxes = []
    for node in parse_nyka(s):
        if isinstance(node, TextRun):
            boxes.append(lay.text(node.text, size))
        else:
            boxes.append(lay.math(node, size, 0, False))
    line = lay.hlist(boxes)
    return FragmentedString(tuple(line.frags), s, float(size), metrics.ready)


def fragment_length(fs: FragmentedString) -> int:
    return len(fs.fragments)


def typing_states(fs: FragmentedString, t: float, mode: str = "up") -> list[GlyphState]:
    """Per-glyph visibility and displacement at typing progress ``t``.

    Glyph ``i`` of ``N`` animates while ``t * N`` passes from ``i - 1`` to
    ``i``, so exactly one glyph is in motion at a time.
    """
    if mode not in TYPING_MODES:
        raise UnknownModeError(f"unknown typing mode {mode!r}; expected one of {TYPING_MODES}")
    n = len(fs.fragments)
    states = []
    for i in range(n):
        local = min(max(t * n - i, 0.0), 1.0)
        if mode == "up":
            rise = -RISE_DISTANCE * fs.size * (1 - ease("easeOutCubic", local))
            states.append(GlyphState(local, (0.0, rise)))
        elif mode == "fade":
            states.append(GlyphState(local, (0.0, 0.0)))
        else:
            states.append(GlyphState(1.0 if local > 0 else 0.0, (0.0, 0.0)))
    return states
