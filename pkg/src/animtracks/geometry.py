"""Bezier sampling, progressive stroke indexing and arrowheads."""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .errors import ValidationError

__all__ = [
    "ARROW_BARB_FACTOR",
    "ARROW_HALF_ANGLE",
    "CoincidentPointsError",
    "ResolutionTooSmallError",
    "Stroke",
    "TooFewControlsError",
    "arrowhead",
    "de_casteljau",
    "round_half_away",
    "sample_bezier_curve",
    "stroke_index",
]

# Barb length in logical units per unit of ``arrowsize``.
ARROW_BARB_FACTOR = 0.35
ARROW_HALF_ANGLE = math.radians(30.0)


class ResolutionTooSmallError(ValidationError):
    pass


class TooFewControlsError(ValidationError):
    pass


class CoincidentPointsError(ValidationError):
    pass


class Stroke:
    """Immutable polyline of ``resolution`` sampled curve points.

    Indexing follows Python conventions; :meth:`prefix` takes the 1-based
    stroke index used by the progressive-draw idiom.
    """

    __slots__ = ("_points",)

    def __init__(self, points):
        pts = np.array(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise ValueError("a stroke needs at least two 2D points")
        pts.setflags(write=False)
        self._points = pts

    @property
    def points(self) -> np.ndarray:
        return self._points

    def __len__(self):
        return len(self._points)

    def __getitem__(self, i):
        return self._points[i]

    def __iter__(self):
        return iter(self._points)

    def __eq__(self, other):
        return isinstance(other, Stroke) and np.array_equal(self._points, other._points)

    def __repr__(self):
        return f"Stroke(<{len(self)} points>)"

    def prefix(self, index: int) -> np.ndarray:
        """Points 1..index (1-based, inclusive)."""
        return self._points[: max(0, int(index))]

    def tolist(self) -> list[list[float]]:
        return self._points.tolist()


def de_casteljau(controls: Sequence[Sequence[float]], u) -> np.ndarray:
    """Evaluate the Bezier curve of ``controls`` at parameter(s) ``u``.

    ``u`` may be a scalar or a 1-D array; the result has shape ``(..., 2)``
    (or the control-point dimension).
    """
    ctrl = np.asarray(controls, dtype=float)
    u = np.asarray(u, dtype=float)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)[:, None]
    b = np.broadcast_to(ctrl[:, None, :], (len(ctrl), len(u), ctrl.shape[1])).copy()
    for r in range(1, len(ctrl)):
        b[: len(ctrl) - r] = (1 - u) * b[: len(ctrl) - r] + u * b[1 : len(ctrl) - r + 1]
    return b[0, 0] if scalar else b[0]


def sample_bezier_curve(controls: Sequence[Sequence[float]], resolution: int) -> Stroke:
    """Sample ``resolution`` points uniformly in the curve parameter.

    Point ``k`` (1-based) sits at ``u = (k - 1) / (resolution - 1)``, so the
    first and last samples are exactly the first and last control points.
    """
    if len(controls) < 2:
        raise TooFewControlsError(f"need at least 2 control points, got {len(controls)}")
    if int(resolution) != resolution or resolution < 2:
        raise ResolutionTooSmallError(f"resolution must be an integer >= 2, got {resolution!r}")
    resolution = int(resolution)
    u = np.arange(resolution, dtype=float) / (resolution - 1)
    return Stroke(de_casteljau(controls, u))


def round_half_away(x: float) -> int:
    """Round to nearest integer, ties away from zero."""
    r = math.floor(abs(x))
    if abs(x) - r >= 0.5:
        r += 1
    return int(math.copysign(r, x))


def stroke_index(resolution: int, eased_t: float) -> int:
    """1-based count of stroke points to draw at eased progress ``eased_t``."""
    eased_t = min(max(eased_t, 0.0), 1.0)
    return round_half_away(eased_t * resolution + (1 - eased_t) * 1)


def arrowhead(p_prev, p_tip, arrowsize: float):
    """Triangle (apex, left barb, right barb) for an arrow ending at ``p_tip``."""
    px, py = float(p_prev[0]), float(p_prev[1])
    tx, ty = float(p_tip[0]), float(p_tip[1])
    dx, dy = tx - px, ty - py
    norm = math.hypot(dx, dy)
    if norm == 0:
        raise CoincidentPointsError(f"arrow direction undefined: both points are {p_tip!r}")
    dx, dy = dx / norm, dy / norm
    length = ARROW_BARB_FACTOR * max(arrowsize, 0.0)
    back = length * math.cos(ARROW_HALF_ANGLE)
    side = length * math.sin(ARROW_HALF_ANGLE)
    bx, by = tx - back * dx, ty - back * dy
    return (
        (tx, ty),
        (bx - side * dy, by + side * dx),
        (bx + side * dy, by - side * dx),
    )
