"""Fixed-step frame export to numbered PNG files."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Optional

from ..errors import AnimationError, ValidationError
from ..render import write_png
from .model import RenderConfig, Scene

__all__ = ["InvalidFrameRangeError", "FrameWriteError", "frame_count", "frame_path", "frame_times", "render_animation"]

# Guards ceil() against products like 390.00000000000006.
_FRAME_EPS = 1e-9


class InvalidFrameRangeError(ValidationError):
    pass


class FrameWriteError(AnimationError, OSError):
    def __init__(self, path, cause):
        super().__init__(f"cannot write {path}: {cause}")
        self.path = path


def frame_count(total: float, fps: float) -> int:
    return max(0, math.ceil(total * fps - _FRAME_EPS))


def frame_times(scene: Scene, fps: float) -> list[float]:
    return [k / fps for k in range(frame_count(scene.timeline.total, fps))]


def frame_path(cfg: RenderConfig, k: int) -> str:
    return os.path.join(cfg.out_dir or ".", f"{cfg.frame_prefix}{k:05d}.png")


def _frame_indices(n: int, frame_range) -> range:
    if frame_range is None:
        return range(n)
    first, last = frame_range
    if not (0 <= first <= last < n):
        raise InvalidFrameRangeError(f"frame range {first}..{last} outside 0..{n - 1}")
    return range(first, last + 1)


def render_animation(scene: Scene, cfg: RenderConfig, order: Optional[Iterable[int]] = None) -> list[str]:
    """Render frames ``k = 0 .. ceil(total * fps) - 1`` at times ``k / fps``.

    Returns the written paths in frame order. ``order`` optionally permutes
    the evaluation sequence; output does not depend on it, nor on
    ``cfg.jobs``.
    """
    n = frame_count(scene.timeline.total, cfg.fps)
    indices = list(_frame_indices(n, cfg.frame_range))
    out_dir = cfg.out_dir or "."
    try:
        os.makedirs(out_dir, exist_ok=True)
    except OSError as exc:
        raise FrameWriteError(out_dir, exc) from exc
    scene.prepare()

    def work(k: int) -> str:
        path = frame_path(cfg, k)
        fb = scene.evaluate_frame(k / cfg.fps, cfg)
        try:
            write_png(fb, path)
        except OSError as exc:
            raise FrameWriteError(path, exc) from exc
        return path

    schedule = indices if order is None else list(order)
    if sorted(schedule) != indices:
        raise InvalidFrameRangeError("evaluation order must be a permutation of the frames to render")
    jobs = cfg.jobs or os.cpu_count() or 1
    if jobs <= 1:
        for k in schedule:
            work(k)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            list(pool.map(work, schedule))
    return [frame_path(cfg, k) for k in indices]
