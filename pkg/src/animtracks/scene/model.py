"""Scenes: a timeline plus setup, calculation and rendering phases.

A frame is a pure function of time. Every evaluation starts from the state
produced by ``setup``/``delayed_setup``, applies ``calculation`` for the
current progress values and draws ``rendering`` into a fresh framebuffer.
That is what makes out-of-order and parallel frame export safe.
"""
from __future__ import annotations

import copy
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..render import Canvas, FrameBuffer, Viewport, draw_debug_overlay
from ..render.raster import DEFAULT_HEIGHT, DEFAULT_VIEWPORT, DEFAULT_WIDTH
from ..timeline import Timeline, progress_vector
from ..typeset import FragmentedString, TableMetrics, fragment
from ..typeset.metrics import GlyphMetrics

__all__ = ["RenderConfig", "Scene", "SceneContext", "evaluate_frame"]

State = dict
Hook = Callable[..., None]


@dataclass(frozen=True)
class RenderConfig:
    fps: float = 60
    width: int = DEFAULT_WIDTH
    height: int = DEFAULT_HEIGHT
    out_dir: Optional[str] = None
    frame_prefix: str = "frame_"
    show_debug_info: bool = True
    frame_range: Optional[tuple[int, int]] = None
    jobs: Optional[int] = None

    def __post_init__(self):
        if not self.fps > 0:
            raise ValueError(f"fps must be > 0, got {self.fps!r}")
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"frame size must be positive, got {self.width}x{self.height}")


@dataclass
class SceneContext:
    """What setup hooks can see: viewport, canvas centre and glyph metrics."""

    viewport: Viewport
    metrics: GlyphMetrics

    @property
    def canvas_center(self) -> tuple[float, float]:
        return self.viewport.canvas_center

    def fragment(self, s: str, size: float) -> FragmentedString:
        return fragment(s, size, self.metrics)


def _noop(*args):
    return None


@dataclass
class Scene:
    """An animation: timeline, phase hooks and the logical viewport.

    Hook signatures::

        setup(state, ctx)              # once, metrics may not be ready
        delayed_setup(state, ctx)      # once, after metrics are ready
        calculation(state, t, ctx)     # every frame; t = progress values
        rendering(canvas, state, t)    # every frame, after calculation
    """

    name: str
    timeline: Timeline
    setup: Hook = _noop
    delayed_setup: Hook = _noop
    calculation: Hook = _noop
    rendering: Hook = _noop
    viewport: Viewport = DEFAULT_VIEWPORT
    metrics_factory: Callable[[], Any] = field(default=lambda: TableMetrics(ready=False), repr=False)
    warnings: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        self._prepared: Optional[State] = None
        self._ctx: Optional[SceneContext] = None
        self._lock = threading.Lock()

    def prepare(self) -> State:
        """Run setup, make metrics ready, run delayed setup; cached."""
        with self._lock:
            if self._prepared is None:
                metrics = self.metrics_factory()
                ctx = SceneContext(self.viewport, metrics)
                state: State = {}
                self.setup(state, ctx)
                if not metrics.ready:
                    metrics.mark_ready()
                self.delayed_setup(state, ctx)
                self._ctx = ctx
                self._prepared = state
            return self._prepared

    def state_at(self, now: float) -> State:
        """Scene state after the calculation phase at time ``now``."""
        base = self.prepare()
        state = copy.deepcopy(base)
        t = progress_vector(self.timeline, now)
        self.calculation(state, t, self._ctx)
        return state

    def evaluate_frame(self, now: float, cfg: Optional[RenderConfig] = None) -> FrameBuffer:
        cfg = cfg or RenderConfig()
        base = self.prepare()
        t = progress_vector(self.timeline, now)
        state = copy.deepcopy(base)
        self.calculation(state, t, self._ctx)
        fb = FrameBuffer(cfg.width, cfg.height)
        canvas = Canvas(fb, self.viewport.fitted(cfg.width, cfg.height))
        self.rendering(canvas, state, t)
        if cfg.show_debug_info:
            draw_debug_overlay(fb, self.timeline, now)
        return fb


def evaluate_frame(scene: Scene, now: float, cfg: Optional[RenderConfig] = None) -> FrameBuffer:
    return scene.evaluate_frame(now, cfg)
