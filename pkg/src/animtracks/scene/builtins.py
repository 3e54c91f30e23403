"""The four worked examples as ready-made scenes."""
from __future__ import annotations

from ..easing import ease
from ..errors import ValidationError
from ..geometry import sample_bezier_curve, stroke_index
from ..interp import lerp
from ..render import Style
from ..timeline import timeline_from_track_data
from ..typeset import TableMetrics, fragment, fragment_length
from .model import Scene

__all__ = ["BUILTIN_SCENES", "UnknownSceneError", "builtin_scene"]


class UnknownSceneError(ValidationError, KeyError):
    def __str__(self):
        return f"unknown scene {self.args[0]!r}; available: {', '.join(BUILTIN_SCENES)}"


# -- line ------------------------------------------------------------------

def _line_setup(state, ctx):
    state["a"] = [-3, 7]
    state["b"] = [5, 10]


def _line_calculation(state, t, ctx):
    state["endPoint"] = lerp(state["a"], state["b"], ease("easeInOutCubic", t[0]))


def _line_rendering(canvas, state, t):
    canvas.draw(state["a"], state["endPoint"], Style(size=10 * ease("easeOutCirc", t[0])))


def line_scene() -> Scene:
    return Scene(
        "line",
        timeline_from_track_data([2, 0.5], 0.5),
        setup=_line_setup,
        calculation=_line_calculation,
        rendering=_line_rendering,
    )


# -- circle ----------------------------------------------------------------

def _circle_setup(state, ctx):
    state["canvasCenter"] = ctx.canvas_center


def _circle_calculation(state, t, ctx):
    cc = state["canvasCenter"]
    # Re-initialise every frame, then chain the per-track lerps.
    radius = 0
    center = cc
    color = (0.8, 0.2, 0.3)

    radius = lerp(radius, 3, ease("easeOutBack", t[0]))

    center = lerp(center, (cc[0] + 10, cc[1] + 0), ease("easeInOutCubic", t[1]))

    color = lerp(color, (0.3, 0.2, 0.8), t[2])

    radius = lerp(radius, 1, ease("easeInOutBack", t[3]))
    center = lerp(center, cc, ease("easeInOutCubic", t[3]))
    color = lerp(color, (0.3, 0.8, 0.2), t[3])

    state["circleRadius"] = radius
    state["circleCenter"] = center
    state["circleColor"] = color


def _circle_rendering(canvas, state, t):
    canvas.fillcircle(state["circleCenter"], state["circleRadius"], Style(color=state["circleColor"]))


def circle_scene() -> Scene:
    labels = ["create circle", "move circle", "recolor circle", "move, scale and recolor circle"]
    return Scene(
        "circle",
        timeline_from_track_data([1, 0.5, 1, 0.5, 1, 0.5, 1, 0.5], 0.5, labels),
        setup=_circle_setup,
        calculation=_circle_calculation,
        rendering=_circle_rendering,
    )


# -- curved arrow ----------------------------------------------------------

ARROW_CONTROLS = [(8, 12), (0, 15), (10, 4), (-2, 4)]
ARROW_RESOLUTION = 256


def _arrow_setup(state, ctx):
    state["resolution"] = ARROW_RESOLUTION
    state["stroke"] = sample_bezier_curve(ARROW_CONTROLS, ARROW_RESOLUTION)


def _arrow_calculation(state, t, ctx):
    state["strokeIndex"] = stroke_index(state["resolution"], ease("easeInOutCubic", t[0]))


def _arrow_rendering(canvas, state, t):
    stroke, k = state["stroke"], state["strokeIndex"]
    size = 5 * ease("easeOutCirc", t[0])
    canvas.connect(stroke.prefix(k), Style(size=size))
    if k >= 2:
        canvas.draw(stroke[k - 2], stroke[k - 1], Style(size=size, arrow=True, arrowsize=2 * t[0]))


def curved_arrow_scene() -> Scene:
    return Scene(
        "curved_arrow",
        timeline_from_track_data([1.5, 0.5], 0.5),
        setup=_arrow_setup,
        calculation=_arrow_calculation,
        rendering=_arrow_rendering,
    )


# -- text ------------------------------------------------------------------

TEXT_STRING = r"This is $\displaystyle \sum[i=0][\infty]q^i = \frac{1}{1-q}$ plus text."
TEXT_SIZE = 30
TYPING_SPEED = 10
TEXT_ANCHOR = [-5, 12]
TEXT_COLOR = (0.8, 0.2, 0.3)


def _text_setup(state, ctx):
    state["fragmentedString"] = ctx.fragment(TEXT_STRING, TEXT_SIZE)


def _text_delayed_setup(state, ctx):
    state["fragmentedString"] = ctx.fragment(TEXT_STRING, TEXT_SIZE)


def _text_rendering(canvas, state, t):
    canvas.draw_fragments(TEXT_ANCHOR, state["fragmentedString"], t[0], "up", Style(color=TEXT_COLOR))


def text_scene() -> Scene:
    # Glyph count is final even before metrics are ready, so the track
    # duration can be computed up front.
    early = fragment(TEXT_STRING, TEXT_SIZE, TableMetrics(ready=False))
    return Scene(
        "text",
        timeline_from_track_data([fragment_length(early) / TYPING_SPEED, 0.3], 0.5),
        setup=_text_setup,
        delayed_setup=_text_delayed_setup,
        rendering=_text_rendering,
    )


BUILTIN_SCENES = {
    "line": line_scene,
    "circle": circle_scene,
    "curved_arrow": curved_arrow_scene,
    "text": text_scene,
}


def builtin_scene(name: str) -> Scene:
    try:
        factory = BUILTIN_SCENES[name]
    except KeyError:
        raise UnknownSceneError(name) from None
    return factory()
