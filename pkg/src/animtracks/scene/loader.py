"""Declarative scene files.

A scene file is a YAML document::

    startDelay: 0.5
    tracks:
      - {duration: 1, pause: 0.5, label: create circle}
    viewport: {xMin: -16, xMax: 16, yMin: 0, yMax: 18}   # optional
    objects:
      - {id: disc, type: circle, center: [0, 9], radius: 0, color: [0.8, 0.2, 0.3]}
    bindings:
      - {target: disc.radius, to: 3, track: 1, easing: easeOutBack}

Bindings run in file order with ``value = lerp(value, to, ease(easing, t))``
and objects are painted in file order. Unknown keys are errors.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Real
from typing import Any, Optional

import yaml

from ..easing import EASINGS, ease
from ..errors import ValidationError
from ..geometry import sample_bezier_curve, stroke_index
from ..interp import ShapeMismatchError, check_compatible, lerp
from ..render import Style, Viewport
from ..render.raster import DEFAULT_VIEWPORT
from ..timeline import TimelineError, Track, Timeline
from ..typeset import NykaSyntaxError, TYPING_MODES, TableMetrics, fragment, fragment_length
from .model import Scene

__all__ = [
    "OBJECT_TYPES",
    "BindingShapeError",
    "SceneFileError",
    "SceneParseError",
    "SchemaError",
    "TrackOutOfRangeError",
    "UnknownEasingNameError",
    "UnknownObjectTypeError",
    "UnknownPropertyError",
    "load_scene_description",
    "load_scene_file",
    "validate_scene_text",
]


class SceneFileError(ValidationError):
    """Problem in a scene file, located by 1-based line and column."""

    def __init__(self, message: str, line: Optional[int] = None, col: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}, col {self.col}: {self.message}"


class SceneParseError(SceneFileError):
    pass


class SchemaError(SceneFileError):
    pass


class UnknownEasingNameError(SceneFileError):
    pass


class TrackOutOfRangeError(SceneFileError):
    pass


class BindingShapeError(SceneFileError):
    pass


class UnknownObjectTypeError(SceneFileError):
    pass


class UnknownPropertyError(SceneFileError):
    pass


# Field spec: kind, default (``REQUIRED`` if mandatory), animatable.
REQUIRED = object()
_STYLE_FIELDS = {
    "color": ("color", [0, 0, 0], True),
    "alpha": ("number", 1, True),
}
OBJECT_TYPES: dict[str, dict[str, tuple]] = {
    "segment": {
        "from": ("point", REQUIRED, True),
        "to": ("point", REQUIRED, True),
        "size": ("number", 1, True),
        "arrow": ("bool", False, False),
        "arrowsize": ("number", 1, True),
        **_STYLE_FIELDS,
    },
    "circle": {
        "center": ("point", REQUIRED, True),
        "radius": ("number", REQUIRED, True),
        **_STYLE_FIELDS,
    },
    "bezier_stroke": {
        "controls": ("points", REQUIRED, False),
        "resolution": ("int", 256, False),
        "progress": ("number", 1, True),
        "size": ("number", 1, True),
        "arrow": ("bool", False, False),
        "arrowsize": ("number", 1, True),
        **_STYLE_FIELDS,
    },
    "text": {
        "position": ("point", REQUIRED, True),
        "text": ("string", REQUIRED, False),
        "size": ("number", 30, False),
        "mode": ("mode", "up", False),
        "progress": ("number", 1, True),
        **_STYLE_FIELDS,
    },
}
_TOP_KEYS = {"name", "startDelay", "tracks", "viewport", "objects", "bindings"}
_TRACK_KEYS = {"duration", "pause", "label"}
_BINDING_KEYS = {"target", "to", "track", "easing"}
_VIEWPORT_KEYS = ("xMin", "xMax", "yMin", "yMax")


def _compose(text: str):
    """Parse YAML, returning (data, marks) where marks maps key paths to (line, col)."""
    loader = yaml.SafeLoader(text)
    try:
        node = loader.get_single_node()
        data = loader.construct_document(node) if node is not None else None
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        problem = exc.problem or "malformed document"
        line, col = (mark.line + 1, mark.column + 1) if mark else (None, None)
        raise SceneParseError(problem, line, col) from None
    except yaml.YAMLError as exc:
        raise SceneParseError(str(exc)) from None
    finally:
        loader.dispose()
    marks: dict[tuple, tuple[int, int]] = {}

    def walk(n, path):
        marks[path] = (n.start_mark.line + 1, n.start_mark.column + 1)
        if isinstance(n, yaml.MappingNode):
            for k, v in n.value:
                key = k.value
                marks[path + (key, "<key>")] = (k.start_mark.line + 1, k.start_mark.column + 1)
                walk(v, path + (key,))
        elif isinstance(n, yaml.SequenceNode):
            for i, v in enumerate(n.value):
                walk(v, path + (i,))

    if node is not None:
        walk(node, ())
    return data, marks


def _is_number(v) -> bool:
    return isinstance(v, Real) and not isinstance(v, bool) and math.isfinite(v)


@dataclass
class _Binding:
    obj: str
    prop: str
    to: Any
    track: int
    easing: str
    path: tuple = ()


@dataclass
class _Compiler:
    data: Any
    marks: dict
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def where(self, path) -> tuple:
        while path and path not in self.marks:
            path = path[:-1]
        return self.marks.get(path, (None, None))

    def error(self, cls, message, path=()):
        line, col = self.where(tuple(path))
        self.errors.append(cls(message, line, col))

    def check_keys(self, mapping, allowed, path, what):
        for key in mapping:
            if key not in allowed:
                self.error(SchemaError, f"unknown key {key!r} in {what}", tuple(path) + (key, "<key>"))

    def field_value(self, kind, value, path, name):
        bad = None
        if kind == "number" and not _is_number(value):
            bad = "a number"
        elif kind == "int" and not (isinstance(value, int) and not isinstance(value, bool)):
            bad = "an integer"
        elif kind == "bool" and not isinstance(value, bool):
            bad = "true or false"
        elif kind == "string" and not isinstance(value, str):
            bad = "a string"
        elif kind == "point" and not (isinstance(value, list) and len(value) == 2 and all(map(_is_number, value))):
            bad = "a point [x, y]"
        elif kind == "color" and not (isinstance(value, list) and len(value) == 3 and all(map(_is_number, value))):
            bad = "a colour [r, g, b]"
        elif kind == "points" and not (
            isinstance(value, list) and len(value) >= 2
            and all(isinstance(p, list) and len(p) == 2 and all(map(_is_number, p)) for p in value)
        ):
            bad = "a list of at least two points"
        elif kind == "mode" and value not in TYPING_MODES:
            bad = f"one of {', '.join(TYPING_MODES)}"
        if bad:
            self.error(SchemaError, f"{name} must be {bad}, got {value!r}", path)
            return False
        return True

    def compile(self) -> Optional[Scene]:
        data = self.data
        if not isinstance(data, dict):
            self.error(SchemaError, "a scene file must be a mapping of top-level keys")
            return None
        self.check_keys(data, _TOP_KEYS, (), "scene")
        for key in ("tracks", "objects"):
            if key not in data:
                self.error(SchemaError, f"missing required key {key!r}")

        viewport = self.viewport(data.get("viewport"))
        objects = self.objects(data.get("objects", []))
        start_delay = data.get("startDelay", 0)
        if not _is_number(start_delay) or start_delay < 0:
            self.error(SchemaError, f"startDelay must be a number >= 0, got {start_delay!r}", ("startDelay",))
            start_delay = 0
        tracks = self.tracks(data.get("tracks", []), objects)
        bindings = self.bindings(data.get("bindings", []) or [], objects, len(tracks))
        if self.errors or not tracks:
            return None
        try:
            timeline = Timeline(float(start_delay), tuple(tracks))
        except TimelineError as exc:
            self.error(SchemaError, str(exc), ("tracks",))
            return None
        name = data.get("name", "scene")
        return _build_scene(str(name), timeline, viewport, objects, bindings, self.warnings)

    def viewport(self, raw) -> Viewport:
        if raw is None:
            return DEFAULT_VIEWPORT
        path = ("viewport",)
        if not isinstance(raw, dict):
            self.error(SchemaError, "viewport must be a mapping", path)
            return DEFAULT_VIEWPORT
        self.check_keys(raw, _VIEWPORT_KEYS, path, "viewport")
        vals = []
        for key in _VIEWPORT_KEYS:
            v = raw.get(key)
            if not _is_number(v):
                self.error(SchemaError, f"viewport.{key} must be a number", path + ((key,) if key in raw else ()))
                return DEFAULT_VIEWPORT
            vals.append(float(v))
        try:
            return Viewport(*vals)
        except ValueError:
            self.error(SchemaError, "viewport needs xMax > xMin and yMax > yMin", path)
            return DEFAULT_VIEWPORT

    def objects(self, raw) -> dict:
        out: dict[str, dict] = {}
        if not isinstance(raw, list):
            self.error(SchemaError, "objects must be a list", ("objects",))
            return out
        for i, obj in enumerate(raw):
            path = ("objects", i)
            if not isinstance(obj, dict):
                self.error(SchemaError, "each object must be a mapping", path)
                continue
            oid, otype = obj.get("id"), obj.get("type")
            if not isinstance(oid, str) or not oid:
                self.error(SchemaError, "object needs a string id", path)
                continue
            if oid in out:
                self.error(SchemaError, f"duplicate object id {oid!r}", path + ("id",))
                continue
            if otype not in OBJECT_TYPES:
                self.error(UnknownObjectTypeError,
                           f"unknown object type {otype!r}; expected one of {', '.join(OBJECT_TYPES)}",
                           path + ("type",))
                continue
            spec = OBJECT_TYPES[otype]
            props = {}
            ok = True
            for key, value in obj.items():
                if key in ("id", "type"):
                    continue
                if key not in spec:
                    self.error(UnknownPropertyError, f"{otype} has no property {key!r}", path + (key, "<key>"))
                    ok = False
                    continue
                if self.field_value(spec[key][0], value, path + (key,), f"{oid}.{key}"):
                    props[key] = value
                else:
                    ok = False
            for key, (kind, default, _) in spec.items():
                if key not in obj:
                    if default is REQUIRED:
                        self.error(SchemaError, f"{otype} {oid!r} is missing {key!r}", path)
                        ok = False
                    else:
                        props[key] = default
            if ok and otype == "bezier_stroke" and props["resolution"] < 2:
                self.error(SchemaError, "resolution must be >= 2", path + ("resolution",))
                ok = False
            if ok and otype == "text":
                if not props["size"] > 0:
                    self.error(SchemaError, "text size must be > 0", path + ("size",))
                    ok = False
                else:
                    try:
                        fragment(props["text"], props["size"], TableMetrics(ready=False))
                    except NykaSyntaxError as exc:
                        self.error(SchemaError, f"bad text markup: {exc}", path + ("text",))
                        ok = False
            if ok:
                out[oid] = {"type": otype, "props": props, "index": i}
        return out

    def tracks(self, raw, objects) -> list:
        out = []
        if not isinstance(raw, list) or not raw:
            self.error(SchemaError, "tracks must be a non-empty list", ("tracks",))
            return out
        for i, tr in enumerate(raw):
            path = ("tracks", i)
            if not isinstance(tr, dict):
                self.error(SchemaError, "each track must be a mapping", path)
                continue
            self.check_keys(tr, _TRACK_KEYS, path, "track")
            duration = self.duration(tr.get("duration"), path + ("duration",), objects)
            pause = tr.get("pause")
            if not _is_number(pause) or pause < 0:
                self.error(SchemaError, f"pause must be a number >= 0, got {pause!r}", path + ("pause",) if "pause" in tr else path)
                continue
            if duration is None:
                continue
            label = tr.get("label")
            out.append(Track(duration, float(pause), None if label is None else str(label)))
        return out

    def duration(self, raw, path, objects) -> Optional[float]:
        # Either seconds, or {typing: <text id>, speed: <glyphs per second>}.
        if isinstance(raw, dict):
            self.check_keys(raw, {"typing", "speed"}, path, "typing duration")
            oid, speed = raw.get("typing"), raw.get("speed")
            if oid not in objects or objects[oid]["type"] != "text":
                self.error(SchemaError, f"typing duration refers to unknown text object {oid!r}", path)
                return None
            if not _is_number(speed) or speed <= 0:
                self.error(SchemaError, "typing speed must be a number > 0", path)
                return None
            props = objects[oid]["props"]
            early = fragment(props["text"], props["size"], TableMetrics(ready=False))
            n = fragment_length(early)
            if n == 0:
                self.error(SchemaError, f"text object {oid!r} has no glyphs to type", path)
                return None
            return n / speed
        if not _is_number(raw) or raw <= 0:
            self.error(SchemaError, f"duration must be a number > 0, got {raw!r}", path)
            return None
        return float(raw)

    def bindings(self, raw, objects, n_tracks) -> list:
        out = []
        if not isinstance(raw, list):
            self.error(SchemaError, "bindings must be a list", ("bindings",))
            return out
        seen = {}
        for i, b in enumerate(raw):
            path = ("bindings", i)
            if not isinstance(b, dict):
                self.error(SchemaError, "each binding must be a mapping", path)
                continue
            self.check_keys(b, _BINDING_KEYS, path, "binding")
            target, track, easing = b.get("target"), b.get("track"), b.get("easing", "linear")
            if "to" not in b:
                self.error(SchemaError, "binding is missing 'to'", path)
                continue
            to = b["to"]
            if not isinstance(target, str) or target.count(".") != 1:
                self.error(SchemaError, f"target must look like 'id.property', got {target!r}", path + ("target",))
                continue
            oid, prop = target.split(".")
            if oid not in objects:
                self.error(SchemaError, f"binding targets unknown object {oid!r}", path + ("target",))
                continue
            otype = objects[oid]["type"]
            spec = OBJECT_TYPES[otype]
            if prop not in spec or not spec[prop][2]:
                self.error(UnknownPropertyError, f"{otype} {oid!r} has no animatable property {prop!r}",
                           path + ("target",))
                continue
            if not isinstance(track, int) or isinstance(track, bool) or not 1 <= track <= n_tracks:
                self.error(TrackOutOfRangeError, f"track {track!r} outside 1..{n_tracks}", path + ("track",))
                continue
            if easing not in EASINGS:
                self.error(UnknownEasingNameError, f"unknown easing {easing!r}",
                           path + (("easing",) if "easing" in b else ()))
                continue
            try:
                check_compatible(objects[oid]["props"][prop], to)
                if not all(map(_is_number, _leaves(to))):
                    raise ShapeMismatchError("non-numeric value")
            except ShapeMismatchError as exc:
                self.error(BindingShapeError, f"binding {i + 1} ({target}): {exc}", path + ("to",))
                continue
            key = (target, track)
            if key in seen:
                line, col = self.where(path)
                self.warnings.append(
                    f"line {line}, col {col}: {target} is bound twice on track {track} "
                    f"(also binding {seen[key] + 1}); both apply in order"
                )
            seen[key] = i
            out.append(_Binding(oid, prop, to, track, easing, path))
        return out


def _leaves(v):
    if isinstance(v, list):
        for c in v:
            yield from _leaves(c)
    else:
        yield v


def _build_scene(name, timeline, viewport, objects, bindings, warnings) -> Scene:
    order = sorted(objects, key=lambda oid: objects[oid]["index"])

    def setup(state, ctx):
        for oid in order:
            obj = objects[oid]
            props = dict(obj["props"])
            if obj["type"] == "bezier_stroke":
                props["stroke"] = sample_bezier_curve(props["controls"], props["resolution"])
            elif obj["type"] == "text":
                props["fragments"] = ctx.fragment(props["text"], props["size"])
            state[oid] = props

    def delayed_setup(state, ctx):
        for oid in order:
            if objects[oid]["type"] == "text":
                props = state[oid]
                props["fragments"] = ctx.fragment(props["text"], props["size"])

    def calculation(state, t, ctx):
        for b in bindings:
            props = state[b.obj]
            props[b.prop] = lerp(props[b.prop], b.to, ease(b.easing, t[b.track - 1]))

    def rendering(canvas, state, t):
        for oid in order:
            _draw_object(canvas, objects[oid]["type"], state[oid])

    return Scene(name, timeline, setup=setup, delayed_setup=delayed_setup,
                 calculation=calculation, rendering=rendering, viewport=viewport,
                 warnings=list(warnings))


def _draw_object(canvas, otype, p) -> None:
    if otype == "segment":
        canvas.draw(p["from"], p["to"], Style(size=p["size"], color=p["color"], alpha=p["alpha"],
                                              arrow=p["arrow"], arrowsize=p["arrowsize"]))
    elif otype == "circle":
        canvas.fillcircle(p["center"], p["radius"], Style(color=p["color"], alpha=p["alpha"]))
    elif otype == "bezier_stroke":
        stroke = p["stroke"]
        k = stroke_index(len(stroke), p["progress"])
        canvas.connect(stroke.prefix(k), Style(size=p["size"], color=p["color"], alpha=p["alpha"]))
        if p["arrow"] and k >= 2:
            canvas.draw(stroke[k - 2], stroke[k - 1],
                        Style(size=p["size"], color=p["color"], alpha=p["alpha"],
                              arrow=True, arrowsize=p["arrowsize"]))
    elif otype == "text":
        canvas.draw_fragments(p["position"], p["fragments"], p["progress"], p["mode"],
                              Style(color=p["color"], alpha=p["alpha"]))


def validate_scene_text(text: str) -> tuple[list, list, Optional[Scene]]:
    """Check a scene document; returns ``(errors, warnings, scene_or_None)``."""
    try:
        data, marks = _compose(text)
    except SceneParseError as exc:
        return [exc], [], None
    comp = _Compiler(data, marks)
    scene = comp.compile()
    return comp.errors, comp.warnings, scene


def load_scene_description(text: str) -> Scene:
    """Compile scene-file contents into a :class:`Scene`; raises the first error."""
    errors, _, scene = validate_scene_text(text)
    if errors:
        raise errors[0]
    return scene


def load_scene_file(path) -> Scene:
    with open(path, encoding="utf-8") as f:
        scene = load_scene_description(f.read())
    return scene
