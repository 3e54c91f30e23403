"""Scene model, built-in scenes, scene files and frame export."""
from .builtins import BUILTIN_SCENES, UnknownSceneError, builtin_scene
from .export import FrameWriteError, InvalidFrameRangeError, frame_count, frame_path, render_animation
from .loader import (
    BindingShapeError,
    SceneFileError,
    SceneParseError,
    SchemaError,
    TrackOutOfRangeError,
    UnknownEasingNameError,
    UnknownObjectTypeError,
    UnknownPropertyError,
    load_scene_description,
    load_scene_file,
    validate_scene_text,
)
from .model import RenderConfig, Scene, SceneContext, evaluate_frame

__all__ = [
    "BUILTIN_SCENES",
    "BindingShapeError",
    "FrameWriteError",
    "InvalidFrameRangeError",
    "RenderConfig",
    "Scene",
    "SceneContext",
    "SceneFileError",
    "SceneParseError",
    "SchemaError",
    "TrackOutOfRangeError",
    "UnknownEasingNameError",
    "UnknownObjectTypeError",
    "UnknownPropertyError",
    "UnknownSceneError",
    "builtin_scene",
    "evaluate_frame",
    "frame_count",
    "frame_path",
    "load_scene_description",
    "load_scene_file",
    "render_animation",
    "validate_scene_text",
]
