"""Track-based programmatic animation with deterministic PNG frame export."""
from .easing import ease, list_easings
from .geometry import Stroke, arrowhead, sample_bezier_curve, stroke_index
from .interp import lerp
from .timeline import Timeline, Track, progress_vector, timeline_from_track_data, total_duration, track_start

__version__ = "0.1.0"

__all__ = [
    "Stroke",
    "Timeline",
    "Track",
    "arrowhead",
    "ease",
    "lerp",
    "list_easings",
    "progress_vector",
    "sample_bezier_curve",
    "stroke_index",
    "timeline_from_track_data",
    "total_duration",
    "track_start",
]
