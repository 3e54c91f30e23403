"""Animation tracks and the progress values derived from them.

A timeline is a start delay followed by tracks. Each track has a duration
and a pause that follows it, so a flat ``[d1, p1, d2, p2, ...]`` list fully
describes the schedule.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ValidationError

__all__ = [
    "Track",
    "Timeline",
    "TimelineError",
    "OddLengthError",
    "EmptyTrackDataError",
    "NonPositiveDurationError",
    "NegativePauseError",
    "NegativeStartDelayError",
    "TrackIndexError",
    "timeline_from_track_data",
    "track_start",
    "total_duration",
    "progress_vector",
]


class TimelineError(ValidationError):
    pass


class OddLengthError(TimelineError):
    pass


class EmptyTrackDataError(TimelineError):
    pass


class NonPositiveDurationError(TimelineError):
    pass


class NegativePauseError(TimelineError):
    pass


class NegativeStartDelayError(TimelineError):
    pass


class TrackIndexError(TimelineError, IndexError):
    pass


@dataclass(frozen=True)
class Track:
    duration: float
    pause: float
    label: Optional[str] = None

    def __post_init__(self):
        if not self.duration > 0:
            raise NonPositiveDurationError(f"track duration must be > 0, got {self.duration!r}")
        if not self.pause >= 0:
            raise NegativePauseError(f"track pause must be >= 0, got {self.pause!r}")


@dataclass(frozen=True)
class Timeline:
    start_delay: float
    tracks: tuple[Track, ...]

    def __post_init__(self):
        if not self.start_delay >= 0:
            raise NegativeStartDelayError(f"startDelay must be >= 0, got {self.start_delay!r}")
        if not self.tracks:
            raise EmptyTrackDataError("a timeline needs at least one track")
        object.__setattr__(self, "tracks", tuple(self.tracks))
        # Left-to-right accumulation keeps every start bit-reproducible.
        starts = []
        clock = float(self.start_delay)
        for track in self.tracks:
            starts.append(clock)
            clock = clock + track.duration + track.pause
        object.__setattr__(self, "_starts", tuple(starts))
        object.__setattr__(self, "_total", clock)

    def __len__(self) -> int:
        return len(self.tracks)

    @property
    def starts(self) -> tuple[float, ...]:
        return self._starts

    @property
    def total(self) -> float:
        return self._total

    def start(self, i: int) -> float:
        return track_start(self, i)

    def progress(self, now: float) -> list[float]:
        return progress_vector(self, now)


def timeline_from_track_data(
    flat: Sequence[float],
    start_delay: float = 0.0,
    labels: Optional[Iterable[Optional[str]]] = None,
) -> Timeline:
    """Build a timeline from alternating duration/pause entries.

    >>> tl = timeline_from_track_data([1, 0.3, 2, 0.5], 0.3)
    >>> [(t.duration, t.pause) for t in tl.tracks]
    [(1.0, 0.3), (2.0, 0.5)]
    """
    flat = [float(v) for v in flat]
    if not flat:
        raise EmptyTrackDataError("trackData is empty")
    if len(flat) % 2:
        raise OddLengthError(
            f"trackData has odd length {len(flat)}; every track needs a pause after it"
        )
    labels = list(labels) if labels is not None else []
    tracks = []
    for k in range(len(flat) // 2):
        label = labels[k] if k < len(labels) else None
        tracks.append(Track(flat[2 * k], flat[2 * k + 1], label))
    return Timeline(float(start_delay), tuple(tracks))


def track_start(tl: Timeline, i: int) -> float:
    """Absolute start time of track ``i`` (1-based)."""
    if not 1 <= i <= len(tl.tracks):
        raise TrackIndexError(f"track index {i} outside 1..{len(tl.tracks)}")
    return tl.starts[i - 1]


def total_duration(tl: Timeline) -> float:
    return tl.total


def progress_vector(tl: Timeline, now: float) -> list[float]:
    out = []
    for start, track in zip(tl.starts, tl.tracks):
        if now <= start:
            out.append(0.0)
        elif now >= start + track.duration:
            out.append(1.0)
        else:
            out.append(min(max((now - start) / track.duration, 0.0), 1.0))
    return out
