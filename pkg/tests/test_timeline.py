import math

import pytest
from hypothesis import given, strategies as st

from animtracks.timeline import (
    EmptyTrackDataError,
    NegativePauseError,
    NegativeStartDelayError,
    NonPositiveDurationError,
    OddLengthError,
    TrackIndexError,
    progress_vector,
    timeline_from_track_data,
    total_duration,
    track_start,
)

BOILERPLATE = ([1, 0.3, 2, 0.5], 0.3)
CIRCLE = ([1, 0.5] * 4, 0.5)


@pytest.fixture
def boiler():
    return timeline_from_track_data(*BOILERPLATE)


def test_boilerplate_tracks(boiler):
    assert [(t.duration, t.pause) for t in boiler.tracks] == [(1, 0.3), (2, 0.5)]


def test_circle_tracks():
    tl = timeline_from_track_data(*CIRCLE)
    assert len(tl) == 4
    assert all((t.duration, t.pause) == (1, 0.5) for t in tl.tracks)


@pytest.mark.parametrize(
    "flat, delay, exc",
    [
        ([1, 0.3, 2], 0, OddLengthError),
        ([], 0, EmptyTrackDataError),
        ([0, 0.3], 0, NonPositiveDurationError),
        ([-1, 0.3], 0, NonPositiveDurationError),
        ([1, -0.1], 0, NegativePauseError),
        ([1, 0.3], -0.5, NegativeStartDelayError),
    ],
)
def test_malformed_track_data(flat, delay, exc):
    with pytest.raises(exc):
        timeline_from_track_data(flat, delay)


def test_zero_pause_allowed():
    tl = timeline_from_track_data([1, 0], 0)
    assert tl.total == 1


def test_start_delay_defaults_to_zero():
    assert timeline_from_track_data([1, 0.3]).start_delay == 0


def test_track_start(boiler):
    assert track_start(boiler, 1) == 0.3
    assert track_start(boiler, 2) == 1.6
    assert track_start(timeline_from_track_data(*CIRCLE), 4) == 5.0
    with pytest.raises(TrackIndexError):
        track_start(boiler, 3)
    with pytest.raises(TrackIndexError):
        track_start(boiler, 0)


def test_total_duration(boiler):
    assert total_duration(boiler) == 4.1
    assert total_duration(timeline_from_track_data(*CIRCLE)) == 6.5
    assert total_duration(timeline_from_track_data([2, 0.5], 0.5)) == 3.0


def test_progress_examples(boiler):
    assert progress_vector(boiler, 0.0) == [0, 0]
    p = progress_vector(boiler, 0.8)
    assert p[0] == pytest.approx(0.5, abs=1e-12) and p[1] == 0
    assert progress_vector(boiler, 10) == [1, 1]


def test_pause_holds(boiler):
    # inside track 1's pause, 1.0 .. 1.6 after startDelay
    for now in (1.3, 1.45, 1.6):
        assert progress_vector(boiler, now) == [1.0, 0.0]


@st.composite
def timelines(draw):
    n = draw(st.integers(1, 6))
    flat = []
    for _ in range(n):
        flat.append(draw(st.floats(0.01, 10)))
        flat.append(draw(st.floats(0, 5)))
    return timeline_from_track_data(flat, draw(st.floats(0, 5)))


@given(timelines(), st.lists(st.floats(-5, 80), min_size=2, max_size=20))
def test_progress_monotone_and_bounded(tl, times):
    times = sorted(times)
    prev = None
    for now in times:
        p = progress_vector(tl, now)
        assert len(p) == len(tl)
        assert all(0 <= v <= 1 for v in p)
        if prev is not None:
            assert all(a <= b for a, b in zip(prev, p))
        prev = p


@given(timelines(), st.floats(0, 1))
def test_progress_saturates(tl, frac):
    assert progress_vector(tl, tl.start_delay * frac) == [0.0] * len(tl)
    assert progress_vector(tl, tl.total + frac) == [1.0] * len(tl)


@given(timelines())
def test_start_differences(tl):
    for i in range(1, len(tl)):
        gap = track_start(tl, i + 1) - track_start(tl, i)
        tr = tl.tracks[i - 1]
        assert math.isclose(gap, tr.duration + tr.pause, rel_tol=1e-9, abs_tol=1e-9)


@given(timelines())
def test_pause_windows(tl):
    for i, tr in enumerate(tl.tracks[:-1]):
        if tr.pause <= 0:
            continue
        mid = track_start(tl, i + 1) + tr.duration + tr.pause / 2
        p = progress_vector(tl, mid)
        assert p[i] == 1.0 and p[i + 1] == 0.0
