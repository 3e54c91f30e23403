"""Shape-generic linear interpolation."""
from __future__ import annotations

from numbers import Real
from typing import Any, Union

from .errors import ValidationError

__all__ = ["NumericTree", "ShapeMismatchError", "lerp", "shape_of", "check_compatible"]

NumericTree = Union[float, list, tuple]


class ShapeMismatchError(ValidationError):
    """Raised when two numeric trees cannot be interpolated.

    ``path`` lists the child indices leading to the first divergence.
    """

    def __init__(self, message: str, path: tuple = ()):
        super().__init__(message)
        self.path = tuple(path)

    def __str__(self):
        where = "".join(f"[{i}]" for i in self.path) or "<root>"
        return f"{self.args[0]} at {where}"


def _is_scalar(v: Any) -> bool:
    return isinstance(v, Real) and not isinstance(v, bool)


def _is_list(v: Any) -> bool:
    return isinstance(v, (list, tuple))


def check_compatible(x: Any, y: Any, path: tuple = ()) -> None:
    if _is_scalar(x) and _is_scalar(y):
        return
    if _is_list(x) and _is_list(y):
        if len(x) != len(y):
            raise ShapeMismatchError(f"length {len(x)} vs {len(y)}", path)
        for i, (a, b) in enumerate(zip(x, y)):
            check_compatible(a, b, path + (i,))
        return
    raise ShapeMismatchError(f"cannot pair {_kind(x)} with {_kind(y)}", path)


def _kind(v):
    if _is_scalar(v):
        return "scalar"
    if _is_list(v):
        return f"list of {len(v)}"
    return type(v).__name__


def shape_of(x: Any):
    """Nested-length signature of a tree; scalars map to ``()``."""
    if _is_scalar(x):
        return ()
    if _is_list(x):
        return tuple(shape_of(c) for c in x)
    raise ShapeMismatchError(f"not a numeric tree: {_kind(x)}")


def _lerp(x, y, t, path):
    if _is_scalar(x) and _is_scalar(y):
        return t * y + (1 - t) * x
    if _is_list(x) and _is_list(y):
        if len(x) != len(y):
            raise ShapeMismatchError(f"length {len(x)} vs {len(y)}", path)
        out = [_lerp(a, b, t, path + (i,)) for i, (a, b) in enumerate(zip(x, y))]
        return tuple(out) if isinstance(x, tuple) else out
    raise ShapeMismatchError(f"cannot pair {_kind(x)} with {_kind(y)}", path)


def lerp(x: NumericTree, y: NumericTree, t: float) -> NumericTree:
    """Return ``t * y + (1 - t) * x`` element-wise.

    Works on scalars and on nested lists/tuples of equal shape (points,
    colours, matrices). ``t`` is not clamped. The result keeps the container
    type of ``x``.

    >>> lerp(0, 10, 0.3)
    3.0
    >>> lerp([-3, 7], [5, 10], 0)
    [-3, 7]
    """
    return _lerp(x, y, t, ())
