"""Easing curves mapping track progress in [0, 1] onto shaped progress.

The catalog is the usual Penner family as published on easings.net:
``linear`` plus in/out/inOut variants of sine, quad, cubic, quart, quint,
expo, circ, back, elastic and bounce. Canonical names are lower camel case
(``easeInOutCubic``) because that is how scene files refer to them.

Input is clamped to [0, 1] and the endpoints are pinned, so ``ease(k, 0)``
is exactly 0.0 and ``ease(k, 1)`` exactly 1.0 for every kind.
"""
from __future__ import annotations

import math
from typing import Callable, Union

from .errors import ValidationError

__all__ = [
    "BACK_C1",
    "BACK_C2",
    "BACK_C3",
    "EASINGS",
    "UnknownEasingError",
    "ease",
    "get_easing",
    "list_easings",
]

EasingFunc = Callable[[float], float]

BACK_C1 = 1.70158
BACK_C2 = BACK_C1 * 1.525
BACK_C3 = BACK_C1 + 1
ELASTIC_C4 = 2 * math.pi / 3
ELASTIC_C5 = 2 * math.pi / 4.5
BOUNCE_N1 = 7.5625
BOUNCE_D1 = 2.75


class UnknownEasingError(ValidationError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"unknown easing {self.name!r}"


def linear(x):
    return x


def in_sine(x):
    return 1 - math.cos(x * math.pi / 2)


def out_sine(x):
    return math.sin(x * math.pi / 2)


def in_out_sine(x):
    return -(math.cos(math.pi * x) - 1) / 2


def _in_pow(n):
    def f(x):
        return x**n
    return f


def _out_pow(n):
    def f(x):
        return 1 - (1 - x) ** n
    return f


def _in_out_pow(n):
    lead = 2 ** (n - 1)

    def f(x):
        if x < 0.5:
            return lead * x**n
        return 1 - (-2 * x + 2) ** n / 2
    return f


def in_expo(x):
    return 0.0 if x == 0 else 2 ** (10 * x - 10)


def out_expo(x):
    return 1.0 if x == 1 else 1 - 2 ** (-10 * x)


def in_out_expo(x):
    if x == 0:
        return 0.0
    if x == 1:
        return 1.0
    if x < 0.5:
        return 2 ** (20 * x - 10) / 2
    return (2 - 2 ** (-20 * x + 10)) / 2


def in_circ(x):
    return 1 - math.sqrt(1 - x * x)


def out_circ(x):
    return math.sqrt(1 - (x - 1) ** 2)


def in_out_circ(x):
    if x < 0.5:
        return (1 - math.sqrt(1 - (2 * x) ** 2)) / 2
    return (math.sqrt(1 - (-2 * x + 2) ** 2) + 1) / 2


def in_back(x):
    return BACK_C3 * x**3 - BACK_C1 * x**2


def out_back(x):
    return 1 + BACK_C3 * (x - 1) ** 3 + BACK_C1 * (x - 1) ** 2


def in_out_back(x):
    if x < 0.5:
        return ((2 * x) ** 2 * ((BACK_C2 + 1) * 2 * x - BACK_C2)) / 2
    return ((2 * x - 2) ** 2 * ((BACK_C2 + 1) * (x * 2 - 2) + BACK_C2) + 2) / 2


def in_elastic(x):
    if x == 0:
        return 0.0
    if x == 1:
        return 1.0
    return -(2 ** (10 * x - 10)) * math.sin((x * 10 - 10.75) * ELASTIC_C4)


def out_elastic(x):
    if x == 0:
        return 0.0
    if x == 1:
        return 1.0
    return 2 ** (-10 * x) * math.sin((x * 10 - 0.75) * ELASTIC_C4) + 1


def in_out_elastic(x):
    if x == 0:
        return 0.0
    if x == 1:
        return 1.0
    if x < 0.5:
        return -(2 ** (20 * x - 10) * math.sin((20 * x - 11.125) * ELASTIC_C5)) / 2
    return (2 ** (-20 * x + 10) * math.sin((20 * x - 11.125) * ELASTIC_C5)) / 2 + 1


def out_bounce(x):
    if x < 1 / BOUNCE_D1:
        return BOUNCE_N1 * x * x
    if x < 2 / BOUNCE_D1:
        x -= 1.5 / BOUNCE_D1
        return BOUNCE_N1 * x * x + 0.75
    if x < 2.5 / BOUNCE_D1:
        x -= 2.25 / BOUNCE_D1
        return BOUNCE_N1 * x * x + 0.9375
    x -= 2.625 / BOUNCE_D1
    return BOUNCE_N1 * x * x + 0.984375


def in_bounce(x):
    return 1 - out_bounce(1 - x)


def in_out_bounce(x):
    if x < 0.5:
        return (1 - out_bounce(1 - 2 * x)) / 2
    return (1 + out_bounce(2 * x - 1)) / 2


def _catalog() -> dict[str, EasingFunc]:
    table: dict[str, EasingFunc] = {"linear": linear}
    fixed = {
        "Sine": (in_sine, out_sine, in_out_sine),
        "Quad": (_in_pow(2), _out_pow(2), _in_out_pow(2)),
        "Cubic": (_in_pow(3), _out_pow(3), _in_out_pow(3)),
        "Quart": (_in_pow(4), _out_pow(4), _in_out_pow(4)),
        "Quint": (_in_pow(5), _out_pow(5), _in_out_pow(5)),
        "Expo": (in_expo, out_expo, in_out_expo),
        "Circ": (in_circ, out_circ, in_out_circ),
        "Back": (in_back, out_back, in_out_back),
        "Elastic": (in_elastic, out_elastic, in_out_elastic),
        "Bounce": (in_bounce, out_bounce, in_out_bounce),
    }
    for family, (fin, fout, finout) in fixed.items():
        table[f"easeIn{family}"] = fin
        table[f"easeOut{family}"] = fout
        table[f"easeInOut{family}"] = finout
    return table


EASINGS: dict[str, EasingFunc] = _catalog()


def list_easings() -> list[str]:
    return list(EASINGS)


def get_easing(name: str) -> EasingFunc:
    try:
        return EASINGS[name]
    except (KeyError, TypeError):
        raise UnknownEasingError(name) from None


def ease(kind: Union[str, EasingFunc], t: float) -> float:
    """Evaluate easing ``kind`` (a catalog name or function) at clamped ``t``."""
    func = get_easing(kind) if isinstance(kind, str) else kind
    if t <= 0:
        return 0.0
    if t >= 1:
        return 1.0
    return float(func(t))
