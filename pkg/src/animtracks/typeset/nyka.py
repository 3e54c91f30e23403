"""Parser for the Nyka math markup and its translation to plain TeX.

Nyka reads like LaTeX except that big operators and fractions take their
arguments in square brackets::

    $\\sum[i=0][\\infty] q^i$        ->  $\\sum_{i=0}^{\\infty} q^i$
    $\\frac[1][1-q]$                 ->  $\\frac{1}{1-q}$

Supported inside ``$...$``: ``^`` and ``_`` (binding one token, a
``[...]`` group or a ``{...}`` group), ``\\sum``, ``\\prod``, ``\\int``,
``\\frac``, ``\\infty``, the Greek letters and ``\\displaystyle``. Brace
arguments are accepted wherever bracket arguments are, and TeX-style
``\\sum_{a}^{b}`` limits attach to the operator.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from ..errors import ValidationError

__all__ = [
    "Atom",
    "BigOperator",
    "DanglingScriptError",
    "Fraction",
    "MathGroup",
    "MissingArgumentError",
    "NykaSyntaxError",
    "StyleFlag",
    "Subscript",
    "Superscript",
    "Symbol",
    "TextRun",
    "UnbalancedBracketError",
    "UnbalancedDollarError",
    "UnknownCommandError",
    "BIG_OPERATORS",
    "GREEK",
    "SYMBOLS",
    "nyka_to_tex",
    "parse_nyka",
]

BIG_OPERATORS = {"sum": "∑", "prod": "∏", "int": "∫"}

GREEK = {
    "alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ",
    "epsilon": "ϵ", "varepsilon": "ε", "zeta": "ζ", "eta": "η",
    "theta": "θ", "vartheta": "ϑ", "iota": "ι", "kappa": "κ",
    "lambda": "λ", "mu": "μ", "nu": "ν", "xi": "ξ",
    "pi": "π", "varpi": "ϖ", "rho": "ρ", "varrho": "ϱ",
    "sigma": "σ", "varsigma": "ς", "tau": "τ", "upsilon": "υ",
    "phi": "ϕ", "varphi": "φ", "chi": "χ", "psi": "ψ",
    "omega": "ω",
    "Gamma": "Γ", "Delta": "Δ", "Theta": "Θ", "Lambda": "Λ",
    "Xi": "Ξ", "Pi": "Π", "Sigma": "Σ", "Upsilon": "Υ",
    "Phi": "Φ", "Psi": "Ψ", "Omega": "Ω",
}

SYMBOLS = {"infty": "∞", **GREEK}

STYLES = ("displaystyle",)


class NykaSyntaxError(ValidationError):
    """Malformed markup; ``position`` is a 0-based index into the source."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position

    def __str__(self):
        return f"{self.args[0]} (at position {self.position})"


class UnbalancedDollarError(NykaSyntaxError):
    pass


class UnbalancedBracketError(NykaSyntaxError):
    pass


class UnknownCommandError(NykaSyntaxError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown command \\{name}", position)
        self.name = name


class DanglingScriptError(NykaSyntaxError):
    pass


class MissingArgumentError(NykaSyntaxError):
    pass


def _pos():
    return field(default=0, compare=False, repr=False)


@dataclass
class TextRun:
    text: str
    start: int = _pos()
    end: int = _pos()


@dataclass
class Atom:
    """A plain math character such as ``q``, ``1`` or ``=``."""
    char: str
    start: int = _pos()
    end: int = _pos()


@dataclass
class Symbol:
    name: str
    start: int = _pos()
    end: int = _pos()

    @property
    def glyph(self) -> str:
        return SYMBOLS[self.name]


@dataclass
class MathGroup:
    children: list
    start: int = _pos()
    end: int = _pos()
    # "$" for top-level math, "[" / "{" for argument groups
    delim: str = field(default="$", compare=False, repr=False)


@dataclass
class BigOperator:
    name: str
    lower: Optional[MathGroup] = None
    upper: Optional[MathGroup] = None
    start: int = _pos()
    end: int = _pos()

    @property
    def glyph(self) -> str:
        return BIG_OPERATORS[self.name]


@dataclass
class Fraction:
    numerator: MathGroup
    denominator: MathGroup
    start: int = _pos()
    end: int = _pos()


@dataclass
class Superscript:
    base: object
    exponent: object
    start: int = _pos()
    end: int = _pos()


@dataclass
class Subscript:
    base: object
    index: object
    start: int = _pos()
    end: int = _pos()


@dataclass
class StyleFlag:
    style: str
    child: MathGroup
    start: int = _pos()
    end: int = _pos()


Node = Union[TextRun, Atom, Symbol, MathGroup, BigOperator, Fraction, Superscript, Subscript, StyleFlag]

_CLOSER = {"[": "]", "{": "}"}


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.i = 0

    def peek(self) -> str:
        return self.src[self.i] if self.i < len(self.src) else ""

    def skip_space(self):
        while self.i < len(self.src) and self.src[self.i].isspace():
            self.i += 1

    def parse(self) -> list:
        out: list = []
        buf_start = 0
        buf: list[str] = []
        while self.i < len(self.src):
            c = self.src[self.i]
            if c == "\\" and self.src[self.i + 1 : self.i + 2] == "$":
                buf.append("\\$")
                self.i += 2
            elif c == "$":
                if buf:
                    out.append(TextRun("".join(buf), buf_start, self.i))
                    buf = []
                open_at = self.i
                self.i += 1
                children = self.parse_row(until="$", open_at=open_at)
                self.i += 1
                if children:
                    out.append(MathGroup(children, open_at, self.i, "$"))
                buf_start = self.i
            else:
                if not buf:
                    buf_start = self.i
                buf.append(c)
                self.i += 1
        if buf:
            out.append(TextRun("".join(buf), buf_start, self.i))
        return out

    def parse_row(self, until: str, open_at: int) -> list:
        """Parse math items up to (not consuming) the closing ``until``."""
        items: list = []
        while True:
            self.skip_space()
            c = self.peek()
            if c == "":
                if until == "$":
                    raise UnbalancedDollarError("math mode opened with $ is never closed", open_at)
                raise UnbalancedBracketError(f"group opened with {self.src[open_at]!r} is never closed", open_at)
            if c == until:
                return items
            if c == "$":
                raise UnbalancedBracketError(f"group opened with {self.src[open_at]!r} is never closed", open_at)
            if c in "}":
                raise UnbalancedBracketError(f"unexpected {c!r}", self.i)
            if c in "^_":
                at = self.i
                self.i += 1
                operand = self.parse_script_operand(at)
                base = items.pop() if items else None
                items.append(self._attach(base, c, operand, at))
                continue
            if c == "\\" and self.src.startswith("displaystyle", self.i + 1) and not self._letter_at(self.i + 13):
                at = self.i
                self.i += 13
                rest = self.parse_row(until, open_at)
                group = MathGroup(rest, self.i if not rest else rest[0].start, self.i, "")
                items.append(StyleFlag("displaystyle", group, at, self.i))
                return items
            items.append(self.parse_token(allow_bracket_literal=True))

    def _letter_at(self, j: int) -> bool:
        return j < len(self.src) and self.src[j].isalpha()

    def _attach(self, base, op, operand, at):
        end = self.i
        start = base.start if base is not None else at
        if isinstance(base, BigOperator):
            slot = "upper" if op == "^" else "lower"
            if getattr(base, slot) is None:
                group = operand if isinstance(operand, MathGroup) else MathGroup([operand], operand.start, operand.end, "")
                setattr(base, slot, group)
                base.end = end
                return base
        if op == "^":
            return Superscript(base, operand, start, end)
        return Subscript(base, operand, start, end)

    def parse_script_operand(self, at: int):
        self.skip_space()
        c = self.peek()
        if c == "" or c in "$]}^_":
            raise DanglingScriptError(f"{self.src[at]!r} has no operand", at)
        if c in "[{":
            return self.parse_group()
        return self.parse_token(allow_bracket_literal=False)

    def parse_group(self) -> MathGroup:
        open_at = self.i
        opener = self.src[open_at]
        self.i += 1
        children = self.parse_row(until=_CLOSER[opener], open_at=open_at)
        self.i += 1
        return MathGroup(children, open_at, self.i, opener)

    def parse_token(self, allow_bracket_literal: bool):
        c = self.peek()
        at = self.i
        if c == "{":
            return self.parse_group()
        if c == "\\":
            return self.parse_command()
        if c == "]":
            if allow_bracket_literal:
                self.i += 1
                return Atom(c, at, self.i)
            raise UnbalancedBracketError("unexpected ']'", at)
        self.i += 1
        return Atom(c, at, self.i)

    def parse_command(self):
        at = self.i
        j = self.i + 1
        while j < len(self.src) and self.src[j].isalpha():
            j += 1
        name = self.src[self.i + 1 : j]
        if not name:
            raise UnknownCommandError(self.src[self.i + 1 : self.i + 2], at)
        self.i = j
        if name in BIG_OPERATORS:
            lower = self.optional_argument()
            upper = self.optional_argument() if lower is not None else None
            return BigOperator(name, lower, upper, at, self.i)
        if name == "frac":
            num = self.optional_argument()
            den = self.optional_argument() if num is not None else None
            if num is None or den is None:
                raise MissingArgumentError("\\frac needs two arguments", at)
            return Fraction(num, den, at, self.i)
        if name in SYMBOLS:
            return Symbol(name, at, self.i)
        if name in STYLES:
            raise NykaSyntaxError(f"\\{name} is not allowed here", at)
        raise UnknownCommandError(name, at)

    def optional_argument(self) -> Optional[MathGroup]:
        save = self.i
        self.skip_space()
        if self.peek() in ("[", "{") and self.peek():
            return self.parse_group()
        self.i = save
        return None


def parse_nyka(s: str) -> list:
    """Parse a Nyka string into text runs and math groups.

    >>> parse_nyka("ab")
    [TextRun(text='ab')]
    """
    return _Parser(s).parse()


def _tex(node, src: str) -> str:
    if isinstance(node, TextRun):
        return node.text
    if isinstance(node, Atom):
        return node.char
    if isinstance(node, Symbol):
        return "\\" + node.name
    if isinstance(node, MathGroup):
        return _tex_row(node.children, src, node.start + len(node.delim), node.end - (1 if node.delim else 0))
    if isinstance(node, BigOperator):
        out = "\\" + node.name
        if node.lower is not None:
            out += "_{" + _tex(node.lower, src) + "}"
        if node.upper is not None:
            out += "^{" + _tex(node.upper, src) + "}"
        return out
    if isinstance(node, Fraction):
        return "\\frac{" + _tex(node.numerator, src) + "}{" + _tex(node.denominator, src) + "}"
    if isinstance(node, (Superscript, Subscript)):
        base, arg = (node.base, node.exponent) if isinstance(node, Superscript) else (node.base, node.index)
        mark = "^" if isinstance(node, Superscript) else "_"
        head = "" if base is None else _tex(base, src)
        if isinstance(arg, MathGroup):
            return f"{head}{mark}{{{_tex(arg, src)}}}"
        return f"{head}{mark}{_tex(arg, src)}"
    if isinstance(node, StyleFlag):
        body = _tex(node.child, src)
        return "\\" + node.style + _leading_space(src, node) + body
    raise TypeError(f"not a Nyka node: {node!r}")


def _leading_space(src: str, flag: StyleFlag) -> str:
    j = flag.start + 1 + len(flag.style)
    k = j
    while k < len(src) and src[k].isspace():
        k += 1
    if k > j:
        return src[j:k]
    # a following letter would otherwise fuse with the command name
    body = flag.child.children
    return " " if body and isinstance(body[0], Atom) and body[0].char.isalpha() else ""


def _tex_row(children: list, src: str, lo: int, hi: int) -> str:
    parts = []
    cursor = lo
    for child in children:
        gap = src[cursor : child.start]
        if gap.isspace():
            parts.append(gap)
        parts.append(_tex(child, src))
        cursor = child.end
    trailing = src[cursor:hi]
    if trailing.isspace():
        parts.append(trailing)
    return "".join(parts)


def nyka_to_tex(s: str) -> str:
    """Translate Nyka markup to standard TeX, keeping text runs verbatim.

    >>> nyka_to_tex("$\\\\frac[1][1-q]$")
    '$\\\\frac{1}{1-q}$'
    """
    out = []
    for node in parse_nyka(s):
        if isinstance(node, MathGroup):
            out.append("$" + _tex(node, s) + "$")
        else:
            out.append(node.text)
    return "".join(out)
