"""Nyka markup parsing, glyph layout and typewriter animation."""
from .layout import (
    Fragment,
    FragmentedString,
    GlyphState,
    NonPositiveSizeError,
    TYPING_MODES,
    UnknownModeError,
    fragment,
    fragment_length,
    typing_states,
)
from .metrics import GlyphMetrics, TableMetrics
from .nyka import (
    DanglingScriptError,
    MissingArgumentError,
    NykaSyntaxError,
    UnbalancedBracketError,
    UnbalancedDollarError,
    UnknownCommandError,
    nyka_to_tex,
    parse_nyka,
)

__all__ = [
    "DanglingScriptError",
    "Fragment",
    "FragmentedString",
    "GlyphMetrics",
    "GlyphState",
    "MissingArgumentError",
    "NonPositiveSizeError",
    "NykaSyntaxError",
    "TYPING_MODES",
    "TableMetrics",
    "UnbalancedBracketError",
    "UnbalancedDollarError",
    "UnknownCommandError",
    "UnknownModeError",
    "fragment",
    "fragment_length",
    "nyka_to_tex",
    "parse_nyka",
    "typing_states",
]
