import re

import pytest
from hypothesis import given, strategies as st

from animtracks.typeset import (
    DanglingScriptError,
    MissingArgumentError,
    NonPositiveSizeError,
    TableMetrics,
    UnbalancedBracketError,
    UnbalancedDollarError,
    UnknownCommandError,
    UnknownModeError,
    fragment,
    fragment_length,
    nyka_to_tex,
    parse_nyka,
    typing_states,
)
from animtracks.typeset.nyka import Atom, BigOperator, MathGroup, Superscript, Symbol, TextRun

EXAMPLE_STRING = r"This is $\displaystyle \sum[i=0][\infty]q^i = \frac{1}{1-q}$ plus text."


def squash(s):
    return re.sub(r"\s+", " ", s).strip()


class TestParse:
    def test_text_and_math(self):
        assert parse_nyka("This is $q^i$ plus text.") == [
            TextRun("This is "),
            MathGroup([Superscript(Atom("q"), Atom("i"))]),
            TextRun(" plus text."),
        ]

    def test_big_operator_brackets(self):
        assert parse_nyka(r"$\sum[i=0][\infty] q^i$") == [
            MathGroup([
                BigOperator("sum", MathGroup([Atom("i"), Atom("="), Atom("0")]), MathGroup([Symbol("infty")])),
                Superscript(Atom("q"), Atom("i")),
            ])
        ]

    def test_tex_style_limits_attach(self):
        assert parse_nyka(r"$\sum_{i=0}^\infty q^i$") == parse_nyka(r"$\sum[i=0][\infty] q^i$")

    def test_plain(self):
        assert parse_nyka("ab") == [TextRun("ab")]

    @pytest.mark.parametrize(
        "src, exc, pos",
        [
            ("$x", UnbalancedDollarError, 0),
            ("ab $x^2", UnbalancedDollarError, 3),
            (r"$\sum[i=0$", UnbalancedBracketError, 5),
            ("$a}$", UnbalancedBracketError, 2),
            ("${a$", UnbalancedBracketError, 1),
            ("$q^$", DanglingScriptError, 2),
            ("$q_ $", DanglingScriptError, 2),
            (r"$\foo$", UnknownCommandError, 1),
            (r"$\frac[1]$", MissingArgumentError, 1),
        ],
    )
    def test_malformed(self, src, exc, pos):
        with pytest.raises(exc) as info:
            parse_nyka(src)
        assert info.value.position == pos

    def test_greek_and_display(self):
        nodes = parse_nyka(r"$\displaystyle \alpha + \Omega$")
        assert fragment_length(fragment(r"$\displaystyle \alpha + \Omega$", 30)) == 3
        assert nodes[0].children[0].style == "displaystyle"


class TestToTex:
    def test_example_sum(self):
        assert squash(nyka_to_tex(r"$\sum[i=0][\infty] q^i$")) == squash(r"$\sum_{i=0}^{\infty} q^i$")

    def test_identity_on_plain_text(self):
        assert nyka_to_tex("plain text") == "plain text"

    def test_frac(self):
        assert nyka_to_tex(r"$\frac[1][1-q]$") == r"$\frac{1}{1-q}$"

    def test_example_formula(self):
        out = nyka_to_tex(r"$\sum[i=0][\infty]q^i= \frac[1][1-q]$")
        assert squash(out) == squash(r"$\sum_{i=0}^{\infty}q^i= \frac{1}{1-q}$")

    def test_propagates_errors(self):
        with pytest.raises(UnbalancedDollarError):
            nyka_to_tex("$x")

    @given(st.text(alphabet=st.characters(blacklist_characters="$\\"), max_size=40))
    def test_identity_without_markup(self, s):
        assert nyka_to_tex(s) == s


class TestFragment:
    def test_plain_count(self):
        fs = fragment("ab", 30)
        assert fragment_length(fs) == 2
        assert [f.glyph for f in fs] == ["a", "b"]

    def test_space_emits_nothing(self):
        fs = fragment("a b", 30)
        assert [f.glyph for f in fs] == ["a", "b"]
        assert fs.fragments[1].offset[0] > fragment("ab", 30).fragments[1].offset[0]

    def test_superscript(self):
        fs = fragment("$q^i$", 30, TableMetrics())
        assert fragment_length(fs) == 2
        i = fs.fragments[1]
        assert i.glyph == "i" and i.size == pytest.approx(21) and i.offset[1] > 0
        assert i.script_level == 1

    def test_empty(self):
        assert fragment_length(fragment("", 30)) == 0

    def test_size_must_be_positive(self):
        with pytest.raises(NonPositiveSizeError):
            fragment("ab", 0)

    def test_example_string(self):
        fs = fragment(EXAMPLE_STRING, 30)
        # 6 + sum(1) + limits(3 + 1) + q^i(2) + "="(1) + fraction(1 + rule + 3) + 9
        assert fragment_length(fs) == 28
        assert fragment_length(fs) / 10 == 2.8

    def test_count_stable_across_readiness(self):
        for s in (EXAMPLE_STRING, "ab", "a b c", r"$\frac[x^2][\pi]$"):
            early = fragment(s, 30, TableMetrics(ready=False))
            late = fragment(s, 30, TableMetrics(ready=True))
            assert fragment_length(early) == fragment_length(late)
            assert [f.glyph for f in early] == [f.glyph for f in late]

    def test_single_line_offsets_strictly_increase(self):
        fs = fragment("Hello world, again.", 30)
        xs = [f.offset[0] for f in fs]
        assert all(a < b for a, b in zip(xs, xs[1:]))

    def test_display_limits_stack(self):
        fs = fragment(r"$\displaystyle \sum[k][n]$", 30)
        op, low, up = fs.fragments
        assert low.offset[1] < 0 < up.offset[1]


class TestTyping:
    def test_start_and_end(self):
        fs = fragment(EXAMPLE_STRING, 30)
        assert all(s.alpha == 0 for s in typing_states(fs, 0, "up"))
        for mode in ("up", "fade", "appear"):
            end = typing_states(fs, 1, mode)
            assert all(s.alpha == 1 and s.extra_offset == (0, 0) for s in end)

    def test_half_of_two(self):
        s1, s2 = typing_states(fragment("ab", 30), 0.5, "up")
        assert s1.alpha == 1 and s1.extra_offset[1] == 0
        assert s2.alpha == 0

    def test_up_rises_from_below(self):
        (s,) = typing_states(fragment("a", 30), 0.3, "up")
        assert 0 < s.alpha < 1 and s.extra_offset[1] < 0

    def test_appear_is_binary(self):
        (s,) = typing_states(fragment("a", 30), 0.01, "appear")
        assert s.alpha == 1

    def test_unknown_mode(self):
        with pytest.raises(UnknownModeError):
            typing_states(fragment("a", 30), 0.5, "sideways")

    @given(st.floats(0, 1), st.floats(0, 1))
    def test_monotone_reveal(self, t0, t1):
        fs = fragment(EXAMPLE_STRING, 30)
        lo, hi = sorted((t0, t1))
        a = typing_states(fs, lo, "fade")
        b = typing_states(fs, hi, "fade")
        assert all(x.alpha <= y.alpha for x, y in zip(a, b))
        alphas = [x.alpha for x in a]
        for i, v in enumerate(alphas):
            if v < 1:
                assert all(w <= v for w in alphas[i + 1:])
