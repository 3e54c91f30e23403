"""Command-line interface.

Exit codes: 0 success, 1 validation or parse errors, 2 usage errors,
3 I/O errors.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from typing import Optional, Sequence

from .errors import ValidationError
from .scene import (
    BUILTIN_SCENES,
    FrameWriteError,
    RenderConfig,
    UnknownSceneError,
    builtin_scene,
    load_scene_description,
    render_animation,
    validate_scene_text,
)
from .typeset import nyka_to_tex

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3

_FRAMES_RE = re.compile(r"^(\d+)\.\.(\d+)$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _frames(text: str) -> tuple[int, int]:
    m = _FRAMES_RE.match(text)
    if not m or int(m.group(1)) > int(m.group(2)):
        raise argparse.ArgumentTypeError(f"expected A..B with 0 <= A <= B, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = 0
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        v = 0.0
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--scene", help="built-in scene name")
    src.add_argument("--file", help="path to a .scene file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="animtracks", description="Render track-based animations to PNG frames.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("render", help="render frames to a directory")
    _add_source(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--fps", type=_positive_float, default=60)
    p.add_argument("--width", type=_positive_int, default=1920)
    p.add_argument("--height", type=_positive_int, default=1080)
    p.add_argument("--frames", type=_frames, help="inclusive frame range A..B")
    p.add_argument("--no-debug", action="store_true", help="omit the debug overlay")
    p.add_argument("--jobs", type=_positive_int, help="parallel frame workers")

    sub.add_parser("list-scenes", help="print built-in scene names")

    p = sub.add_parser("describe", help="print the timeline of a scene")
    _add_source(p)

    p = sub.add_parser("validate", help="check a scene file")
    p.add_argument("--file", required=True)

    sub.add_parser("nyka2tex", help="translate Nyka markup on stdin to TeX on stdout")
    return parser


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(args):
    if args.scene is not None:
        return builtin_scene(args.scene)
    with open(args.file, encoding="utf-8") as f:
        return load_scene_description(f.read())


def _describe(scene) -> None:
    tl = scene.timeline
    print("track\tlabel\tstart\tend\tpause_end")
    for i, (start, track) in enumerate(zip(tl.starts, tl.tracks), 1):
        end = start + track.duration
        print(f"{i}\t{track.label or ''}\t{start:.3f}\t{end:.3f}\t{end + track.pause:.3f}")
    print(f"total\t\t\t\t{tl.total:.3f}")


def _validate(path: str) -> int:
    with open(path, encoding="utf-8") as f:
        text = f.read()
    errors, warnings, _ = validate_scene_text(text)
    for w in warnings:
        _err(f"{path}: warning: {w}")
    for e in sorted(errors, key=lambda e: (e.line or 0, e.col or 0)):
        _err(f"{path}: {e}")
    if errors:
        return EXIT_INVALID
    print(f"{path}: ok")
    return EXIT_OK


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        if args.command == "list-scenes":
            for name in BUILTIN_SCENES:
                print(name)
            return EXIT_OK
        if args.command == "nyka2tex":
            text = sys.stdin.read()
            if text.endswith("\n"):
                text = text[:-1]
            sys.stdout.write(nyka_to_tex(text) + "\n")
            return EXIT_OK
        if args.command == "validate":
            return _validate(args.file)
        if args.command == "describe":
            _describe(_load(args))
            return EXIT_OK
        if args.command == "render":
            scene = _load(args)
            cfg = RenderConfig(
                fps=args.fps,
                width=args.width,
                height=args.height,
                out_dir=args.out,
                show_debug_info=not args.no_debug,
                frame_range=args.frames,
                jobs=args.jobs,
            )
            paths = render_animation(scene, cfg)
            print(f"wrote {len(paths)} frames to {os.path.abspath(args.out)}")
            return EXIT_OK
    except UnknownSceneError as exc:
        _err(f"error: {exc}")
        return EXIT_USAGE
    except (FrameWriteError, OSError) as exc:
        _err(f"error: {exc}")
        return EXIT_IO
    except ValidationError as exc:
        _err(f"error: {exc}")
        return EXIT_INVALID
    return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
