"""Batch front end: one isiZulu sentence per axiom line.

Exit status: 0 when every axiom rendered, 1 when any axiom failed to parse or
render, 2 on configuration or I/O problems (nothing is rendered then).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence, TextIO

from .axiom import Axiom, iter_axioms
from .errors import AxiomSyntaxError, LexiconError, ProfileError, VerbalizerError
from .lexicon import Lexicon, load_lexicon
from .renderer import PreferenceProfile, apply_overrides, default_profile, load_profile, render, variants

STDIN = "-"


@dataclass
class RunConfig:
    lexicon_path: Path
    axioms_path: Path | str = STDIN
    profile_path: Path | None = None
    overrides: list[str] = field(default_factory=list)
    trace: bool = False
    fail_fast: bool = False
    variants: bool = False


class ConfigError(Exception):
    pass


def _load_lexicon(path: Path) -> Lexicon:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"{path}: cannot read lexicon: {e}") from None
    try:
        return load_lexicon(text)
    except LexiconError as e:
        where = f"{path}:{e.line}" if e.line is not None else str(path)
        raise ConfigError(f"{where}: {e.reason}") from None


def _load_profile(cfg: RunConfig) -> PreferenceProfile:
    prof = default_profile()
    try:
        if cfg.profile_path is not None:
            try:
                text = Path(cfg.profile_path).read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as e:
                raise ConfigError(f"{cfg.profile_path}: cannot read profile: {e}") from None
            prof = load_profile(text, prof, source=str(cfg.profile_path))
        return apply_overrides(prof, cfg.overrides, source="--set")
    except ProfileError as e:
        raise ConfigError(str(e)) from None


def _read_axioms(path: Path | str, stdin: TextIO | None) -> tuple[str, bytes]:
    if str(path) == STDIN:
        stream = stdin if stdin is not None else sys.stdin
        data = stream.buffer.read() if hasattr(stream, "buffer") else stream.read()
        return "<stdin>", data.encode("utf-8") if isinstance(data, str) else data
    try:
        return str(path), Path(path).read_bytes()
    except OSError as e:
        raise ConfigError(f"{path}: cannot read axioms: {e}") from None


def list_variants(ax: Axiom, lex: Lexicon, capitalize: bool = False) -> str:
    """Every applicable rendering of ``ax``, one ``variant<TAB>sentence`` per line."""
    return "".join(f"{label}\t{s.text}\n" for label, s in variants(ax, lex, capitalize))


def run(cfg: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None,
        stdin: TextIO | None = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        lex = _load_lexicon(cfg.lexicon_path)
        prof = _load_profile(cfg)
        name, data = _read_axioms(cfg.axioms_path, stdin)
    except ConfigError as e:
        print(f"error: {e}", file=err)
        return 2

    status = 0
    for lineno, item in iter_axioms(data):
        try:
            if isinstance(item, AxiomSyntaxError):
                raise item
            if cfg.variants:
                text = list_variants(item, lex, prof.capitalize)
                trace = []
            else:
                sentence = render(item, lex, prof)
                text = sentence.text + "\n"
                trace = sentence.trace_lines()
        except AxiomSyntaxError as e:
            print(f"{name}:{e.line}:{e.column}: syntax error: {e.message}"
                  + (f" (expected {', '.join(sorted(e.expected))})" if e.expected else ""), file=err)
        except VerbalizerError as e:
            print(f"{name}:{lineno}: {e}", file=err)
        else:
            out.write(text)
            if cfg.trace:
                for line in trace:
                    print(f"## {name}:{lineno}: {line}", file=err)
            continue
        status = 1
        if cfg.fail_fast:
            break
    out.flush()
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zuluverb", description="Verbalize description-logic axioms in isiZulu.")
    p.add_argument("--lexicon", required=True, type=Path, metavar="PATH", help="lexicon file (tab-separated)")
    p.add_argument("--axioms", default=STDIN, metavar="PATH|-", help="axiom file, one per line (default: stdin)")
    p.add_argument("--profile", type=Path, metavar="PATH", help="key=value preference profile")
    p.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                   help="override one profile setting; repeatable, later wins")
    p.add_argument("--variants", action="store_true", help="print every applicable variant per axiom")
    p.add_argument("--trace", action="store_true", help="print pattern and table lookups to stderr")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first failing axiom")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        lexicon_path=args.lexicon,
        axioms_path=args.axioms,
        profile_path=args.profile,
        overrides=args.overrides,
        trace=args.trace,
        fail_fast=args.fail_fast,
        variants=args.variants,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
