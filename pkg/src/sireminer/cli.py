"""Command line front end.

    sireminer infer  --input FILE [--format tokens|chars|xml] [--algo condag|conminer|exact]
    sireminer check  --schema EXPR | --schema-file FILE  --input FILE [--format ...]
    sireminer oracle --input FILE [--format ...] [--max-alphabet N]

Exit codes: 0 ok, 1 rejected words (check), 2 bad flags, 3 I/O or parse
error, 4 exact search bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .condag import con_dag_trace
from .conminer import con_miner_trace
from .core import ExampleSet, Sire, SireSyntaxError, DuplicateSymbolError, InvalidSymbolError, parse_sire
from .graphs import BoundExceededError, EXACT_MIS_BOUND
from .ingest import EmptySampleError, XmlFormatError, read_words, read_xml_corpus
from .lang import ORACLE_BOUND, infer_operators, minimal_oracle, sire_membership

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_BOUND = 4

EPSILON = "ε"
WORD_KEY = "sample"
MAX_WITNESSES = 10


class InputError(Exception):
    pass


def _load(args) -> dict[str, ExampleSet]:
    """Samples keyed by element name; word files use a single key."""
    try:
        if args.format == "xml":
            samples = read_xml_corpus(args.input)
            if samples.mixed_content:
                print(f"note: ignored text in {samples.mixed_content} mixed-content element(s)",
                      file=sys.stderr)
            if args.element is not None:
                if args.element not in samples:
                    raise InputError(f"element {args.element!r} not found")
                return {args.element: samples[args.element]}
            return dict(sorted(samples.items()))
        if len(args.input) != 1:
            raise InputError("word files take exactly one --input")
        return {args.element or WORD_KEY: read_words(args.input[0], args.format)}
    except (OSError, XmlFormatError, EmptySampleError, InvalidSymbolError) as exc:
        raise InputError(str(exc)) from exc


def _infer(e: ExampleSet, algo: str):
    if algo == "condag":
        return con_dag_trace(e)
    return con_miner_trace(e, "exact" if algo == "exact" else "approx", EXACT_MIS_BOUND)


def _show_word(w: Sequence[str]) -> str:
    return " ".join(w) if w else EPSILON


def _factors_json(s: Sire | None) -> list:
    if s is None:
        return []
    return [[[sym, op.value] for sym, op in f.terms] for f in s.factors]


def cmd_infer(args) -> int:
    samples = _load(args)
    results: dict[str, Sire | None] = {}
    for name, e in samples.items():
        r = _infer(e, args.algo)
        if r.evicted:
            print(f"note: {name}: cyclic order inside a group, evicted {' '.join(r.evicted)}",
                  file=sys.stderr)
        if getattr(r, "forced_splits", 0):
            print(f"note: {name}: split {r.forced_splits} repaired block(s) holding forbid pairs",
                  file=sys.stderr)
        results[name] = r.sire

    if args.emit == "json":
        text = json.dumps({k: _factors_json(v) for k, v in results.items()}) + "\n"
    elif args.format == "xml":
        text = "".join(f"{k} := {v if v is not None else EPSILON}\n" for k, v in results.items())
    else:
        (only,) = results.values()
        text = f"{only if only is not None else EPSILON}\n"

    if args.out and args.out != "-":
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(str(exc)) from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_schema_text(text: str) -> dict[str | None, str]:
    """``name := expr`` lines, or a single bare expression (key None)."""
    out: dict[str | None, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if ":=" in line:
            name, expr = (x.strip() for x in line.split(":=", 1))
            out[name] = expr
        else:
            out[None] = line
    return out


def _compile(expr: str) -> Sire | None:
    if expr == EPSILON:
        return None
    try:
        return parse_sire(expr)
    except (SireSyntaxError, DuplicateSymbolError, InvalidSymbolError, ValueError) as exc:
        raise InputError(f"bad schema {expr!r}: {exc}") from exc


def _member(word: Sequence[str], s: Sire | None) -> bool:
    return not word if s is None else sire_membership(word, s)


def cmd_check(args) -> int:
    if args.schema is not None:
        schemas = {None: args.schema}
    else:
        try:
            with open(args.schema_file, encoding="utf-8") as fh:
                schemas = _parse_schema_text(fh.read())
        except OSError as exc:
            raise InputError(str(exc)) from exc
    compiled = {k: _compile(v) for k, v in schemas.items()}
    samples = _load(args)

    accepted = rejected = 0
    witnesses: list[str] = []
    for name, e in samples.items():
        if name in compiled:
            s = compiled[name]
        elif None in compiled:
            s = compiled[None]
        else:
            print(f"note: no schema for {name}, skipped", file=sys.stderr)
            continue
        for w in e.words:
            if _member(w, s):
                accepted += 1
            else:
                rejected += 1
                if len(witnesses) < MAX_WITNESSES:
                    prefix = f"{name}: " if args.format == "xml" else ""
                    witnesses.append(prefix + _show_word(w))
    print(f"accepted: {accepted}")
    print(f"rejected: {rejected}")
    for w in witnesses:
        print(f"  {w}")
    return EXIT_REJECTED if rejected else EXIT_OK


def cmd_oracle(args) -> int:
    samples = _load(args)
    for name, e in samples.items():
        if args.format == "xml":
            print(f"[{name}]")
        optima = minimal_oracle(e, bound=args.max_alphabet)
        if not optima:
            print(f"minimal: {EPSILON}")
            continue
        best = optima[0]
        print(f"chains: {len(best)}")
        print(f"profile: ({', '.join(map(str, best.profile))})")
        print(f"optima: {len(optima)}")
        for c in optima:
            print(f"  {c}")
        print(f"representative: {infer_operators(e, best)}")
        print(f"conminer: {con_miner_trace(e, 'approx').factor_count} chains")
        print(f"condag: {con_dag_trace(e).factor_count} chains")
    return EXIT_OK


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, action="append",
                   help="sample file, '-' for standard input (repeatable for xml)")
    p.add_argument("--format", choices=("tokens", "chars", "xml"), default="tokens")
    p.add_argument("--element", help="xml: restrict to this element name")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sireminer",
        description="Infer interleaving expressions (SIREs) from positive examples.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("infer", help="infer a schema")
    _add_input_flags(p)
    p.add_argument("--algo", choices=("exact", "conminer", "condag"), default="condag")
    p.add_argument("--emit", choices=("sire", "json"), default="sire")
    p.add_argument("--out", help="output file (default: standard output)")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("check", help="check samples against a schema")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--schema", help="expression, e.g. 'a* b c? & d+'")
    g.add_argument("--schema-file", help="file of expressions or 'name := expr' lines")
    _add_input_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="brute-force minimal chain partitions")
    _add_input_flags(p)
    p.add_argument("--max-alphabet", type=int, default=ORACLE_BOUND)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
