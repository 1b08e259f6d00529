"""Reading samples from word files and XML corpora."""
from __future__ import annotations

import io
import sys
from pathlib import Path
from typing import IO, Iterable
from xml.parsers import expat

from .core import ExampleSet, InvalidSymbolError, is_valid_symbol

MODES = ("tokens", "chars")


class EmptySampleError(ValueError):
    pass


class XmlFormatError(ValueError):
    def __init__(self, source: str, line: int, column: int, reason: str):
        super().__init__(f"{source}:{line}:{column}: {reason}")
        self.source = source
        self.line = line
        self.column = column


def _open_text(path: str | Path) -> IO[str]:
    if str(path) == "-":
        return io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8")
    return open(path, encoding="utf-8")


def parse_words(text: str, mode: str = "tokens") -> ExampleSet:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if text == "":
        raise EmptySampleError("empty sample")
    words = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.rstrip("\r")
        syms = line.split() if mode == "tokens" else list(line)
        for s in syms:
            if not is_valid_symbol(s):
                raise InvalidSymbolError(f"line {lineno}: invalid symbol {s!r}")
        words.append(syms)
    return ExampleSet(words)


def read_words(path: str | Path, mode: str = "tokens") -> ExampleSet:
    """One word per line; ``tokens`` splits on whitespace, ``chars`` takes
    every character as a symbol.  Blank lines are empty words."""
    with _open_text(path) as fh:
        text = fh.read()
    return parse_words(text, mode)


class XmlSamples(dict):
    """element name -> ExampleSet of child-name sequences.

    ``mixed_content`` counts elements that had non-blank text next to
    element children; that text is ignored.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.mixed_content = 0


def _scan(fh: IO[bytes], source: str, words: dict[str, list[list[str]]]) -> int:
    stack: list[tuple[str, list[str], list[bool]]] = []
    mixed = 0

    def start(name, attrs):
        if stack:
            stack[-1][1].append(name)
        stack.append((name, [], [False]))

    def end(name):
        nonlocal mixed
        _, children, has_text = stack.pop()
        if children and has_text[0]:
            mixed += 1
        words.setdefault(name, []).append(children)

    def chars(data):
        if stack and data.strip():
            stack[-1][2][0] = True

    parser = expat.ParserCreate()
    parser.StartElementHandler = start
    parser.EndElementHandler = end
    parser.CharacterDataHandler = chars
    try:
        while True:
            chunk = fh.read(1 << 16)
            if not chunk:
                break
            parser.Parse(chunk, False)
        parser.Parse(b"", True)
    except expat.ExpatError as exc:
        raise XmlFormatError(source, exc.lineno, exc.offset, expat.errors.messages[exc.code]) from None
    return mixed


def read_xml_corpus(paths: Iterable[str | Path]) -> XmlSamples:
    """Collect, for every element occurrence, the names of its element
    children in document order.  Single streaming pass per file."""
    words: dict[str, list[list[str]]] = {}
    mixed = 0
    for path in paths:
        if str(path) == "-":
            mixed += _scan(sys.stdin.buffer, "<stdin>", words)
        else:
            with open(path, "rb") as fh:
                mixed += _scan(fh, str(path), words)
    out = XmlSamples({name: ExampleSet(ws) for name, ws in words.items()})
    out.mixed_content = mixed
    return out


def parse_xml_string(text: str | bytes) -> XmlSamples:
    data = text.encode("utf-8") if isinstance(text, str) else text
    words: dict[str, list[list[str]]] = {}
    mixed = _scan(io.BytesIO(data), "<string>", words)
    out = XmlSamples({name: ExampleSet(ws) for name, ws in words.items()})
    out.mixed_content = mixed
    return out
