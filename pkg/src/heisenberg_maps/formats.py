"""HCM1 text formats for maps and decompositions.

Map block::

    HCM1 map
    n=<n>
    <2n-3 lines, one coefficient-matrix row each>

Decomposition block::

    HCM1 decomposition
    n=<n>
    A
    <n dense rows>
    B
    <n dense rows>
    C
    <n dense rows>
    zeta
    <2n-3 rationals>

Files holding several map blocks separate them with one blank line.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import HeisenbergError, ParseError
from .heisenberg import dim
from .linalg import Matrix, format_rational, parse_rational
from .maps import CanonicalDecomposition, LinearMap

MAP_HEADER = "HCM1 map"
DECOMPOSITION_HEADER = "HCM1 decomposition"

_N_RE = re.compile(r"n=([1-9][0-9]*)")


def _row_text(values: Iterable) -> str:
    return " ".join(format_rational(v) for v in values)


def _matrix_lines(m: Matrix) -> list[str]:
    return [_row_text(m.row(i)) for i in range(m.nrows)]


def format_map(f: LinearMap) -> str:
    lines = [MAP_HEADER, f"n={f.n}", *_matrix_lines(f.mat)]
    return "\n".join(lines) + "\n"


def format_maps(maps: Iterable[LinearMap]) -> str:
    return "\n".join(format_map(f) for f in maps)


def format_decomposition(d: CanonicalDecomposition) -> str:
    lines = [DECOMPOSITION_HEADER, f"n={d.n}"]
    for name in ("A", "B", "C"):
        lines.append(name)
        lines.extend(_matrix_lines(getattr(d, name)))
    lines.append("zeta")
    lines.append(_row_text(d.zeta))
    return "\n".join(lines) + "\n"


class _Lines:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        if self.lines and self.lines[-1] == "":
            self.lines.pop()
        self.pos = 0

    @property
    def lineno(self) -> int:
        return self.pos + 1

    def at_end(self) -> bool:
        return self.pos >= len(self.lines)

    def next(self, what: str) -> str:
        if self.at_end():
            raise ParseError(f"unexpected end of input, expected {what}", self.lineno)
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect(self, literal: str) -> None:
        line = self.next(repr(literal))
        if line != literal:
            raise ParseError(f"expected {literal!r}, got {line!r}", self.pos)

    def read_n(self) -> int:
        line = self.next("'n=<integer>'")
        m = _N_RE.fullmatch(line)
        if m is None:
            raise ParseError(f"expected 'n=<integer>', got {line!r}", self.pos)
        n = int(m.group(1))
        if n < 3:
            raise ParseError(f"n must be >= 3, got {n}", self.pos)
        return n

    def read_row(self, width: int) -> list:
        line = self.next(f"a row of {width} rationals")
        tokens = line.split(" ")
        if len(tokens) != width:
            raise ParseError(f"expected {width} rationals, got {len(tokens)}", self.pos)
        try:
            return [parse_rational(t) for t in tokens]
        except ParseError as exc:
            raise ParseError(str(exc), self.pos) from None

    def read_matrix(self, nrows: int, ncols: int) -> Matrix:
        return Matrix.from_rows([self.read_row(ncols) for _ in range(nrows)])


def _read_map(src: _Lines) -> LinearMap:
    src.expect(MAP_HEADER)
    n = src.read_n()
    return LinearMap(n, src.read_matrix(dim(n), dim(n)))


def parse_maps(text: str) -> list[LinearMap]:
    """Parse one or more map blocks separated by single blank lines."""
    src = _Lines(text)
    maps = [_read_map(src)]
    while not src.at_end():
        sep = src.next("a blank line")
        if sep != "":
            raise ParseError(f"expected a blank line between maps, got {sep!r}", src.pos)
        maps.append(_read_map(src))
    return maps


def parse_map(text: str) -> LinearMap:
    src = _Lines(text)
    f = _read_map(src)
    if not src.at_end():
        raise ParseError("trailing content after map", src.lineno)
    return f


def parse_decomposition(text: str) -> CanonicalDecomposition:
    src = _Lines(text)
    src.expect(DECOMPOSITION_HEADER)
    n = src.read_n()
    blocks = {}
    for name in ("A", "B", "C"):
        src.expect(name)
        blocks[name] = src.read_matrix(n, n)
    src.expect("zeta")
    zeta = src.read_row(dim(n))
    if not src.at_end():
        raise ParseError("trailing content after decomposition", src.lineno)
    d = CanonicalDecomposition(n, blocks["A"], blocks["B"], blocks["C"], tuple(zeta))
    try:
        d.validate()
    except HeisenbergError as exc:
        raise ParseError(str(exc)) from None
    return d
