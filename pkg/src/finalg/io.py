"""Plain-text formats for Cayley tables and algebra elements.

Cayley table::

    # comments start with '#'
    n theta
    <n rows of n whitespace-separated 0-based indices; row x, column y is x*y>

Element file::

    algebra function 3        # or: algebra matrix 2 / algebra semigroup z2.txt
    1 0                       # one "re im" line per coordinate
    0 2
    -3 0

A relative semigroup path is resolved against the element file's directory.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .algebra import AlgebraElement, StructureAlgebra, make_function_algebra, make_matrix_algebra, make_semigroup_algebra
from .errors import FinalgError
from .semigroup import CayleyTable


class ParseError(FinalgError, ValueError):
    def __init__(self, message: str, path=None, line: int | None = None):
        where = f"{path or '<input>'}:{line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.path = path
        self.line = line


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_table(text: str, path=None) -> CayleyTable:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty Cayley table", path, 1)
    number, header = lines[0]
    parts = header.split()
    try:
        n, theta = (int(p) for p in parts)
    except ValueError:
        raise ParseError(f"header must be 'n theta', got {header!r}", path, number) from None
    if n < 1:
        raise ParseError("table size must be positive", path, number)
    if not 0 <= theta < n:
        raise ParseError(f"identity index {theta} out of range [0, {n})", path, number)
    rows = lines[1:]
    if len(rows) != n:
        line = rows[-1][0] if rows else number
        raise ParseError(f"expected {n} table rows, found {len(rows)}", path, line)
    table = np.empty((n, n), dtype=np.int64)
    for x, (number, line) in enumerate(rows):
        try:
            entries = [int(v) for v in line.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", path, number) from None
        if len(entries) != n:
            raise ParseError(f"row has {len(entries)} entries, expected {n}", path, number)
        for y, v in enumerate(entries):
            if not 0 <= v < n:
                raise ParseError(f"entry ({x}, {y}) = {v} out of range [0, {n})", path, number)
        table[x] = entries
    return CayleyTable(table, theta)


def read_table(path) -> CayleyTable:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read table: {exc}", path) from None
    return parse_table(text, path)


def format_table(t: CayleyTable) -> str:
    rows = [f"{t.n} {t.theta}"] + [" ".join(str(int(v)) for v in row) for row in t.table]
    return "\n".join(rows) + "\n"


def algebra_from_words(words: list[str], base_dir=None, path=None, line=None) -> StructureAlgebra:
    """``["function", "3"]``, ``["matrix", "2"]`` or ``["semigroup", "<table path>"]``."""
    if len(words) != 2:
        raise ParseError(f"algebra spec must be '<kind> <arg>', got {' '.join(words)!r}", path, line)
    kind, arg = words
    if kind in ("function", "matrix"):
        try:
            size = int(arg)
        except ValueError:
            raise ParseError(f"{kind} algebra size must be an integer, got {arg!r}", path, line) from None
        if size < 1:
            raise ParseError(f"{kind} algebra size must be positive", path, line)
        return make_function_algebra(size) if kind == "function" else make_matrix_algebra(size)
    if kind == "semigroup":
        table_path = Path(arg)
        if not table_path.is_absolute() and base_dir is not None:
            table_path = Path(base_dir) / table_path
        return make_semigroup_algebra(read_table(table_path))
    raise ParseError(f"unknown algebra kind {kind!r}", path, line)


def _parse_coord(line: str, path, number) -> complex:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"coordinate line must be 're im', got {line!r}", path, number)
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise ParseError(f"bad number in {line!r}", path, number) from None


def parse_values(text: str, path=None) -> tuple[list[str] | None, np.ndarray]:
    """Optional ``algebra ...`` header words and the coordinate vector."""
    lines = list(_content_lines(text))
    header = None
    if lines and lines[0][1].split()[0] == "algebra":
        header = lines[0][1].split()[1:]
        lines = lines[1:]
    coords = np.array([_parse_coord(line, path, number) for number, line in lines], dtype=np.complex128)
    return header, coords


def read_values(path) -> np.ndarray:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc}", path) from None
    return parse_values(text, path)[1]


def read_element(path, algebra: StructureAlgebra | None = None) -> AlgebraElement:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read element: {exc}", path) from None
    header, coords = parse_values(text, path)
    if algebra is None:
        if header is None:
            raise ParseError("missing 'algebra <kind> <arg>' header", path, 1)
        first = next(_content_lines(text))[0]
        algebra = algebra_from_words(header, path.parent, path, first)
    if coords.size != algebra.dim:
        raise ParseError(f"found {coords.size} coordinates, algebra has dimension {algebra.dim}", path)
    return algebra.element(coords)


def format_real(x: float, digits: int = 17) -> str:
    return f"{float(x) + 0.0:.{digits}g}"


def format_coords(coords) -> str:
    return "".join(f"{format_real(z.real)} {format_real(z.imag)}\n" for z in np.asarray(coords, dtype=np.complex128))


def format_element(a: AlgebraElement, header: str | None = None) -> str:
    head = f"algebra {header}\n" if header else ""
    return head + format_coords(a.coords)
