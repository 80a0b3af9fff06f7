"""Matrix Market coordinate files as bipartite graphs, plus the weight and
matching text formats used by the command line tool.

Rows become S vertices and columns become T vertices. Matrix values are
ignored; only the sparsity pattern is kept.
"""

from __future__ import annotations

import io
import os
from typing import BinaryIO, Iterable, TextIO, Union

from .graph import BipartiteGraph, GraphError, VertexWeights, build_graph
from .matching import Matching

FIELDS = {"real", "integer", "pattern"}


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _lines(stream) -> Iterable[str]:
    for raw in stream:
        yield raw.decode("utf-8", errors="replace") if isinstance(raw, bytes) else raw


def parse_matrix_market(stream: Union[BinaryIO, TextIO]) -> BipartiteGraph:
    lines = _lines(stream)
    lineno = 0
    header = None
    for header in lines:
        lineno += 1
        break
    if header is None:
        raise ParseError("empty input", 1)
    parts = header.split()
    if len(parts) != 5 or parts[0] != "%%MatrixMarket" or parts[1].lower() != "matrix":
        raise ParseError("expected '%%MatrixMarket matrix coordinate <field> general'", lineno)
    fmt, field, symmetry = (p.lower() for p in parts[2:])
    if fmt != "coordinate":
        raise ParseError(f"unsupported format '{fmt}', only coordinate", lineno)
    if field not in FIELDS:
        raise ParseError(f"unsupported field '{field}'", lineno)
    if symmetry != "general":
        raise ParseError(f"symmetry '{symmetry}' not supported; expected a general "
                         "rectangular matrix", lineno)
    want = 2 if field == "pattern" else 3

    dims = None
    for line in lines:
        lineno += 1
        s = line.strip()
        if not s or s.startswith("%"):
            continue
        toks = s.split()
        try:
            dims = tuple(int(x) for x in toks)
        except ValueError:
            raise ParseError(f"bad size line '{s}'", lineno) from None
        if len(dims) != 3 or min(dims) < 0:
            raise ParseError(f"bad size line '{s}'", lineno)
        break
    if dims is None:
        raise ParseError("missing size line", lineno)
    n_rows, n_cols, nnz = dims

    edges = []
    for line in lines:
        lineno += 1
        s = line.strip()
        if not s or s.startswith("%"):
            continue
        toks = s.split()
        if len(toks) != want:
            raise ParseError(f"expected {want} fields, got {len(toks)}", lineno)
        try:
            i, j = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError(f"bad index in '{s}'", lineno) from None
        if not (1 <= i <= n_rows and 1 <= j <= n_cols):
            raise ParseError(f"entry ({i}, {j}) outside {n_rows} x {n_cols}", lineno)
        if len(edges) == nnz:
            raise ParseError(f"more than the declared {nnz} entries", lineno)
        edges.append((i - 1, j - 1))
    if len(edges) != nnz:
        raise ParseError(f"declared {nnz} entries, found {len(edges)}", lineno)
    try:
        return build_graph(n_rows, n_cols, edges)
    except GraphError as exc:  # pragma: no cover - bounds already checked
        raise ParseError(str(exc)) from exc


def read_matrix_market(path: Union[str, os.PathLike]) -> BipartiteGraph:
    with open(path, "rb") as fh:
        return parse_matrix_market(fh)


def write_matrix_market(g: BipartiteGraph, stream: TextIO, comment: str | None = None) -> None:
    stream.write("%%MatrixMarket matrix coordinate pattern general\n")
    if comment:
        for c in comment.splitlines():
            stream.write(f"% {c}\n")
    stream.write(f"{g.n_s} {g.n_t} {g.m}\n")
    for s, t in g.edges():
        stream.write(f"{s + 1} {t + 1}\n")


def dumps_matrix_market(g: BipartiteGraph) -> str:
    buf = io.StringIO()
    write_matrix_market(g, buf)
    return buf.getvalue()


def read_weights(stream: TextIO, n_s: int, n_t: int) -> VertexWeights:
    """One non-negative integer per line: all S weights, then all T weights."""
    vals = []
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            x = int(s)
        except ValueError:
            raise ParseError(f"bad weight '{s}'", lineno) from None
        if x < 0:
            raise ParseError(f"negative weight {x}", lineno)
        vals.append(x)
    if len(vals) != n_s + n_t:
        raise ParseError(f"expected {n_s + n_t} weights ({n_s} S + {n_t} T), got {len(vals)}")
    return VertexWeights(vals[:n_s], vals[n_s:])


def write_weights(w: VertexWeights, stream: TextIO) -> None:
    for x in w.s:
        stream.write(f"{x}\n")
    for x in w.t:
        stream.write(f"{x}\n")


def write_matching(m: Matching, stream: TextIO, weight: int) -> None:
    for s, t in m.edges():
        stream.write(f"{s} {t}\n")
    stream.write(f"# weight={weight} cardinality={m.cardinality}\n")


def read_matching(stream: TextIO, n_s: int, n_t: int) -> Matching:
    """Parse ``s t`` lines (0-based). ``#`` lines are skipped.

    Indices are range-checked; consistency is left to ``validate_matching``.
    """
    m = Matching.empty(n_s, n_t)
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        toks = s.split()
        try:
            a, b = (int(x) for x in toks)
        except ValueError:
            raise ParseError(f"expected 's t', got '{s}'", lineno) from None
        if not (0 <= a < n_s and 0 <= b < n_t):
            raise ParseError(f"pair ({a}, {b}) out of range", lineno)
        m.mate_s[a] = b
        m.mate_t[b] = a
    return m
