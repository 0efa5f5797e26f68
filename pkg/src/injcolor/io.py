"""Graph file formats (graph6, edge list, DIMACS) and result serialisation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .coloring import EdgeColoring
from .errors import FormatViolation, GraphError, ParseError
from .graph import Graph

FORMATS = ("graph6", "edgelist", "dimacs")


# -- graph6 --------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Standard graph6 string (no header, no trailing newline)."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = [chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)]
    return _encode_n(g.n) + "".join(chunks)


def from_graph6(text: str, line: int | None = None) -> Graph:
    """Decode one graph6 string.  Edges come out in column order (by larger
    endpoint, then smaller)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", line, 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range", line, pos)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, start = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n, start = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        start = 8
    else:
        raise ParseError("truncated graph6 vertex count", line, 0)
    need = n * (n - 1) // 2
    body = vals[start:]
    if len(body) != (need + 5) // 6:
        raise FormatViolation(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}", line, start)
    bits = [(v >> (5 - k)) & 1 for v in body for k in range(6)]
    if any(bits[need:]):
        raise FormatViolation("non-zero graph6 padding bits", line, len(s) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# -- edge list and DIMACS -------------------------------------------------------------

def _ints(tokens: Sequence[str], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line) from None


def _build(n: int, pairs: list[tuple[int, int]]) -> Graph:
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise FormatViolation(str(exc)) from exc


def parse_edgelist(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` with 0-based vertices."""
    rows = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    rows = [(i, t) for i, t in rows if t and not t[0].startswith("#")]
    if not rows:
        raise ParseError("missing 'n m' header", 1)
    line, head = rows[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", line)
    n, m = _ints(head, line)
    pairs = []
    for line, toks in rows[1:]:
        if len(toks) != 2:
            raise ParseError("edge lines must be 'u v'", line)
        u, v = _ints(toks, line)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatViolation(f"vertex out of range 0..{n - 1}", line)
        pairs.append((u, v))
    if len(pairs) != m:
        raise FormatViolation(f"header announces {m} edges, found {len(pairs)}", line)
    return _build(n, pairs)


def parse_dimacs(text: str) -> Graph:
    """``p edge n m`` then ``e u v`` lines, vertices numbered from 1."""
    n = m = None
    pairs = []
    for i, ln in enumerate(text.splitlines(), start=1):
        toks = ln.split()
        if not toks or toks[0] == "c":
            continue
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] not in ("edge", "col"):
                raise ParseError("problem line must be 'p edge n m'", i)
            if n is not None:
                raise FormatViolation("second problem line", i)
            n, m = _ints(toks[2:], i)
        elif toks[0] == "e":
            if n is None:
                raise FormatViolation("edge before problem line", i)
            if len(toks) != 3:
                raise ParseError("edge lines must be 'e u v'", i)
            u, v = _ints(toks[1:], i)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex outside 1..{n} (DIMACS is 1-indexed)", i)
            pairs.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {toks[0]!r}", i)
    if n is None:
        raise ParseError("missing problem line")
    if len(pairs) != m:
        raise FormatViolation(f"problem line announces {m} edges, found {len(pairs)}")
    return _build(n, pairs)


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, found {len(lines)}")
        return from_graph6(lines[0], 1)
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])
    if fmt == "dimacs":
        return "".join([f"p edge {g.n} {g.m}\n"] + [f"e {u + 1} {v + 1}\n" for u, v in g.edges])
    raise ValueError(f"unknown format {fmt!r}")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".dimacs", ".col"):
        return "dimacs"
    return "edgelist"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    text = Path(path).read_text()
    return parse_graph(text, fmt or guess_format(path))


# -- results --------------------------------------------------------------------------

@dataclass
class Result:
    n: int
    m: int
    method: str
    index_or_bound: int | None
    colors: tuple[int, ...]
    valid: bool
    clique: tuple[int, ...] = ()
    witness: tuple | None = None
    edges: tuple[tuple[int, int], ...] = field(default=(), repr=False)


def make_result(g: Graph, method: str, value: int | None, coloring, valid: bool,
                clique: Sequence[int] = (), witness=None) -> Result:
    colors = coloring.colors if isinstance(coloring, EdgeColoring) else tuple(coloring)
    if colors and all(isinstance(c, int) and c > 0 for c in colors):
        colors = EdgeColoring(colors).normalized().colors
    return Result(g.n, g.m, method, value, tuple(colors), valid, tuple(clique),
                  None if witness is None else tuple(witness), g.edges)


def write_result(result: Result, schema: str = "json") -> bytes:
    if schema == "json":
        doc = {
            "graph": {"n": result.n, "m": result.m},
            "method": result.method,
            "index_or_bound": result.index_or_bound,
            "colors": list(result.colors),
            "valid": result.valid,
            "certificates": {"clique": list(result.clique)},
        }
        if result.witness is not None:
            doc["witness"] = list(result.witness)
        return (json.dumps(doc) + "\n").encode()
    if schema == "tsv":
        rows = ["edge_u\tedge_v\tcolor"]
        rows += [f"{u}\t{v}\t{c}" for (u, v), c in zip(result.edges, result.colors)]
        return ("\n".join(rows) + "\n").encode()
    raise ValueError(f"unknown schema {schema!r}")


def write_mad(value: Fraction) -> bytes:
    return (json.dumps({"mad": {"num": value.numerator, "den": value.denominator}}) + "\n").encode()


def parse_coloring(text: str) -> list:
    """Colours from a JSON result (its ``colors`` array) or whitespace-separated values."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        try:
            doc = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON colouring: {exc.msg}", exc.lineno, exc.pos) from None
        values = doc["colors"] if isinstance(doc, dict) else doc
        if not isinstance(values, list):
            raise FormatViolation("'colors' must be a list")
        return values
    out = []
    for i, ln in enumerate(s.splitlines(), start=1):
        for tok in ln.split():
            try:
                out.append(int(tok))
            except ValueError:
                raise ParseError(f"colour {tok!r} is not an integer", i) from None
    return out
