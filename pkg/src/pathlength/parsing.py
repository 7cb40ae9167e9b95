"""Edge-list and intersection-model text formats."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .atfree import ModelError, check_permutation, check_trapezoids, convex_bipartite_graph
from .graph import Graph, build_graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class DuplicateEdgeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ConvexBipartiteModel:
    u_count: int
    intervals: tuple[tuple[int, int], ...]


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            out.append((number, stripped.split()))
    return out


def _ints(fields: list[str], count: int, line: int, what: str) -> list[int]:
    if len(fields) != count:
        raise ParseError(f"expected {count} integers for {what}, got {len(fields)}", line)
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise ParseError(f"non-integer token in {what}: {' '.join(fields)}", line) from None


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing 'n m' header")
    header_line, header = lines[0]
    n, m = _ints(header, 2, header_line, "header 'n m'")
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else None
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow", where)
    edges = []
    seen = set()
    for line, fields in body:
        u, v = _ints(fields, 2, line, "edge 'u v'")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", line)
        if u == v:
            raise ParseError(f"self-loop at {u}", line)
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {line}: duplicate edge {u} {v}", DuplicateEdgeWarning, stacklevel=2)
        seen.add(key)
        edges.append(key)
    return build_graph(edges, n)


def serialize_graph(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n", *(f"{u} {v}\n" for u, v in g.edges)])


def parse_model(kind: str, text: str):
    """Permutation -> list of labels; trapezoid -> list of (a, b, c, d);
    convex-bipartite -> :class:`ConvexBipartiteModel`."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty model")
    try:
        if kind == "permutation":
            if len(lines) != 1:
                raise ParseError("permutation model must be a single line", lines[1][0])
            line, fields = lines[0]
            return check_permutation(_ints(fields, len(fields), line, "permutation"))
        if kind == "trapezoid":
            return check_trapezoids([_ints(f, 4, line, "trapezoid 'a b c d'") for line, f in lines])
        if kind == "convex-bipartite":
            line, fields = lines[0]
            q, p = _ints(fields, 2, line, "header 'q p'")
            if len(lines) - 1 != p:
                raise ParseError(f"header announces {p} intervals but {len(lines) - 1} follow")
            intervals = tuple(tuple(_ints(f, 2, ln, "interval 'l r'")) for ln, f in lines[1:])
            convex_bipartite_graph(q, intervals)
            return ConvexBipartiteModel(q, intervals)
    except ModelError as exc:
        raise ParseError(str(exc)) from exc
    raise ValueError(f"unknown model kind {kind!r}")


def serialize_model(kind: str, model) -> str:
    if kind == "permutation":
        return " ".join(map(str, model)) + "\n"
    if kind == "trapezoid":
        return "".join(" ".join(map(str, t)) + "\n" for t in model)
    if kind == "convex-bipartite":
        lines = [f"{model.u_count} {len(model.intervals)}"]
        lines += [f"{l} {r}" for l, r in model.intervals]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown model kind {kind!r}")
