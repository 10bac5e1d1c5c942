"""Plain-text graph and budget files.

Graph file::

    # comment
    graph 4
    edge 0 2 red
    edge 1 3 blue
    color green        # declares a color no edge uses

Budget file::

    cap red 1
    cap blue 2

Color names are arbitrary non-whitespace tokens; they are numbered in the
order they first appear in the graph file.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FChromaticError, ParseError
from .graph import ColorBudget, EdgeColoredGraph, build_graph


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(token: str, lineno: int, what: str, path: str | None) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", lineno, path) from None


def parse_graph(text: str, path: str | None = None) -> EdgeColoredGraph:
    vertex_count = None
    ordinals: dict[str, int] = {}
    edges = []
    for lineno, tokens in _records(text):
        kind = tokens[0]
        if vertex_count is None:
            if kind != "graph" or len(tokens) != 2:
                raise ParseError("first record must be 'graph <vertex_count>'", lineno, path)
            vertex_count = _int(tokens[1], lineno, "vertex count", path)
            if vertex_count < 0:
                raise ParseError("vertex count must be non-negative", lineno, path)
            continue
        if kind == "edge":
            if len(tokens) != 4:
                raise ParseError("expected 'edge <u> <v> <color>'", lineno, path)
            u = _int(tokens[1], lineno, "endpoint", path)
            v = _int(tokens[2], lineno, "endpoint", path)
            c = ordinals.setdefault(tokens[3], len(ordinals))
            edges.append((lineno, (u, v, c)))
        elif kind == "color":
            if len(tokens) != 2:
                raise ParseError("expected 'color <name>'", lineno, path)
            ordinals.setdefault(tokens[1], len(ordinals))
        elif kind == "graph":
            raise ParseError("duplicate 'graph' record", lineno, path)
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno, path)
    if vertex_count is None:
        raise ParseError("missing 'graph <vertex_count>' record", None, path)
    names = {c: name for name, c in ordinals.items()}
    try:
        return build_graph(vertex_count, [e for _, e in edges], names.keys(), names)
    except FChromaticError:
        pass
    # locate the first offending record so the error can name its line
    seen: set[tuple[int, int]] = set()
    for lineno, (u, v, c) in edges:
        try:
            build_graph(vertex_count, [(u, v, c)], names.keys())
        except FChromaticError as exc:
            raise ParseError(str(exc), lineno, path) from exc
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"multiple edges between {key[0]} and {key[1]}", lineno, path)
        seen.add(key)
    raise AssertionError("unreachable: graph failed validation but no record did")


def format_graph(G: EdgeColoredGraph) -> str:
    # declaring every color up front pins the ordinals on re-read
    lines = [f"graph {G.vertex_count}"]
    lines += [f"color {G.color_name(c)}" for c in G.colors]
    lines += [f"edge {e.u} {e.v} {G.color_name(e.color)}" for e in G.edges]
    return "\n".join(lines) + "\n"


def parse_budget(text: str, G: EdgeColoredGraph, path: str | None = None) -> ColorBudget:
    """Parse cap records against the colors of ``G``. Completeness is not checked here."""
    by_name = {G.color_name(c): c for c in G.colors}
    caps: dict[int, int] = {}
    for lineno, tokens in _records(text):
        if tokens[0] != "cap" or len(tokens) != 3:
            raise ParseError("expected 'cap <color> <non-negative integer>'", lineno, path)
        name = tokens[1]
        if name not in by_name:
            raise ParseError(f"color {name!r} is not declared by the graph", lineno, path)
        cap = _int(tokens[2], lineno, "cap", path)
        if cap < 0:
            raise ParseError("cap must be non-negative", lineno, path)
        if by_name[name] in caps:
            raise ParseError(f"duplicate cap for color {name!r}", lineno, path)
        caps[by_name[name]] = cap
    return ColorBudget(caps)


def parse_palette(text: str, path: str | None = None) -> tuple[list[str], dict[str, int]]:
    """Read a budget file on its own: the color names in order and their caps."""
    order: list[str] = []
    caps: dict[str, int] = {}
    for lineno, tokens in _records(text):
        if tokens[0] != "cap" or len(tokens) != 3:
            raise ParseError("expected 'cap <color> <non-negative integer>'", lineno, path)
        cap = _int(tokens[2], lineno, "cap", path)
        if cap < 0:
            raise ParseError("cap must be non-negative", lineno, path)
        if tokens[1] in caps:
            raise ParseError(f"duplicate cap for color {tokens[1]!r}", lineno, path)
        order.append(tokens[1])
        caps[tokens[1]] = cap
    return order, caps


def format_budget(f: ColorBudget, G: EdgeColoredGraph) -> str:
    return "".join(f"cap {G.color_name(c)} {f[c]}\n" for c in G.colors if c in f)


def read_graph(path: str | Path) -> EdgeColoredGraph:
    return parse_graph(Path(path).read_text(), str(path))


def read_budget(path: str | Path, G: EdgeColoredGraph) -> ColorBudget:
    return parse_budget(Path(path).read_text(), G, str(path))


def write_graph(G: EdgeColoredGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(G))
