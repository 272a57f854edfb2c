"""Finite directed multigraphs, their paths, and a few graph predicates.

Graphs are immutable. Vertices keep their declaration order, and so do
edges; every set-valued result below is returned as a tuple in that
canonical order so that output is reproducible.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Edge",
    "Digraph",
    "Path",
    "GraphError",
    "GraphParseError",
    "InfinitePathSetError",
    "parse_graph",
    "load_graph",
    "concat",
    "strip_prefix",
    "enumerate_paths",
    "paths_from",
    "scc",
    "is_sink",
    "is_acyclic",
    "is_totally_disconnected",
]

ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class InfinitePathSetError(GraphError):
    pass


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    range: str


@dataclass(frozen=True, order=False)
class Path:
    """A directed path.

    ``edges`` is empty for the trivial path at ``source`` (== ``range``).
    Paths are plain values: two paths are equal iff they have the same
    source and the same edge sequence.  Build them through
    :meth:`Digraph.path` / :meth:`Digraph.trivial`, which validate.
    """

    source: str
    range: str
    edges: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    def __str__(self) -> str:
        if not self.edges:
            return "@" + self.source
        return ".".join(self.edges)


@dataclass(frozen=True)
class Digraph:
    vertices: tuple[str, ...]
    edges: Mapping[str, Edge]
    _vindex: Mapping[str, int] = field(repr=False, compare=False, default=None)
    _eindex: Mapping[str, int] = field(repr=False, compare=False, default=None)
    _out: Mapping[str, tuple[str, ...]] = field(repr=False, compare=False, default=None)

    def __init__(self, vertices: Iterable[str], edges: Iterable = ()):
        vertices = tuple(vertices)
        if not vertices:
            raise GraphError("a graph needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise GraphError("duplicate vertex id")
        emap: dict[str, Edge] = {}
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            if e.id in emap:
                raise GraphError(f"duplicate edge id {e.id!r}")
            if e.id in vertices:
                raise GraphError(f"id {e.id!r} names both a vertex and an edge")
            for end in (e.source, e.range):
                if end not in vertices:
                    raise GraphError(f"edge {e.id!r} references undeclared vertex {end!r}")
            emap[e.id] = e
        out: dict[str, list[str]] = {v: [] for v in vertices}
        for e in emap.values():
            out[e.source].append(e.id)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", MappingProxyType(emap))
        object.__setattr__(self, "_vindex", MappingProxyType({v: i for i, v in enumerate(vertices)}))
        object.__setattr__(self, "_eindex", MappingProxyType({e: i for i, e in enumerate(emap)}))
        object.__setattr__(self, "_out", MappingProxyType({v: tuple(es) for v, es in out.items()}))

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and dict(self.edges) == dict(other.edges)

    def __hash__(self):
        return hash((frozenset(self.vertices), frozenset(self.edges.values())))

    def __repr__(self):
        es = ", ".join(f"{e.id}:{e.source}->{e.range}" for e in self.edges.values())
        return f"Digraph({list(self.vertices)}, [{es}])"

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def has_edge(self, e: str) -> bool:
        return e in self._eindex

    def out_edges(self, v: str) -> tuple[str, ...]:
        self._check_vertex(v)
        return self._out[v]

    def successors(self, v: str) -> Iterator[str]:
        for e in self.out_edges(v):
            yield self.edges[e].range

    def _check_vertex(self, v: str) -> None:
        if v not in self._vindex:
            raise GraphError(f"unknown vertex {v!r}")

    def trivial(self, v: str) -> Path:
        self._check_vertex(v)
        return Path(v, v)

    def path(self, *edge_ids: str) -> Path:
        """Path through the given edges; a single vertex id gives the trivial path."""
        if len(edge_ids) == 1 and edge_ids[0] in self._vindex:
            return self.trivial(edge_ids[0])
        if not edge_ids:
            raise GraphError("empty edge list; use trivial(v)")
        for e in edge_ids:
            if e not in self._eindex:
                raise GraphError(f"unknown edge {e!r}")
        for a, b in zip(edge_ids, edge_ids[1:]):
            if self.edges[a].range != self.edges[b].source:
                raise GraphError(f"edges {a!r} and {b!r} are not composable")
        return Path(self.edges[edge_ids[0]].source, self.edges[edge_ids[-1]].range, tuple(edge_ids))

    def path_key(self, p: Path) -> tuple:
        """Sort key: length, then vertex/edge declaration order."""
        if p.is_trivial:
            return (0, self._vindex[p.source])
        return (len(p.edges), tuple(self._eindex[e] for e in p.edges))

    def vertex_key(self, v: str) -> int:
        return self._vindex[v]


def parse_graph(text: str) -> Digraph:
    """Read the line-oriented graph format.

    ``vertex <id>`` and ``edge <id> <source> <range>`` declarations, one per
    line; ``#`` starts a comment.  Declarations may appear in any order.
    """
    vertices: list[str] = []
    vline: dict[str, int] = {}
    edges: list[tuple[int, Edge]] = []
    eline: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "vertex" and len(args) == 1:
            pass
        elif kind == "edge" and len(args) == 3:
            pass
        else:
            raise GraphParseError(lineno, f"malformed declaration {line!r}")
        for a in args:
            if not ID_RE.match(a):
                raise GraphParseError(lineno, f"invalid id {a!r}")
        ident = args[0]
        if ident in vline or ident in eline:
            raise GraphParseError(lineno, f"duplicate id {ident!r}")
        if kind == "vertex":
            vline[ident] = lineno
            vertices.append(ident)
        else:
            eline[ident] = lineno
            edges.append((lineno, Edge(*args)))
    if not vertices:
        raise GraphParseError(max(1, len(text.splitlines())), "no vertices declared")
    for lineno, e in edges:
        for end in (e.source, e.range):
            if end not in vline:
                raise GraphParseError(lineno, f"edge {e.id!r} references undeclared vertex {end!r}")
    return Digraph(vertices, (e for _, e in edges))


def load_graph(path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def concat(p: Path, q: Path) -> Path | None:
    """``p`` followed by ``q``, or None when range(p) != source(q)."""
    if p.range != q.source:
        return None
    if not q.edges:
        return p
    if not p.edges:
        return q
    return Path(p.source, q.range, p.edges + q.edges)


def strip_prefix(p: Path, q: Path) -> Path | None:
    """The path ``t`` with ``p == concat(q, t)``, or None if ``q`` is not an initial part of ``p``."""
    if p.source != q.source:
        return None
    n = len(q.edges)
    if p.edges[:n] != q.edges:
        return None
    return Path(q.range, p.range, p.edges[n:])


def paths_from(g: Digraph, v: str, max_len: int | None = None) -> tuple[Path, ...]:
    """All paths starting at ``v`` with at most ``max_len`` edges.

    With ``max_len=None`` every path is returned, which requires that no
    cycle is reachable from ``v``.
    """
    g._check_vertex(v)
    if max_len is None and not _reach_acyclic(g, [v]):
        raise InfinitePathSetError(f"infinite path set: a cycle is reachable from {v!r}")
    found = []
    stack = [g.trivial(v)]
    while stack:
        p = stack.pop()
        found.append(p)
        if max_len is not None and len(p) >= max_len:
            continue
        for e in g.out_edges(p.range):
            stack.append(Path(p.source, g.edges[e].range, p.edges + (e,)))
    return tuple(sorted(found, key=g.path_key))


def enumerate_paths(g: Digraph, max_len: int | None = None) -> tuple[Path, ...]:
    """Every path of ``g`` with at most ``max_len`` edges, trivial paths included.

    ``max_len=None`` means unbounded and is only allowed on acyclic graphs.
    """
    if max_len is not None and max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if max_len is None and not is_acyclic(g):
        raise InfinitePathSetError("infinite path set: the graph has a directed cycle")
    out = itertools.chain.from_iterable(paths_from(g, v, max_len) for v in g.vertices)
    return tuple(sorted(out, key=g.path_key))


def scc(g: Digraph) -> tuple[tuple[str, ...], ...]:
    """Strongly connected components (iterative Tarjan).

    Blocks are ordered by their earliest-declared vertex and list their
    vertices in declaration order.
    """
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = itertools.count()
    blocks = []

    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(g.successors(root)))]
        while work:
            v, it = work[-1]
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(g.successors(w))))
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    block = []
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        block.append(w)
                        if w == v:
                            break
                    blocks.append(tuple(sorted(block, key=g.vertex_key)))
    blocks.sort(key=lambda b: g.vertex_key(b[0]))
    return tuple(blocks)


def is_sink(g: Digraph, v: str) -> bool:
    return not g.out_edges(v)


def is_totally_disconnected(g: Digraph) -> bool:
    return not g.edges


def _reach_acyclic(g: Digraph, roots: list[str]) -> bool:
    # colour DFS: 1 = on the current branch, 2 = finished
    colour: dict[str, int] = {}
    for root in roots:
        if root in colour:
            continue
        colour[root] = 1
        work = [(root, iter(g.successors(root)))]
        while work:
            v, it = work[-1]
            for w in it:
                c = colour.get(w)
                if c == 1:
                    return False
                if c is None:
                    colour[w] = 1
                    work.append((w, iter(g.successors(w))))
                    break
            else:
                colour[v] = 2
                work.pop()
    return True


def is_acyclic(g: Digraph) -> bool:
    return _reach_acyclic(g, list(g.vertices))
