"""Whole-semigroup analyses of I(G).

Cyclic graphs give infinite semigroups, so enumeration takes a bound on
path length.  A table built with ``bound=None`` is exact and requires an
acyclic graph.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import (
    ZERO,
    Elem,
    Element,
    NotIdempotentError,
    is_idempotent,
    multiply,
    nat_leq,
)
from .digraph import (
    Digraph,
    InfinitePathSetError,
    enumerate_paths,
    is_totally_disconnected,
    is_sink,
    paths_from,
    scc,
    concat,
)

__all__ = [
    "InfiniteSemigroupError",
    "SemigroupTable",
    "HasseDiagram",
    "GreenRelation",
    "MinimalIdempotents",
    "EggBox",
    "element_key",
    "enumerate_semigroup",
    "multiplication_table",
    "idempotent_lattice",
    "maximal_idempotents",
    "minimal_nonzero_idempotents",
    "is_primitive",
    "is_primitive_by_definition",
    "local_submonoid",
    "is_local_submonoid_trivial",
    "green_related",
    "green_classes",
    "egg_boxes",
    "eggbox_dot",
    "eggbox_json",
]


class InfiniteSemigroupError(InfinitePathSetError):
    pass


def element_key(g: Digraph, a: Elem) -> tuple:
    """Canonical order: zero first, then by q, then by p."""
    if a is ZERO:
        return (0,)
    return (1, g.path_key(a.q), g.path_key(a.p))


@dataclass(frozen=True)
class SemigroupTable:
    graph: Digraph
    elements: tuple[Elem, ...]
    bound: int | None  # None: exact

    @property
    def exact(self) -> bool:
        return self.bound is None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {a: i for i, a in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, a: Elem) -> int:
        return self._index[a]

    def idempotents(self) -> tuple[Elem, ...]:
        return tuple(a for a in self.elements if is_idempotent(a))

    def nonzero(self) -> tuple[Element, ...]:
        return tuple(a for a in self.elements if a is not ZERO)


def enumerate_semigroup(g: Digraph, bound: int | None = None) -> SemigroupTable:
    """All elements pq* whose paths have at most ``bound`` edges, plus zero."""
    try:
        paths = enumerate_paths(g, bound)
    except InfinitePathSetError:
        raise InfiniteSemigroupError(
            "I(G) is infinite for a graph with a directed cycle; give a bound"
        ) from None
    by_range: dict[str, list] = {v: [] for v in g.vertices}
    for p in paths:
        by_range[p.range].append(p)
    elements: list[Elem] = [ZERO]
    for group in by_range.values():
        elements.extend(Element(p, q) for p in group for q in group)
    elements.sort(key=lambda a: element_key(g, a))
    return SemigroupTable(g, tuple(elements), bound)


def multiplication_table(t: SemigroupTable) -> np.ndarray:
    """Cayley table as element indices; -1 marks products outside a bounded table."""
    n = len(t)
    idx = t._index
    out = np.full((n, n), -1, dtype=np.int64)
    for i, a in enumerate(t.elements):
        for j, b in enumerate(t.elements):
            out[i, j] = idx.get(multiply(a, b), -1)
    return out


@dataclass(frozen=True)
class HasseDiagram:
    nodes: tuple[Elem, ...]
    covers: tuple[tuple[Elem, Elem], ...]  # (lower, upper)

    def to_dot(self, name: str = "E") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for a in self.nodes:
            lines.append(f'  "{a}";')
        if ZERO in self.nodes:
            lines.append('  { rank=min; "0"; }')
        for lo, hi in self.covers:
            lines.append(f'  "{lo}" -> "{hi}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "nodes": [str(a) for a in self.nodes],
            "covers": [[str(lo), str(hi)] for lo, hi in self.covers],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def idempotent_lattice(t: SemigroupTable) -> HasseDiagram:
    nodes = t.idempotents()
    n = len(nodes)
    leq = np.array([[nat_leq(a, b) for b in nodes] for a in nodes], dtype=bool).reshape(n, n)
    strict = leq & ~np.eye(n, dtype=bool)
    via = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
    cover = strict & ~via
    covers = tuple((nodes[i], nodes[j]) for i, j in zip(*np.nonzero(cover)))
    return HasseDiagram(nodes, covers)


def maximal_idempotents(t: SemigroupTable) -> tuple[Elem, ...]:
    ids = [a for a in t.idempotents() if a is not ZERO]
    return tuple(a for a in ids if not any(b != a and nat_leq(a, b) for b in ids))


class MinimalIdempotents(NamedTuple):
    elements: tuple[Elem, ...]
    truncated: bool  # True when read off a bounded table; may be artefacts of the bound


def minimal_nonzero_idempotents(t: SemigroupTable) -> MinimalIdempotents:
    ids = [a for a in t.idempotents() if a is not ZERO]
    mins = tuple(a for a in ids if not any(b != a and nat_leq(b, a) for b in ids))
    return MinimalIdempotents(mins, not t.exact)


def is_primitive(g: Digraph) -> bool:
    """I(G) is primitive exactly when G has no edges."""
    return is_totally_disconnected(g)


def is_primitive_by_definition(t: SemigroupTable) -> bool:
    """Scan the table: is every nonzero idempotent minimal among nonzero idempotents?

    On a bounded table the bound must be at least 1, otherwise no
    comparabilities are visible.
    """
    if t.bound == 0 and t.graph.edges:
        raise ValueError("bound 0 hides every comparability; use bound >= 1")
    ids = [a for a in t.idempotents() if a is not ZERO]
    return all(not (b != a and nat_leq(b, a)) for a in ids for b in ids)


def local_submonoid(g: Digraph, e: Elem, bound: int | None = None) -> tuple[Elem, ...]:
    """Elements of e I(G) e for a nonzero idempotent e = pp*.

    These are zero and every (p mu, p nu) with mu, nu co-terminal paths out
    of r(p), each of at most ``bound`` edges.  ``bound=None`` needs the part
    of the graph reachable from r(p) to be acyclic.
    """
    if e is ZERO or not is_idempotent(e):
        raise NotIdempotentError(f"{e} is not a nonzero idempotent")
    try:
        tails = paths_from(g, e.p.range, bound)
    except InfinitePathSetError:
        raise InfiniteSemigroupError(
            f"local submonoid at {e} is infinite; give a bound"
        ) from None
    out: list[Elem] = [ZERO]
    for mu in tails:
        for nu in tails:
            if mu.range == nu.range:
                out.append(Element(concat(e.p, mu), concat(e.p, nu)))
    out.sort(key=lambda a: element_key(g, a))
    return tuple(out)


def is_local_submonoid_trivial(g: Digraph, v: str) -> bool:
    return is_sink(g, v)


class GreenRelation(enum.Enum):
    L = "L"
    R = "R"
    H = "H"
    D = "D"
    J = "J"

    @classmethod
    def coerce(cls, rel) -> "GreenRelation":
        if isinstance(rel, cls):
            return rel
        try:
            return cls(str(rel).upper())
        except ValueError:
            raise ValueError(f"unknown Green relation {rel!r}; expected one of L R H D J") from None


def _green_key(a: Elem, rel: GreenRelation, block_of: dict | None):
    if a is ZERO:
        return ZERO
    if rel is GreenRelation.L:
        return a.q
    if rel is GreenRelation.R:
        return a.p
    if rel is GreenRelation.H:
        return a
    if rel is GreenRelation.D:
        return a.p.range
    return block_of[a.p.range]


def _scc_index(g: Digraph) -> dict[str, int]:
    return {v: i for i, block in enumerate(scc(g)) for v in block}


def green_related(a: Elem, b: Elem, rel, graph: Digraph | None = None) -> bool:
    """Green's relations in graph terms.

    L: same q; R: same p; H: equal; D: r(p) equal; J: r(p) in the same
    strongly connected component (needs ``graph``).  Zero is related only
    to itself.
    """
    rel = GreenRelation.coerce(rel)
    block_of = None
    if rel is GreenRelation.J:
        if graph is None:
            raise ValueError("the J relation needs the graph")
        block_of = _scc_index(graph)
    return _green_key(a, rel, block_of) == _green_key(b, rel, block_of)


def green_classes(t: SemigroupTable, rel) -> tuple[tuple[Elem, ...], ...]:
    """Partition of the table's elements, blocks in order of first appearance."""
    rel = GreenRelation.coerce(rel)
    block_of = _scc_index(t.graph) if rel is GreenRelation.J else None
    blocks: dict = {}
    for a in t.elements:
        blocks.setdefault(_green_key(a, rel, block_of), []).append(a)
    return tuple(tuple(b) for b in blocks.values())


@dataclass(frozen=True)
class EggBox:
    """One D-class laid out with R-classes as rows and L-classes as columns."""

    rows: tuple  # p-components
    cols: tuple  # q-components
    cells: tuple[tuple[Elem | None, ...], ...]

    @property
    def elements(self) -> tuple[Elem, ...]:
        return tuple(c for row in self.cells for c in row if c is not None)


def egg_boxes(t: SemigroupTable) -> tuple[EggBox, ...]:
    boxes = []
    for block in green_classes(t, GreenRelation.D):
        if block == (ZERO,):
            boxes.append(EggBox((None,), (None,), ((ZERO,),)))
            continue
        rows = list(dict.fromkeys(a.p for a in block))
        cols = list(dict.fromkeys(a.q for a in block))
        rows.sort(key=t.graph.path_key)
        cols.sort(key=t.graph.path_key)
        have = set(block)
        cells = tuple(
            tuple(Element(p, q) if Element(p, q) in have else None for q in cols)
            for p in rows
        )
        boxes.append(EggBox(tuple(rows), tuple(cols), cells))
    return tuple(boxes)


def eggbox_dot(t: SemigroupTable, name: str = "D") -> str:
    lines = [f"digraph {name} {{", "  node [shape=plaintext];"]
    for i, box in enumerate(egg_boxes(t)):
        rows = []
        for row in box.cells:
            tds = "".join(f"<TD>{'' if c is None else c}</TD>" for c in row)
            rows.append(f"<TR>{tds}</TR>")
        table = '<TABLE BORDER="0" CELLBORDER="1" CELLSPACING="0">' + "".join(rows) + "</TABLE>"
        lines.append(f"  d{i} [label=<{table}>];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def eggbox_json(t: SemigroupTable) -> str:
    classes = []
    for box in egg_boxes(t):
        classes.append({
            "elements": [str(a) for a in box.elements],
            "rows": [None if p is None else str(p) for p in box.rows],
            "cols": [None if q is None else str(q) for q in box.cols],
            "cells": [[None if c is None else str(c) for c in row] for row in box.cells],
        })
    return json.dumps({"classes": classes}, indent=2)
