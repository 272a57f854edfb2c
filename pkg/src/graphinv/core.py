"""Element arithmetic of the graph inverse semigroup I(G).

A nonzero element is stored in normal form as a pair ``(p, q)`` of
co-terminal paths, standing for the word p q*.  ``ZERO`` is the adjoined
zero.  Nothing here needs the graph except parsing and word reduction:
paths carry their own endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .digraph import Digraph, GraphError, Path, concat, strip_prefix

__all__ = [
    "Zero",
    "ZERO",
    "Element",
    "Elem",
    "NotCoterminalError",
    "NotIdempotentError",
    "make_element",
    "vertex_element",
    "edge_element",
    "ghost_element",
    "multiply",
    "product",
    "inverse",
    "is_idempotent",
    "nat_leq",
    "parse_word",
    "reduce_word",
    "format_element",
    "parse_element",
    "parse_path",
]


class NotCoterminalError(GraphError):
    pass


class NotIdempotentError(ValueError):
    pass


class Zero:
    """The zero of I(G).  There is exactly one instance, :data:`ZERO`."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (Zero, ())

    def __mul__(self, other):
        return multiply(self, other)


ZERO = Zero()


@dataclass(frozen=True)
class Element:
    """The nonzero element p q*.  Use :func:`make_element` to construct."""

    p: Path
    q: Path

    def __str__(self):
        return f"{self.p}|{self.q}"

    def __mul__(self, other):
        return multiply(self, other)

    @property
    def range(self) -> str:
        return self.p.range


Elem = Union[Element, Zero]


def make_element(p: Path, q: Path) -> Element:
    if p.range != q.range:
        raise NotCoterminalError(
            f"paths {p} and {q} are not co-terminal ({p.range} != {q.range})"
        )
    return Element(p, q)


def vertex_element(g: Digraph, v: str) -> Element:
    t = g.trivial(v)
    return Element(t, t)


def edge_element(g: Digraph, e: str) -> Element:
    p = g.path(e)
    return Element(p, g.trivial(p.range))


def ghost_element(g: Digraph, e: str) -> Element:
    p = g.path(e)
    return Element(g.trivial(p.range), p)


def multiply(a: Elem, b: Elem) -> Elem:
    if a is ZERO or b is ZERO:
        return ZERO
    t = strip_prefix(b.p, a.q)
    if t is not None:
        return Element(concat(a.p, t), b.q)
    t = strip_prefix(a.q, b.p)
    if t is not None:
        return Element(a.p, concat(b.q, t))
    return ZERO


def product(elements: Iterable[Elem]) -> Elem:
    it = iter(elements)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("empty product") from None
    for x in it:
        acc = multiply(acc, x)
    return acc


def inverse(a: Elem) -> Elem:
    if a is ZERO:
        return ZERO
    return Element(a.q, a.p)


def is_idempotent(a: Elem) -> bool:
    return a is ZERO or a.p == a.q


def nat_leq(a: Elem, b: Elem) -> bool:
    """Natural order on idempotents: pp* <= qq* iff q is an initial part of p."""
    for x in (a, b):
        if not is_idempotent(x):
            raise NotIdempotentError(f"{x} is not an idempotent")
    if a is ZERO:
        return True
    if b is ZERO:
        return False
    return strip_prefix(a.p, b.p) is not None


def parse_word(g: Digraph, word: str | Sequence[str]) -> tuple[Element, ...]:
    """Resolve generator tokens (vertex ids, edge ids, ``e*`` ghosts) to elements."""
    tokens = word.split() if isinstance(word, str) else list(word)
    out = []
    for tok in tokens:
        if tok.endswith("*"):
            name = tok[:-1]
            if not g.has_edge(name):
                raise GraphError(f"unknown ghost edge {tok!r}")
            out.append(ghost_element(g, name))
        elif g.has_vertex(tok):
            out.append(vertex_element(g, tok))
        elif g.has_edge(tok):
            out.append(edge_element(g, tok))
        else:
            raise GraphError(f"unknown token {tok!r}")
    return tuple(out)


def reduce_word(g: Digraph, word: str | Sequence[str]) -> Elem:
    """Normal form of a word over vertices, edges and ghost edges."""
    gens = parse_word(g, word)
    if not gens:
        raise ValueError("empty word")
    return product(gens)


def format_element(a: Elem) -> str:
    return str(a)


def parse_path(g: Digraph, text: str) -> Path:
    if text.startswith("@"):
        return g.trivial(text[1:])
    return g.path(*text.split("."))


def parse_element(g: Digraph, text: str) -> Elem:
    """Inverse of :func:`format_element`: ``0`` or ``p|q``."""
    text = text.strip()
    if text == "0":
        return ZERO
    if text.count("|") != 1:
        raise GraphError(f"malformed element {text!r}; expected 'p|q' or '0'")
    left, right = text.split("|")
    return make_element(parse_path(g, left), parse_path(g, right))
