"""
Arithmetic in a graph inverse semigroup
=======================================

Every nonzero element of I(G) is a pair of paths ``p|q`` ending at the same
vertex, read as p q*.  Words over vertices, edges and ghost edges reduce to
that form.
"""

from pathlib import Path

from graphinv import (
    Digraph,
    enumerate_semigroup,
    inverse,
    load_graph,
    multiply,
    parse_element,
    reduce_word,
)

HERE = Path(__file__).parent

# The single edge u -> v.  Its semigroup has six elements.
g = load_graph(HERE / "graphs" / "p2.graph")
t = enumerate_semigroup(g)
print(len(t), "elements:", " ".join(map(str, t)))

# e* e collapses to the vertex v, e e* is an idempotent, e* e* vanishes.
for word in ["e* e", "e e*", "e* e*", "u e v"]:
    print(f"{word:8} -> {reduce_word(g, word)}")

# Elements can also be written directly and multiplied.
a = parse_element(g, "e|@v")
print("inverse of", a, "is", inverse(a))
print("a a^-1 a =", multiply(multiply(a, inverse(a)), a))

# %%
# One vertex with one loop gives the bicyclic monoid.  Index e^m (e^n)*
# by (m, n); products follow (m - n + k, q - p + k) with k = max(n, p).
loop = Digraph(["v"], [("e", "v", "v")])


def power(m, n):
    word = ["e"] * m + ["e*"] * n
    return reduce_word(loop, word or ["v"])


x, y = power(2, 1), power(3, 4)
print(x, "*", y, "=", multiply(x, y))

# %%
# Cyclic graphs have infinite semigroups, so enumeration needs a bound.
print(len(enumerate_semigroup(loop, bound=3)), "elements with paths of length <= 3")
