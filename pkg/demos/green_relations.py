"""
Green's relations
=================

L compares the second path, R the first, D the common end vertex and J the
strongly connected component of that vertex.  H is always trivial.
"""

from pathlib import Path

from graphinv import (
    egg_boxes,
    enumerate_semigroup,
    green_classes,
    green_related,
    load_graph,
    vertex_element,
)

HERE = Path(__file__).parent

g = load_graph(HERE / "graphs" / "p3.graph")
t = enumerate_semigroup(g)
for rel in "LRHDJ":
    classes = green_classes(t, rel)
    print(rel, "->", len(classes), "classes of sizes", [len(c) for c in classes])

# %%
# Each D-class is a square egg-box: rows are R-classes, columns L-classes,
# and every cell holds exactly one element.
for box in egg_boxes(t):
    for row in box.cells:
        print("  " + "  ".join(f"{str(c):12}" for c in row))
    print()

# %%
# On a two-cycle u <-> v the vertices are J-related but not D-related.
cyc = load_graph(HERE / "graphs" / "twocycle.graph")
u, v = vertex_element(cyc, "u"), vertex_element(cyc, "v")
print("u J v:", green_related(u, v, "J", cyc))
print("u D v:", green_related(u, v, "D"))
