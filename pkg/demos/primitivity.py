"""
Primitivity and local submonoids
================================

I(G) is primitive exactly when G has no edges, and the local submonoid
v I(G) v is {0, v} exactly when v is a sink.  Both are checked here against
a direct scan of the semigroup.
"""

from pathlib import Path

from graphinv import (
    enumerate_semigroup,
    is_primitive,
    is_primitive_by_definition,
    is_sink,
    load_graph,
    local_submonoid,
    vertex_element,
)

HERE = Path(__file__).parent

for name in ["edgeless3", "p2", "p3"]:
    g = load_graph(HERE / "graphs" / f"{name}.graph")
    scan = is_primitive_by_definition(enumerate_semigroup(g))
    print(f"{name:10} primitive: {is_primitive(g)}  (scan agrees: {scan == is_primitive(g)})")

# %%
g = load_graph(HERE / "graphs" / "p3.graph")
for v in g.vertices:
    m = local_submonoid(g, vertex_element(g, v))
    print(f"{v}: sink={is_sink(g, v)!s:5}  {' '.join(map(str, m))}")

# %%
# For a loop the local submonoid is the whole bicyclic monoid; show a piece.
loop = load_graph(HERE / "graphs" / "loop.graph")
print(len(local_submonoid(loop, vertex_element(loop, "v"), bound=2)), "elements up to length 2")
