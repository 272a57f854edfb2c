"""
The semilattice of idempotents
==============================

Idempotents are 0 and the elements pp*.  One lies below another when the
upper path is an initial segment of the lower one, so each vertex heads its
own chain in a chain graph.
"""

from graphinv import Digraph, enumerate_semigroup, idempotent_lattice
from graphinv import maximal_idempotents, minimal_nonzero_idempotents


def chain(n):
    vs = [f"v{i}" for i in range(1, n + 1)]
    return Digraph(vs, [(f"e{i}", vs[i - 1], vs[i]) for i in range(1, n)])


g = chain(4)
t = enumerate_semigroup(g)
h = idempotent_lattice(t)
print(len(h.nodes), "idempotents")
for lo, hi in h.covers:
    print(f"  {lo}  <  {hi}")

print("maximal:", *maximal_idempotents(t))
print("minimal nonzero:", *minimal_nonzero_idempotents(t).elements)

# %%
# The diagram as Graphviz text, 0 at the bottom.  Pipe it into ``dot -Tsvg``.
print(h.to_dot())

# %%
# With a loop the chain is infinite; a bounded table shows its top part and
# marks the minimal elements as truncated.
loop = Digraph(["v"], [("e", "v", "v")])
t = enumerate_semigroup(loop, bound=4)
mins = minimal_nonzero_idempotents(t)
print("bottom of the visible chain:", *mins.elements, "(truncated)" if mins.truncated else "")
