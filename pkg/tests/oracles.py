"""Independent reference computations used by the tests.

None of these call into ``graphinv.core.multiply`` or the path helpers of
``graphinv.digraph``; they work from raw edge records.
"""

import itertools

from graphinv import Digraph, Element, Path, ZERO

# ---------------------------------------------------------------- graphs


def brute_force_paths(g: Digraph, max_len: int):
    """Every composable edge sequence up to max_len, by filtering all sequences."""
    out = {("v", v) for v in g.vertices}
    edges = list(g.edges)
    for n in range(1, max_len + 1):
        for seq in itertools.product(edges, repeat=n):
            if all(g.edges[a].range == g.edges[b].source for a, b in zip(seq, seq[1:])):
                out.add(("p", seq))
    return out


def path_as_token(p: Path):
    return ("v", p.source) if not p.edges else ("p", p.edges)


def reachability(g: Digraph):
    """Reflexive-transitive closure by Floyd-Warshall."""
    vs = list(g.vertices)
    reach = {(a, b): a == b for a in vs for b in vs}
    for e in g.edges.values():
        reach[e.source, e.range] = True
    for k in vs:
        for i in vs:
            for j in vs:
                if reach[i, k] and reach[k, j]:
                    reach[i, j] = True
    return reach


def scc_by_closure(g: Digraph):
    reach = reachability(g)
    blocks = []
    for v in g.vertices:
        block = frozenset(w for w in g.vertices if reach[v, w] and reach[w, v])
        if block not in blocks:
            blocks.append(block)
    return set(blocks)


def has_cycle_by_closure(g: Digraph):
    reach = reachability(g)
    for e in g.edges.values():
        if reach[e.range, e.source]:
            return True
    return False


# ------------------------------------------------------ word rewriting

# Tokens: ("v", id) vertex, ("e", id) edge, ("g", id) ghost edge, ("0",) zero.


def _src(g, tok):
    kind, name = tok
    if kind == "v":
        return name
    e = g.edges[name]
    return e.source if kind == "e" else e.range


def _rng(g, tok):
    kind, name = tok
    if kind == "v":
        return name
    e = g.edges[name]
    return e.range if kind == "e" else e.source


def tokens_of(g: Digraph, word):
    out = []
    for t in word:
        if t.endswith("*"):
            out.append(("g", t[:-1]))
        elif t in g.vertices:
            out.append(("v", t))
        else:
            out.append(("e", t))
    return out


def _step(g, w):
    """Apply one defining relation somewhere in w; None at a fixpoint."""
    if any(t == ("0",) for t in w):
        return None if w == [("0",)] else [("0",)]
    for i in range(len(w) - 1):
        x, y = w[i], w[i + 1]
        # uv = delta_uv u
        if x[0] == "v" and y[0] == "v":
            return w[:i] + ([x] if x == y else [("0",)]) + w[i + 2:]
        # s(e)e = e, and likewise for ghosts
        if x[0] == "v" and _src(g, y) == x[1]:
            return w[:i] + [y] + w[i + 2:]
        # e r(e) = e
        if y[0] == "v" and _rng(g, x) == y[1]:
            return w[:i] + [x] + w[i + 2:]
        # e* f = delta_ef r(e)
        if x[0] == "g" and y[0] == "e":
            if x[1] == y[1]:
                return w[:i] + [("v", g.edges[x[1]].range)] + w[i + 2:]
            return [("0",)]
        # xy with r(x) != s(y): x r(x) s(y) y and r(x)s(y) = 0
        if _rng(g, x) != _src(g, y):
            return [("0",)]
    return None


def rewrite(g: Digraph, word):
    """Naive rewriting to fixpoint; returns ZERO or an Element built by hand."""
    w = tokens_of(g, word)
    while True:
        nxt = _step(g, w)
        if nxt is None:
            break
        w = nxt
    if w == [("0",)]:
        return ZERO
    if len(w) == 1 and w[0][0] == "v":
        v = w[0][1]
        return Element(Path(v, v), Path(v, v))
    edges = [n for k, n in w if k == "e"]
    ghosts = [n for k, n in w if k == "g"]
    kinds = [k for k, _ in w]
    assert kinds == ["e"] * len(edges) + ["g"] * len(ghosts), w
    q_edges = tuple(reversed(ghosts))
    if edges:
        p = Path(g.edges[edges[0]].source, g.edges[edges[-1]].range, tuple(edges))
    if q_edges:
        q = Path(g.edges[q_edges[0]].source, g.edges[q_edges[-1]].range, q_edges)
    if not edges:
        p = Path(q.range, q.range)
    if not q_edges:
        q = Path(p.range, p.range)
    return Element(p, q)


def random_word(g: Digraph, rng, max_len=8):
    alphabet = list(g.vertices) + list(g.edges) + [e + "*" for e in g.edges]
    n = rng.randint(1, max_len)
    return [rng.choice(alphabet) for _ in range(n)]


# ------------------------------------------------------- bicyclic model


def bicyclic_mul(a, b):
    m, n = a
    p, q = b
    k = max(n, p)
    return (m - n + k, q - p + k)


# ------------------------------------------------- ideals by brute force


def principal_ideals(elements, table):
    """S^1 a, a S^1 and S^1 a S^1 for each index a, from a Cayley table."""
    n = len(elements)
    left, right, two = [], [], []
    for a in range(n):
        la = {a} | {int(table[x, a]) for x in range(n)}
        ra = {a} | {int(table[a, x]) for x in range(n)}
        ja = set(la) | set(ra)
        for x in la:
            ja |= {int(table[x, y]) for y in range(n)}
        left.append(frozenset(la))
        right.append(frozenset(ra))
        two.append(frozenset(ja))
    return left, right, two


# ----------------------------------------------------- transitive closure


def closure_of_covers(nodes, covers):
    le = {(a, a) for a in nodes} | set(covers)
    changed = True
    while changed:
        changed = False
        for a, b in list(le):
            for c, d in list(le):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
    return le


def hasse_by_definition(nodes, leq):
    """Covers (a, b): a < b with nothing strictly between."""
    out = set()
    for a in nodes:
        for b in nodes:
            if a != b and leq(a, b):
                if not any(c not in (a, b) and leq(a, c) and leq(c, b) for c in nodes):
                    out.add((a, b))
    return out
