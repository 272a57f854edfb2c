"""``gis``: command-line front end over the library.

    gis enumerate GRAPH
    gis reduce GRAPH WORD
    gis mul GRAPH A B
    gis order GRAPH A B
    gis idempotents GRAPH [--dot | --json]
    gis green {L,R,H,D,J} GRAPH [--dot | --json]
    gis primitive GRAPH
    gis local GRAPH VERTEX

``--bound N`` truncates paths to N edges; without it the graph must be
acyclic (except for ``local``, which only looks at paths from VERTEX).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    is_idempotent,
    multiply,
    nat_leq,
    parse_element,
    reduce_word,
    vertex_element,
)
from .digraph import GraphError, load_graph
from .structure import (
    GreenRelation,
    eggbox_dot,
    eggbox_json,
    enumerate_semigroup,
    green_classes,
    idempotent_lattice,
    is_primitive,
    local_submonoid,
)


def _listing(noun: str, items, quiet: bool) -> str:
    head = f"{len(items)} {noun if len(items) != 1 else noun.rstrip('s')}"
    if quiet:
        return head
    return head + ": " + " ".join(str(a) for a in items)


def _cmd_enumerate(g, args):
    t = enumerate_semigroup(g, args.bound)
    if args.json:
        return json.dumps({"bound": t.bound, "elements": [str(a) for a in t]}, indent=2)
    return _listing("elements", t.elements, args.quiet)


def _cmd_reduce(g, args):
    return str(reduce_word(g, " ".join(args.word)))


def _cmd_mul(g, args):
    return str(multiply(parse_element(g, args.a), parse_element(g, args.b)))


def _cmd_order(g, args):
    a, b = parse_element(g, args.a), parse_element(g, args.b)
    for x in (a, b):
        if not is_idempotent(x):
            raise GraphError(f"{x} is not an idempotent")
    le, ge = nat_leq(a, b), nat_leq(b, a)
    if le and ge:
        return f"{a} = {b}"
    if le:
        return f"{a} <= {b}"
    if ge:
        return f"{a} >= {b}"
    return f"{a} and {b} are incomparable"


def _cmd_idempotents(g, args):
    h = idempotent_lattice(enumerate_semigroup(g, args.bound))
    if args.dot:
        return h.to_dot().rstrip("\n")
    if args.json:
        return h.to_json()
    return _listing("idempotents", h.nodes, args.quiet)


def _cmd_green(g, args):
    t = enumerate_semigroup(g, args.bound)
    rel = GreenRelation.coerce(args.relation)
    if rel is GreenRelation.D and args.dot:
        return eggbox_dot(t).rstrip("\n")
    if rel is GreenRelation.D and args.json:
        return eggbox_json(t)
    classes = green_classes(t, rel)
    if args.json:
        return json.dumps({"relation": rel.value, "classes": [[str(a) for a in c] for c in classes]}, indent=2)
    lines = [f"{len(classes)} {rel.value}-classes"]
    if not args.quiet:
        lines.extend("  " + " ".join(str(a) for a in c) for c in classes)
    return "\n".join(lines)


def _cmd_primitive(g, args):
    return "primitive: " + ("yes" if is_primitive(g) else "no")


def _cmd_local(g, args):
    elems = local_submonoid(g, vertex_element(g, args.vertex), args.bound)
    if args.json:
        return json.dumps({"vertex": args.vertex, "elements": [str(a) for a in elems]}, indent=2)
    return _listing("elements", elems, args.quiet)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=None, metavar="N",
                        help="maximum path length (default: exact, acyclic graphs only)")
    common.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--quiet", action="store_true", help="counts only, no listings")

    parser = argparse.ArgumentParser(prog="gis", description="Graph inverse semigroup calculator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the elements of I(G)")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("reduce", parents=[common], help="normal form of a word")
    p.add_argument("graph")
    p.add_argument("word", nargs="+")
    p.set_defaults(func=_cmd_reduce)

    for name, func, help_ in (("mul", _cmd_mul, "product of two elements"),
                              ("order", _cmd_order, "compare two idempotents")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("graph")
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=func)

    p = sub.add_parser("idempotents", parents=[common], help="semilattice of idempotents")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_idempotents)

    p = sub.add_parser("green", parents=[common], help="Green's classes")
    p.add_argument("relation", choices=[r.value for r in GreenRelation])
    p.add_argument("graph")
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("primitive", parents=[common], help="is I(G) primitive?")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_primitive)

    p = sub.add_parser("local", parents=[common], help="local submonoid at a vertex")
    p.add_argument("graph")
    p.add_argument("vertex")
    p.set_defaults(func=_cmd_local)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.dot and args.json:
        print("gis: --dot and --json are mutually exclusive", file=stderr)
        return 2
    try:
        g = load_graph(args.graph)
        out = args.func(g, args)
    except (ValueError, OSError) as exc:
        print(f"gis: error: {exc}", file=stderr)
        return 1
    print(out, file=stdout)
    return 0


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
