"""Graph inverse semigroups of finite directed multigraphs."""

from .core import (
    ZERO,
    Element,
    NotCoterminalError,
    NotIdempotentError,
    Zero,
    edge_element,
    format_element,
    ghost_element,
    inverse,
    is_idempotent,
    make_element,
    multiply,
    nat_leq,
    parse_element,
    parse_path,
    parse_word,
    product,
    reduce_word,
    vertex_element,
)
from .digraph import (
    Digraph,
    Edge,
    GraphError,
    GraphParseError,
    InfinitePathSetError,
    Path,
    concat,
    enumerate_paths,
    is_acyclic,
    is_sink,
    is_totally_disconnected,
    load_graph,
    parse_graph,
    paths_from,
    scc,
    strip_prefix,
)
from .structure import (
    EggBox,
    GreenRelation,
    HasseDiagram,
    InfiniteSemigroupError,
    SemigroupTable,
    egg_boxes,
    eggbox_dot,
    eggbox_json,
    enumerate_semigroup,
    green_classes,
    green_related,
    idempotent_lattice,
    is_local_submonoid_trivial,
    is_primitive,
    is_primitive_by_definition,
    local_submonoid,
    maximal_idempotents,
    minimal_nonzero_idempotents,
    multiplication_table,
)

__version__ = "0.1.0"
