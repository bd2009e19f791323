"""Named example digraphs used by the verification suites and the docs."""

from __future__ import annotations

from .digraph import Digraph, box_product, disjoint_union
from .covers import out_closure
from .intervals import standard_interval


def cycle(n):
    return Digraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def line(n, sign=1):
    return standard_interval(n, sign).to_digraph()


def directed_square():
    return box_product(line(1), line(1))


def grid_4x4():
    return box_product(line(4), line(4))


def boundary_4x4():
    g = grid_4x4()
    return g.induced([v for v in g.vertices if v[0] in (0, 4) or v[1] in (0, 4)])


def o_digraph():
    """Out-closure of the boundary inside the 4x4 zigzag grid: the full
    grid with the center vertex (a source) removed."""
    g = grid_4x4()
    boundary = [v for v in g.vertices if v[0] in (0, 4) or v[1] in (0, 4)]
    return g.induced(out_closure(g, boundary))


def o_cover_members():
    verts = o_digraph().vertices
    return {
        "rows01": tuple(v for v in verts if v[0] in (0, 1)),
        "rows34": tuple(v for v in verts if v[0] in (3, 4)),
        "cols01": tuple(v for v in verts if v[1] in (0, 1)),
        "cols34": tuple(v for v in verts if v[1] in (3, 4)),
    }


def fan_out():
    """b -> a, b -> c: the 3-vertex out-fan."""
    return Digraph(["a", "b", "c"], [("b", "a"), ("b", "c")])


def two_lines():
    return disjoint_union(line(1), line(1))


def small_corpus():
    """Small digraphs exercised by the property suites."""
    return {
        "point": Digraph(["*"]),
        "i1": line(1),
        "i2": line(2),
        "i3": line(3),
        "i2op": line(2, -1),
        "c3": cycle(3),
        "c4": cycle(4),
        "fan": fan_out(),
        "square": directed_square(),
        "two_points": Digraph(["a", "b"]),
        "two_arrows": Digraph(["a", "b"], [("a", "b"), ("b", "a")]),
        "chain_pair": Digraph(["a", "b", "c"], [("a", "b"), ("a", "c")]),
    }


def tiny_corpus():
    c = small_corpus()
    return {k: c[k] for k in ("point", "i1", "i2", "c3", "fan", "two_points")}
