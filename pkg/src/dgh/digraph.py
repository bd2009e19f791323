"""Finite digraphs, digraph maps, pairs, and the basic constructions.

Conventions used throughout the library:

* Vertices are ordered; every set-valued output is emitted in the induced
  lexicographic order of that ordering, so results are reproducible.
* Arrows are irreflexive pairs.  Degenerate arrows (v, v) are implicit:
  ``is_arrow(v, v)`` answers True for every vertex, but degenerate arrows
  are never stored or counted.
* Unreachability is the float infinity sentinel ``INFINITY``, never a
  large integer, so ``d == d + 1`` holds exactly for unreachable pairs.

All values are immutable after construction and safe to share between
threads; operations are pure functions of their inputs.
"""

from __future__ import annotations

from collections import deque
from itertools import product

from .errors import (
    BudgetExceeded,
    InputError,
    NotDigraphMap,
    NotInduced,
    UnknownVertex,
)

INFINITY = float("inf")

#: Default ceiling for map enumerations (overridable per call).
DEFAULT_MAP_BUDGET = 10**5


class Digraph:
    """A finite digraph with ordered vertices and an irreflexive arrow set."""

    __slots__ = ("vertices", "arrows", "_index", "_succ", "_pred", "_hash")

    def __init__(self, vertices, arrows=()):
        vertices = tuple(vertices)
        index = {}
        for v in vertices:
            if v in index:
                raise InputError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        arrow_set = set()
        for u, v in arrows:
            if u not in index:
                raise UnknownVertex(f"arrow source {u!r} is not a vertex")
            if v not in index:
                raise UnknownVertex(f"arrow target {v!r} is not a vertex")
            if u == v:
                raise InputError(
                    f"self-loop at {u!r}: degenerate arrows are implicit"
                )
            arrow_set.add((u, v))
        self.vertices = vertices
        self.arrows = frozenset(arrow_set)
        self._index = index
        succ = {v: [] for v in vertices}
        pred = {v: [] for v in vertices}
        for u, v in sorted(arrow_set, key=lambda a: (index[a[0]], index[a[1]])):
            succ[u].append(v)
            pred[v].append(u)
        self._succ = {v: tuple(ws) for v, ws in succ.items()}
        self._pred = {v: tuple(ws) for v, ws in pred.items()}
        self._hash = hash((vertices, self.arrows))

    # -- basic queries -------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._index

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.vertices == other.vertices
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Digraph({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def has_vertex(self, v):
        return v in self._index

    def is_arrow(self, u, v):
        """Arrow-or-equality query; degenerate arrows answer True."""
        return u == v or (u, v) in self.arrows

    def successors(self, v):
        return self._succ[v]

    def predecessors(self, v):
        return self._pred[v]

    def sorted_arrows(self):
        ix = self._index
        return sorted(self.arrows, key=lambda a: (ix[a[0]], ix[a[1]]))

    # -- standard constructions ----------------------------------------

    def opposite(self):
        return Digraph(self.vertices, ((v, u) for u, v in self.arrows))

    def symmetrize(self):
        both = set(self.arrows)
        both.update((v, u) for u, v in self.arrows)
        return Digraph(self.vertices, both)

    def induced(self, subset):
        """Induced subdigraph on `subset`, kept in ambient vertex order."""
        chosen = set(subset)
        for v in chosen:
            if v not in self._index:
                raise UnknownVertex(f"unknown vertex {v!r}")
        verts = tuple(v for v in self.vertices if v in chosen)
        arrows = [(u, v) for (u, v) in self.arrows if u in chosen and v in chosen]
        return Digraph(verts, arrows)


def disjoint_union(*graphs):
    """Disjoint union; tags vertices as (i, v) only if labels collide."""
    seen = set()
    collide = False
    for g in graphs:
        for v in g.vertices:
            if v in seen:
                collide = True
            seen.add(v)
    verts, arrows = [], []
    for i, g in enumerate(graphs):
        lab = (lambda v, i=i: (i, v)) if collide else (lambda v: v)
        verts.extend(lab(v) for v in g.vertices)
        arrows.extend((lab(u), lab(v)) for (u, v) in g.sorted_arrows())
    return Digraph(verts, arrows)


def point(label="*"):
    return Digraph((label,))


class DigraphMap:
    """A total vertex assignment preserving arrows-or-equality.

    The constructor rejects exactly the assignments violating the
    preservation invariant, raising NotDigraphMap.
    """

    __slots__ = ("source", "target", "assignment", "_hash")

    def __init__(self, source, target, assignment, _trusted=False):
        self.source = source
        self.target = target
        if not _trusted:
            assignment = dict(assignment)
            for v in source.vertices:
                if v not in assignment:
                    raise InputError(f"no image for vertex {v!r}")
                if assignment[v] not in target._index:
                    raise UnknownVertex(f"image {assignment[v]!r} is not a target vertex")
            if len(assignment) != len(source.vertices):
                raise InputError("assignment mentions vertices outside the source")
            for u, v in source.arrows:
                a, b = assignment[u], assignment[v]
                if a != b and (a, b) not in target.arrows:
                    raise NotDigraphMap(
                        f"arrow {(u, v)!r} maps to non-arrow {(a, b)!r}"
                    )
        self.assignment = assignment
        self._hash = hash((source, target, self.image_tuple()))

    @classmethod
    def identity(cls, g):
        return cls(g, g, {v: v for v in g.vertices}, _trusted=True)

    @classmethod
    def constant(cls, source, target, value):
        return cls(source, target, {v: value for v in source.vertices})

    @classmethod
    def from_images(cls, source, target, images):
        """Build from a tuple of images listed in source vertex order."""
        return cls(source, target, dict(zip(source.vertices, images)))

    def __call__(self, v):
        return self.assignment[v]

    def image_tuple(self):
        return tuple(self.assignment[v] for v in self.source.vertices)

    def image_vertices(self):
        seen = set(self.assignment.values())
        return tuple(v for v in self.target.vertices if v in seen)

    def compose(self, other):
        """self after other (other first, then self)."""
        if other.target is not self.source and other.target != self.source:
            raise InputError("composition mismatch")
        return DigraphMap(
            other.source,
            self.target,
            {v: self.assignment[other.assignment[v]] for v in other.source.vertices},
            _trusted=True,
        )

    def __eq__(self, other):
        return (
            isinstance(other, DigraphMap)
            and self.source == other.source
            and self.target == other.target
            and self.image_tuple() == other.image_tuple()
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"DigraphMap({self.source!r} -> {self.target!r})"


class DigraphPair:
    """A digraph together with an induced subdigraph given by vertices."""

    __slots__ = ("ambient", "part")

    def __init__(self, ambient, part):
        self.ambient = ambient
        chosen = set(part)
        for v in chosen:
            if v not in ambient._index:
                raise UnknownVertex(f"unknown vertex {v!r}")
        self.part = tuple(v for v in ambient.vertices if v in chosen)

    def part_digraph(self):
        return self.ambient.induced(self.part)

    def __eq__(self, other):
        return (
            isinstance(other, DigraphPair)
            and self.ambient == other.ambient
            and self.part == other.part
        )

    def __hash__(self):
        return hash((self.ambient, self.part))


# -- products and homs -------------------------------------------------


def box_product(g, h):
    """Box product: one coordinate moves along an arrow per step."""
    verts = [(a, b) for a in g.vertices for b in h.vertices]
    arrows = []
    for a, b in verts:
        for a2 in g.successors(a):
            arrows.append(((a, b), (a2, b)))
        for b2 in h.successors(b):
            arrows.append(((a, b), (a, b2)))
    return Digraph(verts, arrows)


def categorical_product(g, h):
    """Product digraph: both coordinates move by arrow-or-equality, not both equal."""
    verts = [(a, b) for a in g.vertices for b in h.vertices]
    arrows = []
    for a, b in verts:
        for a2, b2 in product((a,) + g.successors(a), (b,) + h.successors(b)):
            if (a2, b2) != (a, b):
                arrows.append(((a, b), (a2, b2)))
    return Digraph(verts, arrows)


def pair_box_product(p, q):
    """Box product of pairs: part is the union of the two mixed products."""
    amb = box_product(p.ambient, q.ambient)
    left = set(p.part)
    right = set(q.part)
    part = [v for v in amb.vertices if v[0] in left or v[1] in right]
    return DigraphPair(amb, part)


def iter_digraph_maps(source, target, budget=DEFAULT_MAP_BUDGET, pinned=None):
    """Yield all digraph maps source -> target as image tuples.

    Backtracks over source vertices in input order with arrow-consistency
    pruning against already-assigned neighbours; output is lexicographic in
    target vertex order.  `pinned` optionally restricts the candidates of
    selected vertices to a given tuple.  Raises BudgetExceeded when more
    than `budget` maps exist.
    """
    svs = source.vertices
    n = len(svs)
    if n == 0:
        yield ()
        return
    ok = set(target.arrows)
    for v in target.vertices:
        ok.add((v, v))
    # constraints[k]: arrows between svs[k] and earlier vertices, as
    # (earlier position, True if arrow earlier->k else k->earlier)
    pos = {v: k for k, v in enumerate(svs)}
    constraints = [[] for _ in range(n)]
    for u, v in source.arrows:
        i, j = pos[u], pos[v]
        if i < j:
            constraints[j].append((i, True))
        else:
            constraints[i].append((j, False))
    base_candidates = []
    for k, v in enumerate(svs):
        if pinned is not None and v in pinned:
            cand = tuple(pinned[v])
        else:
            cand = target.vertices
        base_candidates.append(cand)

    images = [None] * n
    count = 0
    stack = [(0, iter(base_candidates[0]))]
    while stack:
        k, candidates = stack[-1]
        advanced = False
        for c in candidates:
            good = True
            for j, forward in constraints[k]:
                w = images[j]
                if forward:
                    if w != c and (w, c) not in ok:
                        good = False
                        break
                else:
                    if c != w and (c, w) not in ok:
                        good = False
                        break
            if good:
                images[k] = c
                if k + 1 == n:
                    count += 1
                    if count > budget:
                        raise BudgetExceeded(
                            f"more than {budget} digraph maps during enumeration"
                        )
                    yield tuple(images)
                else:
                    stack.append((k + 1, iter(base_candidates[k + 1])))
                    advanced = True
                    break
        if not advanced:
            stack.pop()


def enumerate_digraph_maps(source, target, budget=DEFAULT_MAP_BUDGET, pinned=None):
    """Materialized form of `iter_digraph_maps`."""
    return list(iter_digraph_maps(source, target, budget=budget, pinned=pinned))


def one_step_arrow(source, target, images_a, images_b, rel_positions=()):
    """Arrow test in the (relative) box hom on raw image tuples."""
    for p in rel_positions:
        if images_a[p] != images_b[p]:
            return False
    for a, b in zip(images_a, images_b):
        if a != b and (a, b) not in target.arrows:
            return False
    return True


def box_hom(g, h, vertex_budget=DEFAULT_MAP_BUDGET):
    """Box hom digraph: vertices are digraph maps g -> h (as image tuples),
    with an arrow f -> f' when every vertex admits an arrow f(x) -> f'(x).
    """
    maps = enumerate_digraph_maps(g, h, budget=vertex_budget)
    arrows = []
    for a in maps:
        for b in maps:
            if a != b and one_step_arrow(g, h, a, b):
                arrows.append((a, b))
    return Digraph(maps, arrows)


def pair_box_hom(p, q):
    """Box hom of pairs, returned as a DigraphPair.

    Ambient: pair maps (maps sending p.part into q.part) with an arrow
    f -> f' when arrows exist everywhere and f = f' on p.part.
    Part: the maps whose whole image lies in q.part.
    """
    pinned = {v: q.part for v in p.part}
    maps = enumerate_digraph_maps(p.ambient, q.ambient, pinned=pinned)
    rel_positions = [p.ambient.index(v) for v in p.part]
    arrows = []
    for a in maps:
        for b in maps:
            if a != b and one_step_arrow(p.ambient, q.ambient, a, b, rel_positions):
                arrows.append((a, b))
    amb = Digraph(maps, arrows)
    part_set = set(q.part)
    part = [t for t in maps if all(x in part_set for x in t)]
    return DigraphPair(amb, part)


def curry(g, h, k, images):
    """Image tuple for g⊗h -> k  ~~>  image tuple for g -> Hom⊗(h, k)."""
    gh = box_product(g, h)
    lookup = dict(zip(gh.vertices, images))
    return tuple(
        tuple(lookup[(a, b)] for b in h.vertices) for a in g.vertices
    )


def uncurry(g, h, k, images):
    """Inverse of `curry` on raw image tuples."""
    per_a = dict(zip(g.vertices, images))
    hpos = {b: i for i, b in enumerate(h.vertices)}
    return tuple(per_a[a][hpos[b]] for a in g.vertices for b in h.vertices)


# -- connectivity and distance -----------------------------------------


def pi0(g):
    """Weak (orientation-ignoring) connected components.

    Returns a tuple of components; each component is a tuple of vertices in
    input order, and components are ordered by their least vertex.
    """
    seen = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = []
        queue = deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.successors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
            for w in g.predecessors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        ix = g._index
        comps.append(tuple(sorted(comp, key=ix.__getitem__)))
    return tuple(comps)


def distance(g, u, v):
    """Length of the shortest directed path u -> v, or INFINITY."""
    if u not in g._index:
        raise UnknownVertex(f"unknown vertex {u!r}")
    if v not in g._index:
        raise UnknownVertex(f"unknown vertex {v!r}")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.successors(x):
            if y not in dist:
                if y == v:
                    return d
                dist[y] = d
                queue.append(y)
    return INFINITY


def distances_from(g, u):
    """Directed BFS distances from u; unreachable vertices are absent."""
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.successors(x):
            if y not in dist:
                dist[y] = d
                queue.append(y)
    return dist


def power_digraph(g, k):
    """Same vertices; arrow u -> v iff 1 <= dist(u, v) <= k."""
    if k < 1:
        raise InputError("power index must be >= 1")
    arrows = []
    for u in g.vertices:
        dist = distances_from(g, u)
        for v, d in dist.items():
            if 1 <= d <= k:
                arrows.append((u, v))
    return Digraph(g.vertices, arrows)


# -- pushouts ------------------------------------------------------------


def pushout_along_induced_inclusion(g, h_part, phi):
    """Pushout of g <- induced(h_part) -phi-> h', by the direct formula.

    Returns (g', phi': g -> g', incl: h' -> g').  The complement of the
    image of h' in g' is isomorphic to the complement of h_part in g.
    """
    part = set(h_part)
    for v in part:
        if v not in g._index:
            raise UnknownVertex(f"unknown vertex {v!r}")
    induced_h = g.induced(part)
    if phi.source != induced_h:
        raise NotInduced(
            "the map's source must be the induced subdigraph on the given part"
        )
    h_prime = phi.target
    outside = [v for v in g.vertices if v not in part]
    clash = set(outside) & set(h_prime.vertices)
    if clash:
        raise InputError(
            f"pushout label collision outside the glued part: {sorted(map(repr, clash))}"
        )
    images = {}
    verts = []
    emitted = set()
    for v in g.vertices:
        w = phi.assignment[v] if v in part else v
        images[v] = w
        if w not in emitted:
            emitted.add(w)
            verts.append(w)
    for w in h_prime.vertices:
        if w not in emitted:
            emitted.add(w)
            verts.append(w)
    arrows = set(h_prime.arrows)
    for u, v in g.arrows:
        a, b = images[u], images[v]
        if a != b:
            arrows.add((a, b))
    result = Digraph(verts, arrows)
    phi_prime = DigraphMap(g, result, images, _trusted=True)
    incl = DigraphMap(
        h_prime, result, {v: v for v in h_prime.vertices}, _trusted=True
    )
    return result, phi_prime, incl


# -- isomorphism (small inputs only; used by tests and reports) ----------


def is_isomorphic(g, h):
    """Backtracking isomorphism test; intended for small digraphs."""
    if len(g.vertices) != len(h.vertices) or len(g.arrows) != len(h.arrows):
        return False
    gin = {v: len(g.predecessors(v)) for v in g.vertices}
    gout = {v: len(g.successors(v)) for v in g.vertices}
    hin = {v: len(h.predecessors(v)) for v in h.vertices}
    hout = {v: len(h.successors(v)) for v in h.vertices}
    gv = list(g.vertices)
    used = set()
    match = {}

    def extend(k):
        if k == len(gv):
            return True
        v = gv[k]
        for w in h.vertices:
            if w in used or gin[v] != hin[w] or gout[v] != hout[w]:
                continue
            good = True
            for u in gv[:k]:
                mu = match[u]
                if ((u, v) in g.arrows) != ((mu, w) in h.arrows):
                    good = False
                    break
                if ((v, u) in g.arrows) != ((w, mu) in h.arrows):
                    good = False
                    break
            if good:
                match[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                used.remove(w)
                del match[v]
        return False

    return extend(0)
