"""Discrete covering maps: unique arrow lifting, distance-power variants,
and unique right lifting against horn inclusions.

A 1-covering lifts every one-arrow diagram (degenerate ones included)
uniquely through either endpoint.  An l-covering asks this of all
distance-power digraphs up to l; three further characterizations are
evaluated independently so their agreement can be tested.
"""

from __future__ import annotations

from .digraph import (
    DEFAULT_MAP_BUDGET,
    Digraph,
    DigraphMap,
    distances_from,
    enumerate_digraph_maps,
    iter_digraph_maps,
    power_digraph,
)
from .errors import BadIndex, HypothesesFail, InputError
from .nerve import cube_realization, horn_vertices
from .intervals import standard_interval


def is_one_covering(p, with_witness=False):
    """Unique lifting of arrows-or-equality through each endpoint.

    For every source vertex g, every map from the one-arrow interval into
    the target hitting p(g) at endpoint k must lift uniquely to a map
    hitting g at k.
    """
    g, h = p.source, p.target
    fibers = {}
    for v in g.vertices:
        fibers.setdefault(p.assignment[v], []).append(v)
    for v in g.vertices:
        pv = p.assignment[v]
        # k = 0: arrows-or-equality pv -> h2, lift must start at v
        for h2 in (pv,) + tuple(h.successors(pv)):
            lifts = [
                w
                for w in fibers.get(h2, [])
                if g.is_arrow(v, w)
            ]
            if len(lifts) != 1:
                witness = {"vertex": v, "edge": (pv, h2), "endpoint": 0,
                           "lifts": len(lifts)}
                return (False, witness) if with_witness else False
        # k = 1: arrows-or-equality h2 -> pv, lift must end at v
        for h2 in (pv,) + tuple(h.predecessors(pv)):
            lifts = [
                w
                for w in fibers.get(h2, [])
                if g.is_arrow(w, v)
            ]
            if len(lifts) != 1:
                witness = {"vertex": v, "edge": (h2, pv), "endpoint": 1,
                           "lifts": len(lifts)}
                return (False, witness) if with_witness else False
    return (True, None) if with_witness else True


def _power_map(p, k):
    dg = power_digraph(p.source, k)
    dh = power_digraph(p.target, k)
    return DigraphMap(dg, dh, dict(p.assignment))


def _paths_up_to(g, length):
    """All directed walks (vertex sequences along arrows) of length <= `length`."""
    out = [(v,) for v in g.vertices]
    frontier = list(out)
    for _ in range(length):
        nxt = []
        for path in frontier:
            for w in g.successors(path[-1]):
                nxt.append(path + (w,))
        out.extend(nxt)
        frontier = nxt
    return out


def is_l_covering(p, l, full_report=False):
    """Evaluate the definition and its three characterizations independently.

    (1) every distance power up to l is a 1-covering;
    (2) the l-th power map is a 1-covering and the source is exactly the
        preimage of the target inside its own l-th power;
    (3) unique endpoints for short path pairs sharing one end and one
        projected end;
    (4) unique near-fiber bijections: matched points realize the base
        distance and every other fiber point is farther than l.

    All four verdicts must agree (their disagreement is reported, never
    reconciled).
    """
    if l < 1:
        raise BadIndex("the covering index must be >= 1")
    g, h = p.source, p.target

    cond1 = all(is_one_covering(_power_map(p, k)) for k in range(1, l + 1))

    power_ok = is_one_covering(_power_map(p, l))
    dist_g = {v: distances_from(g, v) for v in g.vertices}
    preimage_arrows = set()
    for u in g.vertices:
        for v, d in dist_g[u].items():
            if u != v and d <= l:
                pu, pv = p.assignment[u], p.assignment[v]
                if pu == pv or (pu, pv) in h.arrows:
                    preimage_arrows.add((u, v))
    cond2 = power_ok and preimage_arrows == set(g.arrows)

    cond3 = is_one_covering(p)
    if cond3:
        paths = _paths_up_to(g, l)
        for a in paths:
            for b in paths:
                same_start = a[0] == b[0] and p.assignment[a[-1]] == p.assignment[b[-1]]
                same_end = a[-1] == b[-1] and p.assignment[a[0]] == p.assignment[b[0]]
                if same_start or same_end:
                    if a[0] != b[0] or a[-1] != b[-1]:
                        cond3 = False
                        break
            if not cond3:
                break

    fibers = {}
    for v in g.vertices:
        fibers.setdefault(p.assignment[v], []).append(v)
    cond4 = True
    dist_h = {v: distances_from(h, v) for v in h.vertices}
    for a in h.vertices:
        for b, d in dist_h[a].items():
            if d > l:
                continue
            matches = {}
            for x in fibers.get(a, []):
                near = [
                    y
                    for y in fibers.get(b, [])
                    if dist_g[x].get(y, None) is not None and dist_g[x][y] <= l
                ]
                exact = [y for y in near if dist_g[x][y] == d]
                if len(exact) != 1 or len(near) != 1:
                    cond4 = False
                    break
                matches[x] = exact[0]
            if not cond4:
                break
            if sorted(matches.values(), key=repr) != sorted(
                fibers.get(b, []), key=repr
            ):
                cond4 = False
                break
        if not cond4:
            break

    verdicts = {
        "power-one-coverings": cond1,
        "top-power-and-preimage": cond2,
        "path-pair-rigidity": cond3,
        "fiber-bijections": cond4,
    }
    agree = len(set(verdicts.values())) == 1
    if full_report:
        return {
            "l": l,
            "conditions": verdicts,
            "conditions_agree": agree,
            "is_l_covering": cond1,
            "pass": cond1 and agree,
        }
    if not agree:
        raise InputError(
            f"covering characterizations disagree: {verdicts} (library bug "
            "or an unconsidered edge case; please report)"
        )
    return cond1


# -- unique right lifting -----------------------------------------------------


def _sub_digraph_union(cube, vertex_sets):
    """Union of induced subdigraphs of `cube` (vertices and arrows unioned);
    not induced in general."""
    verts = []
    seen = set()
    for vs in vertex_sets:
        for v in vs:
            if v not in seen:
                seen.add(v)
                verts.append(v)
    arrows = set()
    for vs in vertex_sets:
        s = set(vs)
        arrows.update(
            (u, v) for (u, v) in cube.arrows if u in s and v in s
        )
    verts = [v for v in cube.vertices if v in seen]
    return Digraph(verts, arrows)


def check_lifting_hypotheses(a, b):
    """The three one-sided hypotheses for unique right lifting, with
    arrows-or-equality allowed everywhere.

    Hypothesis 2 is graded: "pairwise" when every two in-neighbours from
    `a` share a common predecessor inside `a` (the literal statement), and
    "connected" when the common-predecessor relation merely chains them
    together — which is all the uniqueness argument needs, since agreement
    of the spread values is transitive.  Returns
    {"1": bool, "2": "pairwise"|"connected"|False, "3": bool, "pass": bool}.
    """
    result = {"1": True, "2": "pairwise", "3": True}
    averts = set(a.vertices)
    subdigraph = all((u, v) in b.arrows for (u, v) in a.arrows) and all(
        v in b._index for v in a.vertices
    )
    result["subdigraph"] = subdigraph
    for x in b.vertices:  # (1)
        if x in averts:
            continue
        if not any(b.is_arrow(av, x) for av in a.vertices):
            result["1"] = False
            break
    weakest = "pairwise"
    for x in b.vertices:  # (2)
        ins = [av for av in a.vertices if b.is_arrow(av, x)]
        if len(ins) < 2:
            continue
        linked = {
            (u, v)
            for u in ins
            for v in ins
            if any(a.is_arrow(w, u) and a.is_arrow(w, v) for w in a.vertices)
        }
        if any((u, v) not in linked for u in ins for v in ins):
            weakest = "connected"
            # chain the agreement relation
            comp = {v: v for v in ins}

            def find(v):
                while comp[v] != v:
                    comp[v] = comp[comp[v]]
                    v = comp[v]
                return v

            for u, v in linked:
                ru, rv = find(u), find(v)
                if ru != rv:
                    comp[ru] = rv
            if len({find(v) for v in ins}) > 1:
                weakest = False
                break
    result["2"] = weakest
    for x, y in b.arrows:  # (3)
        found = any(
            b.is_arrow(u, x) and b.is_arrow(v, y)
            for u, v in list(a.arrows) + [(w, w) for w in a.vertices]
        )
        if not found:
            result["3"] = False
            break
    result["pass"] = bool(
        subdigraph and result["1"] and result["2"] and result["3"]
    )
    result["literal"] = bool(
        subdigraph and result["1"] and result["2"] == "pairwise" and result["3"]
    )
    return result


def check_lifting_hypotheses_dual(a, b):
    return check_lifting_hypotheses(a.opposite(), b.opposite())


def unique_lift_count(p, a, b, alpha, beta):
    """Number of maps b -> source restricting to alpha on a and projecting
    to beta (exhaustive; small b only)."""
    count = 0
    pinned = {v: (alpha[v],) for v in a.vertices}
    for images in enumerate_digraph_maps(b, p.source, pinned=pinned):
        if all(
            p.assignment[x] == beta[v]
            for v, x in zip(b.vertices, images)
        ):
            count += 1
    return count


def _weakly_connected(d):
    from .digraph import pi0

    return len(pi0(d)) <= 1


def _spread_lift(p, fibers, d, tau, x0, y0):
    """The unique candidate lift of tau: d -> target through y0 at x0,
    spread along weak adjacency by one-arrow lifting; None when it breaks.

    Sound as a *unique* candidate only over a verified 1-covering and a
    weakly connected d; callers enforce both.
    """
    values = {x0: y0}
    frontier = [x0]
    g = p.source
    while frontier:
        nxt = []
        for u in frontier:
            gu = values[u]
            for v in d.successors(u):
                if v in values:
                    continue
                cand = [
                    w for w in fibers.get(tau[v], []) if g.is_arrow(gu, w)
                ]
                if len(cand) != 1:
                    return None
                values[v] = cand[0]
                nxt.append(v)
            for v in d.predecessors(u):
                if v in values:
                    continue
                cand = [
                    w for w in fibers.get(tau[v], []) if g.is_arrow(w, gu)
                ]
                if len(cand) != 1:
                    return None
                values[v] = cand[0]
                nxt.append(v)
        frontier = nxt
    if len(values) != len(d.vertices):
        return None
    for u, v in d.arrows:
        if not g.is_arrow(values[u], values[v]):
            return None
    return values


def check_unique_lifting(p, a, b, budget=DEFAULT_MAP_BUDGET, skip_hypotheses=False,
                         method="auto"):
    """Enumerate all commutative squares (maps b -> target together with
    compatible partial lifts on a) and verify exactly one diagonal exists.

    For user-supplied pairs the lifting hypotheses (or their dual) are
    checked first and a failure raises HypothesesFail; horn inclusions
    skip that (the hypotheses hold along the slab filtration instead).

    When p is a verified 1-covering and both digraphs are weakly connected,
    lifts are determined by their value at one anchor vertex, so squares
    and lift counts spread in linear time; otherwise the check falls back
    to exhaustive enumeration.
    """
    if not skip_hypotheses:
        direct = check_lifting_hypotheses(a, b)
        if not direct["pass"]:
            dual = check_lifting_hypotheses_dual(a, b)
            if not dual["pass"]:
                failed = next(
                    (k for k in ("subdigraph", "1", "2", "3") if not direct[k]),
                    "?",
                )
                raise HypothesesFail(failed)
    report = {"squares": 0, "unique": True, "pass": True}
    g = p.source
    fibers = {}
    for v in g.vertices:
        fibers.setdefault(p.assignment[v], []).append(v)
    fast = (
        method != "brute"
        and a.vertices
        and is_one_covering(p)
        and _weakly_connected(a)
        and _weakly_connected(b)
    )
    a0 = a.vertices[0] if a.vertices else None
    for beta_images in enumerate_digraph_maps(b, p.target, budget=budget):
        beta = dict(zip(b.vertices, beta_images))
        if fast:
            for anchor in fibers.get(beta[a0], []):
                alpha = _spread_lift(p, fibers, a, beta, a0, anchor)
                if alpha is None:
                    continue
                report["squares"] += 1
                gamma = _spread_lift(p, fibers, b, beta, a0, anchor)
                if gamma is None:
                    report["unique"] = False
                    report["pass"] = False
                    report["witness"] = {
                        "beta": [repr(x) for x in beta_images],
                        "anchor": repr(anchor),
                        "lifts": 0,
                    }
                    return report
        else:
            restricted = {v: beta[v] for v in a.vertices}
            seen_alphas = []
            for anchor in (fibers.get(beta[a0], []) if a.vertices else [None]):
                pinned = {
                    v: tuple(
                        x
                        for x in g.vertices
                        if p.assignment[x] == restricted[v]
                    )
                    for v in a.vertices
                }
                if a.vertices:
                    pinned[a0] = (anchor,)
                for images in enumerate_digraph_maps(a, g, pinned=pinned):
                    seen_alphas.append(dict(zip(a.vertices, images)))
            for alpha in seen_alphas:
                report["squares"] += 1
                count = unique_lift_count(p, a, b, alpha, beta)
                if count != 1:
                    report["unique"] = False
                    report["pass"] = False
                    report["witness"] = {
                        "beta": [repr(x) for x in beta_images],
                        "alpha": [repr(alpha[v]) for v in a.vertices],
                        "lifts": count,
                    }
                    return report
    return report


def horn_inclusion(side, n, i, eps):
    """The horn realization inside the full cube, as (subdigraph, cube)."""
    cube = cube_realization(standard_interval(side), n)
    horn = cube.induced(horn_vertices(side, n, i, eps))
    return horn, cube


def check_unique_lifting_all_horns(p, side, n, budget=10**7):
    """Unique lifting against every (i, eps) horn of one cube, sharing the
    base-map enumeration and the spread across horns.

    Each candidate lift is determined by its value over the grid origin
    (which lies in every horn when n >= 2), so one spread per (base map,
    anchor) settles all horns at once: a valid spread is the unique lift of
    every horn square with that anchor; an invalid spread can only break a
    horn whose restricted square is itself valid, which is then reported.
    Requires a verified one-arrow covering (raises otherwise).
    """
    if n < 2:
        raise BadIndex("the shared-anchor route needs n >= 2; use the generic check")
    if not is_one_covering(p):
        raise InputError("the shared-anchor route needs a verified 1-covering")
    cube = cube_realization(standard_interval(side), n)
    horn_list = [(i, eps) for i in range(1, n + 1) for eps in (0, 1)]
    g, h = p.source, p.target
    gi = {v: k for k, v in enumerate(g.vertices)}
    hi = {v: k for k, v in enumerate(h.vertices)}
    ok_pairs = {(gi[u], gi[v]) for (u, v) in g.arrows}
    ok_pairs.update((k, k) for k in range(len(g.vertices)))
    fibers = [[] for _ in h.vertices]
    for v in g.vertices:
        fibers[hi[p.assignment[v]]].append(gi[v])
    nb = len(cube.vertices)
    cube_idx = {v: k for k, v in enumerate(cube.vertices)}
    arrows_b = [(cube_idx[u], cube_idx[v]) for (u, v) in cube.sorted_arrows()]
    # breadth-first spread schedule from the origin over weak adjacency
    adjacency = [[] for _ in range(nb)]
    for u, v in arrows_b:
        adjacency[u].append((v, True))
        adjacency[v].append((u, False))
    schedule = []  # (vertex, known neighbour, arrow goes known -> vertex)
    seen = [False] * nb
    seen[0] = True
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v, fwd in adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    schedule.append((v, u, fwd))
                    nxt.append(v)
        frontier = nxt
    horn_positions = {
        key: [cube_idx[v] for v in horn_vertices(side, n, *key)]
        for key in horn_list
    }
    horn_members = {
        key: frozenset(pos) for key, pos in horn_positions.items()
    }
    reports = {
        key: {"squares": 0, "unique": True, "pass": True} for key in horn_list
    }
    gamma = [None] * nb
    for beta in iter_digraph_maps(cube, h, budget=budget):
        bi = [hi[x] for x in beta]
        for anchor in fibers[bi[0]]:
            gamma[0] = anchor
            valid = True
            for v, u, fwd in schedule:
                fiber = fibers[bi[v]]
                gu = gamma[u]
                found = None
                for w in fiber:
                    pair = (gu, w) if fwd else (w, gu)
                    if pair in ok_pairs:
                        if found is not None:
                            found = None
                            break
                        found = w
                if found is None:
                    valid = False
                    break
                gamma[v] = found
            if valid:
                for u, v in arrows_b:
                    if (gamma[u], gamma[v]) not in ok_pairs:
                        valid = False
                        break
            if valid:
                for key in horn_list:
                    reports[key]["squares"] += 1
            else:
                # a horn with a valid restricted square has a lift-less square
                for key in horn_list:
                    alpha = _spread_on_positions(
                        p, fibers, bi, horn_positions[key], horn_members[key],
                        adjacency, ok_pairs, anchor,
                    )
                    if alpha is not None:
                        reports[key]["squares"] += 1
                        reports[key]["unique"] = False
                        reports[key]["pass"] = False
                        reports[key].setdefault(
                            "witness",
                            {"beta": [repr(x) for x in beta], "anchor": repr(anchor)},
                        )
    return {
        "side": side,
        "n": n,
        "horns": {f"{i},{eps}": reports[(i, eps)] for (i, eps) in horn_list},
        "pass": all(r["pass"] for r in reports.values()),
    }


def _spread_on_positions(p, fibers, bi, positions, members, adjacency, ok_pairs, anchor):
    """Spread a lift over a subset of cube positions (weakly connected,
    containing position 0); None when it breaks."""
    values = {0: anchor}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            gu = values[u]
            for v, fwd in adjacency[u]:
                if v not in members or v in values:
                    continue
                found = None
                for w in fibers[bi[v]]:
                    pair = (gu, w) if fwd else (w, gu)
                    if pair in ok_pairs:
                        if found is not None:
                            return None
                        found = w
                if found is None:
                    return None
                values[v] = found
                nxt.append(v)
        frontier = nxt
    if len(values) != len(positions):
        return None
    for u in positions:
        for v, fwd in adjacency[u]:
            if v in values and fwd:
                if (values[u], values[v]) not in ok_pairs:
                    return None
    return values


def slab_filtration(side, n, i, eps):
    """The increasing union of horn-plus-slab subdigraphs from the horn to
    the full cube; each consecutive inclusion satisfies the lifting
    hypotheses or their dual (checked by the caller)."""
    cube = cube_realization(standard_interval(side), n)
    horn_vs = horn_vertices(side, n, i, eps)
    stages = []
    for k in range(side + 1):
        if eps == 1:
            band = range(0, k + 1)
        else:
            band = range(side - k, side + 1)
        slab = [
            v
            for v in cube.vertices
            if v[i - 1] in band
        ]
        stages.append(_sub_digraph_union(cube, [slab, horn_vs]))
    return stages


def check_two_covering_filtration(side, n, i, eps):
    """Each consecutive slab inclusion satisfies the lifting hypotheses or
    their dual (hypothesis 2 in at least the connected form)."""
    stages = slab_filtration(side, n, i, eps)
    results = []
    for k in range(1, len(stages)):
        a, b = stages[k - 1], stages[k]
        direct = check_lifting_hypotheses(a, b)
        dual = check_lifting_hypotheses_dual(a, b)
        results.append(
            {
                "step": k,
                "direct": direct["pass"],
                "direct_literal": direct["literal"],
                "dual": dual["pass"],
                "dual_literal": dual["literal"],
                "pass": direct["pass"] or dual["pass"],
            }
        )
    return {
        "steps": results,
        "pass": all(r["pass"] for r in results),
        "full_cube_reached": set(stages[-1].vertices)
        == set(cube_realization(standard_interval(side), n).vertices),
    }
