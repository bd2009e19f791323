import pytest

from dgh.digraph import (
    Digraph,
    DigraphMap,
    box_product,
    enumerate_digraph_maps,
    is_isomorphic,
    pi0,
    point,
)
from dgh.errors import BudgetExceeded, NotInClosed
from dgh.homotopy import (
    DdrWitness,
    an_tower,
    homotopy_classes,
    loop_stage,
    loop_stage_pullback_check,
    one_step_homotopy,
    path_stage,
    verify_ddr,
    verify_oddr,
)
from dgh.intervals import BASEPOINT, sphere_digraph, standard_interval
from dgh.nerve import nerve_functor_map
from dgh.homology import induced_homology_map

from conftest import line, naive_components, naive_digraph_maps, naive_one_step


def oracle_classes(source, target, rel=(), target_part=None):
    """Independent: full product scan plus BFS over brute one-step edges."""
    rel_pos = [source.index(v) for v in rel]
    maps = []
    for images in naive_digraph_maps(source, target):
        if target_part is not None and any(
            images[p] not in target_part for p in rel_pos
        ):
            continue
        maps.append(images)
    edges = []
    for a in maps:
        for b in maps:
            if a == b:
                continue
            if any(a[p] != b[p] for p in rel_pos):
                continue
            if naive_one_step(source, target, a, b):
                edges.append((a, b))
    return maps, naive_components(maps, edges)


class TestOneStep:
    def test_reflexive(self, c3):
        f = DigraphMap(line(1), c3, {0: 0, 1: 1})
        assert one_step_homotopy(f, f)

    def test_constants_into_interval(self):
        i1 = line(1)
        c0 = DigraphMap.constant(point(), i1, 0)
        c1 = DigraphMap.constant(point(), i1, 1)
        assert one_step_homotopy(c0, c1)
        assert not one_step_homotopy(c1, c0)

    def test_rotated_loops_match_brute_force(self, c3):
        # at stage 6 a single winding-one loop exists (all forward steps
        # forced), so the rotation pair lives at stage 8
        circle = sphere_digraph(standard_interval(8), 1)
        amb = circle.ambient
        maps = enumerate_digraph_maps(amb, c3, pinned={BASEPOINT: (0,)})
        winding_one = [t for t in maps if _winding(amb, t) == 1]
        assert len(winding_one) >= 2
        f, g = winding_one[:2]
        fm = DigraphMap.from_images(amb, c3, f)
        gm = DigraphMap.from_images(amb, c3, g)
        assert one_step_homotopy(fm, gm) == naive_one_step(amb, c3, f, g)


def _winding(sphere_ambient, images):
    lookup = dict(zip(sphere_ambient.vertices, images))
    m = 1 + max(v[0] for v in sphere_ambient.vertices if v != BASEPOINT)

    def value(x):
        return lookup[BASEPOINT] if x in (0, m) else lookup[(x,)]

    total = 0
    word_sign = lambda p: 1 if p % 2 == 0 else -1
    for p in range(m):
        a, b = value(p), value(p + 1)
        if a == b:
            continue
        total += word_sign(p)
    return total // 3


class TestHomotopyClasses:
    def test_point_source_counts_components(self, c3):
        classes = homotopy_classes(point(), c3)
        assert classes.n_classes == len(pi0(c3))
        two = Digraph(["a", "b"])
        assert homotopy_classes(point(), two).n_classes == 2

    def test_pointed_interval_into_cycle_oracle(self, c3):
        src = line(1)
        maps, expected = oracle_classes(src, c3, rel=(0, 1), target_part=(0,))
        classes = homotopy_classes(src, c3, rel_part=(0, 1), target_part=(0,))
        assert classes.n_classes == expected == 1

    def test_loops_on_cycle_oracle(self, c3):
        circle = sphere_digraph(standard_interval(8), 1)
        amb = circle.ambient
        maps, expected = oracle_classes(
            amb, c3, rel=(BASEPOINT,), target_part=(0,)
        )
        classes = homotopy_classes(
            amb, c3, rel_part=(BASEPOINT,), target_part=(0,)
        )
        assert classes.n_classes == expected == 3
        windings = {
            _winding(amb, classes.maps[k])
            for k in range(len(classes.maps))
        }
        assert windings == {-1, 0, 1}

    def test_budget(self, c3):
        with pytest.raises(BudgetExceeded):
            homotopy_classes(line(3), c3, budget=3)

    def test_relative_refines_absolute(self, c3):
        src = line(2)
        rel = homotopy_classes(src, c3, rel_part=(0,), target_part=(0,))
        absolute = homotopy_classes(src, c3)
        for x in range(len(rel.maps)):
            for y in range(len(rel.maps)):
                if rel.class_of[x] == rel.class_of[y]:
                    assert absolute.class_of_map(
                        rel.maps[x]
                    ) == absolute.class_of_map(rel.maps[y])


class TestAnTower:
    def test_dimension_zero_counts_components(self):
        g = Digraph(["a", "b", "c"], [("a", "b")])
        tower = an_tower(g, "a", 0, "r", 3)
        assert tower.class_counts() == [2, 2, 2]

    def test_point_target_trivial(self):
        for n in (0, 1, 2):
            tower = an_tower(point(), "*", n, "r", 2)
            assert tower.class_counts() == [1, 1]

    def test_cycle_matches_winding_oracle(self, c3):
        tower = an_tower(c3, 0, 1, "r", 8)
        oracle = [
            (s // 2 + s % 2) // 3 + (s // 2) // 3 + 1 for s in range(1, 9)
        ]
        assert tower.class_counts() == oracle == [1, 1, 1, 1, 2, 3, 3, 3]

    def test_cycle_transitions_injective_after_windings_appear(self, c3):
        tower = an_tower(c3, 0, 1, "r", 8)
        first_full = tower.class_counts().index(3) + 1  # both windings present
        for s in range(first_full, 8):
            tr = tower.transitions[s - 1]
            assert len(set(tr)) == len(tr)

    def test_stable_window(self, c3):
        tower = an_tower(c3, 0, 1, "r", 8)
        assert tower.stabilization == (6, 8)

    def test_other_tower_kinds_run(self, c3):
        # transitions validate internally (class representative independence)
        st = an_tower(c3, 0, 1, "st", 5)
        assert st.class_counts()[0] == 1
        cantor = an_tower(c3, 0, 1, "cantor", 3)
        assert len(cantor.class_counts()) == 3

    def test_dimension_two_on_cycle(self, c3):
        # 3-cycles carry nothing in dimension two at small stages
        tower = an_tower(c3, 0, 2, "r", 2)
        assert tower.class_counts() == [1, 1]


class TestPathLoop:
    def test_stage_zero_is_identity(self, c3):
        paths, p0, p1 = path_stage(c3, 0)
        assert is_isomorphic(paths, c3)
        assert p0.image_tuple() == p1.image_tuple()

    def test_loop_count_oracle(self, c3):
        loops = loop_stage(c3, 0, 2)
        expected = sum(
            1
            for images in naive_digraph_maps(standard_interval(2).to_digraph(), c3)
            if images[0] == 0 and images[2] == 0
        )
        assert len(loops.vertices) == expected == 2

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_pullback_identity(self, c3, m):
        assert loop_stage_pullback_check(c3, 0, m)["pass"]

    def test_pullback_identity_corpus(self):
        fan = Digraph(["a", "b", "c"], [("b", "a"), ("b", "c")])
        for m in (1, 2, 3):
            assert loop_stage_pullback_check(fan, "b", m)["pass"]


class TestDdr:
    def test_square_example(self):
        sq = box_product(line(1), line(1))
        eta = {(0, 0): (0, 0), (0, 1): (0, 0), (1, 0): (0, 0), (1, 1): (0, 1)}
        rep = verify_ddr(DdrWitness(sq, [(0, 0)], eta))
        assert rep["pass"]

    def test_whole_part_identity(self, c3):
        rep = verify_ddr(
            DdrWitness(c3, c3.vertices, {v: v for v in c3.vertices})
        )
        assert rep["pass"]

    def test_non_in_closed_part_rejected(self):
        # the endpoint of an arrow is not an in-closed part
        with pytest.raises(NotInClosed):
            verify_ddr(DdrWitness(line(1), [1], {0: 0, 1: 1}))

    def test_identity_eta_fails_distance(self):
        rep = verify_ddr(DdrWitness(line(1), [0], {0: 0, 1: 1}))
        assert not rep["pass"]
        assert not rep["conditions"]["distance-step"]["pass"]
        assert not rep["conditions"]["iterate-reformulation"]["pass"]
        assert rep["conditions"]["reformulation-agrees"]["pass"]

    def test_cylinder_oddr(self, c3):
        cyl = box_product(c3, line(1))
        eta = {v: (v[0], 0) for v in cyl.vertices}
        rep = verify_oddr(cyl, [(v, 0) for v in c3.vertices], eta)
        assert rep["pass"]

    def test_oddr_rejects_non_in_closed(self):
        with pytest.raises(NotInClosed):
            verify_oddr(line(1), [1], {0: 0, 1: 1})

    def test_ddr_induces_homology_isos(self):
        # evidence that a verified retract is invisible to nerve homology
        sq = box_product(line(1), line(1))
        part = [(0, 0)]
        incl = DigraphMap(sq.induced(part), sq, {(0, 0): (0, 0)})
        cm = nerve_functor_map(incl, 1, 1, 2)
        for deg in (0, 1):
            assert induced_homology_map(cm, deg)["iso"]
