"""Normalized cubical homology, induced maps, and fundamental-group
presentations for truncated cubical sets.

The chain complex in degree n has the nondegenerate n-cubes as basis;
boundaries are the alternating face sums with degenerate faces sent to
zero.  Integral homology is computed through Smith normal form.  The top
truncated degree is only a lower bound (its incoming boundary is cut off)
and is flagged as such everywhere.
"""

from __future__ import annotations

from .errors import InputError, NotChainMap, NotConnected
from .linalg import (
    identity,
    invariant_factors,
    kernel_basis,
    matmul,
    mat_vec,
    matrix_rank,
    smith_normal_form,
    solve_integer,
    unimodular_inverse,
    zeros,
)


class ChainComplex:
    """Integer chain complex: ranks per degree and boundary matrices.

    boundaries[n] maps degree n to degree n-1 (rows indexed by degree n-1
    basis, columns by degree n basis); boundaries[0] is the zero map.
    """

    def __init__(self, ranks, boundaries):
        self.ranks = list(ranks)
        self.boundaries = boundaries
        self.top = len(self.ranks) - 1
        for n in range(1, self.top + 1):
            left = boundaries[n]
            assert len(left) == self.ranks[n - 1] or self.ranks[n - 1] == 0
        for n in range(1, self.top):
            comp = matmul(self.boundaries[n], self.boundaries[n + 1])
            if any(any(row) for row in comp):
                raise InputError(f"boundary squared is nonzero in degree {n + 1}")

    def boundary(self, n):
        if n < 1 or n > self.top:
            return zeros(max(self.ranks[n - 1] if 0 < n <= self.top + 1 else 0, 0), 0)
        return self.boundaries[n]


#: ceiling on one side of a boundary matrix (arbitrary-precision entries
#: make runtime the only concern)
MAX_MATRIX_DIM = 20000


def normalized_chain_complex(x, max_dim=MAX_MATRIX_DIM):
    """Chain complex on nondegenerate cubes; also returns the per-degree
    basis (cube indices) used to express induced maps."""
    if x.identity_violations():
        from .errors import InvalidCubicalSet

        raise InvalidCubicalSet("structure tables violate a cubical identity")
    if any(
        sum(1 for f in flags if f) > max_dim for flags in x.nondegenerate
    ):
        from .errors import BudgetExceeded

        raise BudgetExceeded(f"a chain group exceeds {max_dim} generators")
    bases = [x.nondegenerate_cubes(n) for n in range(x.top_dim + 1)]
    basis_pos = [
        {cube: k for k, cube in enumerate(level)} for level in bases
    ]
    ranks = [len(level) for level in bases]
    boundaries = [zeros(0, ranks[0])]
    for n in range(1, x.top_dim + 1):
        mat = zeros(ranks[n - 1], ranks[n])
        for col, cube in enumerate(bases[n]):
            for i in range(1, n + 1):
                sign = (-1) ** i
                for eps, s in ((1, sign), (0, -sign)):
                    face = x.faces[n][(i, eps)][cube]
                    row = basis_pos[n - 1].get(face)
                    if row is not None:
                        mat[row][col] += s
        boundaries.append(mat)
    return ChainComplex(ranks, boundaries), bases


class HomologyGroup:
    """betti, torsion tuple, plus coordinates data for induced maps."""

    def __init__(self, betti, torsion):
        self.betti = betti
        self.torsion = tuple(torsion)

    def as_dict(self):
        return {"rank": self.betti, "torsion": list(self.torsion)}

    def __eq__(self, other):
        return (
            isinstance(other, HomologyGroup)
            and self.betti == other.betti
            and self.torsion == other.torsion
        )

    def __repr__(self):
        parts = ["Z"] * self.betti + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology(complex_, reduced=False):
    """Homology groups per degree 0..top; the top degree is truncated
    (its value is only a lower bound) and callers should read `truncated_top`.
    """
    groups = []
    for n in range(complex_.top + 1):
        rank_n = complex_.ranks[n]
        out_rank = matrix_rank(complex_.boundaries[n]) if n >= 1 else 0
        if n + 1 <= complex_.top:
            incoming = complex_.boundaries[n + 1]
            in_rank = matrix_rank(incoming)
            torsion = [d for d in invariant_factors(incoming) if d > 1]
        else:
            in_rank = 0
            torsion = []
        betti = rank_n - out_rank - in_rank
        if reduced and n == 0:
            betti -= 1
        groups.append(HomologyGroup(betti, torsion))
    return {"groups": groups, "truncated_top": True, "top": complex_.top}


def homology_summary(x, reduced=False):
    complex_, _ = normalized_chain_complex(x)
    return homology(complex_, reduced=reduced)


class HomologyCoordinates:
    """A coordinate system on H_n = ker/im for one chain complex degree.

    Exposes the presentation H = Z^z / columns(rel) together with maps
    cycle -> coordinates, for computing and comparing induced maps.
    """

    def __init__(self, complex_, n):
        self.n = n
        rank_n = complex_.ranks[n]
        if n >= 1:
            self.kernel = kernel_basis(
                complex_.boundaries[n]
                if complex_.boundaries[n]
                else zeros(1, rank_n)
            )
        else:
            self.kernel = identity(rank_n)
        self.z = len(self.kernel[0]) if self.kernel else 0
        if n + 1 <= complex_.top:
            incoming = complex_.boundaries[n + 1]
            cols = len(incoming[0]) if incoming else 0
            rel = []
            for j in range(cols):
                column = [incoming[r][j] for r in range(rank_n)]
                alpha = self._kernel_coords(column)
                if alpha is None:
                    raise NotChainMap("image does not lie in the kernel")
                rel.append(alpha)
            self.rel = [list(col) for col in zip(*rel)] if rel else zeros(self.z, 0)
        else:
            self.rel = zeros(self.z, 0)
        u, d, v = smith_normal_form(self.rel) if self.z else (identity(0), [], identity(0))
        self.u = u
        diag = [
            d[i][i]
            for i in range(min(len(d), len(d[0]) if d else 0))
            if d[i][i] != 0
        ]
        self.factors = diag  # invariant factors of the relation matrix
        self.free_rows = list(range(len(diag), self.z))
        self.torsion_rows = [i for i, f in enumerate(diag) if f > 1]

    def _kernel_coords(self, cycle):
        if self.z == 0:
            return [] if not any(cycle) else None
        return solve_integer(self.kernel, cycle)

    def coordinates(self, cycle):
        """(free coordinates, torsion residues) of an n-cycle, or None."""
        alpha = self._kernel_coords(cycle)
        if alpha is None:
            return None
        beta = mat_vec(self.u, alpha)
        free = [beta[i] for i in self.free_rows]
        tor = [beta[i] % self.factors[i] for i in self.torsion_rows]
        return free, tor

    def generator_cycles(self):
        """Cycle representatives for free then torsion generators."""
        if self.z == 0:
            return []
        uinv = unimodular_inverse(self.u)
        cycles = []
        for i in self.free_rows + self.torsion_rows:
            e = [1 if k == i else 0 for k in range(self.z)]
            alpha = mat_vec(uinv, e)
            cycles.append(mat_vec(self.kernel, alpha))
        return cycles

    def group(self):
        return HomologyGroup(len(self.free_rows), [self.factors[i] for i in self.torsion_rows])


def chain_map_matrices(cmap):
    """Per-degree matrices of a cubical map on the nondegenerate bases
    (degenerate images count zero); raises NotChainMap when the squares
    with the boundary fail to commute."""
    src_complex, src_bases = normalized_chain_complex(cmap.source)
    dst_complex, dst_bases = normalized_chain_complex(cmap.target)
    dst_pos = [
        {cube: k for k, cube in enumerate(level)} for level in dst_bases
    ]
    mats = []
    for n in range(cmap.source.top_dim + 1):
        mat = zeros(dst_complex.ranks[n], src_complex.ranks[n])
        for col, cube in enumerate(src_bases[n]):
            image = cmap.levels[n][cube]
            row = dst_pos[n].get(image)
            if row is not None:
                mat[row][col] = 1
        mats.append(mat)
    for n in range(1, cmap.source.top_dim + 1):
        width = src_complex.ranks[n]
        left = matmul(dst_complex.boundaries[n], mats[n], cols=width)
        right = matmul(mats[n - 1], src_complex.boundaries[n], cols=width)
        if left != right:
            raise NotChainMap(f"level map does not commute with boundary {n}")
    return src_complex, dst_complex, mats


def induced_homology_map(cmap, degree):
    """The induced matrix on homology coordinates (free rows first, then
    torsion rows) plus an isomorphism verdict.

    Isomorphism test: source and target groups agree abstractly and the
    induced map is surjective (then a surjection between isomorphic
    finitely generated abelian groups is an isomorphism).
    """
    src_complex, dst_complex, mats = chain_map_matrices(cmap)
    src = HomologyCoordinates(src_complex, degree)
    dst = HomologyCoordinates(dst_complex, degree)
    columns = []
    for cycle in src.generator_cycles():
        image = mat_vec(mats[degree], cycle)
        coords = dst.coordinates(image)
        if coords is None:
            raise NotChainMap("image of a cycle is not a cycle")
        free, tor = coords
        columns.append(free + tor)
    n_rows = len(dst.free_rows) + len(dst.torsion_rows)
    matrix = [
        [columns[j][i] for j in range(len(columns))] for i in range(n_rows)
    ]
    same_shape = src.group() == dst.group()
    surjective = _covers_target(matrix, dst)
    return {
        "matrix": matrix,
        "source_group": src.group(),
        "target_group": dst.group(),
        "iso": bool(same_shape and surjective),
    }


def _covers_target(matrix, dst):
    """Does the image of the induced map generate the target group?"""
    n_free = len(dst.free_rows)
    n_tor = len(dst.torsion_rows)
    n_rows = n_free + n_tor
    if n_rows == 0:
        return True
    cols = [list(col) for col in zip(*matrix)] if matrix else []
    rel_cols = []
    for k, i in enumerate(dst.torsion_rows):
        col = [0] * n_rows
        col[n_free + k] = dst.factors[i]
        rel_cols.append(col)
    stacked_cols = cols + rel_cols
    if not stacked_cols:
        return False
    stacked = [
        [stacked_cols[j][i] for j in range(len(stacked_cols))]
        for i in range(n_rows)
    ]
    facs = invariant_factors(stacked)
    return len(facs) == n_rows and all(abs(f) == 1 for f in facs)


# -- fundamental group ---------------------------------------------------------


class GroupPresentation:
    """Generators (names) and relators (words: tuples of signed indices).

    A letter (k, +1) is the k-th generator, (k, -1) its inverse.
    """

    def __init__(self, generators, relators):
        self.generators = list(generators)
        for word in relators:
            for k, _s in word:
                if not 0 <= k < len(self.generators):
                    raise InputError("relator letter outside the generators")
        self.relators = [tuple(word) for word in relators]

    def abelianization(self):
        """(betti, invariant factors) of the abelianized presentation."""
        mat = zeros(len(self.generators), len(self.relators))
        for j, word in enumerate(self.relators):
            for k, s in word:
                mat[k][j] += s
        facs = [d for d in invariant_factors(mat)]
        betti = len(self.generators) - len(facs)
        return HomologyGroup(betti, [d for d in facs if d > 1])

    def tietze_reduced(self):
        """Free reduction plus elimination of length-one relators; a bounded
        cleanup, not a decision procedure."""
        gens = list(self.generators)
        relators = [_free_reduce(w) for w in self.relators]
        changed = True
        while changed:
            changed = False
            unit = next((w for w in relators if len(w) == 1), None)
            if unit is None:
                break
            k = unit[0][0]
            relators = [
                _free_reduce(tuple(l for l in w if l[0] != k)) for w in relators
            ]
            relators = [w for w in relators if w]
            remap = {}
            for idx in range(len(gens)):
                if idx != k:
                    remap[idx] = len(remap)
            gens = [g for idx, g in enumerate(gens) if idx != k]
            relators = [
                tuple((remap[i], s) for i, s in w) for w in relators
            ]
            changed = True
        return GroupPresentation(gens, relators)


def _free_reduce(word):
    out = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def pi1_presentation(x, base):
    """Edge-path presentation from the 2-skeleton of a truncated nerve.

    Generators: nondegenerate 1-cubes outside a breadth-first spanning tree
    of the symmetrized 1-skeleton.  Each nondegenerate 2-cube contributes
    the relator of its boundary loop (tree edges and degenerate edges drop
    out).  Requires a connected 0-skeleton and top dimension >= 2.
    """
    if x.top_dim < 2:
        raise InputError("need the 2-skeleton to present the fundamental group")
    zeros_level = x.cubes[0]
    if base not in x.index[0]:
        base = (base,)  # 0-cubes are singleton image tuples
    if base not in x.index[0]:
        raise InputError(f"basepoint {base!r} is not a 0-cube")
    edges = []  # (tail 0-cube index, head 0-cube index) per nondegenerate 1-cube
    edge_ids = {}
    for k in x.nondegenerate_cubes(1):
        tail = x.faces[1][(1, 0)][k]
        head = x.faces[1][(1, 1)][k]
        edge_ids[k] = len(edges)
        edges.append((tail, head))
    adjacency = {v: [] for v in range(len(zeros_level))}
    for eid, (tail, head) in enumerate(edges):
        adjacency[tail].append((head, eid, 1))
        adjacency[head].append((tail, eid, -1))
    start = x.index[0][base]
    tree_edges = set()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w, eid, _ in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    tree_edges.add(eid)
                    nxt.append(w)
        frontier = nxt
    if len(seen) != len(zeros_level):
        raise NotConnected("the 1-skeleton is not connected")
    gen_of_edge = {}
    generators = []
    for k in x.nondegenerate_cubes(1):
        eid = edge_ids[k]
        if eid not in tree_edges:
            gen_of_edge[eid] = len(generators)
            generators.append(f"e{len(generators)}")
    relators = []
    nondeg1 = set(x.nondegenerate_cubes(1))

    def letters(cube1, sign):
        if cube1 not in nondeg1:
            return ()
        eid = edge_ids[cube1]
        if eid in tree_edges:
            return ()
        return ((gen_of_edge[eid], sign),)

    for k in x.nondegenerate_cubes(2):
        loop = (
            letters(x.faces[2][(1, 0)][k], 1)
            + letters(x.faces[2][(2, 1)][k], 1)
            + letters(x.faces[2][(1, 1)][k], -1)
            + letters(x.faces[2][(2, 0)][k], -1)
        )
        word = _free_reduce(loop)
        if word:
            relators.append(word)
    return GroupPresentation(generators, relators)
