"""Named built-in instances and the constructions behind them.

Every worked example used by the test suite and the CLI lives here: group
tables, semigroups with zero, algebras, graded algebras, and partial
actions. Builders return fully validated objects.
"""

from __future__ import annotations

import numpy as np

from .algebras import Algebra, validate_algebra
from .errors import ValidationError
from .fflinalg import FieldSpec, Subspace
from .gradings import GradedAlgebra, validate_grading
from .groups import (
    GroupTable, cyclic, dihedral, direct_product, klein_four, quaternion8, symmetric3,
)
from .partial import PartialAction, restrict_global_action, validate_partial_action
from .semigroups import (
    GroupoidTable, SemigroupTable, groupoid_to_semigroup, validate_groupoid, validate_semigroup,
)

# construction helpers


def diagonal_algebra(p: int, n: int) -> Algebra:
    """GF(p)^n with coordinatewise multiplication."""
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        mul[i, i, i] = 1
    return validate_algebra(FieldSpec(p), n, mul)


def matrix_algebra(p: int, n: int) -> Algebra:
    """Full n by n matrices over GF(p); basis unit E_ab at index a*n + b."""
    d = n * n
    mul = np.zeros((d, d, d), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                mul[a * n + b, b * n + c, a * n + c] = 1
    return validate_algebra(FieldSpec(p), d, mul)


def group_algebra(p: int, group: GroupTable) -> GradedAlgebra:
    """K[G] with its natural G-grading, one basis vector per element."""
    n = group.n
    mul = np.zeros((n, n, n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            mul[g, h, int(group.table[g, h])] = 1
    algebra = validate_algebra(FieldSpec(p), n, mul)
    return validate_grading(algebra, group, np.arange(n, dtype=np.int64))


def twisted_group_algebra(p: int, group: GroupTable, cocycle) -> GradedAlgebra:
    """K[G] with u_g u_h = c(g,h) u_gh; associativity of c is re-derived."""
    n = group.n
    c = np.asarray(cocycle, dtype=np.int64) % p
    if c.shape != (n, n) or not (c % p).all():
        raise ValidationError("cocycle must be an n by n table of nonzero residues")
    mul = np.zeros((n, n, n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            mul[g, h, int(group.table[g, h])] = int(c[g, h])
    algebra = validate_algebra(FieldSpec(p), n, mul)
    return validate_grading(algebra, group, np.arange(n, dtype=np.int64))


def coboundary_cocycle(p: int, group: GroupTable, scale) -> np.ndarray:
    """The 2-cocycle lambda(g) lambda(h) / lambda(gh) of a unit-valued scale map."""
    field = FieldSpec(p)
    lam = np.asarray(scale, dtype=np.int64) % p
    if lam.shape != (group.n,) or not lam.all():
        raise ValidationError("scale map must assign a nonzero residue to every element")
    n = group.n
    c = np.zeros((n, n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            c[g, h] = lam[g] * lam[h] * field.inverse(int(lam[int(group.table[g, h])])) % p
    return c


def matrix_good_grading(p: int, n: int, group: GroupTable, picks) -> GradedAlgebra:
    """M_n(GF(p)) graded by deg E_ab = picks[a] * picks[b]^-1."""
    algebra = matrix_algebra(p, n)
    picks = [int(x) for x in picks]
    if len(picks) != n:
        raise ValidationError("need one group element per matrix row")
    deg = np.zeros(n * n, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            deg[a * n + b] = group.table[picks[a], group.inverse(picks[b])]
    return validate_grading(algebra, group, deg)


def connected_groupoid(num_objects: int, isotropy: GroupTable) -> GroupoidTable:
    """The groupoid with all objects isomorphic and the given isotropy group.

    Morphism (i, j, h) runs from object j to object i; composition multiplies
    isotropy parts. Index layout: (i * m + j) * |H| + h.
    """
    m, k = num_objects, isotropy.n
    total = m * m * k

    def enc(i, j, h):
        return (i * m + j) * k + h

    dom = np.zeros(total, dtype=np.int64)
    cod = np.zeros(total, dtype=np.int64)
    comp = np.full((total, total), -1, dtype=np.int64)
    for i in range(m):
        for j in range(m):
            for h in range(k):
                dom[enc(i, j, h)] = j
                cod[enc(i, j, h)] = i
    for i in range(m):
        for j in range(m):
            for h in range(k):
                for l in range(m):
                    for h2 in range(k):
                        comp[enc(i, j, h), enc(j, l, h2)] = enc(i, l, int(isotropy.table[h, h2]))
    return validate_groupoid(m, dom, cod, comp)


def discrete_groupoid(num_objects: int) -> GroupoidTable:
    """Only identity morphisms, one per object."""
    m = num_objects
    dom = np.arange(m, dtype=np.int64)
    cod = np.arange(m, dtype=np.int64)
    comp = np.full((m, m), -1, dtype=np.int64)
    for i in range(m):
        comp[i, i] = i
    return validate_groupoid(m, dom, cod, comp)


def groupoid_algebra(p: int, gpd: GroupoidTable) -> GradedAlgebra:
    """Basis per morphism, product by composition, zero when undefined.

    Graded by the groupoid's semigroup with adjoined zero; the zero degree
    carries no basis vector.
    """
    sg = groupoid_to_semigroup(gpd)
    n = sg.n - 1
    mul = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            c = int(sg.table[a, b])
            if c != sg.zero:
                mul[a, b, c] = 1
    algebra = validate_algebra(FieldSpec(p), n, mul)
    return validate_grading(algebra, sg, np.arange(n, dtype=np.int64))


def graded_direct_sum(left: GradedAlgebra, right: GradedAlgebra) -> GradedAlgebra:
    """Block-diagonal sum of two algebras graded by the same semigroup."""
    if left.algebra.field != right.algebra.field:
        raise ValidationError("summands must share the base field")
    if not np.array_equal(left.grading.table, right.grading.table):
        raise ValidationError("summands must share the grading semigroup")
    dl, dr = left.algebra.dim, right.algebra.dim
    mul = np.zeros((dl + dr, dl + dr, dl + dr), dtype=np.int64)
    mul[:dl, :dl, :dl] = left.algebra.mul
    mul[dl:, dl:, dl:] = right.algebra.mul
    algebra = validate_algebra(left.algebra.field, dl + dr, mul)
    deg = np.concatenate([left.deg, right.deg])
    return validate_grading(algebra, left.grading, deg)


def trivial_grading(algebra: Algebra) -> GradedAlgebra:
    return validate_grading(algebra, cyclic(1), np.zeros(algebra.dim, dtype=np.int64))


# semigroup builders


def left_zero_semigroup(n: int) -> SemigroupTable:
    table = np.repeat(np.arange(n, dtype=np.int64)[:, None], n, axis=1)
    return validate_semigroup(table)


def group_with_zero(group: GroupTable) -> SemigroupTable:
    """Adjoin an absorbing zero as the last index."""
    n = group.n
    table = np.full((n + 1, n + 1), n, dtype=np.int64)
    table[:n, :n] = group.table
    return validate_semigroup(table, zero=n)


def chain_semilattice_2() -> SemigroupTable:
    """Two comparable idempotents; the bottom absorbs."""
    return validate_semigroup([[0, 1], [1, 1]])


# catalog fixtures


def _gf4() -> Algebra:
    mul = np.array([
        [[1, 0], [0, 1]],
        [[0, 1], [1, 1]],
    ], dtype=np.int64)
    return validate_algebra(FieldSpec(2), 2, mul)


def _left_zero_graded() -> GradedAlgebra:
    """u_x u_y = u_x over the two-element left-zero semigroup.

    Valid grading, but multiplication is not cancellative at either
    idempotent, so the corner route must refuse it.
    """
    sg = left_zero_semigroup(2)
    mul = np.zeros((2, 2, 2), dtype=np.int64)
    mul[0, :, 0] = 1
    mul[1, :, 1] = 1
    algebra = validate_algebra(FieldSpec(2), 2, mul)
    return validate_grading(algebra, sg, np.array([0, 1], dtype=np.int64))


def _nilpotent_base_graded() -> GradedAlgebra:
    """C2-graded with y*y = x and every other product zero.

    The identity component span{x} squares to zero, so it holds no nonzero
    idempotent and the corner route has no f to work with.
    """
    mul = np.zeros((2, 2, 2), dtype=np.int64)
    mul[1, 1, 0] = 1
    algebra = validate_algebra(FieldSpec(2), 2, mul)
    return validate_grading(algebra, cyclic(2), np.array([0, 1], dtype=np.int64))


def _pauli_klein4() -> GradedAlgebra:
    """Klein-four twisted group algebra over GF(3) with anticommuting signs.

    The sign rule (-1)^(x_lo * y_hi) on bit pairs makes the two generators
    square to one and anticommute, so the result is the full 2x2 matrix
    algebra in disguise, graded by the Klein four-group.
    """
    group = klein_four()
    c = np.ones((4, 4), dtype=np.int64)
    for x in range(4):
        for y in range(4):
            if (x & 1) and (y >> 1) & 1:
                c[x, y] = 2
    return twisted_group_algebra(3, group, c)


def _swap_partial() -> PartialAction:
    algebra = diagonal_algebra(2, 2)
    full = Subspace.full(FieldSpec(2), 2)
    swap = np.array([[0, 1], [1, 0]], dtype=np.int64)
    return validate_partial_action(
        cyclic(2), algebra, [full, full], [np.eye(2, dtype=np.int64), swap]
    )


def _halfdomain_partial() -> PartialAction:
    algebra = diagonal_algebra(2, 2)
    field = FieldSpec(2)
    full = Subspace.full(field, 2)
    half = Subspace.span(field, [[1, 0]], 2)
    return validate_partial_action(
        cyclic(2), algebra, [full, half],
        [np.eye(2, dtype=np.int64), np.array([[1, 0]], dtype=np.int64)]
    )


def _cycle_partial() -> PartialAction:
    big = diagonal_algebra(2, 3)
    group = cyclic(3)
    perms = np.array([[(v + g) % 3 for v in range(3)] for g in range(3)], dtype=np.int64)
    return restrict_global_action(group, big, perms, [0, 1, 2])


def _d4_edge_partial() -> PartialAction:
    """D4 acting on the vertices of a square, restricted to one edge's span."""
    big = diagonal_algebra(2, 4)
    group = dihedral(4)
    perms = np.zeros((8, 4), dtype=np.int64)
    for i in range(4):
        for j in range(2):
            for v in range(4):
                perms[i + 4 * j, v] = (i + (v if j == 0 else -v)) % 4
    return restrict_global_action(group, big, perms, [0, 1])


def _trivial_partial() -> PartialAction:
    algebra = diagonal_algebra(2, 2)
    return validate_partial_action(
        cyclic(1), algebra, [Subspace.full(FieldSpec(2), 2)], [np.eye(2, dtype=np.int64)]
    )


GROUPS = {
    "c1": lambda: cyclic(1),
    "c2": lambda: cyclic(2),
    "c3": lambda: cyclic(3),
    "c4": lambda: cyclic(4),
    "c5": lambda: cyclic(5),
    "c6": lambda: cyclic(6),
    "c8": lambda: cyclic(8),
    "klein4": klein_four,
    "d4": lambda: dihedral(4),
    "s3": symmetric3,
    "q8": quaternion8,
    "c2xc4": lambda: direct_product(cyclic(2), cyclic(4)),
}

SEMIGROUPS = {
    "left-zero-2": lambda: left_zero_semigroup(2),
    "c2-with-zero": lambda: group_with_zero(cyclic(2)),
    "chain-semilattice-2": chain_semilattice_2,
    "groupoid-pair-trivial": lambda: groupoid_to_semigroup(connected_groupoid(2, cyclic(1))),
    "groupoid-pair-discrete": lambda: groupoid_to_semigroup(discrete_groupoid(2)),
    "groupoid-pair-c2": lambda: groupoid_to_semigroup(connected_groupoid(2, cyclic(2))),
}

ALGEBRAS = {
    "gf2": lambda: diagonal_algebra(2, 1),
    "gf4": _gf4,
    "gf2xgf2": lambda: diagonal_algebra(2, 2),
    "m2-gf2": lambda: matrix_algebra(2, 2),
    "m2-gf3": lambda: matrix_algebra(3, 2),
}

GRADED = {
    "gf2-trivial": lambda: trivial_grading(diagonal_algebra(2, 1)),
    "gf2xgf2-trivial": lambda: trivial_grading(diagonal_algebra(2, 2)),
    "gf2-c2-group-algebra": lambda: group_algebra(2, cyclic(2)),
    "gf2-c3-group-algebra": lambda: group_algebra(2, cyclic(3)),
    "gf3-c3-group-algebra": lambda: group_algebra(3, cyclic(3)),
    "gf2-d4-group-algebra": lambda: group_algebra(2, dihedral(4)),
    "gf2-q8-group-algebra": lambda: group_algebra(2, quaternion8()),
    "m2-gf2-good-grading": lambda: matrix_good_grading(2, 2, cyclic(2), [0, 1]),
    "m2-gf2-s3-grading": lambda: matrix_good_grading(2, 2, symmetric3(), [0, 2]),
    "m2-gf3-pauli-klein4": _pauli_klein4,
    "groupoid-pair-trivial-gf2": lambda: groupoid_algebra(2, connected_groupoid(2, cyclic(1))),
    "groupoid-pair-c2-gf2": lambda: groupoid_algebra(2, connected_groupoid(2, cyclic(2))),
    "left-zero-graded-gf2": _left_zero_graded,
    "c2-nilpotent-base-gf2": _nilpotent_base_graded,
}

PARTIAL = {
    "c2-swap-skew": _swap_partial,
    "c2-partial-halfdomain": _halfdomain_partial,
    "c3-cycle-skew": _cycle_partial,
    "d4-edge-restriction": _d4_edge_partial,
    "trivial-c1-gf2xgf2": _trivial_partial,
}

_KINDS = {
    "group": GROUPS,
    "semigroup": SEMIGROUPS,
    "algebra": ALGEBRAS,
    "graded_algebra": GRADED,
    "partial_action": PARTIAL,
}


def catalog_names() -> dict[str, list[str]]:
    """All builder names, keyed by instance kind."""
    return {kind: sorted(table) for kind, table in _KINDS.items()}


def build_catalog(name: str):
    """Build a named entry. Returns (kind, object)."""
    for kind, table in _KINDS.items():
        if name in table:
            return kind, table[name]()
    raise ValidationError(f"unknown catalog name: {name}")
