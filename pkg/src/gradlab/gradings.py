"""Semigroup gradings of algebras with a homogeneous basis.

Every basis vector carries one degree, an element of the grading semigroup,
never its zero. The component at the zero element is therefore {0}, matching
the convention that undefined products are swallowed by the zero degree.
"""

from __future__ import annotations

import numpy as np

from .algebras import Algebra, Ideal, ideal_closure, validate_algebra
from .errors import HypothesesUnmetError, ValidationError
from .fflinalg import (
    DEFAULT_BUDGET,
    Subspace,
    check_budget,
    projective_blocks,
    projective_count,
    residues,
)
from .groups import GroupTable, as_group, quotient
from .semigroups import SemigroupTable


class GradedAlgebra:
    """An algebra together with a grading semigroup and a degree per basis vector."""

    __slots__ = ("algebra", "grading", "deg")

    def __init__(self, algebra: Algebra, grading: SemigroupTable, deg: np.ndarray):
        self.algebra = algebra
        self.grading = grading
        d = np.asarray(deg, dtype=np.int64).copy()
        d.setflags(write=False)
        self.deg = d

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def component_indices(self, g: int) -> np.ndarray:
        return np.flatnonzero(self.deg == g)

    def component(self, g: int) -> Subspace:
        idx = self.component_indices(g)
        rows = np.zeros((idx.size, self.algebra.dim), dtype=np.int64)
        rows[np.arange(idx.size), idx] = 1
        return Subspace(self.algebra.field, self.algebra.dim, rows)

    def support(self, v) -> list[int]:
        v = residues(v, self.algebra.field)
        return sorted({int(self.deg[i]) for i in np.flatnonzero(v)})

    def decompose(self, v) -> list[tuple[int, np.ndarray]]:
        """Split v into its homogeneous parts, one per support degree."""
        v = residues(v, self.algebra.field)
        out = []
        for g in self.support(v):
            part = np.where(self.deg == g, v, 0)
            out.append((g, part))
        return out

    def __repr__(self) -> str:
        return f"GradedAlgebra(dim={self.dim}, grading_n={self.grading.n})"


def validate_grading(algebra: Algebra, grading: SemigroupTable, deg) -> GradedAlgebra:
    """Check R_g R_h inside R_gh on all basis pairs.

    Degrees may never be the zero element; a product whose degree lands on the
    zero element must vanish outright.
    """
    d = np.asarray(deg, dtype=np.int64)
    if d.shape != (algebra.dim,):
        raise ValidationError(f"degree map shape {d.shape} does not match dim {algebra.dim}")
    if ((d < 0) | (d >= grading.n)).any():
        raise ValidationError("degree out of semigroup range")
    if grading.zero is not None and (d == grading.zero).any():
        raise ValidationError("basis vectors may not sit in the zero component")
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            target = int(grading.table[d[i], d[j]])
            prod = algebra.mul[i, j]
            bad = [k for k in np.flatnonzero(prod) if int(d[k]) != target]
            if bad:
                if grading.zero is not None and target == grading.zero:
                    raise ValidationError(
                        f"product of basis {i}, {j} must vanish, its degree is the zero element",
                        witness=(i, j),
                    )
                raise ValidationError(
                    f"product of basis {i}, {j} leaves component {target}", witness=(i, j)
                )
    return GradedAlgebra(algebra, grading, d)


def is_graded_ideal(graded: GradedAlgebra, ideal: Ideal | Subspace) -> bool:
    """Whether the ideal splits as the sum of its component intersections."""
    space = ideal.space if isinstance(ideal, Ideal) else ideal
    total = Subspace.zero(graded.algebra.field, graded.algebra.dim)
    for g in range(graded.grading.n):
        total = total.sum(space.intersect(graded.component(g)))
    return total == space


def is_graded_simple(graded: GradedAlgebra, budget: int = DEFAULT_BUDGET) -> tuple[bool, np.ndarray | None]:
    """No graded ideal besides 0 and R.

    Every nonzero graded ideal contains a nonzero homogeneous element, and the
    ideal generated by a homogeneous element is graded, so it is enough to try
    one representative per scaling class inside each component.
    """
    A = graded.algebra
    if A.dim == 0:
        raise ValidationError("graded simplicity is undefined for the zero algebra")
    total = sum(
        projective_count(A.field, int((graded.deg == g).sum()))
        for g in range(graded.grading.n)
    )
    check_budget(total, budget, "graded simplicity enumeration")
    for g in range(graded.grading.n):
        idx = graded.component_indices(g)
        if idx.size == 0:
            continue
        for block in projective_blocks(A.field, idx.size):
            for coords in block:
                v = np.zeros(A.dim, dtype=np.int64)
                v[idx] = coords
                closure = ideal_closure(A, [v])
                if closure.is_proper():
                    return False, v
    return True, None


def coarsen_by_quotient(graded: GradedAlgebra, normal) -> tuple[GradedAlgebra, GroupTable, np.ndarray]:
    """Regrade by G/N for a normal subgroup N of a group grading.

    Returns the coarsened graded algebra, the quotient group, and the
    projection map on grading elements.
    """
    group = as_group(graded.grading)
    if group is None:
        raise HypothesesUnmetError("coarsening needs a group grading")
    q, proj = quotient(group, normal)
    deg = proj[graded.deg]
    return validate_grading(graded.algebra, q, deg), q, proj


def subalgebra_on_subset(graded: GradedAlgebra, subset) -> tuple[GradedAlgebra, np.ndarray]:
    """The graded subalgebra spanned by components with degree in the subset.

    The subset must be multiplicatively closed inside the semigroup, up to
    products falling on the zero element, whose component vanishes anyway.
    Returns the graded subalgebra and the selected basis indices.
    """
    H = sorted(set(int(x) for x in subset))
    sg = graded.grading
    for a in H:
        for b in H:
            prod = int(sg.table[a, b])
            if prod not in H and not sg.is_zero(prod):
                raise ValidationError(f"subset is not closed: {a}*{b} = {prod}", witness=(a, b))
    idx = np.flatnonzero(np.isin(graded.deg, H))
    mul = graded.algebra.mul[np.ix_(idx, idx, idx)]
    full = graded.algebra.mul[np.ix_(idx, idx)]
    outside = np.delete(full, idx, axis=2)
    if outside.any():
        raise ValidationError("component products leak outside the subset, grading is corrupt")
    sub = validate_algebra(graded.algebra.field, idx.size, mul)
    return validate_grading(sub, sg, graded.deg[idx]), idx


def grading_group(graded: GradedAlgebra) -> GroupTable:
    group = as_group(graded.grading)
    if group is None:
        raise HypothesesUnmetError("this operation needs the grading semigroup to be a group")
    return group
