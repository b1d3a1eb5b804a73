"""Finite-dimensional associative algebras over GF(p) by structure constants.

An algebra of dimension d is the tensor mul with b_i * b_j = sum_k mul[i,j,k] b_k.
Associativity is verified on all basis triples at construction time, and the
identity element, when one exists, is located by an exact linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, ValidationError
from .fflinalg import (
    DEFAULT_BUDGET,
    FieldSpec,
    Subspace,
    check_budget,
    kernel,
    nonzero_vector_blocks,
    projective_blocks,
    projective_count,
    residues,
    rref_matrix,
    solve,
    vector_count,
)


class Algebra:
    __slots__ = ("field", "dim", "mul", "unit")

    def __init__(self, field: FieldSpec, dim: int, mul: np.ndarray, unit: np.ndarray | None):
        self.field = field
        self.dim = int(dim)
        m = np.asarray(mul, dtype=np.int64).copy()
        m.setflags(write=False)
        self.mul = m
        self.unit = None if unit is None else np.asarray(unit, dtype=np.int64).copy()

    def multiply(self, x, y) -> np.ndarray:
        x = residues(x, self.field)
        y = residues(y, self.field)
        t = np.tensordot(x, self.mul, axes=([0], [0]))
        return (y @ t) % self.field.p

    def is_unital(self) -> bool:
        return self.unit is not None

    def __repr__(self) -> str:
        u = "unital" if self.unit is not None else "non-unital"
        return f"Algebra(GF({self.field.p}), dim={self.dim}, {u})"


def associativity_defect(mul: np.ndarray, p: int) -> tuple[int, int, int] | None:
    """First basis triple where (b_i b_j) b_k != b_i (b_j b_k), or None."""
    left = np.tensordot(mul, mul, axes=([2], [0])) % p
    right = np.tensordot(mul, mul, axes=([2], [1])).transpose(2, 0, 1, 3) % p
    bad = np.argwhere((left != right).any(axis=3))
    if bad.size:
        i, j, k = (int(x) for x in bad[0])
        return (i, j, k)
    return None


def _locate_unit(mul: np.ndarray, p: int) -> np.ndarray | None:
    d = mul.shape[0]
    if d == 0:
        return None
    left_eqs = mul.transpose(1, 2, 0).reshape(d * d, d)
    right_eqs = mul.transpose(0, 2, 1).reshape(d * d, d)
    rhs = np.eye(d, dtype=np.int64).reshape(d * d)
    return solve(np.vstack([left_eqs, right_eqs]), np.concatenate([rhs, rhs]), FieldSpec(p))


def dense_constants(dim: int, constants, p: int) -> np.ndarray:
    mul = np.zeros((dim, dim, dim), dtype=np.int64)
    for entry in constants:
        i, j, k, c = (int(x) for x in entry)
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise ValidationError(f"structure constant index out of range: {(i, j, k)}")
        mul[i, j, k] = (mul[i, j, k] + c) % p
    return mul


def validate_algebra(field: FieldSpec, dim: int, constants) -> Algebra:
    """Build an Algebra from sparse constants, checking associativity.

    Args:
        field: the prime field.
        dim: number of basis vectors.
        constants: iterable of (i, j, k, c) meaning b_i b_j has coefficient c at b_k,
            or an already dense (dim, dim, dim) array.

    Returns:
        The validated algebra, with the identity located if one exists.
    """
    if isinstance(constants, np.ndarray) and constants.ndim == 3:
        if constants.shape != (dim, dim, dim):
            raise ValidationError(f"dense constants shape {constants.shape} does not match dim {dim}")
        mul = constants.astype(np.int64) % field.p
    else:
        mul = dense_constants(dim, constants, field.p)
    defect = associativity_defect(mul, field.p)
    if defect is not None:
        raise ValidationError(f"structure constants are not associative at basis triple {defect}", witness=defect)
    return Algebra(field, dim, mul, _locate_unit(mul, field.p))


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal of ``parent``; closure is re-checked at construction."""

    parent: Algebra
    space: Subspace

    def __post_init__(self):
        A = self.parent
        B = self.space.basis
        if self.space.ambient_dim != A.dim or self.space.field != A.field:
            raise ValidationError("ideal subspace does not match the parent algebra")
        if B.shape[0] == 0:
            return
        left = np.tensordot(B, A.mul, axes=([1], [0])).reshape(-1, A.dim) % A.field.p
        right = np.tensordot(B, A.mul, axes=([1], [1])).reshape(-1, A.dim) % A.field.p
        for row in np.vstack([left, right]):
            if not self.space.contains(row):
                raise ValidationError("subspace is not closed under multiplication")

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_proper(self) -> bool:
        return self.space.dim < self.parent.dim

    def is_zero(self) -> bool:
        return self.space.dim == 0


def ideal_closure(algebra: Algebra, generators) -> Ideal:
    """Smallest two-sided ideal containing the generators.

    Worklist fixpoint: alternately close the span under left and right
    multiplication by all basis vectors until the dimension stabilizes. The
    GF(p)-span subsumes the additive part of the usual x, Rx, xR, RxR recipe.
    """
    p = algebra.field.p
    space = Subspace.span(algebra.field, generators, algebra.dim)
    while True:
        B = space.basis
        if B.shape[0] == 0:
            break
        left = np.tensordot(B, algebra.mul, axes=([1], [0])).reshape(-1, algebra.dim)
        right = np.tensordot(B, algebra.mul, axes=([1], [1])).reshape(-1, algebra.dim)
        grown = Subspace.span(
            algebra.field, np.vstack([B, left % p, right % p]), algebra.dim
        )
        if grown.dim == space.dim:
            break
        space = grown
    return Ideal(algebra, space)


def is_simple(algebra: Algebra, budget: int = DEFAULT_BUDGET) -> tuple[bool, Ideal | None]:
    """Brute-force simplicity: A*A is nonzero and no proper nonzero ideal exists.

    Every scaling class of nonzero vectors is tried as a single generator,
    which suffices because an ideal containing v contains its closure. On
    failure the discovered proper ideal is returned as witness.
    """
    if algebra.dim == 0:
        raise ValidationError("simplicity is undefined for the zero algebra")
    if not algebra.mul.any():
        if algebra.dim > 1:
            gen = np.zeros(algebra.dim, dtype=np.int64)
            gen[0] = 1
            return False, Ideal(algebra, Subspace.span(algebra.field, [gen]))
        return False, None
    check_budget(projective_count(algebra.field, algebra.dim), budget, "simplicity enumeration")
    for block in projective_blocks(algebra.field, algebra.dim):
        for v in block:
            closure = ideal_closure(algebra, [v])
            if closure.is_proper():
                return False, closure
    return True, None


@dataclass(frozen=True)
class Subalgebra:
    """A multiplicatively closed subspace with its induced structure constants.

    ``space.basis`` rows are simultaneously the embedding: row r of the basis
    is the parent-coordinates image of the induced algebra's basis vector r.
    """

    parent: Algebra
    space: Subspace
    algebra: Algebra


def induced_algebra(parent: Algebra, space: Subspace) -> Subalgebra:
    """Structure constants of a multiplicatively closed subspace, in its RREF basis."""
    B = space.basis
    k = B.shape[0]
    mul = np.zeros((k, k, k), dtype=np.int64)
    for a in range(k):
        for b in range(k):
            w = parent.multiply(B[a], B[b])
            mul[a, b, :] = space.coords(w)
    return Subalgebra(parent, space, validate_algebra(parent.field, k, mul))


def center(algebra: Algebra) -> Subalgebra:
    """The set of elements commuting with everything, with induced multiplication."""
    d = algebra.dim
    if d == 0:
        return induced_algebra(algebra, Subspace.zero(algebra.field, 0))
    constraints = (algebra.mul.transpose(1, 2, 0) - algebra.mul.transpose(0, 2, 1)).reshape(d * d, d)
    return induced_algebra(algebra, kernel(constraints % algebra.field.p, algebra.field))


def find_idempotents(algebra: Algebra, search_space: Subspace | None = None,
                     limit: int = DEFAULT_BUDGET) -> list[np.ndarray]:
    """All nonzero v with v*v = v in the search space, in enumeration order.

    Idempotency is not scaling invariant, so all nonzero coefficient vectors
    are tried, p^dim of them, against the budget.
    """
    if search_space is None:
        search_space = Subspace.full(algebra.field, algebra.dim)
    check_budget(vector_count(algebra.field, search_space.dim), limit, "idempotent search")
    out: list[np.ndarray] = []
    B = search_space.basis
    for block in nonzero_vector_blocks(algebra.field, search_space.dim):
        V = (block @ B) % algebra.field.p
        sq = np.einsum("ri,rj,ijk->rk", V, V, algebra.mul) % algebra.field.p
        hits = np.flatnonzero((sq == V).all(axis=1))
        out.extend(V[h].copy() for h in hits)
    return out


def first_idempotent(algebra: Algebra, search_space: Subspace | None = None,
                     limit: int = DEFAULT_BUDGET) -> np.ndarray | None:
    """First nonzero idempotent in enumeration order, or None."""
    if search_space is None:
        search_space = Subspace.full(algebra.field, algebra.dim)
    check_budget(vector_count(algebra.field, search_space.dim), limit, "idempotent search")
    B = search_space.basis
    for block in nonzero_vector_blocks(algebra.field, search_space.dim):
        V = (block @ B) % algebra.field.p
        sq = np.einsum("ri,rj,ijk->rk", V, V, algebra.mul) % algebra.field.p
        hits = np.flatnonzero((sq == V).all(axis=1))
        if hits.size:
            return V[int(hits[0])].copy()
    return None


def corner(algebra: Algebra, f) -> Subalgebra:
    """The corner f A f for an idempotent f, with f as its identity."""
    f = residues(f, algebra.field)
    if not f.any() or not np.array_equal(algebra.multiply(f, f), f):
        raise ValidationError("corner requires a nonzero idempotent")
    p = algebra.field.p
    left = np.tensordot(f, algebra.mul, axes=([0], [0])) % p      # row j: f * b_j
    right_mat = np.tensordot(f, algebra.mul, axes=([0], [1])) % p  # row i: b_i * f
    rows = (left @ right_mat) % p                                  # row j: f * b_j * f
    sub = induced_algebra(algebra, Subspace.span(algebra.field, rows, algebra.dim))
    unit_coords = sub.space.coords(f)
    if sub.algebra.unit is None or not np.array_equal(sub.algebra.unit, unit_coords):
        raise ValidationError("corner identity check failed")
    return sub


def is_field(algebra: Algebra, budget: int = DEFAULT_BUDGET) -> bool:
    """Commutative, unital, and every nonzero element invertible.

    Invertibility of v is tested as v A = A (full rank of left multiplication),
    which is enough in a finite unital ring and is scaling invariant, so one
    representative per projective class is enough.
    """
    if algebra.dim == 0 or algebra.unit is None:
        return False
    if not np.array_equal(algebra.mul, algebra.mul.transpose(1, 0, 2) % algebra.field.p):
        return False
    check_budget(projective_count(algebra.field, algebra.dim), budget, "field check enumeration")
    d = algebra.dim
    for block in projective_blocks(algebra.field, algebra.dim):
        mats = np.tensordot(block, algebra.mul, axes=([1], [0])) % algebra.field.p
        for r in range(mats.shape[0]):
            if rref_matrix(mats[r], algebra.field.p).shape[0] != d:
                return False
    return True
