"""Exact linear algebra over prime fields GF(p).

Vectors and matrices are plain numpy integer arrays with entries reduced
mod p. Subspaces are stored through their unique reduced row echelon basis,
so two subspaces are equal exactly when their stored representations are
equal. Nothing here is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, ValidationError

PRIME_MIN = 2
PRIME_MAX = 251

DEFAULT_BUDGET = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field GF(p), 2 <= p <= 251."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not (PRIME_MIN <= self.p <= PRIME_MAX):
            raise ValidationError(f"field order {self.p!r} out of range [{PRIME_MIN}, {PRIME_MAX}]")
        if not _is_prime(self.p):
            raise ValidationError(f"field order {self.p} is not prime")

    def inverse(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)


def residues(entries, field: FieldSpec) -> np.ndarray:
    """Coerce a 1-d sequence to a vector of residues mod p."""
    v = np.asarray(entries, dtype=np.int64) % field.p
    if v.ndim != 1:
        raise ValidationError(f"expected a vector, got shape {v.shape}")
    return v


def residue_matrix(rows, field: FieldSpec, width: int | None = None) -> np.ndarray:
    """Coerce a 2-d sequence to a matrix of residues mod p."""
    m = np.asarray(rows, dtype=np.int64)
    if m.size == 0:
        if width is None:
            raise ValidationError("cannot infer ambient dimension from an empty row list")
        m = m.reshape(0, width)
    if m.ndim != 2:
        raise ValidationError(f"expected a matrix, got shape {m.shape}")
    if width is not None and m.shape[1] != width:
        raise ValidationError(f"row width {m.shape[1]} does not match ambient dimension {width}")
    return m % field.p


def rref_matrix(mat: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon form over GF(p), zero rows dropped.

    Pivot entries are 1, pivot columns are otherwise zero, and pivot columns
    strictly increase down the rows. The result is the canonical
    representation of the row space.
    """
    m = (np.asarray(mat, dtype=np.int64) % p).copy()
    if m.ndim != 2:
        raise ValidationError(f"expected a matrix, got shape {m.shape}")
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.flatnonzero(m[:, c])
        others = others[others != r]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, c], m[r])) % p
        r += 1
    return m[:r]


class Subspace:
    """A linear subspace of GF(p)^n held by its canonical RREF basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis: np.ndarray):
        self.field = field
        self.ambient_dim = int(ambient_dim)
        b = np.asarray(basis, dtype=np.int64)
        if b.ndim != 2 or b.shape[1] != self.ambient_dim:
            raise ValidationError(f"basis shape {b.shape} does not match ambient dimension {ambient_dim}")
        b = b.copy()
        b.setflags(write=False)
        self.basis = b
        self.pivots = np.argmax(b != 0, axis=1) if b.shape[0] else np.zeros(0, dtype=np.int64)

    @classmethod
    def span(cls, field: FieldSpec, rows, ambient_dim: int | None = None) -> "Subspace":
        m = residue_matrix(rows, field, ambient_dim)
        return cls(field, m.shape[1], rref_matrix(m, field.p))

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64))

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, np.eye(ambient_dim, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValidationError("subspaces live in different ambient spaces")

    def contains(self, v) -> bool:
        v = residues(v, self.field)
        if v.shape[0] != self.ambient_dim:
            raise ValidationError(f"vector length {v.shape[0]} does not match ambient dimension {self.ambient_dim}")
        if self.dim == 0:
            return not v.any()
        resid = (v - v[self.pivots] @ self.basis) % self.field.p
        return not resid.any()

    def coords(self, v) -> np.ndarray:
        """Coordinates of v in the RREF basis. Raises if v is outside."""
        v = residues(v, self.field)
        c = v[self.pivots] if self.dim else np.zeros(0, dtype=np.int64)
        resid = (v - c @ self.basis) % self.field.p if self.dim else v
        if resid.any():
            raise ValidationError("vector is not in the subspace")
        return c

    def coords_matrix(self, rows: np.ndarray) -> np.ndarray:
        """Row-wise coords for a matrix of members. Raises if any row is outside."""
        rows = residue_matrix(rows, self.field, self.ambient_dim)
        c = rows[:, self.pivots] if self.dim else np.zeros((rows.shape[0], 0), dtype=np.int64)
        resid = (rows - c @ self.basis) % self.field.p if self.dim else rows
        if resid.any():
            raise ValidationError("matrix has a row outside the subspace")
        return c

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(self.field, np.vstack([self.basis, other.basis]), self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus block reduction: rows [A|A] over [B|0], read the rows whose left half vanished."""
        self._check_compatible(other)
        n = self.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, n)
        top = np.hstack([self.basis, self.basis])
        bot = np.hstack([other.basis, np.zeros_like(other.basis)])
        m = rref_matrix(np.vstack([top, bot]), self.field.p)
        left_zero = ~m[:, :n].any(axis=1)
        return Subspace.span(self.field, m[left_zero][:, n:], n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(GF({self.field.p}), ambient={self.ambient_dim}, dim={self.dim})"


def rref(rows, field: FieldSpec, ambient_dim: int | None = None) -> Subspace:
    """Span of the given rows as a canonical Subspace."""
    return Subspace.span(field, rows, ambient_dim)


def solve(mat, rhs, field: FieldSpec) -> np.ndarray | None:
    """One solution x of mat @ x = rhs, free variables set to 0, or None.

    Args:
        mat: coefficient matrix, one equation per row.
        rhs: right hand side vector.
        field: the prime field.

    Returns:
        A solution vector, or None when the system is inconsistent.
    """
    m = residue_matrix(mat, field)
    b = residues(rhs, field)
    if m.shape[0] != b.shape[0]:
        raise ValidationError("matrix and right hand side have different heights")
    ncols = m.shape[1]
    r = rref_matrix(np.hstack([m, b[:, None]]), field.p)
    x = np.zeros(ncols, dtype=np.int64)
    for row in range(r.shape[0]):
        pivot = int(np.argmax(r[row] != 0))
        if pivot == ncols:
            return None
        x[pivot] = r[row, -1]
    return x


def kernel(mat, field: FieldSpec) -> Subspace:
    """Null space {x : mat @ x = 0} as a canonical Subspace."""
    m = residue_matrix(mat, field)
    ncols = m.shape[1]
    r = rref_matrix(m, field.p)
    pivots = [int(np.argmax(r[i] != 0)) for i in range(r.shape[0])]
    free = [c for c in range(ncols) if c not in pivots]
    rows = np.zeros((len(free), ncols), dtype=np.int64)
    for idx, f in enumerate(free):
        rows[idx, f] = 1
        for i, c in enumerate(pivots):
            rows[idx, c] = (-int(r[i, f])) % field.p
    return Subspace.span(field, rows, ncols)


def vector_count(field: FieldSpec, dim: int) -> int:
    return field.p ** dim


def projective_count(field: FieldSpec, dim: int) -> int:
    """Number of lines through 0, i.e. scaling classes of nonzero vectors."""
    if dim == 0:
        return 0
    return (field.p ** dim - 1) // (field.p - 1)


def _digit_block(p: int, dim: int, start: int, stop: int) -> np.ndarray:
    # index k maps to its base-p digits, coordinate 0 varying fastest
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, dim), dtype=np.int64)
    for j in range(dim):
        out[:, j] = idx % p
        idx = idx // p
    return out

# Enumeration order everywhere: vector k has the base-p digits of k with
# coordinate 0 least significant, the zero vector (k = 0) skipped. The first
# nonzero vector is therefore the first basis vector. Deterministic witnesses
# and "first idempotent" selections all rely on this single order.


def check_budget(total: int, limit: int, what: str) -> None:
    if total > limit:
        raise BudgetExceededError(
            f"{what} needs {total} candidates, budget is {limit}", required=total
        )


def nonzero_vector_blocks(field: FieldSpec, dim: int, chunk: int = 4096):
    """Yield (block_count, dim) arrays covering all nonzero vectors in order."""
    total = vector_count(field, dim)
    start = 1
    while start < total:
        stop = min(start + chunk, total)
        yield _digit_block(field.p, dim, start, stop)
        start = stop


def projective_blocks(field: FieldSpec, dim: int, chunk: int = 4096):
    """Yield blocks of projective representatives (first nonzero entry 1) in order."""
    for block in nonzero_vector_blocks(field, dim, chunk):
        first = np.argmax(block != 0, axis=1)
        keep = block[np.arange(block.shape[0]), first] == 1
        picked = block[keep]
        if picked.shape[0]:
            yield picked
