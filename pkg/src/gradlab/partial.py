"""Partial group actions on algebras and their skew group rings.

A partial action of a finite group G on an algebra A assigns to each g a
two-sided ideal D_g with an isomorphism alpha_g from D_{g^-1} onto D_g,
with alpha_e the identity of A, alpha_g(D_{g^-1} meet D_h) = D_g meet D_gh,
and alpha_g after alpha_h agreeing with alpha_gh where both sides are
defined. Every domain is required to be unital, the finite-dimensional form
of the local units hypothesis.

The skew ring A*G has one basis block per g, namely a copy of D_g, with
(a d_g)(b d_h) = alpha_g(alpha_{g^-1}(a) b) d_gh. It is graded by G.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebras import Algebra, Ideal, center, corner, ideal_closure, is_field, is_simple, validate_algebra
from .errors import FalsificationError, HypothesesUnmetError, ValidationError
from .fflinalg import DEFAULT_BUDGET, FieldSpec, Subspace, check_budget, projective_blocks, projective_count, residues, solve
from .gradings import GradedAlgebra, is_graded_simple, validate_grading
from .groups import GroupTable, is_hypercentral


class PartialAction:
    """A validated partial action. Build through validate_partial_action."""

    __slots__ = ("group", "algebra", "domains", "maps", "units", "domain_units")

    def __init__(self, group, algebra, domains, maps, units, domain_units):
        self.group = group
        self.algebra = algebra
        self.domains = domains
        self.maps = maps
        self.units = units
        self.domain_units = domain_units

    def apply(self, g: int, x) -> np.ndarray:
        """alpha_g applied to a member of D_{g^-1}."""
        src = self.domains[self.group.inverse(g)]
        return (src.coords(x) @ self.maps[g]) % self.algebra.field.p

    def __repr__(self) -> str:
        dims = [d.dim for d in self.domains]
        return f"PartialAction(|G|={self.group.n}, dim A={self.algebra.dim}, domain dims={dims})"


def _domain_unit(algebra: Algebra, domain: Subspace) -> np.ndarray | None:
    """The identity element of a domain viewed as an algebra, or None."""
    B = domain.basis
    k = B.shape[0]
    if k == 0:
        return np.zeros(algebra.dim, dtype=np.int64)
    rows = []
    rhs = []
    for b in range(k):
        left = np.array([domain.coords(algebra.multiply(B[a], B[b])) for a in range(k)])
        right = np.array([domain.coords(algebra.multiply(B[b], B[a])) for a in range(k)])
        target = np.zeros(k, dtype=np.int64)
        target[b] = 1
        rows.extend([left.T, right.T])
        rhs.extend([target, target])
    sol = solve(np.vstack(rows), np.concatenate(rhs), algebra.field)
    if sol is None:
        return None
    return (sol @ B) % algebra.field.p


def _check_ideal(algebra: Algebra, domain: Subspace, g: int) -> None:
    B = domain.basis
    if B.shape[0] == 0:
        return
    p = algebra.field.p
    left = np.tensordot(B, algebra.mul, axes=([1], [1])).reshape(-1, algebra.dim) % p
    right = np.tensordot(B, algebra.mul, axes=([1], [0])).reshape(-1, algebra.dim) % p
    for row in np.vstack([left, right]):
        if not domain.contains(row):
            raise ValidationError(f"domain of element {g} is not a two-sided ideal", witness=g)


def validate_partial_action(group: GroupTable, algebra: Algebra, domains, maps,
                            units=None) -> PartialAction:
    """Check every axiom of a partial action on explicit data.

    Args:
        group: the acting group.
        algebra: A, which must be nonzero.
        domains: one Subspace (or row list) per group element.
        maps: per group element g, a matrix whose row r is the image under
            alpha_g of row r of the RREF basis of D_{g^-1}, in A coordinates.
        units: optional list of idempotents declared as local units; defaults
            to the identity of A alone.

    Returns:
        The validated PartialAction, with each domain's identity cached.
    """
    if algebra.dim == 0:
        raise ValidationError("partial actions need a nonzero algebra")
    n = group.n
    p = algebra.field.p
    doms: list[Subspace] = []
    for g in range(n):
        d = domains[g]
        doms.append(d if isinstance(d, Subspace) else Subspace.span(algebra.field, d, algebra.dim))
    if len(domains) != n or len(maps) != n:
        raise ValidationError("need one domain and one map per group element")

    e = group.identity
    if doms[e] != Subspace.full(algebra.field, algebra.dim):
        raise ValidationError("the domain at the identity must be all of A")

    mats: list[np.ndarray] = []
    for g in range(n):
        ginv = group.inverse(g)
        m = np.asarray(maps[g], dtype=np.int64) % p
        if m.ndim != 2 or m.shape != (doms[ginv].dim, algebra.dim):
            raise ValidationError(
                f"map of element {g} must have shape ({doms[ginv].dim}, {algebra.dim})"
            )
        mats.append(m)
    if not np.array_equal(mats[e], np.eye(algebra.dim, dtype=np.int64)):
        raise ValidationError("the map at the identity must be the identity matrix")

    for g in range(n):
        _check_ideal(algebra, doms[g], g)

    for g in range(n):
        ginv = group.inverse(g)
        if doms[g].dim != doms[ginv].dim:
            raise ValidationError(f"domains of {g} and its inverse differ in dimension", witness=g)
        image = Subspace.span(algebra.field, mats[g], algebra.dim)
        if image != doms[g] or image.dim != doms[ginv].dim:
            raise ValidationError(f"map of element {g} is not a bijection onto its domain", witness=g)
        B = doms[ginv].basis
        for a in range(B.shape[0]):
            for b in range(B.shape[0]):
                prod = algebra.multiply(B[a], B[b])
                lhs = (doms[ginv].coords(prod) @ mats[g]) % p
                rhs = algebra.multiply(mats[g][a], mats[g][b])
                if not np.array_equal(lhs, rhs):
                    raise ValidationError(
                        f"map of element {g} is not multiplicative", witness=(g, a, b)
                    )

    for g in range(n):
        ginv = group.inverse(g)
        for h in range(n):
            gh = int(group.table[g, h])
            src = doms[ginv].intersect(doms[h])
            if src.dim:
                img_rows = np.array([(doms[ginv].coords(r) @ mats[g]) % p for r in src.basis])
            else:
                img_rows = np.zeros((0, algebra.dim), dtype=np.int64)
            image = Subspace.span(algebra.field, img_rows, algebra.dim)
            if image != doms[g].intersect(doms[gh]):
                raise ValidationError(
                    f"domain compatibility fails between elements {g} and {h}", witness=(g, h)
                )

    for g in range(n):
        for h in range(n):
            gh = int(group.table[g, h])
            hinv = group.inverse(h)
            ghinv = group.inverse(gh)
            src = doms[hinv].intersect(doms[ghinv])
            for r in src.basis:
                via_h = (doms[hinv].coords(r) @ mats[h]) % p
                lhs = (doms[group.inverse(g)].coords(via_h) @ mats[g]) % p
                rhs = (doms[ghinv].coords(r) @ mats[gh]) % p
                if not np.array_equal(lhs, rhs):
                    raise ValidationError(
                        f"composition fails on elements {g}, {h}", witness=(g, h)
                    )

    domain_units = []
    for g in range(n):
        u = _domain_unit(algebra, doms[g])
        if u is None:
            raise ValidationError(f"domain of element {g} has no identity element", witness=g)
        domain_units.append(u)

    if units is None:
        unit_vecs = [domain_units[e]]
    else:
        unit_vecs = [residues(u, algebra.field) for u in units]
        for i, u in enumerate(unit_vecs):
            if not u.any() or not np.array_equal(algebra.multiply(u, u), u):
                raise ValidationError(f"declared unit {i} is not a nonzero idempotent", witness=i)
    return PartialAction(group, algebra, doms, mats, unit_vecs, domain_units)


def skew_labels(pa: PartialAction) -> list[tuple[int, int]]:
    """Basis labels (g, k) of the skew ring, blocks in group order."""
    return [(g, k) for g in range(pa.group.n) for k in range(pa.domains[g].dim)]


def skew_offsets(pa: PartialAction) -> np.ndarray:
    dims = np.array([pa.domains[g].dim for g in range(pa.group.n)], dtype=np.int64)
    return np.concatenate([[0], np.cumsum(dims)])


def delta_embed(pa: PartialAction, g: int, a) -> np.ndarray:
    """The skew-ring coordinate vector of a d_g, for a member a of D_g."""
    offsets = skew_offsets(pa)
    out = np.zeros(int(offsets[-1]), dtype=np.int64)
    coords = pa.domains[g].coords(a)
    out[int(offsets[g]): int(offsets[g]) + coords.shape[0]] = coords
    return out


def build_pskew(pa: PartialAction) -> GradedAlgebra:
    """The partial skew group ring A*G as a G-graded algebra.

    Block g is a copy of D_g in its RREF basis, and the degree of every
    vector in block g is g. Associativity of the assembled constants is
    re-verified; a failure would contradict the construction's guarantee, so
    it surfaces as FalsificationError rather than ValidationError.
    """
    group, A = pa.group, pa.algebra
    p = A.field.p
    offsets = skew_offsets(pa)
    total = int(offsets[-1])
    mul = np.zeros((total, total, total), dtype=np.int64)
    for g in range(group.n):
        kg = pa.domains[g].dim
        if kg == 0:
            continue
        ginv = group.inverse(g)
        pulled = pa.maps[ginv]  # row a: alpha_{g^-1} of basis row a of D_g
        for h in range(group.n):
            kh = pa.domains[h].dim
            if kh == 0:
                continue
            gh = int(group.table[g, h])
            Bh = pa.domains[h].basis
            dst = pa.domains[gh]
            for a in range(kg):
                for b in range(kh):
                    w = A.multiply(pulled[a], Bh[b])
                    z = (pa.domains[ginv].coords(w) @ pa.maps[g]) % p
                    mul[int(offsets[g]) + a, int(offsets[h]) + b,
                        int(offsets[gh]): int(offsets[gh]) + dst.dim] = dst.coords(z)
    try:
        skew = validate_algebra(A.field, total, mul)
    except ValidationError as ex:
        raise FalsificationError(
            f"skew ring constants came out non-associative: {ex}"
        ) from ex
    deg = np.concatenate([
        np.full(pa.domains[g].dim, g, dtype=np.int64) for g in range(group.n)
    ]) if total else np.zeros(0, dtype=np.int64)
    graded = validate_grading(skew, group, deg)
    expected_unit = delta_embed(pa, group.identity, pa.domain_units[group.identity])
    if skew.unit is None or not np.array_equal(skew.unit, expected_unit):
        raise FalsificationError("skew ring identity is not 1 d_e")
    return graded


def g_invariant_closure(pa: PartialAction, generators) -> Ideal:
    """Smallest ideal of A containing the generators with alpha_g(I meet D_{g^-1}) inside I."""
    A = pa.algebra
    p = A.field.p
    space = ideal_closure(A, generators).space
    while True:
        rows = [space.basis]
        for g in range(pa.group.n):
            ginv = pa.group.inverse(g)
            w = space.intersect(pa.domains[ginv])
            if w.dim:
                rows.append(np.array([(pa.domains[ginv].coords(r) @ pa.maps[g]) % p for r in w.basis]))
        grown = ideal_closure(A, np.vstack(rows)).space
        if grown.dim == space.dim:
            return Ideal(A, space)
        space = grown


def is_g_simple(pa: PartialAction, budget: int = DEFAULT_BUDGET) -> tuple[bool, Ideal | None]:
    """No proper nonzero invariant ideal, by enumeration over scaling classes."""
    A = pa.algebra
    check_budget(projective_count(A.field, A.dim), budget, "invariant ideal enumeration")
    for block in projective_blocks(A.field, A.dim):
        for v in block:
            closure = g_invariant_closure(pa, [v])
            if closure.is_proper():
                return False, closure
    return True, None


@dataclass(frozen=True)
class SkewEquivalenceReport:
    """Graded simplicity of A*G against G-simplicity of A. They must agree."""

    graded_simple: bool
    g_simple: bool
    agreement: bool
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "graded_simple": self.graded_simple,
            "g_simple": self.g_simple,
            "agreement": self.agreement,
            "witnesses": self.witnesses,
        }


def check_skew_equivalence(pa: PartialAction, budget: int = DEFAULT_BUDGET) -> SkewEquivalenceReport:
    """Compare the two sides of the graded-simplicity equivalence for A*G."""
    skew = build_pskew(pa)
    graded_ok, gwit = is_graded_simple(skew, budget)
    inv_ok, iwit = is_g_simple(pa, budget)
    witnesses = {}
    if gwit is not None:
        witnesses["skew_graded_ideal_generator"] = [int(x) for x in gwit]
    if iwit is not None:
        witnesses["invariant_ideal_basis"] = [[int(x) for x in r] for r in iwit.space.basis]
    return SkewEquivalenceReport(graded_ok, inv_ok, graded_ok == inv_ok, witnesses)


@dataclass(frozen=True)
class SkewSimplicityReport:
    """Three routes to simplicity of A*G that must coincide.

    simple: brute-force enumeration on A*G itself.
    some_f / each_f: G-simplicity of A plus the corner center field test at
    some, respectively every, declared unit f.
    """

    simple: bool
    g_simple: bool
    corner_fields: tuple[bool, ...]
    some_f: bool
    each_f: bool
    agreement: bool
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "simple": self.simple,
            "g_simple": self.g_simple,
            "corner_fields": list(self.corner_fields),
            "some_f": self.some_f,
            "each_f": self.each_f,
            "agreement": self.agreement,
            "witnesses": self.witnesses,
        }


def check_skew_simplicity(pa: PartialAction, budget: int = DEFAULT_BUDGET) -> SkewSimplicityReport:
    """Evaluate all three equivalent simplicity characterizations of A*G.

    Needs a hypercentral acting group and a valid unit set: every declared
    unit is a nonzero idempotent and at least one of them acts as the
    identity on A, which pins it to 1_A in finite dimension.
    """
    if not is_hypercentral(pa.group):
        raise HypothesesUnmetError("the three-way check needs a hypercentral group")
    A = pa.algebra
    p = A.field.p
    full_rank = False
    for f in pa.units:
        lf = np.tensordot(f, A.mul, axes=([0], [0])) % p
        rf = np.tensordot(f, A.mul, axes=([0], [1])) % p
        rows = (lf @ rf) % p
        if Subspace.span(A.field, rows, A.dim).dim == A.dim:
            full_rank = True
            break
    if not full_rank:
        raise HypothesesUnmetError("no declared unit covers all of A")

    skew = build_pskew(pa)
    simple, swit = is_simple(skew.algebra, budget)
    g_ok, iwit = is_g_simple(pa, budget)
    fields = []
    e = pa.group.identity
    for f in pa.units:
        fd = delta_embed(pa, e, f)
        sub = corner(skew.algebra, fd)
        fields.append(is_field(center(sub.algebra).algebra, budget))
    some_f = g_ok and any(fields)
    each_f = g_ok and all(fields)
    agreement = simple == some_f == each_f
    witnesses = {}
    if swit is not None:
        witnesses["skew_proper_ideal_dim"] = int(swit.dim)
    if iwit is not None:
        witnesses["invariant_ideal_basis"] = [[int(x) for x in r] for r in iwit.space.basis]
    return SkewSimplicityReport(simple, g_ok, tuple(fields), some_f, each_f, agreement, witnesses)


def restrict_global_action(group: GroupTable, big: Algebra, perm_of_basis, ideal_indices,
                           units=None) -> PartialAction:
    """Restrict a global basis-permuting action of G on B to the ideal A it spans.

    Args:
        group: the acting group.
        big: the ambient algebra B.
        perm_of_basis: array (|G|, dim B), row g the permutation of basis
            indices carried by the automorphism beta_g.
        ideal_indices: basis indices of B spanning the ideal A. The returned
            action lives on A with D_g = A meet beta_g(A) and alpha the
            restriction; A keeps the ambient coordinates of B.

    The construction always satisfies the axioms, and the validator re-checks
    everything anyway.
    """
    perms = np.asarray(perm_of_basis, dtype=np.int64)
    idx = sorted(int(i) for i in ideal_indices)
    idx_set = set(idx)
    field = big.field
    sub_mul = big.mul[np.ix_(idx, idx, idx)]
    leak = np.delete(big.mul[np.ix_(idx, idx)], idx, axis=2)
    if leak.any():
        raise ValidationError("chosen indices do not span a multiplicatively closed subspace")
    A = validate_algebra(field, len(idx), sub_mul)
    pos = {b: i for i, b in enumerate(idx)}
    domains = []
    maps = []
    for g in range(group.n):
        inv_row = perms[group.inverse(g)]
        members = [b for b in idx if int(inv_row[b]) in idx_set]
        rows = np.zeros((len(members), len(idx)), dtype=np.int64)
        for r, b in enumerate(members):
            rows[r, pos[b]] = 1
        domains.append(Subspace.span(field, rows, len(idx)))
    for g in range(group.n):
        ginv = group.inverse(g)
        src = domains[ginv]
        m = np.zeros((src.dim, len(idx)), dtype=np.int64)
        for r in range(src.dim):
            b = idx[int(src.pivots[r])]
            m[r, pos[int(perms[g][b])]] = 1
        maps.append(m)
    return validate_partial_action(group, A, domains, maps, units)
