"""Deterministic instance corpus for cross-validation runs.

Families are generated from a single seeded RNG, so a fixed (seed, counts,
primes) triple always yields byte-identical documents. Every emitted graded
instance carries in its meta the degree e at which the corner-criterion
hypotheses were verified, and a hypercentral flag saying whether the
criterion layer may be applied at all; non-hypercentral instances are
emitted deliberately, flagged, so refusal paths stay exercised.

Size discipline: brute-force ideal enumeration visits one closure per
scaling class, so dimensions are capped so that p^dim stays in the tens of
thousands at worst.
"""

from __future__ import annotations

import random

import numpy as np

from .catalog import (
    coboundary_cocycle, connected_groupoid, diagonal_algebra, graded_direct_sum,
    group_algebra, groupoid_algebra, matrix_algebra, matrix_good_grading,
    twisted_group_algebra,
)
from .criterion import check_hypotheses
from .errors import ValidationError
from .fflinalg import Subspace
from .groups import (
    GroupTable, cyclic, dihedral, direct_product, is_hypercentral, klein_four,
    quaternion8, symmetric3,
)
from .instances import InstanceDocument, instance_from_object
from .partial import PartialAction, restrict_global_action, validate_partial_action
from .semigroups import nonzero_idempotents

_GROUP_POOL: list[tuple[str, object]] = [
    ("c2", lambda: cyclic(2)),
    ("c3", lambda: cyclic(3)),
    ("c4", lambda: cyclic(4)),
    ("c5", lambda: cyclic(5)),
    ("c6", lambda: cyclic(6)),
    ("klein4", klein_four),
    ("d4", lambda: dihedral(4)),
    ("q8", quaternion8),
    ("c2xc4", lambda: direct_product(cyclic(2), cyclic(4))),
]


def _regular_perms(group: GroupTable) -> np.ndarray:
    return np.asarray(group.table, dtype=np.int64).copy()


def _d4_vertex_perms() -> tuple[GroupTable, np.ndarray]:
    group = dihedral(4)
    perms = np.zeros((8, 4), dtype=np.int64)
    for i in range(4):
        for j in range(2):
            for v in range(4):
                perms[i + 4 * j, v] = (i + (v if j == 0 else -v)) % 4
    return group, perms


def _s3_point_perms() -> tuple[GroupTable, np.ndarray]:
    group = symmetric3()
    from itertools import permutations
    elems = sorted(permutations(range(3)))
    perms = np.array(elems, dtype=np.int64)
    return group, perms


def _cyclic_rotation_perms(k: int) -> tuple[GroupTable, np.ndarray]:
    group = cyclic(k)
    perms = np.array([[(v + g) % k for v in range(k)] for g in range(k)], dtype=np.int64)
    return group, perms


def _graded_doc(idx: int, seed: int, family: str, graded, hypercentral: bool,
                e: int | None) -> InstanceDocument:
    if e is not None:
        report = check_hypotheses(graded, e)
        if hypercentral and not report.all_met:
            raise ValidationError(
                f"generator bug: family {family} failed its own hypotheses at e={e}"
            )
    meta = {
        "name": f"g{idx:03d}-{family}",
        "seed": seed,
        "family": family,
        "hypercentral": hypercentral,
        "e": e,
    }
    return instance_from_object("graded_algebra", graded, meta)


def _partial_doc(idx: int, seed: int, family: str, pa: PartialAction) -> InstanceDocument:
    meta = {
        "name": f"p{idx:03d}-{family}",
        "seed": seed,
        "family": family,
        "hypercentral": bool(is_hypercentral(pa.group)),
    }
    return instance_from_object("partial_action", pa, meta)


def _graded_roster(primes) -> list[tuple[str, object, bool, int]]:
    """Fixed instances emitted first: (family, graded, hypercentral, e)."""
    out = []
    for p in primes:
        for gname, make in _GROUP_POOL:
            g = make()
            out.append((f"group-algebra-{gname}-p{p}", group_algebra(p, g), True, int(g.identity)))
    for p in primes:
        for hname, iso in (("trivial", cyclic(1)), ("c2", cyclic(2))):
            graded = groupoid_algebra(p, connected_groupoid(2, iso))
            e = nonzero_idempotents(graded.grading)[0]
            out.append((f"groupoid-pair-{hname}-p{p}", graded, True, int(e)))
    for p in primes:
        graded = group_algebra(p, symmetric3())
        out.append((f"group-algebra-s3-p{p}", graded, False, int(symmetric3().identity)))
    return out


def _draw_graded(rng: random.Random, primes) -> tuple[str, object, bool, int]:
    """One random graded instance: (family, graded, hypercentral, e)."""
    p = rng.choice(list(primes))
    kind = rng.choice(["twisted", "matrix2", "matrix3", "sum-group", "sum-matrix", "pauli"])
    if kind == "pauli" and p != 3:
        kind = "twisted"
    if kind == "twisted":
        gname, make = rng.choice(_GROUP_POOL[:6])
        g = make()
        lam = [1] + [rng.randrange(1, p) for _ in range(g.n - 1)]
        graded = twisted_group_algebra(p, g, coboundary_cocycle(p, g, lam))
        return f"twisted-{gname}-p{p}", graded, True, int(g.identity)
    if kind == "matrix2":
        gname, make = rng.choice(_GROUP_POOL)
        g = make()
        picks = [rng.randrange(g.n) for _ in range(2)]
        graded = matrix_good_grading(p, 2, g, picks)
        return f"matrix2-{gname}-p{p}", graded, True, int(g.identity)
    if kind == "matrix3":
        gname, make = rng.choice(_GROUP_POOL)
        g = make()
        picks = [rng.randrange(g.n) for _ in range(3)]
        if p != 2:
            p = 2  # dim 9 enumeration is only cheap over GF(2)
        graded = matrix_good_grading(p, 3, g, picks)
        return f"matrix3-{gname}-p{p}", graded, True, int(g.identity)
    if kind == "sum-group":
        gname, make = rng.choice(_GROUP_POOL[:4] if p == 2 else _GROUP_POOL[:3])
        g = make()
        graded = graded_direct_sum(group_algebra(p, g), group_algebra(p, g))
        return f"sum-group-{gname}-p{p}", graded, True, int(g.identity)
    if kind == "sum-matrix":
        gname, make = rng.choice(_GROUP_POOL[:6] if p == 2 else _GROUP_POOL[:3])
        g = make()
        picks = [rng.randrange(g.n) for _ in range(2)]
        graded = graded_direct_sum(matrix_good_grading(p, 2, g, picks), group_algebra(p, g))
        return f"sum-matrix-{gname}-p{p}", graded, True, int(g.identity)
    group = klein_four()
    base = np.ones((4, 4), dtype=np.int64)
    for x in range(4):
        for y in range(4):
            if (x & 1) and (y >> 1) & 1:
                base[x, y] = 2
    lam = [1] + [rng.randrange(1, 3) for _ in range(3)]
    cob = coboundary_cocycle(3, group, lam)
    graded = twisted_group_algebra(3, group, (base * cob) % 3)
    return "pauli-twist-p3", graded, True, 0


def _subset_cap(p: int) -> int:
    return 12 if p == 2 else 8


def _partial_roster(primes) -> list[tuple[str, PartialAction]]:
    out = []
    for p in primes:
        field_dim = 2
        algebra = diagonal_algebra(p, field_dim)
        full = Subspace.full(algebra.field, field_dim)
        swap = np.array([[0, 1], [1, 0]], dtype=np.int64)
        out.append((f"global-swap-p{p}", validate_partial_action(
            cyclic(2), algebra, [full, full], [np.eye(2, dtype=np.int64), swap])))
        half = Subspace.span(algebra.field, [[1, 0]], 2)
        out.append((f"halfdomain-p{p}", validate_partial_action(
            cyclic(2), algebra, [full, half],
            [np.eye(2, dtype=np.int64), np.array([[1, 0]], dtype=np.int64)])))
        out.append((f"trivial-c1-p{p}", validate_partial_action(
            cyclic(1), algebra, [full], [np.eye(2, dtype=np.int64)])))
    group, perms = _d4_vertex_perms()
    for p in primes:
        big = diagonal_algebra(p, 4)
        out.append((f"d4-edge-p{p}", restrict_global_action(group, big, perms, [0, 1])))
    if 2 in primes:
        g3, p3 = _cyclic_rotation_perms(3)
        out.append(("global-cycle3-p2", restrict_global_action(g3, diagonal_algebra(2, 3), p3, [0, 1, 2])))
    return out


def _draw_partial(rng: random.Random, primes) -> tuple[str, PartialAction] | None:
    p = rng.choice(list(primes))
    cap = _subset_cap(p)
    kind = rng.choice(["regular", "d4-vertex", "rotation", "involution", "matrix-conj", "s3-points"])

    if kind == "regular":
        gname, make = rng.choice(_GROUP_POOL)
        group = make()
        size = rng.choice([1, 2, 3])
        if size * size + 0 > cap or size > group.n:
            return None
        subset = sorted(rng.sample(range(group.n), size))
        big = diagonal_algebra(p, group.n)
        return (f"regular-{gname}-s{size}-p{p}",
                restrict_global_action(group, big, _regular_perms(group), subset))

    if kind == "d4-vertex":
        group, perms = _d4_vertex_perms()
        size = rng.choice([1, 2])
        subset = sorted(rng.sample(range(4), size))
        total = sum(len(set(subset) & {int(perms[g][v]) for v in subset}) for g in range(8))
        if total > cap:
            return None
        big = diagonal_algebra(p, 4)
        return (f"d4-vertex-s{size}-p{p}",
                restrict_global_action(group, big, perms, subset))

    if kind == "rotation":
        k = rng.choice([2, 3, 4])
        group, perms = _cyclic_rotation_perms(k)
        size = rng.randrange(1, k + 1)
        subset = sorted(rng.sample(range(k), size))
        total = sum(len(set(subset) & {(v + g) % k for v in subset}) for g in range(k))
        if total > cap:
            return None
        big = diagonal_algebra(p, k)
        return (f"rotation-c{k}-s{size}-p{p}",
                restrict_global_action(group, big, perms, subset))

    if kind == "involution":
        m = rng.choice([3, 4, 5, 6] if p == 2 else [3, 4, 5])
        points = list(range(m))
        rng.shuffle(points)
        npairs = rng.randrange(1, m // 2 + 1)
        sigma = np.arange(m, dtype=np.int64)
        for i in range(npairs):
            a, b = points[2 * i], points[2 * i + 1]
            sigma[a], sigma[b] = b, a
        orbit_reps = [v for v in range(m) if v <= int(sigma[v])]
        chosen = [v for v in orbit_reps if rng.random() < 0.6]
        T = sorted({v for v in chosen} | {int(sigma[v]) for v in chosen})
        if m + len(T) > cap:
            return None
        algebra = diagonal_algebra(p, m)
        full = Subspace.full(algebra.field, m)
        rows = np.zeros((len(T), m), dtype=np.int64)
        for r, v in enumerate(T):
            rows[r, v] = 1
        dom = Subspace.span(algebra.field, rows, m)
        mat = np.zeros((len(T), m), dtype=np.int64)
        for r, v in enumerate(T):
            mat[r, int(sigma[v])] = 1
        pa = validate_partial_action(cyclic(2), algebra, [full, dom],
                                     [np.eye(m, dtype=np.int64), mat])
        return f"involution-m{m}-t{len(T)}-p{p}", pa

    if kind == "matrix-conj":
        big = matrix_algebra(p, 2)
        group = cyclic(2)
        perms = np.array([[0, 1, 2, 3], [3, 2, 1, 0]], dtype=np.int64)
        if p == 2 and rng.random() < 0.5:
            base = np.zeros((6, 6, 6), dtype=np.int64)
            base[:4, :4, :4] = big.mul
            base[4, 4, 4] = 1
            base[5, 5, 5] = 1
            from .algebras import validate_algebra
            bigger = validate_algebra(big.field, 6, base)
            perms6 = np.array([[0, 1, 2, 3, 4, 5], [3, 2, 1, 0, 5, 4]], dtype=np.int64)
            return (f"matrix-conj-ext-p{p}",
                    restrict_global_action(group, bigger, perms6, [0, 1, 2, 3, 4]))
        return (f"matrix-conj-p{p}", restrict_global_action(group, big, perms, [0, 1, 2, 3]))

    group, perms = _s3_point_perms()
    if p != 2:
        return None
    size = rng.choice([1, 2])
    subset = sorted(rng.sample(range(3), size))
    total = sum(len(set(subset) & {int(perms[g][v]) for v in subset}) for g in range(6))
    if total > cap:
        return None
    big = diagonal_algebra(2, 3)
    return (f"s3-points-s{size}-p2",
            restrict_global_action(group, big, perms, subset))


def generate_corpus(seed: int, graded: int = 210, partial: int = 110,
                    primes=(2, 3)) -> list[InstanceDocument]:
    """The full corpus for one seed: graded instances then partial actions."""
    primes = tuple(int(p) for p in primes)
    if not primes:
        raise ValidationError("need at least one prime")
    rng = random.Random(seed)
    docs: list[InstanceDocument] = []

    roster = _graded_roster(primes)
    if graded < len(roster):
        roster = roster[:graded]
    idx = 0
    for family, g, hyper, e in roster:
        docs.append(_graded_doc(idx, seed, family, g, hyper, e))
        idx += 1
    while idx < graded:
        family, g, hyper, e = _draw_graded(rng, primes)
        docs.append(_graded_doc(idx, seed, family, g, hyper, e))
        idx += 1

    proster = _partial_roster(primes)
    if partial < len(proster):
        proster = proster[:partial]
    idx = 0
    for family, pa in proster:
        docs.append(_partial_doc(idx, seed, family, pa))
        idx += 1
    guard = 0
    while idx < partial:
        drawn = _draw_partial(rng, primes)
        guard += 1
        if guard > partial * 80:
            raise ValidationError("unsatisfiable corpus constraints: too many rejected draws")
        if drawn is None:
            continue
        family, pa = drawn
        docs.append(_partial_doc(idx, seed, family, pa))
        idx += 1
    return docs
