"""Finite groups as Cayley tables, quotients, and the ascending central series."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .semigroups import SemigroupTable, _coerce_table, associativity_witness


class GroupTable(SemigroupTable):
    """A group given by its table, with identity and inverse map attached."""

    __slots__ = ("identity", "inv")

    def __init__(self, n: int, table: np.ndarray, identity: int, inv: np.ndarray):
        super().__init__(n, table, None)
        self.identity = int(identity)
        iv = np.asarray(inv, dtype=np.int64).copy()
        iv.setflags(write=False)
        self.inv = iv

    def inverse(self, g: int) -> int:
        return int(self.inv[g])

    def commutator(self, g: int, h: int) -> int:
        t = self.table
        return int(t[t[t[g, h], self.inv[g]], self.inv[h]])


def validate_group(table) -> GroupTable:
    """Check associativity, a two-sided identity, and two-sided inverses."""
    t = _coerce_table(table)
    w = associativity_witness(t)
    if w is not None:
        raise ValidationError("not associative", witness=w)
    n = t.shape[0]
    arange = np.arange(n)
    ident = None
    for e in range(n):
        if (t[e, :] == arange).all() and (t[:, e] == arange).all():
            ident = e
            break
    if ident is None:
        raise ValidationError("no two-sided identity")
    inv = np.full(n, -1, dtype=np.int64)
    for g in range(n):
        hits = np.flatnonzero(t[g, :] == ident)
        if hits.size != 1 or t[int(hits[0]), g] != ident:
            raise ValidationError(f"element {g} lacks a two-sided inverse")
        inv[g] = int(hits[0])
    return GroupTable(n, t, ident, inv)


def as_group(sg: SemigroupTable) -> GroupTable | None:
    """Reinterpret a semigroup as a group when it is one."""
    if isinstance(sg, GroupTable):
        return sg
    try:
        return validate_group(sg.table)
    except ValidationError:
        return None


def center(group: GroupTable) -> frozenset[int]:
    t = group.table
    return frozenset(g for g in range(group.n) if (t[g, :] == t[:, g]).all())


def is_subgroup(group: GroupTable, subset) -> bool:
    s = set(int(x) for x in subset)
    if group.identity not in s:
        return False
    for a in s:
        if int(group.inv[a]) not in s:
            return False
        for b in s:
            if int(group.table[a, b]) not in s:
                return False
    return True


def subgroup_generated(group: GroupTable, gens) -> frozenset[int]:
    out = {group.identity}
    frontier = [group.identity]
    gens = [int(g) for g in gens]
    while frontier:
        a = frontier.pop()
        for g in gens:
            for prod in (int(group.table[a, g]), int(group.table[g, a])):
                if prod not in out:
                    out.add(prod)
                    frontier.append(prod)
    return frozenset(out)


def is_normal(group: GroupTable, subset) -> bool:
    s = set(int(x) for x in subset)
    if not is_subgroup(group, s):
        return False
    t = group.table
    for g in range(group.n):
        for x in s:
            if int(t[t[g, x], group.inv[g]]) not in s:
                return False
    return True


def quotient(group: GroupTable, normal) -> tuple[GroupTable, np.ndarray]:
    """The factor group G/N with its projection map.

    Cosets are labeled by their minimal member, sorted, so the construction is
    deterministic. Normality is checked.
    """
    n_set = sorted(set(int(x) for x in normal))
    if not is_normal(group, n_set):
        raise ValidationError("subset is not a normal subgroup")
    t = group.table
    proj_rep = np.zeros(group.n, dtype=np.int64)
    for g in range(group.n):
        proj_rep[g] = min(int(t[g, x]) for x in n_set)
    reps = sorted(set(int(r) for r in proj_rep))
    label = {r: i for i, r in enumerate(reps)}
    proj = np.array([label[int(proj_rep[g])] for g in range(group.n)], dtype=np.int64)
    m = len(reps)
    qt = np.zeros((m, m), dtype=np.int64)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            qt[i, j] = proj[int(t[a, b])]
    for g in range(group.n):
        for h in range(group.n):
            if qt[proj[g], proj[h]] != proj[int(t[g, h])]:
                raise ValidationError("quotient table is not well defined", witness=(g, h))
    return validate_group(qt), proj


@dataclass(frozen=True)
class CentralSeries:
    """The ascending central series as a strictly increasing chain.

    ``terminated`` records that the chain stabilized; for finite groups this
    always happens within n steps, so no transfinite bookkeeping is needed.
    The group is hypercentral exactly when the last entry is the whole group.
    """

    chain: tuple[frozenset[int], ...]
    terminated: bool


def upper_central_series(group: GroupTable) -> CentralSeries:
    current = frozenset([group.identity])
    chain = [current]
    while True:
        nxt = frozenset(
            g for g in range(group.n)
            if all(group.commutator(g, h) in current for h in range(group.n))
        )
        if not is_normal(group, nxt):
            raise ValidationError("central series member is not normal, table is corrupt")
        if nxt == current:
            return CentralSeries(tuple(chain), True)
        chain.append(nxt)
        current = nxt


def is_hypercentral(group: GroupTable) -> bool:
    series = upper_central_series(group)
    return len(series.chain[-1]) == group.n


def cyclic(n: int) -> GroupTable:
    idx = np.arange(n)
    return validate_group((idx[:, None] + idx[None, :]) % n)


def klein_four() -> GroupTable:
    idx = np.arange(4)
    return validate_group(idx[:, None] ^ idx[None, :])


def dihedral(n: int) -> GroupTable:
    """Order 2n, element i + n*j standing for (rotation^i reflection^j)."""
    if n < 3:
        raise ValidationError("dihedral table needs n >= 3")
    t = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i1, j1, i2, j2 in itertools.product(range(n), range(2), range(n), range(2)):
        i = (i1 + (i2 if j1 == 0 else -i2)) % n
        j = (j1 + j2) % 2
        t[i1 + n * j1, i2 + n * j2] = i + n * j
    return validate_group(t)


def symmetric3() -> GroupTable:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    t = np.zeros((6, 6), dtype=np.int64)
    for i, a in enumerate(perms):
        for j, b in enumerate(perms):
            t[i, j] = index[tuple(a[b[x]] for x in range(3))]
    return validate_group(t)


def quaternion8() -> GroupTable:
    """Indices 0..7 standing for +1, -1, +i, -i, +j, -j, +k, -k."""
    axis_mul = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }
    t = np.zeros((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            ax, sa = a // 2, 1 - 2 * (a % 2)
            bx, sb = b // 2, 1 - 2 * (b % 2)
            cx, sc = axis_mul[(ax, bx)]
            s = sa * sb * sc
            t[a, b] = cx * 2 + (0 if s == 1 else 1)
    return validate_group(t)


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    n = a.n * b.n
    t = np.zeros((n, n), dtype=np.int64)
    for x1 in range(a.n):
        for y1 in range(b.n):
            for x2 in range(a.n):
                for y2 in range(b.n):
                    t[x1 * b.n + y1, x2 * b.n + y2] = int(a.table[x1, x2]) * b.n + int(b.table[y1, y2])
    return validate_group(t)
