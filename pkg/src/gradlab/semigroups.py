"""Finite semigroups and groupoids given by explicit tables.

Elements are indices 0..n-1. A zero (absorbing) element may be present; the
convention throughout is that "nonzero element" means "not the zero element"
when one exists, and every element otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError


class SemigroupTable:
    """An associative Cayley table, with the zero element recorded if present."""

    __slots__ = ("n", "table", "zero")

    def __init__(self, n: int, table: np.ndarray, zero: int | None):
        self.n = int(n)
        t = np.asarray(table, dtype=np.int64).copy()
        t.setflags(write=False)
        self.table = t
        self.zero = zero

    def product(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def elements(self) -> range:
        return range(self.n)

    def nonzero_elements(self) -> list[int]:
        return [g for g in range(self.n) if g != self.zero]

    def is_zero(self, g: int) -> bool:
        return self.zero is not None and g == self.zero

    def __repr__(self) -> str:
        z = f", zero={self.zero}" if self.zero is not None else ""
        return f"{type(self).__name__}(n={self.n}{z})"


def _coerce_table(table) -> np.ndarray:
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValidationError(f"multiplication table must be square, got shape {t.shape}")
    n = t.shape[0]
    if n == 0:
        raise ValidationError("empty semigroup is not allowed")
    if ((t < 0) | (t >= n)).any():
        raise ValidationError("table entries must be element indices")
    return t


def associativity_witness(table: np.ndarray) -> tuple[int, int, int] | None:
    """First triple (g, h, k) with (gh)k != g(hk), or None."""
    t = np.asarray(table, dtype=np.int64)
    left = t[t, :]
    right = t[:, t]
    bad = np.argwhere(left != right)
    if bad.size:
        g, h, k = (int(x) for x in bad[0])
        return (g, h, k)
    return None


def detect_zero(table: np.ndarray) -> int | None:
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    for z in range(n):
        if (t[z, :] == z).all() and (t[:, z] == z).all():
            return z
    return None


def validate_semigroup(table, zero: int | None = None) -> SemigroupTable:
    """Check associativity on all triples and the declared zero, if any.

    The zero is part of the declared structure, never inferred: designating
    it decides which component of a graded algebra must vanish, and a
    one-element semigroup would otherwise always count as its own zero.
    """
    t = _coerce_table(table)
    w = associativity_witness(t)
    if w is not None:
        g, h, k = w
        raise ValidationError(f"not associative: ({g}*{h})*{k} != {g}*({h}*{k})", witness=w)
    if zero is not None:
        if not (0 <= zero < t.shape[0]):
            raise ValidationError(f"zero index {zero} out of range")
        if not ((t[zero, :] == zero).all() and (t[:, zero] == zero).all()):
            raise ValidationError(f"declared zero {zero} is not absorbing")
    return SemigroupTable(t.shape[0], t, zero)


def idempotents(sg: SemigroupTable) -> list[int]:
    return [g for g in range(sg.n) if sg.table[g, g] == g]


def nonzero_idempotents(sg: SemigroupTable) -> list[int]:
    return [g for g in idempotents(sg) if not sg.is_zero(g)]


def _require_nonzero_idempotent(sg: SemigroupTable, e: int) -> None:
    if not (0 <= e < sg.n):
        raise ValidationError(f"element {e} out of range")
    if sg.is_zero(e):
        raise ValidationError("the zero element does not qualify as the base idempotent")
    if sg.table[e, e] != e:
        raise ValidationError(f"element {e} is not idempotent")


def is_cancellative_at(sg: SemigroupTable, e: int) -> bool:
    """Whether e*a*x*b*e = e*a*y*b*e forces x = y whenever the product is nonzero.

    Brute force over all quadruples (a, b, x, y). When no zero element exists
    the nonzero proviso is vacuous and plain injectivity in the middle slot is
    required.
    """
    _require_nonzero_idempotent(sg, e)
    t = sg.table
    ea = t[e, :]                      # ea[a] = e*a
    m1 = t[ea, :]                     # m1[a, x] = (e*a)*x
    m2 = t[m1, :]                     # m2[a, x, b] = ((e*a)*x)*b
    m3 = t[m2, e]                     # m3[a, x, b] = (((e*a)*x)*b)*e
    n = sg.n
    for a in range(n):
        for b in range(n):
            vals = m3[a, :, b]
            seen: dict[int, int] = {}
            for x in range(n):
                v = int(vals[x])
                if sg.zero is not None and v == sg.zero:
                    continue
                if v in seen and seen[v] != x:
                    return False
                seen[v] = x
    return True


def local_subsemigroup(sg: SemigroupTable, e: int) -> tuple[list[int], SemigroupTable]:
    """The subset eGe = {e*g*e : g in G} with its induced table.

    Closure holds because e is idempotent: (exe)(eye) = e(xey)e.
    """
    _require_nonzero_idempotent(sg, e)
    t = sg.table
    members = sorted({int(t[t[e, g], e]) for g in range(sg.n)})
    index = {g: i for i, g in enumerate(members)}
    sub = np.array([[index[int(t[a, b])] for b in members] for a in members], dtype=np.int64)
    return members, validate_semigroup(sub)


def nonzero_eGe_as_group(sg: SemigroupTable, e: int):
    """The nonzero part of eGe as a GroupTable when it is one, else None.

    Returns (group, embedding) where embedding[i] is the original index of
    group element i. e is always a two-sided identity on eGe, so only closure
    of the nonzero part and existence of inverses are at stake.
    """
    from .groups import GroupTable

    members, _ = local_subsemigroup(sg, e)
    live = [g for g in members if not sg.is_zero(g)]
    index = {g: i for i, g in enumerate(live)}
    t = sg.table
    sub = np.zeros((len(live), len(live)), dtype=np.int64)
    for a in live:
        for b in live:
            prod = int(t[a, b])
            if prod not in index:
                return None
            sub[index[a], index[b]] = index[prod]
    ident = index[e]
    inv = np.full(len(live), -1, dtype=np.int64)
    for i in range(len(live)):
        hits = np.flatnonzero(sub[i, :] == ident)
        if hits.size != 1 or sub[int(hits[0]), i] != ident:
            return None
        inv[i] = int(hits[0])
    return GroupTable(len(live), sub, ident, inv), live


def principal_ideal(sg: SemigroupTable, g: int) -> set[int]:
    """The two-sided semigroup ideal generated by g."""
    t = sg.table
    out = {g}
    out.update(int(x) for x in t[:, g])
    out.update(int(x) for x in t[g, :])
    out.update(int(x) for x in t[:, t[g, :]].ravel())
    return out


def simplicity_witness(sg: SemigroupTable) -> tuple[int, int] | None:
    """A pair (g, h) with h nonzero and outside the ideal of nonzero g, or None."""
    live = sg.nonzero_elements()
    for g in live:
        ideal = principal_ideal(sg, g)
        for h in live:
            if h not in ideal:
                return (g, h)
    return None


def is_simple_semigroup(sg: SemigroupTable) -> bool:
    """Every ideal containing a nonzero element contains all nonzero elements."""
    return simplicity_witness(sg) is None


def is_inverse_semigroup(sg: SemigroupTable) -> bool:
    """Each x has exactly one y with xyx = x and yxy = y."""
    t = sg.table
    for x in range(sg.n):
        count = 0
        for y in range(sg.n):
            if t[t[x, y], x] == x and t[t[y, x], y] == y:
                count += 1
        if count != 1:
            return False
    return True


@dataclass(frozen=True)
class GroupoidTable:
    """A finite groupoid: objects, morphisms with dom/cod, partial composition.

    comp[g][h] is the index of g after h when dom(g) = cod(h) and -1 otherwise.
    identities[o] is the identity morphism at object o.
    """

    num_objects: int
    dom: tuple[int, ...]
    cod: tuple[int, ...]
    comp: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identities: tuple[int, ...]

    @property
    def num_morphisms(self) -> int:
        return len(self.dom)


def validate_groupoid(num_objects: int, dom, cod, comp, inv=None) -> GroupoidTable:
    """Check composability pattern, identities, inverses, and associativity."""
    dom = [int(x) for x in dom]
    cod = [int(x) for x in cod]
    n = len(dom)
    if len(cod) != n or n == 0:
        raise ValidationError("dom and cod must be equal-length and nonempty")
    if any(not (0 <= o < num_objects) for o in dom + cod):
        raise ValidationError("dom/cod entry out of object range")
    comp = [[int(x) for x in row] for row in comp]
    if len(comp) != n or any(len(row) != n for row in comp):
        raise ValidationError("composition table must be n x n")

    for g in range(n):
        for h in range(n):
            defined = dom[g] == cod[h]
            c = comp[g][h]
            if defined:
                if not (0 <= c < n):
                    raise ValidationError(f"composition {g} after {h} must be defined", witness=(g, h))
                if dom[c] != dom[h] or cod[c] != cod[g]:
                    raise ValidationError(f"composition {g} after {h} has wrong endpoints", witness=(g, h))
            elif c != -1:
                raise ValidationError(f"composition {g} after {h} must be undefined", witness=(g, h))

    identities = []
    for o in range(num_objects):
        candidates = [
            g
            for g in range(n)
            if dom[g] == cod[g] == o
            and all(comp[g][h] == h for h in range(n) if cod[h] == o)
            and all(comp[h][g] == h for h in range(n) if dom[h] == o)
        ]
        if len(candidates) != 1:
            raise ValidationError(f"object {o} must have exactly one identity morphism")
        identities.append(candidates[0])

    if inv is None:
        inv_list = []
        for g in range(n):
            hits = [
                h
                for h in range(n)
                if dom[h] == cod[g]
                and cod[h] == dom[g]
                and comp[g][h] == identities[cod[g]]
                and comp[h][g] == identities[dom[g]]
            ]
            if len(hits) != 1:
                raise ValidationError(f"morphism {g} must have exactly one inverse")
            inv_list.append(hits[0])
    else:
        inv_list = [int(x) for x in inv]
        for g in range(n):
            h = inv_list[g]
            if comp[g][h] != identities[cod[g]] or comp[h][g] != identities[dom[g]]:
                raise ValidationError(f"declared inverse of {g} is wrong", witness=g)

    for g in range(n):
        for h in range(n):
            if dom[g] != cod[h]:
                continue
            for k in range(n):
                if dom[h] != cod[k]:
                    continue
                if comp[comp[g][h]][k] != comp[g][comp[h][k]]:
                    raise ValidationError("groupoid composition is not associative", witness=(g, h, k))

    return GroupoidTable(
        num_objects,
        tuple(dom),
        tuple(cod),
        tuple(tuple(row) for row in comp),
        tuple(inv_list),
        tuple(identities),
    )


def groupoid_to_semigroup(gpd: GroupoidTable) -> SemigroupTable:
    """Adjoin an absorbing zero standing in for every undefined composition.

    The result is a semigroup with zero whose nonzero elements are the
    morphisms; it is cancellative at each identity morphism.
    """
    n = gpd.num_morphisms
    theta = n
    t = np.full((n + 1, n + 1), theta, dtype=np.int64)
    for g in range(n):
        for h in range(n):
            c = gpd.comp[g][h]
            if c >= 0:
                t[g, h] = c
    return validate_semigroup(t, zero=theta)
