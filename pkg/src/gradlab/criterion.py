"""Simplicity deciders for graded algebras, cross-validated against brute force.

The corner criterion: when the grading semigroup has a nonzero idempotent e,
the grading is cancellative at e, the nonzero part of eGe is a hypercentral
group, and the e-component contains a nonzero idempotent f, the algebra is
simple exactly when it is graded simple and the center of the corner
f R_H f is a field, H being that group of degrees.

The center criterion is the unital group-graded special case: graded simple
plus Z(R) a field, for hypercentral grading groups.

Both are decided literally and compared against independent ideal
enumeration; disagreement on a conforming instance is a falsification and is
reported as such, never patched over.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebras import (
    center,
    corner,
    find_idempotents,
    first_idempotent,
    is_field,
    is_simple,
)
from .errors import HypothesesUnmetError, ValidationError
from .fflinalg import DEFAULT_BUDGET, Subspace, check_budget, nonzero_vector_blocks, vector_count
from .gradings import (
    GradedAlgebra,
    coarsen_by_quotient,
    grading_group,
    is_graded_ideal,
    is_graded_simple,
    subalgebra_on_subset,
)
from .groups import center as group_center
from .groups import is_hypercentral, upper_central_series
from .semigroups import is_cancellative_at, nonzero_eGe_as_group


@dataclass(frozen=True)
class HypothesisReport:
    """Which standing hypotheses of the corner criterion hold at e."""

    e: int
    e_nonzero_idempotent: bool
    cancellative_at_e: bool
    eGe_nonzero_is_group: bool
    eGe_hypercentral: bool
    idempotent_f: np.ndarray | None
    all_met: bool

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "e_nonzero_idempotent": self.e_nonzero_idempotent,
            "cancellative_at_e": self.cancellative_at_e,
            "eGe_nonzero_is_group": self.eGe_nonzero_is_group,
            "eGe_hypercentral": self.eGe_hypercentral,
            "idempotent_f": None if self.idempotent_f is None else [int(x) for x in self.idempotent_f],
            "all_met": self.all_met,
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of a criterion decision, optionally cross-validated."""

    graded_simple: bool
    corner_center_is_field: bool
    predicted_simple: bool
    brute_simple: bool | None = None
    agreement: bool | None = None
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "graded_simple": self.graded_simple,
            "corner_center_is_field": self.corner_center_is_field,
            "predicted_simple": self.predicted_simple,
            "brute_simple": self.brute_simple,
            "agreement": self.agreement,
            "witnesses": self.witnesses,
        }


def _fail_report(e: int) -> HypothesisReport:
    return HypothesisReport(e, False, False, False, False, None, False)


def check_hypotheses(graded: GradedAlgebra, e: int, budget: int = DEFAULT_BUDGET) -> HypothesisReport:
    """Evaluate the four standing hypotheses of the corner criterion at e.

    f is the first idempotent of the e-component in enumeration order, when
    one exists. Each flag is reported honestly even after an earlier one
    fails, except that nothing downstream of "e is a nonzero idempotent" is
    meaningful without it.
    """
    sg = graded.grading
    if not (0 <= e < sg.n) or sg.is_zero(e) or int(sg.table[e, e]) != e:
        return _fail_report(e)
    cancellative = is_cancellative_at(sg, e)
    got = nonzero_eGe_as_group(sg, e)
    if got is None:
        group, hyper = None, False
    else:
        group, _ = got
        hyper = is_hypercentral(group)
    f = first_idempotent(graded.algebra, graded.component(e), limit=budget)
    all_met = cancellative and group is not None and hyper and f is not None
    return HypothesisReport(e, True, cancellative, group is not None, hyper, f, all_met)


def decide_corner_criterion(
    graded: GradedAlgebra, e: int, f: np.ndarray | None = None, budget: int = DEFAULT_BUDGET
) -> Verdict:
    """Predict simplicity from graded simplicity plus a corner center field check.

    The corner is taken inside the subalgebra spanned by the components whose
    degrees form the group of nonzero elements of eGe. Raises
    HypothesesUnmetError carrying the failing report when the standing
    hypotheses do not hold.
    """
    report = check_hypotheses(graded, e, budget)
    if not report.all_met:
        raise HypothesesUnmetError(f"corner criterion hypotheses unmet at e={e}", report=report)
    group, members = nonzero_eGe_as_group(graded.grading, e)
    sub, idx = subalgebra_on_subset(graded, members)
    if f is None:
        f = report.idempotent_f
    else:
        f = np.asarray(f, dtype=np.int64) % graded.algebra.field.p
        ff = graded.algebra.multiply(f, f)
        if not f.any() or not np.array_equal(ff, f) or not graded.component(e).contains(f):
            raise ValidationError("f must be a nonzero idempotent of the e-component")
    outside = np.delete(f, idx)
    if outside.any():
        raise ValidationError("f does not lie in the local subalgebra")
    corner_sub = corner(sub.algebra, f[idx])
    corner_center = center(corner_sub.algebra)
    field_ok = is_field(corner_center.algebra, budget)
    graded_ok, gwit = is_graded_simple(graded, budget)
    witnesses = {}
    if gwit is not None:
        witnesses["graded_ideal_generator"] = [int(x) for x in gwit]
    witnesses["f"] = [int(x) for x in f]
    witnesses["corner_center_dim"] = int(corner_center.algebra.dim)
    return Verdict(graded_ok, field_ok, graded_ok and field_ok, witnesses=witnesses)


def decide_center_criterion(graded: GradedAlgebra, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Graded simple plus Z(R) a field, for unital hypercentral group gradings."""
    group = grading_group(graded)
    if not is_hypercentral(group):
        raise HypothesesUnmetError("center criterion needs a hypercentral grading group")
    if graded.algebra.unit is None:
        raise HypothesesUnmetError("center criterion needs a unital algebra")
    ring_center = center(graded.algebra)
    field_ok = is_field(ring_center.algebra, budget)
    graded_ok, gwit = is_graded_simple(graded, budget)
    witnesses = {"center_dim": int(ring_center.algebra.dim)}
    if gwit is not None:
        witnesses["graded_ideal_generator"] = [int(x) for x in gwit]
    return Verdict(graded_ok, field_ok, graded_ok and field_ok, witnesses=witnesses)


def minimal_support_central(
    graded: GradedAlgebra, ideal_space: Subspace | None = None, budget: int = DEFAULT_BUDGET
) -> tuple[np.ndarray, int] | None:
    """A central element of central degree inside the ideal, of minimal support.

    For a unital graded-simple algebra graded by a group G, any nonzero ideal
    that is graded with respect to G/Z(G) must contain a nonzero element of
    R_Z(G) intersect Z(R), with support size no larger than the minimum over
    the ideal. Returns (element, support size), or None when no such element
    exists, which on a conforming instance falsifies that guarantee.
    """
    A = graded.algebra
    group = grading_group(graded)
    if A.unit is None:
        raise HypothesesUnmetError("the witness search needs a unital algebra")
    gs, _ = is_graded_simple(graded, budget)
    if not gs:
        raise HypothesesUnmetError("the witness search needs a graded simple algebra")
    if ideal_space is None:
        ideal_space = Subspace.full(A.field, A.dim)
    if ideal_space.dim == 0:
        raise ValidationError("the ideal must be nonzero")
    coarse, _, _ = coarsen_by_quotient(graded, group_center(group))
    if not is_graded_ideal(coarse, ideal_space):
        raise HypothesesUnmetError("the ideal is not graded with respect to G modulo its center")

    zg = sorted(group_center(group))
    central_component_idx = np.flatnonzero(np.isin(graded.deg, zg))
    rows = np.zeros((central_component_idx.size, A.dim), dtype=np.int64)
    rows[np.arange(central_component_idx.size), central_component_idx] = 1
    r_zg = Subspace(A.field, A.dim, rows)
    ring_center = center(A)
    candidates = ideal_space.intersect(r_zg).intersect(ring_center.space)
    if candidates.dim == 0:
        return None
    check_budget(vector_count(A.field, candidates.dim), budget, "minimal support search")
    best: tuple[np.ndarray, int] | None = None
    for block in nonzero_vector_blocks(A.field, candidates.dim):
        vecs = (block @ candidates.basis) % A.field.p
        for v in vecs:
            size = len(graded.support(v))
            if best is None or size < best[1]:
                best = (v.copy(), size)
    return best


def quotient_chain_graded_simple(
    graded: GradedAlgebra, budget: int = DEFAULT_BUDGET
) -> tuple[bool, list[dict]]:
    """Graded simplicity of every coarsening along the ascending central series.

    For a hypercentral grading group the chain ends at G itself, so the last
    level grades by the trivial quotient and coincides with plain simplicity
    of a nonzero-multiplication algebra. All-true levels therefore force
    simplicity; any false level leaves no conclusion.
    """
    group = grading_group(graded)
    if not is_hypercentral(group):
        raise HypothesesUnmetError("the quotient chain needs a hypercentral grading group")
    series = upper_central_series(group)
    levels = []
    verdict = True
    for i, z in enumerate(series.chain):
        coarse, q, _ = coarsen_by_quotient(graded, z)
        ok, wit = is_graded_simple(coarse, budget)
        level = {"level": i, "quotient_order": int(q.n), "graded_simple": bool(ok)}
        if wit is not None:
            level["witness"] = [int(x) for x in wit]
        levels.append(level)
        verdict = verdict and ok
    return verdict, levels


def cross_validate(
    graded: GradedAlgebra, e: int, f: np.ndarray | None = None, budget: int = DEFAULT_BUDGET
) -> Verdict:
    """Corner criterion and brute-force enumeration side by side.

    The two routes are supposed to be equivalent whenever the hypotheses
    hold, so a disagreement is a falsification, not noise.
    """
    partial = decide_corner_criterion(graded, e, f, budget)
    brute, witness = is_simple(graded.algebra, budget)
    witnesses = dict(partial.witnesses)
    if witness is not None:
        witnesses["proper_ideal_dim"] = int(witness.dim)
        witnesses["proper_ideal_basis"] = [[int(x) for x in row] for row in witness.space.basis]
    return Verdict(
        partial.graded_simple,
        partial.corner_center_is_field,
        partial.predicted_simple,
        brute,
        partial.predicted_simple == brute,
        witnesses,
    )


def corner_verdict_for_all_f(
    graded: GradedAlgebra, e: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[np.ndarray, bool]]:
    """The predicted verdict for every admissible f, to observe its f-independence."""
    report = check_hypotheses(graded, e, budget)
    if not report.all_met:
        raise HypothesesUnmetError(f"corner criterion hypotheses unmet at e={e}", report=report)
    out = []
    for f in find_idempotents(graded.algebra, graded.component(e), limit=budget):
        verdict = decide_corner_criterion(graded, e, f, budget)
        out.append((f, verdict.predicted_simple))
    return out
