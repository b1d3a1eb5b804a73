"""Simplicity decisions: corner route, center route, brute-force cross checks.

Expected verdicts below were worked out by hand first and then confirmed
against the independent enumeration route, never the other way around.
"""
import numpy as np
import pytest

from gradlab import (
    BudgetExceededError,
    HypothesesUnmetError,
    build_catalog,
    check_hypotheses,
    corner_verdict_for_all_f,
    cross_validate,
    decide_center_criterion,
    decide_corner_criterion,
    minimal_support_central,
    quotient_chain_graded_simple,
    Subspace,
    FieldSpec,
)


@pytest.fixture
def gc2():
    return build_catalog("gf2-c2-group-algebra")[1]


@pytest.fixture
def m2g():
    return build_catalog("m2-gf2-good-grading")[1]


def test_group_algebra_of_order_two_graded_simple_but_not_simple(gc2):
    # 1 + g spans a nilpotent ideal, yet no proper graded ideal exists
    v = cross_validate(gc2, 0)
    assert v.to_dict() == {
        "graded_simple": True,
        "corner_center_is_field": False,
        "predicted_simple": False,
        "brute_simple": False,
        "agreement": True,
        "witnesses": {
            "f": [1, 0],
            "corner_center_dim": 2,
            "proper_ideal_basis": [[1, 1]],
            "proper_ideal_dim": 1,
        },
    }


def test_good_matrix_grading_is_simple_both_ways(m2g):
    v = cross_validate(m2g, 0)
    assert v.to_dict() == {
        "graded_simple": True,
        "corner_center_is_field": True,
        "predicted_simple": True,
        "brute_simple": True,
        "agreement": True,
        "witnesses": {"f": [1, 0, 0, 0], "corner_center_dim": 1},
    }


def test_corner_criterion_accepts_an_explicit_corner_idempotent(m2g):
    v = decide_corner_criterion(m2g, 0, f=np.array([1, 0, 0, 1]))
    assert v.predicted_simple
    assert v.witnesses["f"] == [1, 0, 0, 1]
    assert v.witnesses["corner_center_dim"] == 1


def test_verdict_is_the_same_for_every_admissible_corner(gc2, m2g):
    assert [(f.tolist(), p) for f, p in corner_verdict_for_all_f(gc2, 0)] == [([1, 0], False)]
    outcomes = corner_verdict_for_all_f(m2g, 0)
    assert len(outcomes) == 3
    assert {p for _, p in outcomes} == {True}


def test_center_route_on_commutative_group_algebras(gc2):
    v = decide_center_criterion(gc2)
    assert v.to_dict() == {
        "graded_simple": True,
        "corner_center_is_field": False,
        "predicted_simple": False,
        "brute_simple": None,
        "agreement": None,
        "witnesses": {"center_dim": 2},
    }
    v3 = decide_center_criterion(build_catalog("gf3-c3-group-algebra")[1])
    assert not v3.predicted_simple
    assert v3.witnesses["center_dim"] == 3


def test_cyclic_three_over_gf2_graded_simple_but_not_simple():
    gc3 = build_catalog("gf2-c3-group-algebra")[1]
    v = cross_validate(gc3, 0)
    assert v.graded_simple
    assert not v.brute_simple
    assert v.agreement


def test_twisted_klein_grading_is_simple():
    pauli = build_catalog("m2-gf3-pauli-klein4")[1]
    v = decide_center_criterion(pauli)
    assert v.predicted_simple
    assert v.witnesses["center_dim"] == 1


def test_hypothesis_report_for_uncancellative_grading():
    lz = build_catalog("left-zero-graded-gf2")[1]
    rep = check_hypotheses(lz, 0)
    assert rep.to_dict() == {
        "e": 0,
        "e_nonzero_idempotent": True,
        "cancellative_at_e": False,
        "eGe_nonzero_is_group": True,
        "eGe_hypercentral": True,
        "idempotent_f": [1, 0],
        "all_met": False,
    }


def test_hypothesis_report_when_no_corner_idempotent_exists():
    nil = build_catalog("c2-nilpotent-base-gf2")[1]
    rep = check_hypotheses(nil, 0)
    assert rep.cancellative_at_e
    assert rep.idempotent_f is None
    assert not rep.all_met
    rep1 = check_hypotheses(nil, 1)
    assert not rep1.e_nonzero_idempotent
    assert not rep1.all_met


def test_unmet_hypotheses_raise_with_the_report_attached():
    nil = build_catalog("c2-nilpotent-base-gf2")[1]
    with pytest.raises(HypothesesUnmetError, match="unmet at e=0") as exc:
        decide_corner_criterion(nil, 0)
    assert exc.value.report is not None
    assert not exc.value.report.all_met


def test_symmetric_grading_is_outside_both_criteria():
    s3g = build_catalog("m2-gf2-s3-grading")[1]
    with pytest.raises(HypothesesUnmetError, match="unmet at e=0"):
        decide_corner_criterion(s3g, 0)
    with pytest.raises(HypothesesUnmetError, match="hypercentral"):
        decide_center_criterion(s3g)


def test_central_element_of_minimal_support(gc2, m2g):
    vec, size = minimal_support_central(gc2)
    assert (vec.tolist(), size) == ([1, 0], 1)
    vec2, size2 = minimal_support_central(m2g)
    assert (vec2.tolist(), size2) == ([1, 0, 0, 1], 1)


def test_central_witness_search_inside_a_given_ideal(gc2):
    ideal = Subspace.span(FieldSpec(2), np.array([[1, 1]]), 2)
    vec, size = minimal_support_central(gc2, ideal_space=ideal)
    assert (vec.tolist(), size) == ([1, 1], 2)


def test_central_witness_needs_graded_simplicity():
    two = build_catalog("gf2xgf2-trivial")[1]
    with pytest.raises(HypothesesUnmetError, match="graded simple"):
        minimal_support_central(two)


def test_quotient_chain_detects_the_failure_at_the_top_level(gc2):
    ok, levels = quotient_chain_graded_simple(gc2)
    assert not ok
    assert levels == [
        {"level": 0, "quotient_order": 2, "graded_simple": True},
        {"level": 1, "quotient_order": 1, "graded_simple": False, "witness": [1, 1]},
    ]


def test_quotient_chain_passes_for_simple_algebra(m2g):
    ok, levels = quotient_chain_graded_simple(m2g)
    assert ok
    assert [lvl["graded_simple"] for lvl in levels] == [True, True]


def test_quotient_chain_needs_hypercentral_grading():
    s3g = build_catalog("m2-gf2-s3-grading")[1]
    with pytest.raises(HypothesesUnmetError, match="hypercentral"):
        quotient_chain_graded_simple(s3g)


def test_small_budget_stops_the_field_check():
    q8g = build_catalog("gf2-q8-group-algebra")[1]
    with pytest.raises(BudgetExceededError) as exc:
        decide_corner_criterion(q8g, 0, budget=10)
    assert exc.value.required == 31
