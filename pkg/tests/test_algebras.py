"""Structure constants, ideals, centers, corners, idempotents."""
import numpy as np
import pytest
from hypothesis import given, strategies as st

from gradlab import (
    Algebra,
    BudgetExceededError,
    FieldSpec,
    Ideal,
    Subspace,
    ValidationError,
    center,
    corner,
    find_idempotents,
    first_idempotent,
    ideal_closure,
    is_field,
    is_simple,
    validate_algebra,
)
from gradlab.catalog import (
    ALGEBRAS,
    build_catalog,
    cyclic,
    diagonal_algebra,
    group_algebra,
    matrix_algebra,
)

GF2 = FieldSpec(2)


@pytest.fixture
def gc2():
    """The two-dimensional algebra with basis 1, g and g*g = 1, over GF(2)."""
    return group_algebra(2, cyclic(2)).algebra


@pytest.fixture
def m2():
    return matrix_algebra(2, 2)


def test_sparse_and_dense_constants_agree(gc2):
    quads = [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)]
    built = validate_algebra(GF2, 2, quads)
    assert built.mul.tolist() == gc2.mul.tolist()
    assert built.unit.tolist() == [1, 0]


def test_validation_rejects_nonassociative_constants():
    mul = np.zeros((2, 2, 2), dtype=np.int64)
    mul[0, 0, 1] = 1
    mul[0, 1, 0] = 1
    with pytest.raises(ValidationError, match=r"basis triple \(0, 0, 0\)"):
        validate_algebra(GF2, 2, mul)


def test_square_of_one_plus_generator_vanishes(gc2):
    v = np.array([1, 1])
    assert gc2.multiply(v, v).tolist() == [0, 0]


def test_ideal_closure_of_nilpotent_element(gc2):
    ideal = ideal_closure(gc2, np.array([[1, 1]]))
    assert ideal.dim == 1
    assert ideal.space.basis.tolist() == [[1, 1]]


def test_ideal_constructor_rejects_non_ideal(gc2):
    with pytest.raises(ValidationError, match="not closed under multiplication"):
        Ideal(gc2, Subspace.span(GF2, np.array([[1, 0]]), 2))


def test_group_algebra_of_order_two_is_not_simple(gc2):
    simple, witness = is_simple(gc2)
    assert not simple
    assert witness.dim == 1
    assert witness.space.basis.tolist() == [[1, 1]]


def test_matrix_algebra_is_simple(m2):
    simple, witness = is_simple(m2)
    assert simple
    assert witness is None


def test_one_dimensional_zero_algebra_is_not_simple():
    a = Algebra(GF2, 1, np.zeros((1, 1, 1), dtype=np.int64), None)
    assert is_simple(a) == (False, None)


def test_center_of_matrix_algebra_is_scalars(m2):
    z = center(m2)
    assert z.space.dim == 1
    assert z.space.basis.tolist() == [[1, 0, 0, 1]]
    assert is_field(z.algebra)


def test_field_detection():
    assert is_field(ALGEBRAS["gf4"]())
    assert is_field(ALGEBRAS["gf2"]())
    assert not is_field(ALGEBRAS["gf2xgf2"]())
    assert not is_field(matrix_algebra(2, 2))


def test_commutative_non_field_is_detected(gc2):
    assert not is_field(gc2)


def test_matrix_algebra_idempotents(m2):
    # rank-one projections (six of them) plus the identity
    assert len(find_idempotents(m2)) == 7
    assert first_idempotent(m2).tolist() == [1, 0, 0, 0]


def test_idempotent_search_respects_search_space(m2):
    diag = Subspace.span(GF2, np.array([[1, 0, 0, 0], [0, 0, 0, 1]]), 4)
    found = [v.tolist() for v in find_idempotents(m2, search_space=diag)]
    assert found == [[1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 1]]


def test_corner_at_matrix_unit(m2):
    c = corner(m2, np.array([1, 0, 0, 0]))
    assert c.algebra.dim == 1
    assert is_field(c.algebra)


def test_corner_requires_idempotent(m2):
    with pytest.raises(ValidationError, match="nonzero idempotent"):
        corner(m2, np.array([0, 1, 0, 0]))


def test_corner_at_unit_is_whole_algebra(m2):
    c = corner(m2, np.array([1, 0, 0, 1]))
    assert c.algebra.dim == 4


def test_enumeration_budgets_are_enforced():
    big = diagonal_algebra(2, 21)  # 2^21 candidate vectors exceed the default budget
    with pytest.raises(BudgetExceededError):
        find_idempotents(big)
    with pytest.raises(BudgetExceededError):
        is_simple(big)


def test_zero_square_shortcut_skips_enumeration():
    # every one-generator ideal works, so no enumeration is needed at any size
    big = Algebra(GF2, 21, np.zeros((21, 21, 21), dtype=np.int64), None)
    simple, witness = is_simple(big)
    assert not simple
    assert witness.dim == 1


def test_simple_unital_algebras_have_field_centers():
    for name in ("gf2", "gf4", "m2-gf2", "m2-gf3"):
        a = build_catalog(name)[1]
        simple, _ = is_simple(a)
        assert simple, name
        assert is_field(center(a).algebra), name


@given(st.data())
def test_ideal_closure_is_closed(data):
    name = data.draw(st.sampled_from(["gf2xgf2", "m2-gf2", "m2-gf3"]))
    a = build_catalog(name)[1]
    p = a.field.p
    vec = np.array(
        data.draw(st.lists(st.integers(0, p - 1), min_size=a.dim, max_size=a.dim))
    )
    ideal = ideal_closure(a, vec.reshape(1, -1))
    basis = ideal.space.basis
    eye = np.eye(a.dim, dtype=np.int64)
    for row in basis:
        for j in range(a.dim):
            assert ideal.space.contains(a.multiply(row, eye[j]))
            assert ideal.space.contains(a.multiply(eye[j], row))
