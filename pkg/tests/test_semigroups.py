"""Multiplication tables: associativity, zero elements, local structure, groupoids."""
import numpy as np
import pytest

from gradlab import (
    ValidationError,
    groupoid_to_semigroup,
    is_cancellative_at,
    is_inverse_semigroup,
    nonzero_eGe_as_group,
    validate_groupoid,
    validate_semigroup,
)
from gradlab.catalog import (
    chain_semilattice_2,
    connected_groupoid,
    cyclic,
    discrete_groupoid,
    group_with_zero,
    left_zero_semigroup,
)
from gradlab.semigroups import (
    associativity_witness,
    detect_zero,
    idempotents,
    is_simple_semigroup,
    nonzero_idempotents,
)


def test_associativity_witness_found_in_scan_order():
    # t[t[1,0],1] = t[0,1] = 1 but t[1,t[0,1]] = t[1,1] = 0
    assert associativity_witness(np.array([[0, 1], [0, 0]])) == (1, 0, 1)


def test_associativity_witness_absent_for_group_table():
    assert associativity_witness(cyclic(3).table) is None


def test_validate_rejects_nonassociative_table():
    with pytest.raises(ValidationError):
        validate_semigroup(np.array([[0, 1], [0, 0]]))


def test_zero_is_declared_not_detected():
    # the top element of the chain is absorbing, but nobody declared it
    chain = chain_semilattice_2()
    assert chain.zero is None
    assert detect_zero(chain.table) == 1


def test_declared_zero_must_absorb():
    chain = chain_semilattice_2()
    with pytest.raises(ValidationError, match="not absorbing"):
        validate_semigroup(chain.table, zero=0)
    assert validate_semigroup(chain.table, zero=1).zero == 1


def test_declared_zero_out_of_range():
    with pytest.raises(ValidationError, match="out of range"):
        validate_semigroup(cyclic(2).table, zero=5)


def test_group_with_zero_structure():
    s = group_with_zero(cyclic(2))
    assert s.n == 3
    assert s.zero == 2
    assert idempotents(s) == [0, 2]
    assert nonzero_idempotents(s) == [0]


def test_cancellativity_at_identity_of_group_with_zero():
    s = group_with_zero(cyclic(2))
    assert is_cancellative_at(s, 0)


def test_left_zero_semigroup_is_not_cancellative():
    s = left_zero_semigroup(2)
    assert idempotents(s) == [0, 1]
    assert not is_cancellative_at(s, 0)
    assert not is_cancellative_at(s, 1)


def test_semilattice_is_not_cancellative_anywhere():
    chain = chain_semilattice_2()
    assert not is_cancellative_at(chain, 0)
    assert not is_cancellative_at(chain, 1)


def test_inverse_semigroup_detection():
    assert is_inverse_semigroup(chain_semilattice_2())
    assert is_inverse_semigroup(group_with_zero(cyclic(2)))
    assert not is_inverse_semigroup(left_zero_semigroup(2))


def test_simplicity_of_small_semigroups():
    assert is_simple_semigroup(group_with_zero(cyclic(2)))
    assert is_simple_semigroup(left_zero_semigroup(2))
    # the bottom element generates a proper ideal
    assert not is_simple_semigroup(chain_semilattice_2())


def test_local_group_at_identity_of_group_with_zero():
    grp, members = nonzero_eGe_as_group(group_with_zero(cyclic(2)), 0)
    assert grp is not None
    assert grp.n == 2
    assert members == [0, 1]


def test_groupoid_semigroup_has_terminal_zero():
    s = groupoid_to_semigroup(connected_groupoid(2, cyclic(2)))
    assert s.n == 9
    assert s.zero == 8
    assert nonzero_idempotents(s) == [0, 6]


def test_groupoid_semigroup_is_cancellative_at_every_identity():
    gpd = connected_groupoid(2, cyclic(2))
    s = groupoid_to_semigroup(gpd)
    for e in gpd.identities:
        assert is_cancellative_at(s, int(e))


def test_groupoid_semigroup_is_inverse_and_simple():
    s = groupoid_to_semigroup(connected_groupoid(2, cyclic(2)))
    assert is_inverse_semigroup(s)
    assert is_simple_semigroup(s)


def test_local_group_of_connected_groupoid_is_the_isotropy():
    s = groupoid_to_semigroup(connected_groupoid(2, cyclic(2)))
    grp, members = nonzero_eGe_as_group(s, 0)
    assert grp.n == 2
    assert members == [0, 1]


def test_discrete_groupoid_identities_compose_only_with_themselves():
    gpd = discrete_groupoid(3)
    assert gpd.num_morphisms == 3
    s = groupoid_to_semigroup(gpd)
    # three identities plus the adjoined zero
    assert s.n == 4
    assert not is_simple_semigroup(s)


def test_groupoid_validation_rejects_wrong_endpoints():
    gpd = connected_groupoid(2, cyclic(2))
    comp = [list(row) for row in gpd.comp]
    pairs = [
        (i, j)
        for i in range(gpd.num_morphisms)
        for j in range(gpd.num_morphisms)
        if comp[i][j] >= 0
    ]
    i, j = pairs[0]
    comp[i][j] = (comp[i][j] + 4) % gpd.num_morphisms
    with pytest.raises(ValidationError, match="wrong endpoints"):
        validate_groupoid(gpd.num_objects, gpd.dom, gpd.cod, comp, gpd.inv)


def test_groupoid_validation_rejects_ragged_composition():
    gpd = discrete_groupoid(2)
    with pytest.raises(ValidationError, match="n x n"):
        validate_groupoid(gpd.num_objects, gpd.dom, gpd.cod, [[0]], gpd.inv)
