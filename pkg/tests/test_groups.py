"""Group tables, centers, ascending central series, quotients."""
import numpy as np
import pytest

from gradlab import (
    ValidationError,
    cyclic,
    validate_semigroup,
    dihedral,
    direct_product,
    group_center,
    is_hypercentral,
    klein_four,
    quaternion8,
    quotient,
    symmetric3,
    upper_central_series,
)
from gradlab.catalog import GROUPS
from gradlab.groups import as_group, validate_group


def test_cyclic_table():
    c3 = cyclic(3)
    assert c3.n == 3
    assert c3.table.tolist() == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    assert c3.identity == 0
    assert c3.inv.tolist() == [0, 2, 1]


def test_constructor_orders():
    assert dihedral(4).n == 8
    assert symmetric3().n == 6
    assert quaternion8().n == 8
    assert klein_four().n == 4
    assert direct_product(cyclic(2), cyclic(3)).n == 6


def test_left_zero_table_is_not_a_group():
    sg = validate_semigroup(np.array([[0, 0], [1, 1]]))
    assert as_group(sg) is None
    with pytest.raises(ValidationError):
        validate_group(sg.table)


def test_centers_of_named_groups():
    assert sorted(group_center(dihedral(4))) == [0, 2]
    assert sorted(group_center(quaternion8())) == [0, 1]
    assert sorted(group_center(symmetric3())) == [0]
    assert len(group_center(klein_four())) == 4


def test_dihedral_rotation_reflection_commutator():
    d4 = dihedral(4)
    r, s = 1, 4
    t = d4.table
    comm = t[t[t[r, s], d4.inv[r]], d4.inv[s]]
    # r s r^-1 s^-1 is the half turn
    assert comm == 2


def test_quaternion_imaginary_unit_squares_to_minus_one():
    q8 = quaternion8()
    assert q8.table[2, 2] == 1


def test_central_series_climbs_to_the_top_for_nilpotent_groups():
    series = upper_central_series(dihedral(4))
    assert [len(z) for z in series.chain] == [1, 2, 8]
    assert series.terminated
    assert is_hypercentral(dihedral(4))
    assert is_hypercentral(quaternion8())
    assert is_hypercentral(direct_product(cyclic(2), cyclic(4)))


def test_central_series_stalls_for_symmetric3():
    series = upper_central_series(symmetric3())
    assert [len(z) for z in series.chain] == [1]
    assert series.terminated
    assert not is_hypercentral(symmetric3())


def test_trivial_group_series():
    series = upper_central_series(cyclic(1))
    assert [len(z) for z in series.chain] == [1]
    assert is_hypercentral(cyclic(1))


def test_quotient_by_center_of_dihedral():
    d4 = dihedral(4)
    q, proj = quotient(d4, group_center(d4))
    assert q.n == 4
    assert len(group_center(q)) == 4  # the quotient is abelian


def test_quotient_projection_is_a_homomorphism():
    d4 = dihedral(4)
    q, proj = quotient(d4, group_center(d4))
    for a in range(d4.n):
        for b in range(d4.n):
            assert proj[d4.table[a, b]] == q.table[proj[a], proj[b]]


def test_quotient_rejects_non_normal_subgroup():
    s3 = symmetric3()
    # a reflection generates a non-normal subgroup of order 2
    refl = next(g for g in range(s3.n) if g != 0 and s3.table[g, g] == 0)
    with pytest.raises(ValidationError):
        quotient(s3, frozenset({0, refl}))


def test_center_of_quotient_matches_next_series_level():
    for name, make in sorted(GROUPS.items()):
        g = make()
        series = upper_central_series(g)
        for i in range(len(series.chain) - 1):
            q, proj = quotient(g, series.chain[i])
            lifted = frozenset(int(proj[z]) for z in series.chain[i + 1])
            assert group_center(q) == lifted, name


def test_direct_product_of_coprime_cyclics_is_abelian():
    p = direct_product(cyclic(2), cyclic(3))
    assert len(group_center(p)) == 6
    assert is_hypercentral(p)
