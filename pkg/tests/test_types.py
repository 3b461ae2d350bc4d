import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeaut import types
from planeaut.poly import Monomial
from planeaut.types import PERMS, CyclicType


def test_type_validation():
    CyclicType(5, 8, 1, 4)
    for bad in ((5, 1, 0, 0), (5, 4, 2, 2), (5, 4, 0, 2), (5, 6, 2, 4), (5, 4, 5, 1)):
        with pytest.raises(ValueError):
            CyclicType(*bad)


def test_weight_and_invariant_monomials():
    t = CyclicType(5, 8, 1, 4)
    mons = types.invariant_monomials(t, t.weight((5, 0, 0)))
    assert {Monomial(5, 0, 0), Monomial(0, 4, 1), Monomial(1, 0, 4), Monomial(3, 0, 2)} == set(mons)
    with pytest.raises(ValueError):
        t.weight((1, 1, 1))


def test_divisor_bound():
    assert types.divisor_bound(5, 13) == (13,)
    assert types.divisor_bound(5, 7) == ()
    assert 20 in types.divisor_bound(5, 10)


@pytest.mark.parametrize("d, n", [(4, 10), (5, 12), (6, 17), (7, 20), (8, 21), (9, 24)])
def test_filtered_table_sizes(d, n):
    assert len(types.classify(d)) == n


def test_unfiltered_quintic_keeps_the_reducible_type():
    rows = types.table_unfiltered(5)
    flagged = [f for f in rows if f.flags]
    assert len(rows) == 13
    assert [f.ctype.label for f in flagged] == ["4, (1, 3)"]
    assert types.FORCED_REDUCIBLE in flagged[0].flags


def test_every_family_is_invariant():
    for d in (4, 5, 6):
        for f in types.enumerate_types(d):
            assert len({f.ctype.weight(mo) for mo in f.monomials}) == 1


def test_dedup_is_idempotent():
    fams = types.dedup(types.enumerate_types(6))
    assert [f.key() for f in types.dedup(fams)] == [f.key() for f in fams]
    assert len({f.key() for f in fams}) == len(fams)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(PERMS))
def test_family_key_is_permutation_invariant(seed, perm):
    fams = types.dedup(types.enumerate_types(5))
    f = fams[seed % len(fams)]
    t = f.ctype
    moved = types._permute_support(f.monomials, perm)
    a, b = types._permute_exponents(t.m, t.a, t.b, perm)
    assert types.family_key(t.m, a, b, moved) == f.key()


def test_orders_divide_a_bound():
    for d in range(4, 10):
        for f in types.enumerate_types(d):
            assert types.divisor_bound(d, f.m)
            assert f.m <= d * (d - 1)


def test_degree_below_four():
    with pytest.raises(ValueError):
        types.enumerate_types(3)
