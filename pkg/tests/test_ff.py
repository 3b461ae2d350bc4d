import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeaut import ff

F31 = ff.field_for(31)
F7_3 = ff.field_for(7, 3)


def elements(K):
    return st.integers(0, K.q - 1).map(K.decode)


@pytest.mark.parametrize("K", [F31, F7_3], ids=["F_31", "F_7^3"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(K, data):
    a, b, c = (data.draw(elements(K)) for _ in range(3))
    assert K.add(a, b) == K.add(b, a)
    assert K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c))
    assert K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c))
    assert K.sub(K.add(a, b), b) == a
    if not K.is_zero(a):
        assert K.mul(a, K.inv(a)) == K.one
        assert K.pow(a, K.q - 1) == K.one


def test_encode_roundtrip():
    for K in (F31, F7_3):
        assert all(K.encode(K.decode(n)) == n for n in range(K.q))


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        F7_3.inv(F7_3.zero)


def test_roots_of_unity():
    K = ff.field_for(41)
    for m in (2, 4, 5, 8, 10, 20, 40):
        x = ff.root_of_unity(K, m)
        assert K.pow(x, m) == K.one
        assert all(K.pow(x, m // r) != K.one for r in ff.prime_factors(m))
    with pytest.raises(ff.IncompatibleFieldError):
        ff.root_of_unity(K, 3)


def test_discrete_log():
    K = ff.field_for(101)
    g = K.from_int(2)
    for k in (0, 1, 7, 50, 99):
        x = K.pow(g, k)
        assert K.pow(g, ff.discrete_log(K, x)) == x


def test_select_prime():
    p = ff.select_prime(5, [2, 3, 4, 5, 8, 10, 13, 15, 16, 20])
    assert ff.is_prime(p)
    assert all((p - 1) % m == 0 for m in (2, 3, 4, 5, 8, 10, 13, 15, 16, 20))
    assert p > 5


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=2, max_size=7))
def test_factor_reconstructs(coeffs):
    K = ff.field_for(13)
    f = ff._trim(K, [K.from_int(c) for c in coeffs])
    if len(f) < 2:
        return
    prod = [K.one]
    for g, mult in ff.factor(K, f):
        assert ff.is_irreducible(K, g)
        for _ in range(mult):
            prod = ff.pmul(K, prod, g)
    assert ff.pmonic(K, f) == prod


def test_roots():
    K = ff.field_for(17)
    f = [K.from_int(c) for c in (6, K.p - 5, 1)]  # (x - 2)(x - 3)
    assert sorted(ff.roots(K, f)) == [2, 3]


def test_extension_field_contains_roots_of_unity():
    L = ff.field_for(11, 3)
    x = ff.root_of_unity(L, 7)
    assert L.pow(x, 7) == L.one and x != L.one


def test_is_prime():
    primes = [n for n in range(60) if ff.is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    rng = random.Random(0)
    for _ in range(20):
        n = rng.randrange(10**6, 10**7)
        assert ff.is_prime(n) == all(n % k for k in range(2, int(n**0.5) + 1))
