from collections import Counter

import pytest
from hypothesis import given, strategies as st

from commorder.perm import (
    DegreeMismatch,
    Permutation,
    compose,
    conjugate,
    from_cycles,
    inverse,
    order_and_cycle_type,
    power,
    to_cycles,
)


@st.composite
def perms(draw, degree=None):
    n = degree if degree is not None else draw(st.integers(1, 12))
    return Permutation([i + 1 for i in draw(st.permutations(range(n)))])


@st.composite
def perm_triples(draw):
    n = draw(st.integers(1, 12))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


def test_identity_left_unit():
    a = from_cycles(4, [[1, 3, 4]])
    assert compose(Permutation.identity(4), a) == a


def test_transposition_squared():
    t = from_cycles(2, [[1, 2]])
    assert compose(t, t) == Permutation.identity(2)


def test_left_to_right_convention():
    # apply (1 2) first: 1->2->3, 3->3->2, 2->1->1
    p = compose(from_cycles(3, [[1, 2]]), from_cycles(3, [[2, 3]]))
    assert p.images == (3, 1, 2)
    assert p.cycles() == [[1, 3, 2]]


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_inverse_examples():
    assert inverse(Permutation.identity(5)) == Permutation.identity(5)
    t = from_cycles(5, [[2, 4]])
    assert inverse(t) == t
    assert inverse(from_cycles(3, [[1, 2, 3]])) == from_cycles(3, [[1, 3, 2]])


def test_order_and_cycle_type_examples():
    assert order_and_cycle_type(Permutation.identity(5)) == (1, Counter({1: 5}))
    assert order_and_cycle_type(from_cycles(5, [[1, 2], [3, 4, 5]])) == (6, Counter({2: 1, 3: 1}))
    assert order_and_cycle_type(from_cycles(8, [list(range(1, 9))])) == (8, Counter({8: 1}))


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        from_cycles(3, [[1, 2], [2, 3]])


def test_cycle_io_roundtrip():
    p = from_cycles(7, [[2, 5, 3], [4, 7]])
    assert to_cycles(p) == [[2, 5, 3], [4, 7]]
    assert from_cycles(7, to_cycles(p)) == p


@given(perm_triples())
def test_associative(t):
    a, b, c = t
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms())
def test_double_inverse(a):
    assert inverse(inverse(a)) == a
    assert compose(a, inverse(a)).is_identity


@given(perms())
def test_order_is_first_return(a):
    o, ctype = order_and_cycle_type(a)
    assert sum(k * m for k, m in ctype.items()) == a.degree
    x, k = a, 1
    while not x.is_identity:
        x, k = compose(x, a), k + 1
    assert k == o


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_conjugation_preserves_cycle_type(pair):
    a, g = pair
    c = conjugate(a, g)
    assert c == compose(compose(inverse(g), a), g)
    assert order_and_cycle_type(c) == order_and_cycle_type(a)


@given(perms(), st.integers(-20, 20))
def test_power_matches_repeated_product(a, k):
    base = a if k >= 0 else inverse(a)
    x = Permutation.identity(a.degree)
    for _ in range(abs(k)):
        x = compose(x, base)
    assert power(a, k) == x


def test_operators_and_sign():
    a = from_cycles(4, [[1, 2, 3, 4]])
    assert a * ~a == Permutation.identity(4)
    assert a ** 4 == Permutation.identity(4)
    assert a.sign == -1 and (a * a).sign == 1
