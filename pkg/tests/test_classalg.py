import random

import pytest

from commorder.classalg import (
    class_commutator_profile,
    class_product_decomposition,
    commutator_profile,
    inverse_class,
    inverse_class_index,
    inverse_times_class_support,
    real_classes,
    structure_constant_count,
)
from commorder.group import center, centralizer, class_index, conjugacy_classes
from commorder.perm import from_cycles

import oracles

PAIR_ORACLE = ["S3", "Q8", "S4", "A4", "D12", "SL(2,3)", "GL(2,3)", "C3:Q8", "F20", "A5"]
MASS = ["S4", "A5", "GL(2,3)", "SL(2,3)", "PSL(2,7)", "F21", "S3 x S3", "Q16", "SD16",
        "D20", "A4 x C2", "S5", "C3:Q8", "PGL(2,7)", "SL(2,5)"]


def _decomp(G, k, l):
    return dict(class_product_decomposition(G, k, l).terms)


def test_inverse_class_examples(named):
    S3 = named("S3")
    classes = conjugacy_classes(S3)
    inv = next(c for c in classes if c.size == 3)
    assert inverse_class(S3, inv) == inv
    three = next(c for c in classes if c.size == 2)
    assert inverse_class(S3, three) == three
    P = named("PSL(2,7)")
    sevens = [k for k, c in enumerate(conjugacy_classes(P)) if P.element_order(c.representative) == 7]
    assert len(sevens) == 2
    assert inverse_class_index(P, sevens[0]) == sevens[1]


def test_identity_class_times_l(named):
    G = named("S4")
    for l, c in enumerate(conjugacy_classes(G)):
        assert class_product_decomposition(G, 0, l).terms == ((l, 1),)


def test_s3_transpositions(named):
    S3 = named("S3")
    k = next(i for i, c in enumerate(conjugacy_classes(S3)) if c.size == 3)
    three = next(i for i, c in enumerate(conjugacy_classes(S3)) if c.size == 2)
    assert _decomp(S3, inverse_class_index(S3, k), k) == {0: 3, three: 3}
    assert three in real_classes(S3)


def test_q8_i_class(named):
    Q8 = named("Q8")
    z = next(g for g in center(Q8) if not g.is_identity)
    zc = class_index(Q8)[z]
    for k, c in enumerate(conjugacy_classes(Q8)):
        if c.size == 2:
            assert _decomp(Q8, inverse_class_index(Q8, k), k) == {0: 2, zc: 2}


def test_s4_transposition_squared(named):
    S4 = named("S4")
    idx = class_index(S4)
    t = idx[from_cycles(4, [[1, 2]])]
    dd = idx[from_cycles(4, [[1, 2], [3, 4]])]
    assert structure_constant_count(S4, t, t, dd) == 2
    assert structure_constant_count(S4, t, t, t) == 0


@pytest.mark.parametrize("name", PAIR_ORACLE)
def test_counts_match_pair_scan(named, name):
    G = named(name)
    classes = conjugacy_classes(G)
    members = [list(map(tuple, c.members)) for c in classes]
    for k in range(len(classes)):
        for l in range(len(classes)):
            dec = _decomp(G, k, l)
            for ci, c in enumerate(classes):
                ref = oracles.class_product_pairs(members[k], members[l], tuple(c.representative))
                assert dec.get(ci, 0) == ref
                assert structure_constant_count(G, k, l, ci) == ref


@pytest.mark.parametrize("name", MASS)
def test_mass_balance_and_identity_term(named, name):
    G = named(name)
    classes = conjugacy_classes(G)
    for k, K in enumerate(classes):
        for l, L in enumerate(classes):
            dec = class_product_decomposition(G, k, l)
            assert sum(m * classes[c].size for c, m in dec.terms) == K.size * L.size
        assert _decomp(G, inverse_class_index(G, k), k)[0] == K.size
        assert inverse_class(G, k).size == K.size


@pytest.mark.parametrize("name", ["S4", "GL(2,3)", "A5", "PSL(2,7)"])
def test_representative_independence(named, name):
    G = named(name)
    rng = random.Random(7)
    classes = conjugacy_classes(G)
    for k in range(len(classes)):
        for l in range(len(classes)):
            for ci, C in enumerate(classes):
                base = structure_constant_count(G, k, l, ci)
                for c in rng.sample(sorted(C.members), min(3, C.size)):
                    assert structure_constant_count(G, k, l, ci, c=c) == base


def test_wrong_representative_rejected(named):
    G = named("S4")
    with pytest.raises(ValueError):
        structure_constant_count(G, 1, 1, 0, c=conjugacy_classes(G)[1].representative)


@pytest.mark.parametrize("name", ["GL(2,3)", "C3:Q8", "A5", "S4", "Q16", "F21"])
def test_profile_matches_full_scan(named, name):
    G = named(name)
    Gt = [tuple(g) for g in G]
    classes = conjugacy_classes(G)
    for k, c in enumerate(classes):
        x = c.representative
        ref = oracles.commutator_orders(Gt, tuple(x))
        full = commutator_profile(G, x)
        assert full.order_multiset == dict(ref)
        assert class_commutator_profile(G, k).order_multiset == dict(ref)
        assert sum(ref.values()) == G.order
        assert ref[1] == centralizer(G, x).order

        # nonidentity orders = orders of the classes in K^-1 K other than 1
        support = inverse_times_class_support(G, k)
        orders = {G.element_order(classes[j].representative) for j in support} - {1}
        assert orders == full.nonidentity_orders
        ref_set = oracles.inverse_times([tuple(m) for m in c.members])
        assert {j for j, d in enumerate(classes) if tuple(d.representative) in ref_set} == support

        # n(K^-1, K, C) > 0 iff C inside K^-1 K
        dec = _decomp(G, inverse_class_index(G, k), k)
        assert {j for j, m in dec.items() if m} == support


def test_profile_examples(named):
    G = named("GL(2,3)")
    z = next(g for g in center(G) if not g.is_identity)
    assert commutator_profile(G, z).order_multiset == {1: G.order}
    x = next(g for g in G if g.order == 8)
    assert commutator_profile(G, x).support == {1, 4, 6}
    C = named("C3:Q8")
    y = next(g for g in C if g.order == 12)
    assert commutator_profile(C, y).support == {1, 6}


@pytest.mark.parametrize("name", ["S3", "S4", "S5", "S6"])
def test_symmetric_groups_are_real(named, name):
    G = named(name)
    assert real_classes(G) == list(range(len(conjugacy_classes(G))))


def test_a4_three_cycles_not_real(named):
    A4 = named("A4")
    real = set(real_classes(A4))
    threes = [k for k, c in enumerate(conjugacy_classes(A4)) if A4.element_order(c.representative) == 3]
    assert threes and not real & set(threes)
    assert 0 in real


def test_decomposition_json_shape(named):
    d = class_product_decomposition(named("S3"), 2, 2).to_dict()
    assert set(d) == {"left", "right", "terms"}
    assert all(len(t) == 2 for t in d["terms"])
