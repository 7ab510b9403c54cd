"""Class-algebra combinatorics by direct counting.

Structure constants n(K, L, C) count pairs (a, b) in K x L with ab = c for a
fixed c in C.  Since b is determined by a, the count runs over K alone.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .group import (
    ConjugacyClass,
    FiniteGroup,
    class_index,
    commutator,
    conjugacy_classes,
)
from .perm import Permutation, compose, inverse


@dataclass(frozen=True)
class ClassProductDecomposition:
    left: int
    right: int
    terms: tuple[tuple[int, int], ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, m in self.terms if m)

    def multiplicity(self, k: int) -> int:
        return dict(self.terms).get(k, 0)

    def to_dict(self) -> dict:
        return {"left": self.left, "right": self.right, "terms": [list(t) for t in self.terms]}


@dataclass(frozen=True)
class CommutatorProfile:
    element: Permutation
    order_multiset: dict[int, int]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.order_multiset)

    @property
    def nonidentity_orders(self) -> frozenset[int]:
        return frozenset(o for o in self.order_multiset if o != 1)


def _class_pos(G: FiniteGroup, K: ConjugacyClass | int) -> int:
    if isinstance(K, int):
        return K
    return class_index(G)[K.representative]


def inverse_class_index(G: FiniteGroup, k: int) -> int:
    rep = conjugacy_classes(G)[k].representative
    return class_index(G)[inverse(rep)]


def inverse_class(G: FiniteGroup, K: ConjugacyClass | int) -> ConjugacyClass:
    return conjugacy_classes(G)[inverse_class_index(G, _class_pos(G, K))]


def structure_constant_count(G: FiniteGroup, K, L, C, c: Permutation | None = None) -> int:
    """n(K, L, C) at the canonical representative of C, or at ``c`` if given."""
    classes = conjugacy_classes(G)
    k, l, ci = (_class_pos(G, X) for X in (K, L, C))
    if c is None:
        c = classes[ci].representative
    elif class_index(G)[c] != ci:
        raise ValueError("c is not a member of C")
    Lm = classes[l].members
    # ab = c  <=>  b = a^-1 c
    return sum(1 for a in classes[k].members if compose(inverse(a), c) in Lm)


def class_product_decomposition(G: FiniteGroup, K, L) -> ClassProductDecomposition:
    k, l = _class_pos(G, K), _class_pos(G, L)
    classes = conjugacy_classes(G)
    cidx = class_index(G)
    # bucket every product by its class, then divide by the class size
    hits: Counter = Counter()
    Lm = classes[l].members
    rep_l = classes[l].representative
    for a in classes[k].members:
        hits[cidx[compose(a, rep_l)]] += 1
    # sum_c |{(a,b): ab=c}| over c in C equals |L| * hits[C] by L-conjugation symmetry
    terms = []
    for ci, h in sorted(hits.items()):
        total = h * len(Lm)
        size = classes[ci].size
        if total % size:
            raise ArithmeticError("class product count not divisible by class size")
        terms.append((ci, total // size))
    return ClassProductDecomposition(k, l, tuple(terms))


def commutator_profile(G: FiniteGroup, x: Permutation) -> CommutatorProfile:
    """Exact multiset of orders of [x, g] over all g in G."""
    G.require(x)
    cache = G._cache.setdefault("profiles", {})
    prof = cache.get(x)
    if prof is None:
        counts: Counter = Counter()
        for g in G.elements:
            counts[G.element_order(commutator(x, g))] += 1
        prof = cache[x] = CommutatorProfile(x, dict(sorted(counts.items())))
    return prof


def class_commutator_profile(G: FiniteGroup, k: int) -> CommutatorProfile:
    """Profile of the ``k``-th class representative, computed over its class.

    [x, g] = x^-1 x^g and each member of x^G is hit |C_G(x)| times, so the
    orders over G are those of x^-1 y for y in x^G, scaled by |G|/|x^G|.
    """
    cache = G._cache.setdefault("class_profiles", {})
    prof = cache.get(k)
    if prof is None:
        c = conjugacy_classes(G)[k]
        xi = inverse(c.representative)
        scale = G.order // c.size
        counts: Counter = Counter()
        for y in c.members:
            counts[G.element_order(compose(xi, y))] += scale
        prof = cache[k] = CommutatorProfile(c.representative, dict(sorted(counts.items())))
    return prof


def inverse_times_class_support(G: FiniteGroup, k: int) -> frozenset[int]:
    """Class indices making up K^-1 K for K the ``k``-th class."""
    cache = G._cache.setdefault("kinvk", {})
    s = cache.get(k)
    if s is None:
        c = conjugacy_classes(G)[k]
        xi = inverse(c.representative)
        cidx = class_index(G)
        s = cache[k] = frozenset(cidx[compose(xi, y)] for y in c.members)
    return s


def real_classes(G: FiniteGroup) -> list[int]:
    return [k for k in range(len(conjugacy_classes(G))) if inverse_class_index(G, k) == k]
