"""Characteristic subgroups and arithmetic predicates.

O_pi, the Fitting subgroup and the solvable radical are all computed from
normal closures of single conjugacy classes, memoised on the group.  A class
lies in O_pi(G) exactly when its normal closure is a pi-group, and in R(G)
exactly when its normal closure is solvable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from sympy import factorint, isprime

from .group import (
    FiniteGroup,
    NotInGroup,
    _from_elements,
    center,
    class_normal_closure,
    commutator,
    conjugacy_classes,
    derived_subgroup,
    is_normal,
    subgroup_from,
)
from .perm import Permutation, power


class NotPrime(ValueError):
    pass


class NotNormal(ValueError):
    pass


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")


@lru_cache(maxsize=None)
def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(n))) if n > 1 else ()


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_pi_number(n: int, primes: Iterable[int]) -> bool:
    primes = set(primes)
    return all(q in primes for q in prime_divisors(n))


def is_power_of(n: int, p: int) -> bool:
    return n == p_part(n, p)


@dataclass(frozen=True)
class PrimeSet:
    primes: frozenset

    def __init__(self, primes: Iterable[int]):
        ps = frozenset(int(p) for p in primes)
        if not ps:
            raise ValueError("prime set must be nonempty")
        for p in ps:
            _check_prime(p)
        object.__setattr__(self, "primes", ps)

    def __contains__(self, p) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(sorted(self.primes))

    @classmethod
    def complement(cls, G: FiniteGroup, p: int) -> PrimeSet | None:
        """Primes dividing |G| other than ``p``; None when there are none."""
        rest = [q for q in prime_divisors(G.order) if q != p]
        return cls(rest) if rest else None


@dataclass(frozen=True)
class PPartDecomposition:
    p: int
    p_part: Permutation
    p_prime_part: Permutation


def element_p_profile(x: Permutation, p: int) -> tuple[bool, bool, bool]:
    """(is_p_element, is_p_singular, is_p_regular); the identity is a p-element."""
    _check_prime(p)
    o = x.order
    return is_power_of(o, p), o % p == 0, o % p != 0


def p_part_decomposition(x: Permutation, p: int) -> PPartDecomposition:
    _check_prime(p)
    n = x.order
    n_p = p_part(n, p)
    n_q = n // n_p
    # x_p = x^(a n_q) with a n_q = 1 (mod n_p); x_p' = x^(b n_p) with b n_p = 1 (mod n_q)
    a = pow(n_q, -1, n_p) if n_p > 1 else 0
    b = pow(n_p, -1, n_q) if n_q > 1 else 0
    return PPartDecomposition(p, power(x, a * n_q), power(x, b * n_p))


def _class_union_subgroup(G: FiniteGroup, keep) -> FiniteGroup:
    members = []
    for k, c in enumerate(conjugacy_classes(G)):
        if keep(k, c):
            members.extend(c.members)
    return _from_elements(G.degree, members)


def o_pi(G: FiniteGroup, pi: PrimeSet | Iterable[int]) -> FiniteGroup:
    """Largest normal pi-subgroup of ``G``."""
    if not isinstance(pi, PrimeSet):
        pi = PrimeSet(pi)
    key = ("o_pi", pi.primes)
    cached = G._cache.get(key)
    if cached is not None:
        return cached

    def keep(k, c):
        # cheap filter first: a member of a pi-group is a pi-element
        if not is_pi_number(G.element_order(c.representative), pi.primes):
            return False
        # by Cauchy, all element orders are pi-numbers iff the order is
        return is_pi_number(class_normal_closure(G, k).order, pi.primes)

    # the union of qualifying classes is already the subgroup they generate
    H = _class_union_subgroup(G, keep)
    G._cache[key] = H
    return H


def o_p(G: FiniteGroup, p: int) -> FiniteGroup:
    return o_pi(G, PrimeSet([p]))


def o_p_prime(G: FiniteGroup, p: int) -> FiniteGroup:
    """Largest normal p'-subgroup."""
    _check_prime(p)
    comp = PrimeSet.complement(G, p)
    if comp is None:
        return _from_elements(G.degree, [G.identity])
    return o_pi(G, comp)


def fitting(G: FiniteGroup) -> FiniteGroup:
    cached = G._cache.get("fitting")
    if cached is None:
        seeds = []
        for p in prime_divisors(G.order):
            seeds.extend(o_p(G, p).generators)
        cached = G._cache["fitting"] = subgroup_from(G, seeds)
    return cached


def is_solvable(G: FiniteGroup) -> bool:
    cached = G._cache.get("solvable")
    if cached is None:
        H = G
        while not H.is_trivial:
            D = derived_subgroup(H)
            if D.order == H.order:
                break
            H = D
        cached = G._cache["solvable"] = H.is_trivial
    return cached


def solvable_radical(G: FiniteGroup) -> FiniteGroup:
    cached = G._cache.get("radical")
    if cached is None:
        cached = _class_union_subgroup(G, lambda k, c: is_solvable(class_normal_closure(G, k)))
        G._cache["radical"] = cached
    return cached


def p_group_prime(n: int) -> int | None:
    ps = prime_divisors(n)
    return ps[0] if len(ps) == 1 else None


def structure_predicates(G: FiniteGroup) -> tuple[bool, bool, int | None]:
    """(is_solvable, is_nilpotent, p when |G| is a power of a prime p)."""
    return is_solvable(G), fitting(G).order == G.order, p_group_prime(G.order)


def simplicity_predicates(G: FiniteGroup) -> tuple[bool, bool]:
    """(is_simple, is_quasisimple).  Quasisimplicity is tested without a quotient:
    G is perfect and every non-central class has normal closure G."""
    if G.is_trivial:
        raise ValueError("simplicity is undefined for the trivial group")
    classes = conjugacy_classes(G)
    simple = all(class_normal_closure(G, k).order == G.order for k in range(1, len(classes)))
    perfect = derived_subgroup(G).order == G.order
    Z = center(G)
    quasi = perfect and all(
        class_normal_closure(G, k).order == G.order
        for k, c in enumerate(classes)
        if c.representative not in Z
    )
    return simple, quasi


def is_central_modulo(G: FiniteGroup, x: Permutation, N: FiniteGroup) -> bool:
    """True iff [x, g] lies in the normal subgroup ``N`` for every generator g of G."""
    if x not in G:
        raise NotInGroup(f"{x} is not an element of {G!r}")
    if not is_normal(N, G):
        raise NotNormal("N is not a normal subgroup of G")
    return all(commutator(x, g) in N for g in G.generators)


def z_p_star(G: FiniteGroup, p: int) -> FiniteGroup:
    """Full preimage of Z(G / O_p'(G))."""
    key = ("zps", p)
    cached = G._cache.get(key)
    if cached is None:
        N = o_p_prime(G, p)
        members = [x for x in G.elements if all(commutator(x, g) in N for g in G.generators)]
        cached = G._cache[key] = _from_elements(G.degree, members)
    return cached


def primitive_prime_divisors(q: int, n: int) -> set[int]:
    """Primes dividing q^n - 1 but no q^m - 1 with 1 <= m < n."""
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    out = set()
    for r in prime_divisors(q**n - 1):
        if all((q**m - 1) % r for m in range(1, n)):
            out.add(r)
    return out
