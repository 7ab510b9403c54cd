"""Naive reference computations used as independent oracles.

Everything here works on plain tuples of 0-based images and never calls the
library's closure, class, series or character code.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations


def mul(a, b):
    # left-to-right: apply a, then b
    return tuple(b[i] for i in a)


def inv(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def order(a):
    e = tuple(range(len(a)))
    x, n = a, 1
    while x != e:
        x, n = mul(x, a), n + 1
    return n


def comm(x, g):
    return mul(inv(x), mul(inv(g), mul(x, g)))


def closure(gens, degree):
    e = tuple(range(degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def classes(elements):
    elements = list(elements)
    left = set(elements)
    out = []
    for x in sorted(elements):
        if x not in left:
            continue
        cl = {mul(inv(g), mul(x, g)) for g in elements}
        left -= cl
        out.append(frozenset(cl))
    return out


def prime_factors(n):
    ps, d = [], 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ps.append(n)
    return ps


def is_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def normal_subgroups(elements):
    """Every normal subgroup, found as a union of classes closed under products."""
    cls = classes(elements)
    e = tuple(range(len(next(iter(elements)))))
    ident = next(c for c in cls if e in c)
    others = [c for c in cls if c is not ident]
    out = []
    for r in range(len(others) + 1):
        for pick in combinations(others, r):
            N = set(ident).union(*pick)
            n = len(N)
            if len(elements) % n:
                continue
            if all(mul(a, b) in N for a in N for b in N):
                out.append(frozenset(N))
    return out


def derived(H):
    H = list(H)
    comms = {comm(a, b) for a in H for b in H}
    return closure(list(comms), len(H[0]))


def solvable(H):
    H = set(H)
    while len(H) > 1:
        D = derived(H)
        if len(D) == len(H):
            return False
        H = D
    return True


def nilpotent(H):
    # unique Sylow for every prime
    n = len(H)
    for p in prime_factors(n):
        pp = 1
        while n % (pp * p) == 0:
            pp *= p
        if sum(1 for h in H if is_power(order(h), p)) != pp:
            return False
    return True


def largest(subgroups, pred):
    good = [N for N in subgroups if pred(N)]
    best = max(good, key=len)
    assert all(N <= best for N in good), "largest normal subgroup with property is not unique"
    return best


def center(elements):
    return {z for z in elements if all(mul(z, g) == mul(g, z) for g in elements)}


def class_product_pairs(K, L, c):
    """n(K, L, C) by scanning every pair in K x L."""
    return sum(1 for a in K for b in L if mul(a, b) == c)


def inverse_times(K):
    return {mul(inv(a), b) for a in K for b in K}


def commutator_orders(elements, x):
    return Counter(order(comm(x, g)) for g in elements)


def ppd(q, n):
    """Primes dividing q^n - 1 but no q^m - 1 for m < n, by trial division."""
    return {r for r in prime_factors(q**n - 1) if all((q**m - 1) % r for m in range(1, n))}
