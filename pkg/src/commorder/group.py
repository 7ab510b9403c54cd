"""Fully enumerated permutation groups.

A :class:`FiniteGroup` holds every element, sorted lexicographically on image
sequences.  That order fixes canonical class representatives and makes every
derived listing deterministic.  Subgroups are plain ``FiniteGroup`` values on
the same degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .perm import DegreeMismatch, Permutation, compose, conjugate, inverse

DEFAULT_CAP = 100_000

_new = tuple.__new__


class CapExceeded(RuntimeError):
    """Closure grew past the element cap; the group is out of desk scale."""

    def __init__(self, cap: int, partial: int):
        super().__init__(f"group closure exceeded cap {cap} (reached {partial} elements)")
        self.cap = cap
        self.partial = partial


class NotInGroup(ValueError):
    pass


class _Closure:
    """Incremental subgroup closure (Dimino's coset method)."""

    def __init__(self, degree: int, cap: int = DEFAULT_CAP):
        self.degree = degree
        self.cap = cap
        self.identity = Permutation.identity(degree)
        self.elements: set[Permutation] = {self.identity}
        self.gens: list[Permutation] = []

    def add(self, s: Permutation) -> bool:
        if len(s) != self.degree:
            raise DegreeMismatch(f"generator of degree {len(s)} in a degree-{self.degree} group")
        elems = self.elements
        if s in elems:
            return False
        self.gens.append(s)
        old = list(elems)
        reps = [self.identity]
        gens = self.gens
        cap = self.cap
        i = 0
        while i < len(reps):
            r = reps[i]
            for t in gens:
                e = _new(Permutation, [t[k] for k in r])
                if e in elems:
                    continue
                reps.append(e)
                for h in old:
                    elems.add(_new(Permutation, [e[k] for k in h]))
                if len(elems) > cap:
                    raise CapExceeded(cap, len(elems))
            i += 1
        return True


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    members: frozenset
    size: int

    def __contains__(self, g) -> bool:
        return g in self.members

    def __iter__(self):
        return iter(sorted(self.members))


class FiniteGroup:
    """A permutation group with all elements enumerated.

    Treat instances as immutable.  Expensive derived data (classes, element
    orders, normal closures of class representatives) is memoised in
    ``_cache``.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Iterable[Permutation], name: str | None = None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements: tuple[Permutation, ...] = tuple(sorted(elements))
        self._set = frozenset(self.elements)
        self.name = name
        self._cache: dict = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.degree, self._set))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{label} order={self.order} degree={self.degree}>"

    def issubset(self, other: FiniteGroup) -> bool:
        return self._set <= other._set

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    @property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def element_order(self, g: Permutation) -> int:
        orders = self._cache.get("orders")
        if orders is None:
            orders = self._cache["orders"] = {}
        o = orders.get(g)
        if o is None:
            o = orders[g] = g.order
        return o

    @property
    def exponent(self) -> int:
        from math import lcm
        e = 1
        for c in conjugacy_classes(self):
            e = lcm(e, self.element_order(c.representative))
        return e

    def require(self, g: Permutation) -> None:
        if g not in self._set:
            raise NotInGroup(f"{g} is not an element of {self!r}")


def _from_closure(c: _Closure, name: str | None = None) -> FiniteGroup:
    return FiniteGroup(c.degree, c.gens, c.elements, name)


def _from_elements(degree: int, elements: Iterable[Permutation], name: str | None = None) -> FiniteGroup:
    """Wrap a set already known to be a subgroup, picking a greedy generating set."""
    elems = sorted(elements)
    c = _Closure(degree, cap=max(len(elems), 1))
    for e in elems:
        if e not in c.elements:
            c.add(e)
    if len(c.elements) != len(elems):
        raise ValueError("element set is not a subgroup")
    return _from_closure(c, name)


def generate(degree: int, generators: Sequence[Permutation], cap: int = DEFAULT_CAP,
             name: str | None = None) -> FiniteGroup:
    """Close ``generators`` under multiplication.

    Raises :class:`CapExceeded` (carrying the partial count) when the group
    has more than ``cap`` elements.
    """
    if not generators:
        raise ValueError("at least one generator is required")
    if cap < 1:
        raise ValueError("cap must be positive")
    c = _Closure(degree, cap)
    for g in generators:
        if len(g) != degree:
            raise DegreeMismatch(f"generator {g} does not have degree {degree}")
        c.add(g)
    if len(c.elements) > cap:
        raise CapExceeded(cap, len(c.elements))
    return FiniteGroup(degree, tuple(generators), c.elements, name)


def trivial_group(degree: int) -> FiniteGroup:
    e = Permutation.identity(degree)
    return FiniteGroup(degree, (), (e,))


def commutator(x: Permutation, g: Permutation) -> Permutation:
    """``[x, g] = x^-1 g^-1 x g`` read left to right."""
    return compose(inverse(x), conjugate(x, g))


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Classes ordered by (size, representative); the identity class is first."""
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    gens = G.generators
    assigned: set[Permutation] = set()
    classes = []
    for x in G.elements:
        if x in assigned:
            continue
        orbit = [x]
        assigned.add(x)
        i = 0
        while i < len(orbit):
            y = orbit[i]
            for g in gens:
                z = conjugate(y, g)
                if z not in assigned:
                    assigned.add(z)
                    orbit.append(z)
            i += 1
        # x is the first unassigned element in sorted order, hence the class minimum
        classes.append(ConjugacyClass(x, frozenset(orbit), len(orbit)))
    classes.sort(key=lambda c: (c.size, c.representative))
    G._cache["classes"] = classes
    return classes


def class_index(G: FiniteGroup) -> dict[Permutation, int]:
    """Map every element to the position of its class in :func:`conjugacy_classes`."""
    idx = G._cache.get("class_index")
    if idx is None:
        idx = {}
        for i, c in enumerate(conjugacy_classes(G)):
            for m in c.members:
                idx[m] = i
        G._cache["class_index"] = idx
    return idx


def class_of(G: FiniteGroup, x: Permutation) -> int:
    G.require(x)
    return class_index(G)[x]


def centralizer(G: FiniteGroup, x: Permutation) -> FiniteGroup:
    G.require(x)
    members = [g for g in G.elements if compose(g, x) == compose(x, g)]
    return _from_elements(G.degree, members)


def center(G: FiniteGroup) -> FiniteGroup:
    cached = G._cache.get("center")
    if cached is None:
        gens = G.generators
        members = [z for z in G.elements if all(compose(z, g) == compose(g, z) for g in gens)]
        cached = G._cache["center"] = _from_elements(G.degree, members)
    return cached


def subgroup_from(G: FiniteGroup, seeds: Iterable[Permutation]) -> FiniteGroup:
    """Smallest subgroup of ``G`` containing ``seeds`` (trivial for no seeds)."""
    c = _Closure(G.degree, cap=max(G.order, 1))
    for s in seeds:
        G.require(s)
        c.add(s)
    return _from_closure(c)


def _normal_closure_elements(G: FiniteGroup, seeds: Iterable[Permutation]) -> _Closure:
    c = _Closure(G.degree, cap=max(G.order, 1))
    for s in seeds:
        c.add(s)
    i = 0
    while i < len(c.gens):
        h = c.gens[i]
        for g in G.generators:
            y = conjugate(h, g)
            if y not in c.elements:
                c.add(y)
        i += 1
    return c


def normal_closure(G: FiniteGroup, seeds: Iterable[Permutation]) -> FiniteGroup:
    """Smallest normal subgroup of ``G`` containing ``seeds``."""
    seeds = list(seeds)
    for s in seeds:
        G.require(s)
    return _from_closure(_normal_closure_elements(G, seeds))


def class_normal_closure(G: FiniteGroup, k: int) -> FiniteGroup:
    """Memoised normal closure of the ``k``-th conjugacy class."""
    cache = G._cache.setdefault("class_ncl", {})
    H = cache.get(k)
    if H is None:
        H = cache[k] = normal_closure(G, [conjugacy_classes(G)[k].representative])
    return H


def derived_subgroup(G: FiniteGroup) -> FiniteGroup:
    cached = G._cache.get("derived")
    if cached is None:
        gens = G.generators
        seeds = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        cached = G._cache["derived"] = normal_closure(G, seeds)
    return cached


def is_normal(N: FiniteGroup, G: FiniteGroup) -> bool:
    """True iff ``N`` is a normal subgroup of ``G``."""
    if not N.issubset(G):
        return False
    return all(conjugate(n, g) in N for n in N.generators for g in G.generators)


def group_from_spec(spec: dict, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a group from ``{"name", "degree", "generators": [cycles, ...]}``."""
    degree = int(spec["degree"])
    gens = [Permutation.from_cycles(degree, cyc) for cyc in spec["generators"]]
    return generate(degree, gens, cap=cap, name=spec.get("name"))


def group_to_spec(G: FiniteGroup) -> dict:
    return {
        "name": G.name or "",
        "degree": G.degree,
        "generators": [g.cycles() for g in G.generators],
    }
