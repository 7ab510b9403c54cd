"""Permutations of {1..n} with left-to-right composition.

Internally a permutation is a tuple of 0-based images, so ``p[i]`` is the
image of point ``i + 1`` minus one.  All public I/O (cycle notation, the
``images`` property) is 1-based.  ``a * b`` means "apply ``a``, then ``b``".
"""

from __future__ import annotations

from collections import Counter
from math import gcd
from typing import Iterable, Sequence


class DegreeMismatch(ValueError):
    """Two permutations on different point sets were combined."""


class Permutation(tuple):
    """An immutable bijection of {1..degree}.

    Ordering and hashing are those of the underlying 0-based image tuple, so
    sorting permutations is lexicographic on image sequences.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        imgs = tuple(int(i) - 1 for i in images)
        n = len(imgs)
        if n == 0:
            raise ValueError("degree must be positive")
        if sorted(imgs) != list(range(n)):
            raise ValueError(f"not a bijection of 1..{n}: {[i + 1 for i in imgs]}")
        return tuple.__new__(cls, imgs)

    @classmethod
    def _raw(cls, zero_based: Iterable[int]) -> Permutation:
        # trusted constructor for internal hot loops: no validation
        return tuple.__new__(cls, zero_based)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise ValueError("degree must be positive")
        return tuple.__new__(cls, range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        """Build from 1-based cycles, e.g. ``from_cycles(5, [[1, 2, 3], [4, 5]])``."""
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} outside 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return tuple.__new__(cls, img)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(i + 1 for i in self)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        out = []
        seen = [False] * len(self)
        for start in range(len(self)):
            if seen[start] or self[start] == start:
                seen[start] = True
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self[i]
            out.append(cyc)
        return out

    def cycle_lengths(self) -> list[int]:
        lengths = []
        seen = [False] * len(self)
        for start in range(len(self)):
            if seen[start]:
                continue
            k = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self[i]
                k += 1
            lengths.append(k)
        return lengths

    @property
    def order(self) -> int:
        o = 1
        for k in self.cycle_lengths():
            o = o * k // gcd(o, k)
        return o

    @property
    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self))

    @property
    def sign(self) -> int:
        return -1 if (len(self) - len(self.cycle_lengths())) % 2 else 1

    def __repr__(self) -> str:
        cyc = self.cycles()
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Permutation<{self.degree}>{body}"

    __str__ = __repr__


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    if len(a) != len(b):
        raise DegreeMismatch(f"degrees {len(a)} and {len(b)} differ")
    return tuple.__new__(Permutation, [b[i] for i in a])


def inverse(a: Permutation) -> Permutation:
    inv = [0] * len(a)
    for i, v in enumerate(a):
        inv[v] = i
    return tuple.__new__(Permutation, inv)


def power(a: Permutation, k: int) -> Permutation:
    if k < 0:
        a, k = inverse(a), -k
    result = Permutation.identity(len(a))
    base = a
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(x: Permutation, g: Permutation) -> Permutation:
    """``x^g = g^-1 x g``."""
    if len(x) != len(g):
        raise DegreeMismatch(f"degrees {len(x)} and {len(g)} differ")
    # (g^-1 x g)(g(i)) = g(x(i))
    out = [0] * len(x)
    for i, v in enumerate(x):
        out[g[i]] = g[v]
    return tuple.__new__(Permutation, out)


def order_and_cycle_type(a: Permutation) -> tuple[int, Counter]:
    """Order and cycle-length multiset (fixed points count as 1-cycles)."""
    lengths = a.cycle_lengths()
    o = 1
    for k in lengths:
        o = o * k // gcd(o, k)
    return o, Counter(lengths)


def to_cycles(a: Permutation) -> list[list[int]]:
    return a.cycles()


def from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    return Permutation.from_cycles(degree, cycles)
