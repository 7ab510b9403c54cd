"""Named desk-scale groups and constructors.

Matrix groups of dimension 2 act on nonzero column vectors (GL, SL) or on
the projective line (PSL, PGL, degree q + 1, with the point at infinity
last).  The corpus manifest shipped in ``data/corpus.json`` lists the groups
the verification suites sweep by default.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import gcd
from pathlib import Path

from .group import DEFAULT_CAP, CapExceeded, FiniteGroup, generate, group_from_spec
from .perm import Permutation

SUPPORTED_FIELDS = (2, 3, 4, 5, 7, 8, 11, 13)
MATRIX_KINDS = ("GL", "SL", "PSL", "PGL")


class UnknownGroup(KeyError):
    pass


class SingularMatrix(ValueError):
    pass


# -- small finite fields ---------------------------------------------------

class GF:
    """GF(q) for the supported q; elements are the integers 0..q-1.

    For q = 4, 8 an element is a bit-vector polynomial reduced by
    x^2 + x + 1 or x^3 + x + 1.
    """

    _MODULI = {4: 0b111, 8: 0b1011}

    def __init__(self, q: int):
        if q not in SUPPORTED_FIELDS:
            raise ValueError(f"unsupported field size {q}")
        self.q = q
        self.prime = q in (2, 3, 5, 7, 11, 13)
        if self.prime:
            self._mul = [[(a * b) % q for b in range(q)] for a in range(q)]
            self._add = [[(a + b) % q for b in range(q)] for a in range(q)]
        else:
            mod = self._MODULI[q]
            bits = q.bit_length() - 1

            def mul(a, b):
                r = 0
                while b:
                    if b & 1:
                        r ^= a
                    b >>= 1
                    a <<= 1
                    if a >> bits:
                        a ^= mod
                return r

            self._mul = [[mul(a, b) for b in range(q)] for a in range(q)]
            self._add = [[a ^ b for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)
        self.primitive = next(a for a in range(2 if q > 2 else 1, q) if self._mult_order(a) == q - 1)

    def _mult_order(self, a: int) -> int:
        k, x = 1, a
        while x != 1:
            x = self._mul[x][a]
            k += 1
        return k

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return next(b for b in range(self.q) if self._add[a][b] == 0)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]


def _det(F: GF, m) -> int:
    (a, b), (c, d) = m
    return F.add(F.mul(a, d), F.neg(F.mul(b, c)))


def _standard_generators(F: GF, kind: str):
    one, zero = 1, 0
    w = F.primitive
    gens = [((one, one), (zero, one)), ((one, zero), (one, one)), ((w, zero), (zero, F.inv(w)))]
    if kind in ("GL", "PGL"):
        gens.append(((w, zero), (zero, one)))
    return gens


def matrix_to_permutation(q: int, kind: str, generators=None, dimension: int = 2,
                          cap: int = DEFAULT_CAP, name: str | None = None) -> FiniteGroup:
    """Permutation group generated by 2x2 matrices over GF(q).

    ``generators`` are nested row sequences of field elements (integers in
    0..q-1); the standard generating set of ``kind`` is used when omitted.
    """
    if dimension != 2:
        raise ValueError("only dimension 2 is supported")
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    F = GF(q)
    mats = [tuple(tuple(int(v) for v in row) for row in m)
            for m in (generators if generators is not None else _standard_generators(F, kind))]
    for m in mats:
        d = _det(F, m)
        if d == 0:
            raise SingularMatrix(f"{m} is singular over GF({q})")
        if kind in ("SL", "PSL") and d != 1:
            raise ValueError(f"{m} has determinant {d}, not 1")

    if kind in ("GL", "SL"):
        points = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
        norm = lambda v: v  # noqa: E731
    else:
        points = [(a, 1) for a in range(q)] + [(1, 0)]

        def norm(v):
            a, b = v
            if b:
                return (F.mul(a, F.inv(b)), 1)
            return (1, 0)
    index = {pt: i for i, pt in enumerate(points)}

    perms = []
    for (a, b), (c, d) in mats:
        img = []
        for x, y in points:
            v = (F.add(F.mul(a, x), F.mul(b, y)), F.add(F.mul(c, x), F.mul(d, y)))
            img.append(index[norm(v)])
        perms.append(Permutation._raw(img))
    return generate(len(points), perms, cap=cap, name=name or f"{kind}(2,{q})")


def classical_order(kind: str, q: int) -> int:
    gl = (q * q - 1) * (q * q - q)
    return {
        "GL": gl,
        "SL": gl // (q - 1),
        "PGL": gl // (q - 1),
        "PSL": gl // (q - 1) // gcd(2, q - 1),
    }[kind]


# -- small constructors -----------------------------------------------------

def extend_degree(p: Permutation, degree: int, offset: int = 0) -> Permutation:
    """Embed ``p`` in a larger point set, shifted by ``offset`` and fixing the rest."""
    if offset + p.degree > degree:
        raise ValueError("target degree too small")
    img = list(range(degree))
    for i, v in enumerate(p):
        img[i + offset] = v + offset
    return Permutation._raw(img)


def cyclic(n: int) -> FiniteGroup:
    return generate(n, [Permutation._raw([(i + 1) % n for i in range(n)])], name=f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n on n points."""
    if n < 3:
        raise ValueError("dihedral groups need n >= 3")
    r = Permutation._raw([(i + 1) % n for i in range(n)])
    s = Permutation._raw([(-i) % n for i in range(n)])
    return generate(n, [r, s], name=f"D{2 * n}")


def _dicyclic_regular(m: int) -> tuple[Permutation, Permutation]:
    """Right-regular images of a, b in <a, b | a^2m, b^2 = a^m, a^b = a^-1>."""
    n = 2 * m
    elems = [(i, j) for j in range(2) for i in range(n)]
    idx = {e: k for k, e in enumerate(elems)}

    def mul(u, v):
        (i, j), (k, l) = u, v
        if j == 0:
            return ((i + k) % n, l)
        if l == 0:
            return ((i - k) % n, 1)
        return ((i - k + m) % n, 0)

    a = Permutation._raw([idx[mul(e, (1, 0))] for e in elems])
    b = Permutation._raw([idx[mul(e, (0, 1))] for e in elems])
    return a, b


def quaternion(order: int) -> FiniteGroup:
    a, b = _dicyclic_regular(order // 4)
    return generate(order, [a, b], name=f"Q{order}")


def semidihedral16() -> FiniteGroup:
    a = Permutation._raw([(i + 1) % 8 for i in range(8)])
    b = Permutation._raw([(3 * i) % 8 for i in range(8)])
    return generate(8, [a, b], name="SD16")


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return generate(1, [Permutation.identity(1)], name="S1")
    gens = [Permutation.from_cycles(n, [[1, 2]]), Permutation.from_cycles(n, [list(range(1, n + 1))])]
    return generate(n, gens, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return generate(max(n, 1), [Permutation.identity(max(n, 1))], name=f"A{n}")
    gens = [Permutation.from_cycles(n, [[1, 2, i]]) for i in range(3, n + 1)]
    return generate(n, gens, name=f"A{n}")


def affine(p: int, mult: int, name: str) -> FiniteGroup:
    t = Permutation._raw([(i + 1) % p for i in range(p)])
    m = Permutation._raw([(mult * i) % p for i in range(p)])
    return generate(p, [t, m], name=name)


def c3_q8() -> FiniteGroup:
    """C3 x| Q8 with Q8 acting on C3 through its quotient by <j>.

    Realised as {(s, u) in S3 x Q8 : sign(s) = +1 iff u in <j>} on 3 + 8
    points.  Order 24, centre of order 2, and (a, j) generates a normal
    cyclic subgroup of order 12.
    """
    i, j = _dicyclic_regular(2)
    t = Permutation.from_cycles(3, [[1, 2]])
    a = Permutation.from_cycles(3, [[1, 2, 3]])
    gens = [
        _join(a, Permutation.identity(8)),
        _join(t, i),
        _join(Permutation.identity(3), j),
    ]
    return generate(11, gens, name="C3:Q8")


def _join(a: Permutation, b: Permutation) -> Permutation:
    return Permutation._raw(list(a) + [v + len(a) for v in b])


def direct_product(A: FiniteGroup, B: FiniteGroup, cap: int = DEFAULT_CAP,
                   name: str | None = None) -> FiniteGroup:
    """A x B acting on disjoint point sets of sizes deg(A) and deg(B)."""
    if A.order * B.order > cap:
        raise CapExceeded(cap, A.order * B.order)
    n = A.degree + B.degree
    gens = [_join(a, Permutation.identity(B.degree)) for a in A.generators]
    gens += [_join(Permutation.identity(A.degree), b) for b in B.generators]
    if not gens:
        gens = [Permutation.identity(n)]
    return generate(n, gens, cap=cap, name=name or f"{A.name} x {B.name}")


# -- names -------------------------------------------------------------------

_MATRIX_RE = re.compile(r"^(GL|SL|PSL|PGL)\(2,(\d+)\)$")


def _builtin(name: str, cap: int) -> FiniteGroup:
    G = _construct(name, cap)
    # the small constructors close at most a few thousand elements, so checking afterwards is enough
    if G.order > cap:
        raise CapExceeded(cap, G.order)
    return G


def _construct(name: str, cap: int) -> FiniteGroup:
    if name == "Q8":
        return quaternion(8)
    if name == "Q16":
        return quaternion(16)
    if name == "SD16":
        return semidihedral16()
    if name == "F20":
        return affine(5, 2, "F20")
    if name == "F21":
        return affine(7, 2, "F21")
    if name == "C3:Q8":
        return c3_q8()
    m = re.fullmatch(r"C(\d+)", name)
    if m and 1 <= int(m[1]) <= 36:
        return cyclic(int(m[1]))
    m = re.fullmatch(r"D(\d+)", name)
    if m and int(m[1]) % 2 == 0 and 3 <= int(m[1]) // 2 <= 18:
        return dihedral(int(m[1]) // 2)
    m = re.fullmatch(r"S(\d+)", name)
    if m and 1 <= int(m[1]) <= 7:
        return symmetric(int(m[1]))
    m = re.fullmatch(r"A(\d+)", name)
    if m and 3 <= int(m[1]) <= 7:
        return alternating(int(m[1]))
    m = _MATRIX_RE.match(name)
    if m and int(m[2]) in SUPPORTED_FIELDS:
        return matrix_to_permutation(int(m[2]), m[1], cap=cap, name=name)
    raise UnknownGroup(name)


def _name_parts(name: str) -> list[str]:
    key = name.replace(" ", "")
    return key.split("x") if "x" in key else [key]


def _known_builtin(name: str) -> bool:
    if name in ("Q8", "Q16", "SD16", "F20", "F21", "C3:Q8"):
        return True
    m = re.fullmatch(r"([CDSA])(\d+)", name)
    if m:
        n = int(m[2])
        return {"C": 1 <= n <= 36, "D": n % 2 == 0 and 3 <= n // 2 <= 18,
                "S": 1 <= n <= 7, "A": 3 <= n <= 7}[m[1]]
    m = _MATRIX_RE.match(name)
    return bool(m) and int(m[2]) in SUPPORTED_FIELDS


def check_name(name: str) -> None:
    """Raise UnknownGroup unless ``name`` is buildable; builds nothing."""
    for part in _name_parts(name):
        if not _known_builtin(part):
            raise UnknownGroup(name)


def make_named_group(name: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a catalog group by name; ``"A x B"`` builds a direct product."""
    groups = [_builtin(p, cap) for p in _name_parts(name)]
    G = groups[0]
    for H in groups[1:]:
        G = direct_product(G, H, cap=cap)
    G.name = name
    return G


# -- corpus manifest ---------------------------------------------------------

@dataclass
class GroupSpecEntry:
    name: str
    expected_order: int
    builtin: str | None = None
    product: list[str] | None = None
    degree: int | None = None
    generators: list | None = None
    lie_characteristics: list[int] = field(default_factory=list)
    almost_simple: bool = False

    @classmethod
    def from_dict(cls, d: dict) -> GroupSpecEntry:
        known = {k: d[k] for k in cls.__dataclass_fields__ if k in d}
        entry = cls(**known)
        if sum(x is not None for x in (entry.builtin, entry.product, entry.generators)) != 1:
            raise ValueError(f"entry {entry.name!r} needs exactly one of builtin/product/generators")
        return entry

    def to_dict(self) -> dict:
        d = {"name": self.name, "expected_order": self.expected_order}
        for k in ("builtin", "product", "degree", "generators"):
            if getattr(self, k) is not None:
                d[k] = getattr(self, k)
        if self.lie_characteristics:
            d["lie_characteristics"] = self.lie_characteristics
        if self.almost_simple:
            d["almost_simple"] = True
        return d

    def build(self, cap: int = DEFAULT_CAP) -> FiniteGroup:
        if self.builtin is not None:
            G = make_named_group(self.builtin, cap=cap)
        elif self.product is not None:
            G = make_named_group(" x ".join(self.product), cap=cap)
        else:
            G = group_from_spec({"name": self.name, "degree": self.degree,
                                 "generators": self.generators}, cap=cap)
        G.name = self.name
        if G.order != self.expected_order:
            raise ValueError(f"{self.name}: generated order {G.order}, expected {self.expected_order}")
        return G


def builtin_manifest_path() -> Path:
    return Path(str(resources.files("commorder") / "data" / "corpus.json"))


def load_manifest(path: str | Path | None = None) -> list[GroupSpecEntry]:
    """Read a corpus manifest; ``None`` or ``"builtin"`` selects the shipped one."""
    if path is None or str(path) == "builtin":
        path = builtin_manifest_path()
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return [GroupSpecEntry.from_dict(d) for d in data]


@lru_cache(maxsize=None)
def _cached_entry_group(name: str, cap: int) -> FiniteGroup:
    for e in load_manifest():
        if e.name == name:
            return e.build(cap)
    raise UnknownGroup(name)


def corpus_group(name: str, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """A group from the shipped corpus, memoised so derived data is shared."""
    return _cached_entry_group(name, cap)
