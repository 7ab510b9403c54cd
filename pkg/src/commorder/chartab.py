"""Exact character tables by the finite-field (Dixon) method.

The class matrices M_j[k][l] = n(C_j, C_k, C_l) are counted directly and
their common eigenvectors found over GF(l) with l = 1 (mod exponent) and
l > 2 sqrt|G|.  Each eigenvector, scaled so its identity entry is 1, holds
the central character values omega(C) mod l.  Degrees and character values
mod l follow, and eigenvalue multiplicities of each rho(g) lift the values
exactly into Z[zeta_e].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt, lcm

from sympy import isprime, primitive_root

from .cyclotomic import CyclotomicValue
from .group import ConjugacyClass, FiniteGroup, class_index, conjugacy_classes
from .perm import compose, inverse
from .series import p_part


class CharacterTableError(RuntimeError):
    pass


# -- linear algebra over GF(p) ----------------------------------------------

def rref_mod(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[v % p for v in r] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace_mod(A: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {u : A u = 0} over GF(p)."""
    n = len(A[0])
    R, piv = rref_mod(A, p)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        u = [0] * n
        u[f] = 1
        for row, c in zip(R, piv):
            u[c] = (-row[f]) % p
        basis.append(u)
    return basis


def charpoly_mod(A: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial (coefficients low to high) via Hessenberg form."""
    n = len(A)
    H = [[v % p for v in row] for row in A]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        inv = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = H[i][m - 1] * inv % p
            if u:
                H[i] = [(a - u * b) % p for a, b in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + u * row[i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        # (x - h_mm) * p_{m-1}
        cur = [0] + prev
        h = H[m - 1][m - 1]
        for k, c in enumerate(prev):
            cur[k] = (cur[k] - h * c) % p
        t = 1
        for i in range(m - 1, 0, -1):
            t = t * H[i][i - 1] % p
            f = H[i - 1][m - 1] * t % p
            if f:
                for k, c in enumerate(polys[i - 1]):
                    cur[k] = (cur[k] - f * c) % p
        polys.append(cur)
    return polys[n]


def roots_mod(poly: list[int], p: int) -> list[int]:
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


# -- the table ----------------------------------------------------------------

@dataclass
class CharacterTable:
    group_order: int
    exponent: int
    classes: list[ConjugacyClass]
    values: list[list[CyclotomicValue]]
    degrees: list[int]
    prime: int
    group_name: str | None = None
    inverse_class: list[int] = field(default_factory=list)

    @property
    def class_sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def __len__(self) -> int:
        return len(self.values)

    def to_dict(self) -> dict:
        return {
            "group_name": self.group_name or "",
            "group_order": self.group_order,
            "conductor": self.exponent,
            "class_sizes": self.class_sizes,
            "representatives": [c.representative.cycles() for c in self.classes],
            "degrees": self.degrees,
            "values": [[list(v.coefficients) for v in row] for row in self.values],
        }


def _splitting_prime(exponent: int, order: int) -> int:
    ell = exponent + 1
    while not (isprime(ell) and ell * ell > 4 * order):
        ell += exponent
    return ell


def class_matrices(G: FiniteGroup) -> list[list[list[int]]]:
    """M[j][k][l] = number of x in C_j with x^-1 z_l in C_k (z_l the l-th representative)."""
    classes = conjugacy_classes(G)
    cidx = class_index(G)
    r = len(classes)
    M = [[[0] * r for _ in range(r)] for _ in range(r)]
    for j, cj in enumerate(classes):
        invs = [inverse(x) for x in cj.members]
        for l, cl in enumerate(classes):
            z = cl.representative
            for xi in invs:
                M[j][cidx[compose(xi, z)]][l] += 1
    return M


def _split(basis: list[list[int]], M: list[list[int]], p: int) -> list[list[list[int]]] | None:
    """Split span(basis) into eigenspaces of M; None if M is not diagonalisable there."""
    R, piv = rref_mod(basis, p)
    k = len(R)
    r = len(M)
    images = [[sum(M[a][b] * v[b] for b in range(r)) % p for a in range(r)] for v in R]
    # column i of A holds the coordinates of M R_i, read off at the pivot columns
    A = [[images[i][piv[a]] for i in range(k)] for a in range(k)]
    pieces = []
    total = 0
    for lam in roots_mod(charpoly_mod(A, p), p):
        shifted = [[(A[a][b] - (lam if a == b else 0)) % p for b in range(k)] for a in range(k)]
        vecs = nullspace_mod(shifted, p)
        total += len(vecs)
        pieces.append([[sum(u[i] * R[i][c] for i in range(k)) % p for c in range(r)] for u in vecs])
    if total != k:
        return None
    return pieces


def character_table(G: FiniteGroup) -> CharacterTable:
    cached = G._cache.get("chartab")
    if cached is not None:
        return cached
    classes = conjugacy_classes(G)
    cidx = class_index(G)
    r = len(classes)
    n = G.order
    e = G.exponent
    ell = _splitting_prime(e, n)
    M = class_matrices(G)
    sizes = [c.size for c in classes]
    inv_cls = [cidx[inverse(c.representative)] for c in classes]

    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    for j in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        nxt = []
        for s in spaces:
            if len(s) == 1:
                nxt.append(s)
                continue
            pieces = _split(s, M[j], ell)
            if pieces is None:
                raise CharacterTableError(f"class matrix {j} is not diagonalisable on a common eigenspace")
            nxt.extend(pieces)
        spaces = nxt
    stuck = [s for s in spaces if len(s) > 1]
    if stuck or len(spaces) != r:
        raise CharacterTableError(
            f"common eigenspaces of dimensions {[len(s) for s in stuck]} did not split "
            f"under class matrices 1..{r - 1}")

    # class power maps: powmap[l][t] = class of z_l^t
    orders = [G.element_order(c.representative) for c in classes]
    powmap = []
    for c, o in zip(classes, orders):
        row = []
        y = G.identity
        for _ in range(o):
            row.append(cidx[y])
            y = compose(y, c.representative)
        powmap.append(row)

    z = pow(primitive_root(ell), (ell - 1) // e, ell)
    size_inv = [pow(s, -1, ell) for s in sizes]
    rows = []
    for (vec,) in spaces:
        if vec[0] == 0:
            raise CharacterTableError("eigenvector vanishes at the identity class")
        scale = pow(vec[0], -1, ell)
        omega = [(v * scale) % ell for v in vec]
        norm = sum(omega[l] * omega[inv_cls[l]] * size_inv[l] for l in range(r)) % ell
        d2 = n * pow(norm, -1, ell) % ell
        d = next((d for d in range(1, isqrt(n) + 1) if n % d == 0 and (d * d - d2) % ell == 0), None)
        if d is None:
            raise CharacterTableError("no admissible degree for an eigenvector")
        chi_mod = [(d * omega[l] * size_inv[l]) % ell for l in range(r)]
        values = []
        for l in range(r):
            o = orders[l]
            eps = pow(z, e // o, ell)
            eps_inv = pow(eps, -1, ell)
            o_inv = pow(o, -1, ell)
            counts = {}
            for k in range(o):
                step = pow(eps_inv, k, ell)
                acc, w = 0, 1
                for t in range(o):
                    acc += chi_mod[powmap[l][t]] * w
                    w = w * step % ell
                mk = acc % ell * o_inv % ell
                if mk > d:
                    raise CharacterTableError(f"eigenvalue multiplicity {mk} exceeds degree {d}")
                if mk:
                    counts[k * (e // o)] = mk
            if sum(counts.values()) != d:
                raise CharacterTableError("eigenvalue multiplicities do not sum to the degree")
            values.append(CyclotomicValue.from_exponent_counts(e, counts))
        rows.append((d, values))

    rows.sort(key=lambda dv: (dv[0], [v.coefficients for v in dv[1]]))
    T = CharacterTable(
        group_order=n,
        exponent=e,
        classes=classes,
        values=[v for _, v in rows],
        degrees=[d for d, _ in rows],
        prime=ell,
        group_name=G.name,
        inverse_class=inv_cls,
    )
    if sum(d * d for d in T.degrees) != n:
        raise CharacterTableError("squared degrees do not sum to the group order")
    G._cache["chartab"] = T
    return T


def omega_value(T: CharacterTable, chi: int, C: int) -> CyclotomicValue:
    """Central character |C| chi(g) / chi(1); must be an algebraic integer."""
    num = T.values[chi][C] * T.classes[C].size
    try:
        return num.exact_div(T.degrees[chi])
    except ArithmeticError as exc:
        raise CharacterTableError(f"omega_{chi}(C_{C}) is not an algebraic integer") from exc


def _integral_ratio(num: CyclotomicValue, den: int, what: str) -> int:
    if not num.is_rational_integer or num.coefficients[0] % den:
        raise CharacterTableError(f"{what} is not a rational integer")
    val = num.coefficients[0] // den
    if val < 0:
        raise CharacterTableError(f"{what} is negative")
    return val


def structure_constant_char(T: CharacterTable, K: int, C: int) -> int:
    """n(K^-1, K, C) = |K|^2/|G| sum_phi |phi(x)|^2 conj(phi(y)) / phi(1), exactly."""
    L = lcm(*T.degrees)
    acc = CyclotomicValue.integer(0, T.exponent)
    for row, d in zip(T.values, T.degrees):
        acc = acc + row[K].abs2() * row[C].conjugate() * (L // d)
    k = T.classes[K].size
    return _integral_ratio(acc * (k * k), T.group_order * L, f"n(K^-1,K,C) for K={K}, C={C}")


def structure_constant_char_general(T: CharacterTable, K: int, Lc: int, C: int) -> int:
    """n(K, L, C) = |K||L|/|G| sum_phi phi(a) phi(b) conj(phi(c)) / phi(1)."""
    L = lcm(*T.degrees)
    acc = CyclotomicValue.integer(0, T.exponent)
    for row, d in zip(T.values, T.degrees):
        acc = acc + row[K] * row[Lc] * row[C].conjugate() * (L // d)
    num = acc * (T.classes[K].size * T.classes[Lc].size)
    return _integral_ratio(num, T.group_order * L, f"n(K,L,C) for {(K, Lc, C)}")


def defect_zero_characters(T: CharacterTable, p: int) -> list[int]:
    """Indices of characters with chi(1)_p = |G|_p."""
    gp = p_part(T.group_order, p)
    return [i for i, d in enumerate(T.degrees) if p_part(d, p) == gp]


def defect_zero_coprime_to(T: CharacterTable, p: int, r: int) -> list[int]:
    """p-defect-zero characters whose degree is not divisible by ``r``."""
    return [i for i in defect_zero_characters(T, p) if T.degrees[i] % r]
