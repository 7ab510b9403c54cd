"""Exact arithmetic in Z[zeta_m], power basis reduced mod the m-th cyclotomic polynomial."""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import lcm

from sympy import cyclotomic_poly, totient
from sympy.abc import x as _x


@lru_cache(maxsize=None)
def _phi(m: int) -> int:
    return int(totient(m))


@lru_cache(maxsize=None)
def _powers(m: int) -> tuple[tuple[int, ...], ...]:
    """Coefficient vectors of zeta_m^k for k in [0, 2m), reduced mod Phi_m."""
    d = _phi(m)
    poly = [int(c) for c in cyclotomic_poly(m, _x, polys=True).all_coeffs()]  # leading first, monic
    low = poly[::-1][:d]  # Phi = x^d + sum low[i] x^i
    out = []
    cur = [0] * d
    cur[0] = 1
    for _ in range(2 * m):
        out.append(tuple(cur))
        # multiply by x
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * l for c, l in zip(cur, low)]
    return tuple(out)


def _reduce(m: int, full: list[int]) -> tuple[int, ...]:
    d = _phi(m)
    pw = _powers(m)
    res = list(full[:d]) + [0] * max(0, d - len(full))
    for k in range(d, len(full)):
        c = full[k]
        if c:
            for i, v in enumerate(pw[k]):
                if v:
                    res[i] += c * v
    return tuple(res)


class CyclotomicValue:
    """An element of Z[zeta_m] stored as φ(m) integer coefficients."""

    __slots__ = ("conductor", "coefficients")

    def __init__(self, conductor: int, coefficients):
        coeffs = tuple(int(c) for c in coefficients)
        if len(coeffs) != _phi(conductor):
            raise ValueError(f"need {_phi(conductor)} coefficients for conductor {conductor}")
        self.conductor = conductor
        self.coefficients = coeffs

    @classmethod
    def integer(cls, n: int, conductor: int = 1) -> CyclotomicValue:
        return cls(conductor, (int(n),) + (0,) * (_phi(conductor) - 1))

    @classmethod
    def root_of_unity(cls, k: int, conductor: int) -> CyclotomicValue:
        return cls(conductor, _powers(conductor)[k % conductor])

    @classmethod
    def from_exponent_counts(cls, conductor: int, counts) -> CyclotomicValue:
        """Sum of counts[k] * zeta^k."""
        full = [0] * conductor
        for k, c in (counts.items() if hasattr(counts, "items") else enumerate(counts)):
            full[k % conductor] += c
        return cls(conductor, _reduce(conductor, full))

    def lift(self, conductor: int) -> CyclotomicValue:
        """Re-express in Z[zeta_M] for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError("target conductor must be a multiple")
        step = conductor // self.conductor
        full = [0] * conductor
        for k, c in enumerate(self.coefficients):
            full[k * step] += c
        return CyclotomicValue(conductor, _reduce(conductor, full))

    def _common(self, other):
        if isinstance(other, int):
            other = CyclotomicValue.integer(other, self.conductor)
        if other.conductor == self.conductor:
            return self, other
        m = lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        a, b = self._common(other)
        return CyclotomicValue(a.conductor, [u + v for u, v in zip(a.coefficients, b.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.conductor, [-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicValue) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicValue(self.conductor, [c * other for c in self.coefficients])
        a, b = self._common(other)
        ac, bc = a.coefficients, b.coefficients
        full = [0] * (len(ac) + len(bc) - 1)
        for i, u in enumerate(ac):
            if u:
                for j, v in enumerate(bc):
                    if v:
                        full[i + j] += u * v
        return CyclotomicValue(a.conductor, _reduce(a.conductor, full))

    __rmul__ = __mul__

    def exact_div(self, n: int) -> CyclotomicValue:
        """Divide by a rational integer; raises ArithmeticError if the quotient
        leaves the ring (the power basis is an integral basis)."""
        if any(c % n for c in self.coefficients):
            raise ArithmeticError(f"{self} is not divisible by {n}")
        return CyclotomicValue(self.conductor, [c // n for c in self.coefficients])

    def divisible_by(self, n: int) -> bool:
        return all(c % n == 0 for c in self.coefficients)

    def conjugate(self) -> CyclotomicValue:
        m = self.conductor
        full = [0] * m
        for k, c in enumerate(self.coefficients):
            full[(-k) % m] += c
        return CyclotomicValue(m, _reduce(m, full))

    def abs2(self) -> CyclotomicValue:
        return self * self.conjugate()

    def galois(self, j: int) -> CyclotomicValue:
        """Image under zeta -> zeta^j (j coprime to the conductor)."""
        m = self.conductor
        full = [0] * m
        for k, c in enumerate(self.coefficients):
            full[(k * j) % m] += c
        return CyclotomicValue(m, _reduce(m, full))

    @property
    def is_rational_integer(self) -> bool:
        return not any(self.coefficients[1:])

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __int__(self) -> int:
        if not self.is_rational_integer:
            raise ValueError(f"{self} is not a rational integer")
        return self.coefficients[0]

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(c * z**k for k, c in enumerate(self.coefficients))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational_integer and self.coefficients[0] == other
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        a, b = self._common(other)
        return a.coefficients == b.coefficients

    # equality crosses conductors, so no hash consistent with it is cheap
    __hash__ = None

    def __repr__(self) -> str:
        if self.is_rational_integer:
            return str(self.coefficients[0])
        terms = [f"{c}*z{self.conductor}^{k}" if k else str(c)
                 for k, c in enumerate(self.coefficients) if c]
        return " + ".join(terms)
