"""Exact arithmetic in cyclotomic rings Q(zeta_n).

Elements are Fraction-coefficient vectors over the power basis
1, zeta, ..., zeta^{phi(n)-1} of Z[x]/(Phi_n(x)), where Phi_n is the
n-th cyclotomic polynomial.  This is enough for every character value
in the package: no floating point appears anywhere.

Values are immutable; a CycRing is shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence


def _poly_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and _poly_trim(list(a)):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i in range(len(b)):
            a[shift + i] -= f * b[i]
        a.pop()
    return q, _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first (integer, monic)."""
    if n == 1:
        return (-1, 1)
    # (x^n - 1) / prod_{d | n, d < n} Phi_d
    num = [Fraction(0)] * (n + 1)
    num[0] = Fraction(-1)
    num[n] = Fraction(1)
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not r, f"Phi_{d} does not divide x^{n}-1"
            num = q
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


class CycRing:
    """The cyclotomic field of order n, with its reduction data."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("order must be positive")
        self.n = n
        self.phi_poly = cyclotomic_polynomial(n)
        self.degree = len(self.phi_poly) - 1
        # zeta^k reduced to the power basis, for k = 0 .. n-1
        self._powers: list[tuple[Fraction, ...]] = []
        cur = [Fraction(0)] * self.degree
        if self.degree:
            cur[0] = Fraction(1)
        for _ in range(n):
            self._powers.append(tuple(cur))
            cur = self._shift(cur)

    def _shift(self, c: list[Fraction]) -> list[Fraction]:
        """Multiply a power-basis vector by zeta and reduce."""
        d = self.degree
        out = [Fraction(0)] * (d + 1)
        for i, x in enumerate(c):
            out[i + 1] = x
        lead = out[d]
        if lead:
            for i in range(d):
                out[i] -= lead * self.phi_poly[i]
        return out[:d]

    def zero(self) -> "Cyc":
        return Cyc(self, (Fraction(0),) * self.degree)

    def one(self) -> "Cyc":
        return self.from_int(1)

    def from_int(self, v) -> "Cyc":
        c = [Fraction(0)] * self.degree
        if self.degree:
            c[0] = Fraction(v)
        elif v:
            raise ValueError("degree-0 ring")
        return Cyc(self, tuple(c))

    def root(self, k: int = 1) -> "Cyc":
        """zeta_n^k."""
        return Cyc(self, self._powers[k % self.n])

    def root_of_unity(self, m: int, k: int = 1) -> "Cyc":
        """zeta_m^k inside this ring (m must divide n)."""
        if self.n % m != 0:
            raise ValueError(f"no primitive {m}-th root in Q(zeta_{self.n})")
        return self.root((self.n // m) * k)

    def i(self) -> "Cyc":
        return self.root_of_unity(4)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycRing) and self.n == other.n

    def __hash__(self) -> int:
        return hash(("CycRing", self.n))

    def __repr__(self) -> str:
        return f"CycRing({self.n})"


class Cyc:
    """An element of a cyclotomic field, exact."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycRing, coeffs: Sequence[Fraction]):
        self.ring = ring
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        assert len(self.coeffs) == ring.degree

    # -- arithmetic

    def _check(self, other: "Cyc") -> None:
        if self.ring != other.ring:
            raise ValueError("cyclotomic ring mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        self._check(other)
        return Cyc(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.ring, tuple(a * other for a in self.coeffs))
        self._check(other)
        d = self.ring.degree
        prod = [Fraction(0)] * (2 * d)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        # reduce powers >= d via the precomputed table on zeta^k
        out = list(prod[:d])
        for k in range(d, 2 * d):
            c = prod[k]
            if c:
                red = self.ring._powers[k % self.ring.n] if k < self.ring.n else None
                if red is None:
                    red = self._tail_power(k)
                for i, x in enumerate(red):
                    out[i] += c * x
        return Cyc(self.ring, tuple(out))

    __rmul__ = __mul__

    def _tail_power(self, k: int) -> tuple[Fraction, ...]:
        # zeta^k for k >= n: fold by periodicity n
        return self.ring._powers[k % self.ring.n]

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.ring, tuple(a / other for a in self.coeffs))
        raise TypeError("division only by rational scalars")

    def conj(self) -> "Cyc":
        """Complex conjugation, zeta -> zeta^{-1}."""
        out = self.ring.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + Cyc(self.ring, self.ring._powers[(-k) % self.ring.n]) * c
        return out

    def galois(self, t: int) -> "Cyc":
        """The map zeta -> zeta^t (t coprime to the order)."""
        out = self.ring.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + Cyc(self.ring, self.ring._powers[(k * t) % self.ring.n]) * c
        return out

    # -- predicates

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return (self - other).is_zero()
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.ring == other.ring and (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.ring.n, self.coeffs))

    def as_rational(self) -> Optional[Fraction]:
        if any(c != 0 for c in self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def as_int(self) -> Optional[int]:
        r = self.as_rational()
        if r is None or r.denominator != 1:
            return None
        return int(r)

    def lift(self, ring: CycRing) -> "Cyc":
        """Image in a larger cyclotomic ring (order a multiple of ours)."""
        if ring.n % self.ring.n != 0:
            raise ValueError("target ring does not contain this one")
        step = ring.n // self.ring.n
        out = ring.zero()
        for k, c in enumerate(self.coeffs):
            if c:
                out = out + ring.root(k * step) * c
        return out

    def serialize(self) -> list[str]:
        """Coefficient vector over the power basis, as exact strings."""
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                if k == 0:
                    terms.append(str(c))
                elif k == 1:
                    terms.append(f"{c}*z")
                else:
                    terms.append(f"{c}*z^{k}")
        return " + ".join(terms) if terms else "0"


def _squarefree_split(m: int) -> tuple[int, int]:
    """m = f * s^2 with f squarefree; returns (f, s)."""
    f, s = 1, 1
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            f *= d
        d += 1
    return f * m, s


def sqrt_rational(ring: CycRing, r: Fraction) -> Optional[Cyc]:
    """A square root of the rational r inside the ring, if one exists.

    Covers rational squares, their negatives (via i when 4 | order) and
    the 2 * square family (via zeta_8 + zeta_8^{-1} when 8 | order).
    """
    r = Fraction(r)
    if r == 0:
        return ring.zero()
    f, s = _squarefree_split(abs(r.numerator) * r.denominator)
    base = Fraction(s, r.denominator)
    if f == 1:
        val = ring.one() * base
    elif f == 2 and ring.n % 8 == 0:
        val = (ring.root_of_unity(8) + ring.root_of_unity(8, -1)) * base
    else:
        return None
    if r < 0:
        if ring.n % 4 != 0:
            return None
        val = ring.i() * val
    return val
