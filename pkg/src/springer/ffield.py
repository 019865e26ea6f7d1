"""Exact arithmetic in small finite fields F_{p^k}.

Field elements are encoded as integers in [0, p^k): the base-p digits
of the code are the coefficients of the residue polynomial, lowest
degree first.  A FieldSpec owns the modulus and caches add/mul tables
for small fields, so the hot loops in the Clifford and enumeration
modules reduce to list indexing.

Values are immutable ints and FieldSpec is never mutated after its
tables are built, so everything here is safe to share between threads.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional, Sequence

# Fields at or below this size get full add/mul lookup tables.
_TABLE_LIMIT = 1024

# Enumeration-facing modules cap q^2 at this size; make_field refuses
# anything bigger so slowness shows up as an error, not a hang.
_SIZE_LIMIT = 10**6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient tuples, lowest degree first)


def _poly_trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a by the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_divides(d: Sequence[int], a: Sequence[int], p: int) -> bool:
    return not _poly_mod(a, d, p)


def _monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    """All monic polynomials of exact degree deg, lexicographic in
    (c_0, c_1, ..., c_{deg-1})."""
    n = p**deg
    for code in range(n):
        coeffs = []
        c = code
        for _ in range(deg):
            coeffs.append(c % p)
            c //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    deg = len(m) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if _poly_divides(f, m, p):
                return False
    return True


# ---------------------------------------------------------------------------


class FieldSpec:
    """The field F_{p^k} with a fixed monic irreducible modulus.

    Elements are ints in [0, p^k); 0 and 1 are the additive and
    multiplicative identities under the encoding.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)  # monic, degree k, lowest degree first
        if self.q > _SIZE_LIMIT:
            raise ValueError(f"field size {self.q} above supported cap {_SIZE_LIMIT}")
        self._mul_table: Optional[list[int]] = None
        self._inv_table: Optional[list[int]] = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers

    def _build_tables(self) -> None:
        q = self.q
        mul = [0] * (q * q)
        for a in range(q):
            ca = self.coeffs(a)
            for b in range(a, q):
                v = self.encode(_poly_mod(_poly_mul(ca, self.coeffs(b), self.p), self.modulus, self.p))
                mul[a * q + b] = v
                mul[b * q + a] = v
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul[a * q + b] == 1:
                    inv[a] = b
                    break
        self._mul_table = mul
        self._inv_table = inv

    # -- encoding

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector of length k (canonical reduced form)."""
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def encode(self, coeffs: Sequence[int]) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + c % self.p
        return a

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic

    def add(self, a: int, b: int) -> int:
        p = self.p
        if self.k == 1:
            return (a + b) % p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if self.k == 1:
            return (-a) % p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self.encode(_poly_mod(_poly_mul(self.coeffs(a), self.coeffs(b), self.p), self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def scalar(self, n: int) -> int:
        """Image of the rational integer n in the field."""
        return n % self.p

    def half(self) -> int:
        if self.p == 2:
            raise ZeroDivisionError("1/2 does not exist in characteristic 2")
        return self.inv(self.scalar(2))

    # -- Frobenius and square roots

    def frobenius(self, a: int, e: int = 1) -> int:
        """The power map a -> a^(p^e)."""
        e = e % self.k
        if e == 0:
            return a
        return self.pow(a, self.p**e)

    def sqrt(self, a: int) -> Optional[int]:
        """A square root of a, or None.  Brute scan; fields are small."""
        if a == 0:
            return 0
        for x in range(1, self.q):
            if self.mul(x, x) == a:
                return x
        return None

    def zeta4(self) -> Optional[int]:
        """Least element with square -1, if -1 is a square."""
        return self.sqrt(self.neg(1))

    # -- subfields (F_{p^d} inside F_{p^k} for d | k)

    def subfield_elements(self, d: int) -> list[int]:
        if self.k % d != 0:
            raise ValueError(f"F_{self.p}^{d} is not a subfield of F_{self.p}^{self.k}")
        pe = pow(self.p, d)
        return [a for a in range(self.q) if self.pow(a, pe) == a]

    def least_nonsquare_in_subfield(self, d: int) -> int:
        """Least encoded element of F_{p^d} that is not a square there."""
        sub = self.subfield_elements(d)
        qs = pow(self.p, d)
        e = (qs - 1) // 2
        for a in sub:
            if a and self.pow(a, e) != 1:
                return a
        raise ValueError("no non-square in subfield (p = 2?)")

    # -- plumbing

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def serialize_element(self, a: int) -> list[int]:
        """JSON form of an element: its coefficient tuple [a0, ..., a_{k-1}]."""
        return list(self.coeffs(a))


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1, seed_modulus: Optional[tuple[int, ...]] = None) -> FieldSpec:
    """Construct F_{p^k} with a deterministic modulus.

    Without seed_modulus the modulus is the lexicographically least monic
    irreducible of degree k over F_p (order on (c_0, ..., c_{k-1})), so
    repeated runs produce identical encodings and identical table output.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree k = {k} must be >= 1")
    if seed_modulus is not None:
        m = _poly_trim(seed_modulus)
        if len(m) - 1 != k or m[-1] != 1:
            raise ValueError("seed modulus must be monic of degree k")
        if not _is_irreducible(m, p):
            raise ValueError(f"seed modulus {list(m)} is reducible over F_{p}")
        return FieldSpec(p, k, m)
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for m in _monic_polys(p, k):
        if _is_irreducible(m, p):
            return FieldSpec(p, k, m)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over F_{p} found")


def frobenius_pow(x: int, field: FieldSpec, e: int) -> int:
    """x^(p^e) in the given field.

    For a quadratic extension of F_q (k = 2m, q = p^m) the exponent
    e = m is the conjugation x -> x^q used by sesquilinear forms.
    """
    return field.frobenius(x, e)


def quadratic_extension(field_q: FieldSpec) -> FieldSpec:
    """The field F_{q^2} containing the given F_q (same p, doubled degree)."""
    return make_field(field_q.p, 2 * field_q.k)
