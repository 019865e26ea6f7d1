"""Finite models of component groups of unipotent centralizers.

Three shapes occur: the Clifford-type 2-group generated by the odd-block
products (spin side), cyclic groups of order n'_lambda (special linear
side), and elementary abelian 2-groups (the orthogonal quotient).  Each
carries a Frobenius automorphism tau.

Irreducible characters are produced with exact cyclotomic values.  The
higher-dimensional spin characters come from explicit tensor-product
matrices over the cyclotomic field of order 4; irreducibility, pairwise
orthogonality and completeness of the resulting table are verified by
exact arithmetic, so the table doubles as its own brute-force check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .cyclotomic import Cyc, CycRing, sqrt_rational
from .partitions import Partition, check_partition, is_in_XN, odd_part_positions

Element = tuple[int, int]  # SpinGamma: (epsilon power, generator bitmask)

# ---------------------------------------------------------------------------
# small exact matrices over a cyclotomic ring


def cmat_identity(R: CycRing, n: int) -> tuple:
    return tuple(tuple(R.one() if i == j else R.zero() for j in range(n)) for i in range(n))


def cmat_mul(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = a[0][0].ring.zero()
            for t in range(k):
                s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def cmat_scale(c: Cyc, a):
    return tuple(tuple(c * x for x in row) for row in a)


def cmat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def cmat_trace(a) -> Cyc:
    s = a[0][0].ring.zero()
    for i in range(len(a)):
        s = s + a[i][i]
    return s


def cmat_kron(a, b):
    out = []
    for ra in a:
        for rb in b:
            row = []
            for xa in ra:
                for xb in rb:
                    row.append(xa * xb)
            out.append(tuple(row))
    return tuple(out)


def cmat_eq(a, b) -> bool:
    return all((x - y).is_zero() for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def cmat_is_zero(a) -> bool:
    return all(x.is_zero() for row in a for x in row)


def cmat_lift(a, R: CycRing):
    return tuple(tuple(x.lift(R) for x in row) for row in a)


def _pauli(R: CycRing):
    z, o, i = R.zero(), R.one(), R.i()
    sx = ((z, o), (o, z))
    sy = ((z, -i), (i, z))
    sz = ((o, z), (z, -o))
    return sx, sy, sz


def anticommuting_matrices(signs: Sequence[int], R: CycRing) -> list:
    """Matrices X_1..X_r, pairwise anticommuting, X_k^2 = signs[k] * I.

    Jordan-Wigner pairs on floor(r/2) qubits; an odd r gets its last
    matrix as the scaled product of the others (so a single generator is
    a 1 x 1 scalar).  The representation dimension is 2^floor(r/2) for
    even r and 2^((r-1)/2) for odd r.
    """
    r = len(signs)
    if r == 0:
        return []
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +-1")
    sx, sy, sz = _pauli(R)
    nq = r // 2 if r % 2 == 0 else (r - 1) // 2

    if nq == 0:
        # r == 1: a scalar generator
        x = ((R.one(),),) if signs[0] == 1 else ((R.i(),),)
        return [x]

    def site(op, k):
        mats = [sz] * k + [op] + [cmat_identity(R, 2)] * (nq - k - 1)
        out = mats[0]
        for mm in mats[1:]:
            out = cmat_kron(out, mm)
        return out

    base = []
    for k in range(nq):
        base.append(site(sx, k))
        base.append(site(sy, k))
    if r % 2 == 1:
        prod = base[0]
        for mm in base[1:]:
            prod = cmat_mul(prod, mm)
        # prod squares to a scalar +-1; fix to +1 with i if needed
        if cmat_mul(prod, prod)[0][0] == R.one():
            base.append(prod)
        else:
            base.append(cmat_scale(R.i(), prod))
    out = []
    for k, s in enumerate(signs):
        out.append(base[k] if s == 1 else cmat_scale(R.i(), base[k]))
    return out


# ---------------------------------------------------------------------------
# the groups


class SpinGamma:
    """Even words in the odd-block generators, with epsilon adjoined.

    Elements are pairs (a, S): epsilon^a times the ascending product of
    the generators in the bitmask S (S of even popcount).  Multiplication
    is the Clifford sign rule; the test suite checks the model against
    the in-algebra construction.
    """

    kind = "spin_gamma"

    def __init__(self, la_parts: Partition, tau_signs: Optional[Sequence[int]] = None):
        la_parts = check_partition(la_parts)
        if not is_in_XN(la_parts):
            raise ValueError(f"{la_parts} is not in X_N")
        self.la_parts = la_parts
        self.positions = tuple(odd_part_positions(la_parts))
        self.parts = tuple(la_parts[j - 1] for j in self.positions)
        self.r = len(self.parts)
        self.exponents = tuple((h * (h - 1) // 2) % 2 for h in self.parts)
        if tau_signs is None:
            tau_signs = (1,) * self.r
        if len(tau_signs) != self.r or any(s not in (1, -1) for s in tau_signs):
            raise ValueError("tau_signs must be a +-1 vector, one per odd part")
        self.tau_signs = tuple(tau_signs)
        self.elements: list[Element] = []
        for mask in range(1 << self.r):
            if bin(mask).count("1") % 2 == 0:
                self.elements.append((0, mask))
                self.elements.append((1, mask))
        self.elements.sort(key=lambda e: (e[1], e[0]))

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Element:
        return (0, 0)

    def epsilon(self) -> Element:
        return (1, 0)

    def _merge_sign(self, s_mask: int, t_mask: int) -> int:
        """Exponent of epsilon produced when sorting x_S x_T."""
        exp = 0
        # inversions: pairs s in S, t in T with s > t
        for t in range(self.r):
            if t_mask >> t & 1:
                higher = s_mask >> (t + 1)
                exp += bin(higher).count("1")
        # contractions x_i^2
        both = s_mask & t_mask
        for i in range(self.r):
            if both >> i & 1:
                exp += self.exponents[i]
        return exp % 2

    def mul(self, g: Element, h: Element) -> Element:
        a, s = g
        b, t = h
        return ((a + b + self._merge_sign(s, t)) % 2, s ^ t)

    def inv(self, g: Element) -> Element:
        a, s = g
        extra = self._merge_sign(s, s)
        return ((a + extra) % 2, s)

    def tau(self, g: Element) -> Element:
        a, s = g
        flips = sum(1 for i in range(self.r) if (s >> i & 1) and self.tau_signs[i] == -1)
        return ((a + flips) % 2, s)

    def tau_order(self) -> int:
        return 2 if any(s == -1 for s in self.tau_signs) else 1

    def tau_is_identity_on_group(self) -> bool:
        return all(self.tau(g) == g for g in self.elements)

    def is_abelian(self) -> bool:
        return all(self.mul(g, h) == self.mul(h, g) for g in self.elements for h in self.elements)

    def conjugacy_classes(self) -> list[tuple[Element, ...]]:
        seen = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            orbit = {self.mul(self.mul(h, g), self.inv(h)) for h in self.elements}
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
        return classes

    def full_word(self) -> Element:
        """The distinguished even word: all generators in increasing order."""
        if self.r % 2:
            raise ValueError("the full word is odd for an odd number of generators")
        return (0, (1 << self.r) - 1)

    def commutator_subgroup(self) -> set[Element]:
        out = set()
        for g in self.elements:
            for h in self.elements:
                c = self.mul(self.mul(g, h), self.inv(self.mul(h, g)))
                out.add(c)
        return out


class CyclicGroup:
    """Z / m with the power automorphism a -> t a (t coprime to m)."""

    kind = "cyclic"

    def __init__(self, m: int, tau_mult: int = 1, context: Optional[dict] = None):
        if m < 1:
            raise ValueError("order must be positive")
        self.m = m
        self.tau_mult = tau_mult % m if m > 1 else 0
        if m > 1 and gcd(self.tau_mult, m) != 1:
            raise ValueError("tau multiplier must be invertible mod m")
        self.context = context or {}
        self.elements = list(range(m))

    @property
    def order(self) -> int:
        return self.m

    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.m

    def inv(self, a: int) -> int:
        return (-a) % self.m

    def tau(self, a: int) -> int:
        return (self.tau_mult * a) % self.m

    def tau_order(self) -> int:
        if self.m == 1 or self.tau_mult == 1:
            return 1
        t, k = self.tau_mult, 1
        acc = t
        while acc != 1:
            acc = (acc * t) % self.m
            k += 1
        return k

    def is_abelian(self) -> bool:
        return True


class ElemAbelian2:
    """(Z/2)^rank with a permutation action of tau on coordinates."""

    kind = "elem_abelian_2"

    def __init__(self, rank: int, tau_perm: Optional[Sequence[int]] = None):
        self.rank = rank
        self.tau_perm = tuple(tau_perm) if tau_perm is not None else tuple(range(rank))
        if sorted(self.tau_perm) != list(range(rank)):
            raise ValueError("tau_perm must be a permutation of the coordinates")
        self.elements = list(range(1 << rank))

    @property
    def order(self) -> int:
        return 1 << self.rank

    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return a ^ b

    def inv(self, a: int) -> int:
        return a

    def tau(self, a: int) -> int:
        out = 0
        for i in range(self.rank):
            if a >> i & 1:
                out |= 1 << self.tau_perm[i]
        return out

    def tau_order(self) -> int:
        k = 1
        perm = self.tau_perm
        cur = perm
        ident = tuple(range(self.rank))
        while cur != ident:
            cur = tuple(perm[i] for i in cur)
            k += 1
        return k

    def is_abelian(self) -> bool:
        return True


def build_spin_gamma(la_parts: Partition, tau_signs: Optional[Sequence[int]] = None) -> SpinGamma:
    """The component-group model attached to a partition in X_N."""
    return SpinGamma(la_parts, tau_signs)


def p_prime_part(n: int, p: int) -> int:
    if p == 1:
        return n
    while n % p == 0:
        n //= p
    return n


def sl_component_order(la_parts: Partition, n: int, p: int) -> int:
    """gcd of the p'-parts of the distinct part sizes and of n'."""
    vals = [p_prime_part(i, p) for i in sorted(set(la_parts))]
    vals.append(p_prime_part(n, p))
    out = 0
    for v in vals:
        out = gcd(out, v)
    return out


def build_sl_component(la_parts: Partition, p: int, q: Optional[int] = None) -> CyclicGroup:
    """Cyclic component group of a unipotent of type la in SL_n.

    tau is a -> a^{-q} (the twisted Frobenius); without q it is trivial.
    """
    la_parts = check_partition(la_parts)
    n = sum(la_parts)
    m = sl_component_order(la_parts, n, p)
    t = (-q) % m if (q is not None and m > 1) else (1 % m if m > 1 else 0)
    ctx = {"n": n, "p": p, "q": q, "la": la_parts, "n_prime": p_prime_part(n, p)}
    return CyclicGroup(m, tau_mult=t if m > 1 else 0, context=ctx)


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class IrrChar:
    label: str
    dim: int
    ring: CycRing
    values: tuple  # tuple of (element, Cyc) in group element order
    central_eps: Optional[int] = None  # SpinGamma: value of xi at epsilon

    def value(self, g) -> Cyc:
        for el, v in self.values:
            if el == g:
                return v
        raise KeyError(g)

    def value_map(self) -> dict:
        return {el: v for el, v in self.values}


def char_inner(G, chi: dict, psi: dict) -> Fraction:
    """<chi, psi> = (1/|G|) sum chi(g) conj(psi(g)); must come out rational."""
    ring = next(iter(chi.values())).ring
    s = ring.zero()
    for g in G.elements:
        s = s + chi[g] * psi[g].conj()
    r = (s / G.order).as_rational()
    if r is None:
        raise AssertionError("character inner product is not rational")
    return r


def _spin_linear_characters(G: SpinGamma, ring: CycRing) -> list[IrrChar]:
    """Characters trivial on epsilon: the dual of the even-mask 2-group."""
    r = G.r
    out = []
    seen = set()
    for t_mask in range(1 << r):
        key = min(t_mask, t_mask ^ ((1 << r) - 1)) if r > 0 else 0
        if key in seen:
            continue
        seen.add(key)
        vals = []
        for a, s in G.elements:
            sign = (-1) ** (bin(s & key).count("1") % 2)
            vals.append(((a, s), ring.from_int(sign)))
        out.append(IrrChar(label=f"lin[{key:0{max(r, 1)}b}]", dim=1, ring=ring, values=tuple(vals), central_eps=1))
    return out


class SpinRepresentation:
    """Exact matrix model of a xi(eps) = -1 irreducible of SpinGamma."""

    def __init__(self, G: SpinGamma, ring: CycRing, gen_mats: list, label: str):
        self.G = G
        self.ring = ring
        self.gen_mats = gen_mats  # one matrix per generator index, or pair maps
        self.label = label
        self._cache: dict[Element, tuple] = {}

    def matrix(self, g: Element) -> tuple:
        if g in self._cache:
            return self._cache[g]
        a, s = g
        idx = [i for i in range(self.G.r) if s >> i & 1]
        out = cmat_identity(self.ring, self.dim)
        for i in idx:
            out = cmat_mul(out, self.gen_mats[i])
        if a:
            out = cmat_scale(self.ring.from_int(-1), out)
        self._cache[g] = out
        return out

    @property
    def dim(self) -> int:
        return len(self.gen_mats[0]) if self.gen_mats else 1

    def verify_homomorphism(self) -> None:
        for g in self.G.elements:
            for h in self.G.elements:
                if not cmat_eq(cmat_mul(self.matrix(g), self.matrix(h)), self.matrix(self.G.mul(g, h))):
                    raise AssertionError("matrix model violates the group law")

    def character(self) -> dict[Element, Cyc]:
        return {g: cmat_trace(self.matrix(g)) for g in self.G.elements}


def _spin_negative_representations(G: SpinGamma, ring: CycRing) -> list[SpinRepresentation]:
    """Matrix models of the xi(eps) = -1 irreducibles.

    Odd generator count: one representation, built from anticommuting
    matrices for the generators themselves.  Even count > 0: two, built
    from the reduced generators z_k = x_k x_last (an odd family), whose
    chirality sign distinguishes the two.  Count 0: the sign character
    of {1, eps}.
    """
    r = G.r
    if r == 0:
        return [SpinRepresentation(G, ring, [], "neg")]
    if r % 2 == 1:
        signs = [1 if e == 0 else -1 for e in G.exponents]
        mats = anticommuting_matrices(signs, ring)
        return [SpinRepresentation(G, ring, mats, "neg")]
    # even r: reduced generators z_k = x_k x_{r-1}, k = 0..r-2
    last = r - 1
    e_last = G.exponents[last]
    z_signs = [(-1) ** ((1 + G.exponents[k] + e_last) % 2) for k in range(r - 1)]
    reps = []
    for variant, lab in ((1, "a"), (-1, "b")):
        zmats = anticommuting_matrices(z_signs, ring)
        if variant == -1:
            # flip the chirality generator (the odd-count completion)
            zmats[-1] = cmat_scale(ring.from_int(-1), zmats[-1])
        dim = len(zmats[0]) if zmats else 1
        # generator images: X_i is not itself represented (odd word), but
        # every even word decomposes into the pair elements below.
        pair_cache = {}

        def pair_matrix(aidx: int, bidx: int, zmats=zmats, cache=pair_cache):
            # matrix of x_a x_b for a < b
            if (aidx, bidx) in cache:
                return cache[(aidx, bidx)]
            if bidx == last:
                out = zmats[aidx]
            else:
                out = cmat_scale(ring.from_int((-1) ** ((e_last + 1) % 2)), cmat_mul(zmats[aidx], zmats[bidx]))
            cache[(aidx, bidx)] = out
            return out

        rep = SpinRepresentation(G, ring, [], f"neg{lab}")
        rep._pair_matrix = pair_matrix  # type: ignore[attr-defined]
        rep._dim_override = dim  # type: ignore[attr-defined]

        def matrix(g, rep=rep, dim=dim):
            if g in rep._cache:
                return rep._cache[g]
            a, s = g
            idx = [i for i in range(rep.G.r) if s >> i & 1]
            out = cmat_identity(rep.ring, dim)
            for t in range(0, len(idx), 2):
                out = cmat_mul(out, rep._pair_matrix(idx[t], idx[t + 1]))
            if a:
                out = cmat_scale(rep.ring.from_int(-1), out)
            rep._cache[g] = out
            return out

        rep.matrix = matrix  # type: ignore[method-assign]
        reps.append(rep)
    return reps


def spin_irreducibles(G: SpinGamma, eps_value: int, ring: Optional[CycRing] = None, verify: bool = True) -> list[IrrChar]:
    """Irreducible characters with the prescribed value of xi at epsilon."""
    if eps_value not in (1, -1):
        raise ValueError("the central character is determined by xi(eps) = +-1")
    if ring is None:
        ring = CycRing(4)
    if eps_value == 1:
        return _spin_linear_characters(G, ring)
    reps = _spin_negative_representations(G, ring)
    out = []
    # checking the group law on (generator, anything) pairs suffices:
    # the property is closed under left multiplication by generators
    gens = [G.epsilon()]
    for i in range(G.r):
        for j in range(i + 1, G.r):
            gens.append((0, (1 << i) | (1 << j)))
    for rep in reps:
        if verify:
            for s in gens:
                for h in G.elements:
                    if not cmat_eq(cmat_mul(rep.matrix(s), rep.matrix(h)), rep.matrix(G.mul(s, h))):
                        raise AssertionError("matrix model violates the group law")
        chi = rep.character()
        if verify:
            if char_inner(G, chi, chi) != 1:
                raise AssertionError("negative-central character is not irreducible")
        dim = chi[G.identity()].as_int()
        out.append(
            IrrChar(
                label=rep.label,
                dim=dim,
                ring=ring,
                values=tuple((g, chi[g]) for g in G.elements),
                central_eps=-1,
            )
        )
    if len(out) == 2:
        # deterministic labels from the value on the full even word
        w = G.full_word()
        key = lambda ch: tuple(str(c) for c in ch.value(w).coeffs)
        out.sort(key=key)
        out = [
            IrrChar(label=f"neg[xI={out[0].value(w)!r}]", dim=out[0].dim, ring=ring, values=out[0].values, central_eps=-1),
            IrrChar(label=f"neg[xI={out[1].value(w)!r}]", dim=out[1].dim, ring=ring, values=out[1].values, central_eps=-1),
        ]
    return out


def cyclic_characters(G: CyclicGroup, ring: Optional[CycRing] = None) -> list[IrrChar]:
    if ring is None:
        order = 1 if G.m == 0 else G.m
        ring = CycRing(_lcm(4, max(order, 1)))
    out = []
    for j in range(G.m):
        vals = tuple((a, ring.root_of_unity(G.m, (j * a) % G.m)) for a in G.elements)
        out.append(IrrChar(label=f"chi{j}", dim=1, ring=ring, values=vals, central_eps=None))
    return out


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def cyclic_characters_with_xi(G: CyclicGroup, xi_order: int, ring: Optional[CycRing] = None) -> list[IrrChar]:
    """Characters of Z/m whose pullback along Z/n' -> Z/m is the canonical
    character of order xi_order.  Exactly one when xi_order | m, else none."""
    n_prime = G.context.get("n_prime")
    if n_prime is not None and n_prime % xi_order != 0:
        raise ValueError(f"no central character of order {xi_order} exists (center has order {n_prime})")
    if xi_order < 1 or G.m % xi_order != 0:
        return []
    j = G.m // xi_order
    chars = cyclic_characters(G, ring)
    return [chars[j % G.m]] if G.m > 0 else []


def elem_abelian_characters(G: ElemAbelian2, ring: Optional[CycRing] = None) -> list[IrrChar]:
    if ring is None:
        ring = CycRing(4)
    out = []
    for t in range(1 << G.rank):
        vals = tuple((a, ring.from_int((-1) ** (bin(a & t).count("1") % 2))) for a in G.elements)
        out.append(IrrChar(label=f"sgn[{t:0{max(G.rank, 1)}b}]", dim=1, ring=ring, values=vals, central_eps=None))
    return out


def irreducibles_with_central_character(G, xi) -> list[IrrChar]:
    """Dispatch on the group kind.

    SpinGamma: xi is +-1, the value at epsilon.  Cyclic: xi is the order
    of the central character.  ElemAbelian2: xi must be None (trivial
    center); every character is returned.
    """
    if isinstance(G, SpinGamma):
        return spin_irreducibles(G, xi)
    if isinstance(G, CyclicGroup):
        return cyclic_characters_with_xi(G, xi)
    if isinstance(G, ElemAbelian2):
        if xi is not None:
            raise ValueError("elementary abelian model has no nontrivial central character here")
        return elem_abelian_characters(G)
    raise TypeError(f"unknown component group {G!r}")


# ---------------------------------------------------------------------------
# twisted classes and extensions


@dataclass(frozen=True)
class TwistedClassTable:
    classes: tuple  # tuple of (representative, members tuple)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(members) for _, members in self.classes)


def twisted_classes(G) -> TwistedClassTable:
    """Orbits of a -> b a tau(b)^{-1} on the coset A tau."""
    elements = list(G.elements)
    seen = set()
    classes = []
    for a in elements:
        if a in seen:
            continue
        orbit = set()
        frontier = {a}
        while frontier:
            x = frontier.pop()
            if x in orbit:
                continue
            orbit.add(x)
            for b in elements:
                y = G.mul(G.mul(b, x), G.inv(G.tau(b)))
                if y not in orbit:
                    frontier.add(y)
        orbit_t = tuple(sorted(orbit))
        seen |= orbit
        classes.append((orbit_t[0], orbit_t))
    classes.sort(key=lambda c: c[0])
    return TwistedClassTable(classes=tuple(classes))


def is_tau_stable(G, chi: IrrChar) -> bool:
    vm = chi.value_map()
    return all(vm[G.tau(g)] == vm[g] for g in G.elements)


@dataclass(frozen=True)
class ExtendedChar:
    base: IrrChar
    label: str
    ring: CycRing
    coset_values: tuple  # tuple of (element g, value at g*tau)

    def coset_value(self, g) -> Cyc:
        for el, v in self.coset_values:
            if el == g:
                return v
        raise KeyError(g)

    def coset_value_map(self) -> dict:
        return {el: v for el, v in self.coset_values}


def _find_intertwiner(G: SpinGamma, rep, ring: CycRing):
    """T with T rho(g) T^{-1} = rho(tau g), normalized so that T^2 = 1."""
    dim = len(rep.matrix(G.identity()))
    for ei in range(dim):
        for ej in range(dim):
            M = tuple(
                tuple(ring.one() if (i, j) == (ei, ej) else ring.zero() for j in range(dim)) for i in range(dim)
            )
            S = None
            for g in G.elements:
                term = cmat_mul(cmat_mul(cmat_lift(rep.matrix(G.tau(g)), ring), M), cmat_lift(rep.matrix(G.inv(g)), ring))
                S = term if S is None else cmat_add(S, term)
            if not cmat_is_zero(S):
                S2 = cmat_mul(S, S)
                c = S2[0][0]
                for i in range(dim):
                    for j in range(dim):
                        expect = c if i == j else ring.zero()
                        if not (S2[i][j] - expect).is_zero():
                            raise AssertionError("intertwiner square is not scalar")
                cr = c.as_rational()
                if cr is None:
                    raise AssertionError("intertwiner square is not rational in this ring")
                gamma = sqrt_rational(ring, Fraction(1, 1) / cr)
                if gamma is None:
                    raise AssertionError("normalizing scalar has no square root in the ring")
                return cmat_scale(gamma, S)
    raise AssertionError("no nonzero intertwiner found")


def extend_character(chi: IrrChar, G, policy: str = "split") -> list[ExtendedChar]:
    """Extensions of a tau-stable character to the coset A tau.

    Abelian groups and trivial tau get the trivial extension (value at
    g tau equals chi(g)).  A higher-dimensional spin character with
    nontrivial tau yields both extensions, deterministically labeled;
    selecting between them needs restriction-side data, which this
    module does not consume.
    """
    if not is_tau_stable(G, chi):
        raise ValueError("character is not tau-stable")
    trivial_tau = all(G.tau(g) == g for g in G.elements)
    if chi.dim == 1 or trivial_tau:
        vals = tuple((g, v) for g, v in chi.values)
        return [ExtendedChar(base=chi, label="trivial", ring=chi.ring, coset_values=vals)]
    if not isinstance(G, SpinGamma):
        raise ValueError("higher-dimensional extensions only arise for the spin model")
    ring = CycRing(_lcm(8, chi.ring.n))
    reps = _spin_negative_representations(G, chi.ring)
    rep = None
    for cand in reps:
        cand_chi = {g: cmat_trace(cand.matrix(g)) for g in G.elements}
        if all(cand_chi[g] == chi.value(g) for g in G.elements):
            rep = cand
            break
    if rep is None:
        raise AssertionError("no matrix model matches the character")
    T = _find_intertwiner(G, rep, ring)
    out = []
    for sign, lab in ((1, "plus"), (-1, "minus")):
        Ts = cmat_scale(ring.from_int(sign), T)
        vals = tuple((g, cmat_trace(cmat_mul(cmat_lift(rep.matrix(g), ring), Ts))) for g in G.elements)
        out.append(ExtendedChar(base=chi, label=lab, ring=ring, coset_values=vals))
    # deterministic order: by serialized value vector
    out.sort(key=lambda e: tuple(tuple(str(c) for c in v.coeffs) for _, v in e.coset_values))
    return out


# ---------------------------------------------------------------------------
# whole-table verification (used as the brute-force oracle by the tests)


@dataclass(frozen=True)
class TableReport:
    order: int
    num_classes: int
    dims: tuple[int, ...]
    sum_dim_sq: int
    orthonormal: bool


def spin_character_table_report(G: SpinGamma) -> TableReport:
    """Assemble the full character table and verify it is one.

    The positive-central characters are the linear functionals of the
    quotient 2-group, the negative-central ones come from the matrix
    models; the report confirms class count, completeness and exact
    orthonormality, which pins the table uniquely.
    """
    ring = CycRing(4)
    chars = spin_irreducibles(G, 1, ring) + spin_irreducibles(G, -1, ring)
    charmaps = [c.value_map() for c in chars]
    ortho = True
    for i in range(len(chars)):
        for j in range(len(chars)):
            expect = Fraction(1 if i == j else 0)
            if char_inner(G, charmaps[i], charmaps[j]) != expect:
                ortho = False
    dims = tuple(c.dim for c in chars)
    return TableReport(
        order=G.order,
        num_classes=len(G.conjugacy_classes()),
        dims=dims,
        sum_dim_sq=sum(d * d for d in dims),
        orthonormal=ortho,
    )
