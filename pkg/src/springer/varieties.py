"""Brute-force flag varieties over small finite fields.

For a split SL unipotent u and a divisor d this module enumerates the
pairs (W in W') with dim W = d, dim W' = n - d, both x-stable for
x = u - 1, x regular nilpotent on W and on V/W', and x of prescribed
type on W'/W.  For split orthogonal data it enumerates the x-stable
totally isotropic planes with prescribed type on the perp quotient.

Subspaces are canonical reduced echelon bases.  The d-dimensional
x-stable subspaces with regular restriction are exactly the x-cyclic
spans <x^{d-1} v, ..., v>, so the generator v is what gets enumerated,
stratified along the kernel filtration and quotiented by the exact
redundancy (scalars and shifts by x W); nothing scans the full
Grassmannian.  An instance whose candidate count would exceed the
budget raises rather than crawling.

The Jordan type of x on V/W is attached to every flag; its level sets
are the strata that mirror the centralizer orbits.  Stratum counting is
also available without materializing the W' side: the fibre over W is
nonempty exactly when the target type is the type of V/W with a single
row shortened by d (the horizontal-strip rule, itself verified against
brute force in the test suite).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import flinalg as la
from .ffield import FieldSpec
from .partitions import Partition, normalize
from .split import SplitSLData, SplitSOData

DEFAULT_BUDGET = 10**6


def budget_cap() -> int:
    env = os.environ.get("SPRINGER_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


class VarietyBudgetError(RuntimeError):
    """Raised when an enumeration would exceed the configured budget."""


# ---------------------------------------------------------------------------
# kernel filtration and cyclic subspaces


def _kernel_of_power(K: FieldSpec, x: la.Matrix, k: int) -> la.Matrix:
    return la.nullspace(K, la.mat_pow(K, x, k))


def _complement_in(K: FieldSpec, small: la.Matrix, big: la.Matrix) -> la.Matrix:
    """Rows of big extending small to a basis of span(big)."""
    cur = list(small)
    out = []
    for v in big:
        if not la.in_span(K, la.mat(cur), v):
            cur.append(v)
            out.append(v)
    return la.mat(out)


def _span_vectors(K: FieldSpec, basis: la.Matrix) -> Iterator[la.Vector]:
    """All vectors in the span (including zero)."""
    if not basis:
        yield tuple()
        return
    n = len(basis[0])
    coeffs = [0] * len(basis)
    total = K.q ** len(basis)
    for code in range(total):
        c = code
        for i in range(len(basis)):
            coeffs[i] = c % K.q
            c //= K.q
        v = [0] * n
        for cf, row in zip(coeffs, basis):
            if cf:
                for j, rv in enumerate(row):
                    if rv:
                        v[j] = K.add(v[j], K.mul(cf, rv))
        yield tuple(v)


def _projective_reps(K: FieldSpec, basis: la.Matrix) -> Iterator[la.Vector]:
    """One representative per line of the span: leading coefficient 1."""
    if not basis:
        return
    r = len(basis)
    n = len(basis[0])
    for lead in range(r):
        tail = basis[lead + 1 :]
        for w in _span_vectors(K, la.mat(tail)) if tail else [tuple([0] * n)]:
            v = tuple(K.add(a, b) for a, b in zip(basis[lead], w)) if w else basis[lead]
            yield v


def cyclic_subspaces(K: FieldSpec, x: la.Matrix, d: int, bound: Optional[int] = None) -> list[la.Matrix]:
    """All d-dimensional x-stable W with x|_W regular nilpotent.

    These are the spans <x^{d-1} v, ..., v> over v in ker x^d outside
    ker x^{d-1}; generators are enumerated modulo the exact redundancy
    for d <= 2 and deduplicated by canonical form for larger d.
    """
    if bound is None:
        bound = budget_cap()
    n = len(x)
    if d < 1 or d > n:
        return []
    kd = _kernel_of_power(K, x, d)
    kdm1 = _kernel_of_power(K, x, d - 1) if d > 1 else ()
    comp = _complement_in(K, la.mat(kdm1), kd)
    if not comp:
        return []

    def span_of(v: la.Vector) -> Optional[la.Matrix]:
        vecs = []
        cur = v
        for _ in range(d):
            vecs.append(cur)
            cur = la.mat_vec(K, x, cur)
        if any(cur):
            return None
        basis = la.echelon_basis(K, vecs)
        if len(basis) != d:
            return None
        return basis

    out = []
    seen = set()
    if d == 1:
        count = (K.q ** len(comp) - 1) // (K.q - 1)
        if count > bound:
            raise VarietyBudgetError(f"{count} candidate lines exceed budget {bound}")
        for v in _projective_reps(K, comp):
            w = span_of(v)
            if w is not None:
                out.append(w)
        return sorted(out)
    if d == 2:
        nlines = (K.q ** len(comp) - 1) // (K.q - 1)
        per_line = K.q ** max(len(kdm1) - 1, 0)
        if nlines * per_line > bound:
            raise VarietyBudgetError(f"{nlines * per_line} candidates exceed budget {bound}")
        for c in _projective_reps(K, comp):
            xc = la.mat_vec(K, x, c)
            # shifts by ker x modulo the span of x c cover each W once
            kermod = _complement_in(K, la.echelon_basis(K, [xc]), la.mat(kdm1))
            for w in _span_vectors(K, kermod):
                v = tuple(K.add(a, b) for a, b in zip(c, w)) if w else c
                sp = span_of(v)
                if sp is not None and sp not in seen:
                    seen.add(sp)
                    out.append(sp)
        return sorted(out)
    # generic fallback: full generator sweep with dedup
    count = K.q ** len(comp) * K.q ** len(kdm1)
    if count > bound:
        raise VarietyBudgetError(f"{count} candidates exceed budget {bound}")
    for c in _span_vectors(K, comp):
        if not any(c):
            continue
        for w in _span_vectors(K, la.mat(kdm1)) if kdm1 else [None]:
            v = c if w is None else tuple(K.add(a, b) for a, b in zip(c, w))
            sp = span_of(v)
            if sp is not None and sp not in seen:
                seen.add(sp)
                out.append(sp)
    return sorted(out)


# ---------------------------------------------------------------------------
# quotient Jordan types


def quotient_type(K: FieldSpec, x: la.Matrix, w_basis: la.Matrix, pow_images: Optional[list] = None) -> Partition:
    """Jordan type of x on V / span(w_basis), from rank arithmetic."""
    n = len(x)
    d = len(w_basis)
    if pow_images is None:
        pow_images = power_images(K, x)
    ranks = [n - d]
    for img in pow_images[1:]:
        if not img:
            ranks.append(0)
            continue
        stacked = la.echelon_basis(K, img + w_basis)
        ranks.append(len(stacked) - d)
    while len(ranks) <= n:
        ranks.append(0)
    parts = []
    for k in range(1, n + 1):
        r_prev, r_k = ranks[k - 1], ranks[k]
        r_next = ranks[k + 1] if k + 1 <= n else 0
        parts.extend([k] * (r_prev - 2 * r_k + r_next))
    return tuple(sorted(parts))


def power_images(K: FieldSpec, x: la.Matrix) -> list:
    """Echelon bases of im(x^k) for k = 0..n (index 0 unused)."""
    n = len(x)
    out = [None]
    cur = x
    for _ in range(n):
        img = la.echelon_basis(K, la.transpose(cur))
        out.append(img)
        if not img:
            break
        cur = la.mat_mul(K, cur, x)
    while len(out) <= n + 1:
        out.append(())
    return out


def single_row_drops(nu: Partition, d: int) -> set[Partition]:
    """Partitions obtained by shortening exactly one row by d.

    These label the principal strata of the flag varieties below, the
    ones whose transporter pieces have full dimension and so carry the
    restriction multiplicity.  Mixed horizontal-strip labels also occur
    as nonempty strata when d > 1 (e.g. type (2,4), d = 2, target (2):
    the drop (1,3) shows up with (q^2-1)^2 points) but contribute no
    top components.
    """
    out = set()
    for idx in range(len(nu)):
        parts = list(nu)
        parts[idx] -= d
        if parts[idx] >= 0:
            out.add(normalize(parts))
    return out


def horizontal_strip_drops(nu: Partition, d: int) -> set[Partition]:
    """Partitions mu in nu with nu/mu a horizontal d-strip.

    These are exactly the Jordan types of x on V/W over the x-cyclic
    d-dimensional subspaces W (verified against brute force in the test
    suite), and dually the types of x on a corank-d subspace with
    regular quotient.
    """
    desc = sorted(nu, reverse=True)
    out: set[Partition] = set()

    def rec(i: int, remaining: int, acc: list[int]):
        if i == len(desc):
            if remaining == 0:
                out.add(normalize(acc))
            return
        below = desc[i + 1] if i + 1 < len(desc) else 0
        # interlacing: below <= mu_i <= nu_i
        for mu_i in range(below, desc[i] + 1):
            drop = desc[i] - mu_i
            if drop <= remaining:
                rec(i + 1, remaining - drop, acc + [mu_i])

    rec(0, d, [])
    return out


# ---------------------------------------------------------------------------
# SL flags


@dataclass(frozen=True)
class Flag:
    W: la.Matrix
    Wp: la.Matrix
    type_W: Partition
    type_quotient: Partition  # x on W'/W
    type_top: Partition  # x on V/W'
    type_mod_W: Partition  # x on V/W (the stratum invariant)


def _annihilator_space(K: FieldSpec, basis: la.Matrix, n: int) -> la.Matrix:
    return la.annihilator(K, basis, n)


def enumerate_flags_sl(
    data: SplitSLData, d: int, lap: Partition, bound: Optional[int] = None
) -> list[Flag]:
    """All flags (W in W') for the split unipotent, marked with types.

    Incompatible target types give an empty list; instances above the
    candidate budget raise VarietyBudgetError.
    """
    if bound is None:
        bound = budget_cap()
    K = data.field
    n = len(data.unipotent)
    x = la.mat_add(K, data.unipotent, la.mat_neg(K, la.identity(K, n)))
    lap = tuple(lap)
    if sum(lap) != n - 2 * d:
        return []
    pows = power_images(K, x)
    flags = []
    ws = cyclic_subspaces(K, x, d, bound)
    produced = 0
    for w in ws:
        nu = quotient_type(K, x, w, pows)
        if lap not in horizontal_strip_drops(nu, d):
            continue
        # enumerate W' through the quotient V/W: W'/W must be x-stable of
        # type lap with regular quotient; work in quotient coordinates
        qact, lift = _quotient_data(K, x, w)
        duals = cyclic_subspaces(K, la.transpose(qact), d, bound)
        for u_dual in duals:
            wp_bar = la.nullspace(K, u_dual)
            mid_type = la.jordan_partition(K, la.restrict_to_subspace(K, qact, wp_bar)) if wp_bar else ()
            if mid_type != lap:
                continue
            wp = la.echelon_basis(K, tuple(lift(v) for v in wp_bar) + w)
            top_type = quotient_type(K, x, wp, pows)
            if top_type != (d,):
                continue
            produced += 1
            if produced > bound:
                raise VarietyBudgetError(f"flag count exceeds budget {bound}")
            flags.append(
                Flag(
                    W=w,
                    Wp=wp,
                    type_W=(d,),
                    type_quotient=mid_type,
                    type_top=top_type,
                    type_mod_W=nu,
                )
            )
    flags.sort(key=lambda f: (f.W, f.Wp))
    return flags


def _quotient_data(K: FieldSpec, x: la.Matrix, w_basis: la.Matrix):
    """Action of x on V/W in complement coordinates, plus the lift map."""
    n = len(x)
    red, pivots = la.rref(K, w_basis) if w_basis else ((), ())
    pivset = set(pivots)
    compl = [c for c in range(n) if c not in pivset]

    def project(v: la.Vector) -> la.Vector:
        vv = list(v)
        for r, pc in enumerate(pivots):
            f = vv[pc]
            if f:
                vv = [K.sub(a, K.mul(f, b)) for a, b in zip(vv, red[r])]
        return tuple(vv[c] for c in compl)

    cols = []
    for c in compl:
        e = tuple(1 if i == c else 0 for i in range(n))
        cols.append(project(la.mat_vec(K, x, e)))
    qact = la.transpose(la.mat(cols))

    def lift(vbar: la.Vector) -> la.Vector:
        v = [0] * n
        for coord, c in zip(vbar, compl):
            v[c] = coord
        return tuple(v)

    return qact, lift


def verify_flag_sl(data: SplitSLData, d: int, lap: Partition, flag: Flag) -> bool:
    """Independent re-check of every defining condition of a flag."""
    K = data.field
    n = len(data.unipotent)
    x = la.mat_add(K, data.unipotent, la.mat_neg(K, la.identity(K, n)))
    W, Wp = flag.W, flag.Wp
    if len(W) != d or len(Wp) != n - d:
        return False
    if not la.span_contains(K, Wp, W):
        return False
    for basis in (W, Wp):
        for v in basis:
            if not la.in_span(K, basis, la.mat_vec(K, x, v)):
                return False
    if la.jordan_partition(K, la.restrict_to_subspace(K, x, W)) != (d,):
        return False
    if la.jordan_partition(K, la.action_between(K, x, W, Wp)) != tuple(lap):
        return False
    if la.jordan_partition(K, la.quotient_action(K, x, Wp)) != (d,):
        return False
    return True


# -- strata without materializing the fibres


@dataclass(frozen=True)
class StratumReport:
    la: Partition
    d: int
    strata: tuple  # tuple of (nu, generator_count) sorted
    total_generators: int

    @property
    def types(self) -> tuple[Partition, ...]:
        return tuple(nu for nu, _ in self.strata)

    @property
    def principal_types(self) -> tuple[Partition, ...]:
        """Strata whose invariant is a single-row drop of the ambient
        type: the carriers of the isotypic pieces in the one- or
        two-orbit description of the flag variety."""
        allowed = single_row_drops(self.la, self.d)
        return tuple(nu for nu in self.types if nu in allowed)


def sl_stratum_analysis(
    data: SplitSLData, d: int, lap: Partition, bound: Optional[int] = None
) -> StratumReport:
    """Level sets of the V/W Jordan type over the W side of the variety.

    Counts, per type nu, the cyclic subspaces W whose fibre is nonempty
    (the horizontal-strip rule); the distinct nu values are the strata
    of the full flag variety.
    """
    if bound is None:
        bound = budget_cap()
    K = data.field
    n = len(data.unipotent)
    x = la.mat_add(K, data.unipotent, la.mat_neg(K, la.identity(K, n)))
    lap = tuple(lap)
    if sum(lap) != n - 2 * d:
        return StratumReport(la=data.la, d=d, strata=(), total_generators=0)
    pows = power_images(K, x)
    counts: dict[Partition, int] = {}
    for w in cyclic_subspaces(K, x, d, bound):
        nu = quotient_type(K, x, w, pows)
        if lap in horizontal_strip_drops(nu, d):
            counts[nu] = counts.get(nu, 0) + 1
    strata = tuple(sorted(counts.items()))
    return StratumReport(la=data.la, d=d, strata=strata, total_generators=sum(counts.values()))


# ---------------------------------------------------------------------------
# SO flags


@dataclass(frozen=True)
class SOFlag:
    E: la.Matrix
    Eperp: la.Matrix
    type_mid: Partition  # x on Eperp/E


def enumerate_flags_so(data: SplitSOData, lap: Partition, bound: Optional[int] = None) -> list[SOFlag]:
    """x-stable totally isotropic planes E with x|_E != 0 and prescribed
    type on Eperp/E."""
    if bound is None:
        bound = budget_cap()
    K = data.field
    x = data.nilpotent
    form = data.form
    n = len(x)
    lap = tuple(lap)
    k2 = _kernel_of_power(K, x, 2)
    k1 = _kernel_of_power(K, x, 1)
    comp = _complement_in(K, la.mat(k1), k2)
    if not comp:
        return []
    nlines = (K.q ** len(comp) - 1) // (K.q - 1)
    per_line = K.q ** max(len(k1) - 1, 0)
    if nlines * per_line > bound:
        raise VarietyBudgetError(f"{nlines * per_line} candidates exceed budget {bound}")
    out = []
    seen = set()
    for c in _projective_reps(K, comp):
        xc = la.mat_vec(K, x, c)
        kermod = _complement_in(K, la.echelon_basis(K, [xc]), la.mat(k1))
        for shift in _span_vectors(K, kermod):
            v = tuple(K.add(a, b) for a, b in zip(c, shift)) if shift else c
            xv = la.mat_vec(K, x, v)
            # isotropy of <v, xv>
            if la.gram(K, form, v, v) or la.gram(K, form, v, xv) or la.gram(K, form, xv, xv):
                continue
            E = la.echelon_basis(K, (v, xv))
            if len(E) != 2 or E in seen:
                continue
            seen.add(E)
            eperp = la.nullspace(K, la.mat_mul(K, E, form))
            mid = la.action_between(K, x, E, eperp)
            mid_type = la.jordan_partition(K, mid)
            if mid_type == lap:
                out.append(SOFlag(E=E, Eperp=eperp, type_mid=mid_type))
    out.sort(key=lambda f: f.E)
    return out


def verify_flag_so(data: SplitSOData, lap: Partition, flag: SOFlag) -> bool:
    K = data.field
    x = data.nilpotent
    E = flag.E
    if len(E) != 2:
        return False
    for v in E:
        if not la.in_span(K, E, la.mat_vec(K, x, v)):
            return False
    restr = la.restrict_to_subspace(K, x, E)
    if all(v == 0 for row in restr for v in row):
        return False
    for u in E:
        for v in E:
            if la.gram(K, data.form, u, v):
                return False
    eperp = la.nullspace(K, la.mat_mul(K, E, data.form))
    if not la.span_contains(K, eperp, E):
        return False
    return la.jordan_partition(K, la.action_between(K, x, E, eperp)) == tuple(lap)


def is_so_flag_f_stable(data: SplitSOData, flag: SOFlag) -> bool:
    """Split orthogonal data is untwisted: F is the coordinatewise q-power."""
    K = data.field
    e = K.p**data.qexp
    # elements of F_q are fixed when the field is F_q itself
    imgs = tuple(tuple(K.pow(c, e) for c in row) for row in flag.E)
    return la.echelon_basis(K, imgs) == flag.E


# ---------------------------------------------------------------------------
# centralizer units and orbits


@dataclass(frozen=True)
class CentralizerUnits:
    dimension: int
    algebra_basis: tuple
    units: tuple  # invertible members, optionally det-1 filtered


def centralizer_units(
    x: la.Matrix, K: FieldSpec, bound: Optional[int] = None, det_one: bool = False
) -> CentralizerUnits:
    """The unit group of {m : m x = x m}, by coefficient scan."""
    if bound is None:
        bound = budget_cap()
    n = len(x)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for t in range(n):
                # (M x - x M)[i][j] = sum_t M[i][t] x[t][j] - x[i][t] M[t][j]
                row[i * n + t] = K.add(row[i * n + t], x[t][j])
                row[t * n + j] = K.sub(row[t * n + j], x[i][t])
            rows.append(tuple(row))
    basis_flat = la.nullspace(K, la.mat(rows))
    dim = len(basis_flat)
    if K.q**dim > bound:
        raise VarietyBudgetError(f"{K.q**dim} algebra elements exceed budget {bound}")
    basis = tuple(tuple(tuple(b[i * n + j] for j in range(n)) for i in range(n)) for b in basis_flat)
    units = []
    for coeffs in _all_coeff_vectors(K, dim):
        m = [[0] * n for _ in range(n)]
        for cf, b in zip(coeffs, basis):
            if cf:
                for i in range(n):
                    for j in range(n):
                        if b[i][j]:
                            m[i][j] = K.add(m[i][j], K.mul(cf, b[i][j]))
        mm = la.mat(m)
        dv = la.det(K, mm)
        if dv == 0:
            continue
        if det_one and dv != 1:
            continue
        units.append(mm)
    return CentralizerUnits(dimension=dim, algebra_basis=basis, units=tuple(units))


def _all_coeff_vectors(K: FieldSpec, dim: int) -> Iterator[tuple[int, ...]]:
    total = K.q**dim
    for code in range(total):
        c = code
        out = []
        for _ in range(dim):
            out.append(c % K.q)
            c //= K.q
        yield tuple(out)


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple  # tuple of (tuple of flags, invariant type)


def orbit_decomposition(flags: Sequence[Flag], units: CentralizerUnits, K: FieldSpec) -> OrbitDecomposition:
    """Orbits of the unit group on the flag list, with their V/W type.

    The invariant is checked to be constant along each orbit.
    """
    index = {(f.W, f.Wp): f for f in flags}
    remaining = set(index.keys())
    orbits = []
    while remaining:
        seed = min(remaining)
        orbit_keys = set()
        for g in units.units:
            wk = la.echelon_basis(K, la.mat_mul(K, index[seed].W, la.transpose(g)))
            wpk = la.echelon_basis(K, la.mat_mul(K, index[seed].Wp, la.transpose(g)))
            key = (wk, wpk)
            if key in index:
                orbit_keys.add(key)
        if not orbit_keys:
            orbit_keys = {seed}
        types = {index[k].type_mod_W for k in orbit_keys}
        if len(types) != 1:
            raise AssertionError("orbit invariant is not constant")
        orbits.append((tuple(sorted(orbit_keys)), types.pop()))
        remaining -= orbit_keys
    return OrbitDecomposition(orbits=tuple(orbits))


# ---------------------------------------------------------------------------
# Frobenius on SL flags


def _perp(data: SplitSLData, basis: la.Matrix) -> la.Matrix:
    """{v : Psi(u, v) = 0 for u in span}: conj of the nullspace of U A."""
    K = data.field
    if not basis:
        return la.identity(K, len(data.form))
    ua = la.mat_mul(K, basis, data.form)
    ns = la.nullspace(K, ua)
    conj = tuple(tuple(data.conj(c) for c in row) for row in ns)
    return la.echelon_basis(K, conj)


def _frob0(data: SplitSLData, basis: la.Matrix) -> la.Matrix:
    K = data.field
    q = K.p**data.qexp
    return la.echelon_basis(K, tuple(tuple(K.pow(c, q) for c in row) for row in basis))


def is_sl_flag_f_stable(data: SplitSLData, flag: Flag) -> bool:
    """Coordinatewise check: both subspaces fixed by the q-power map.

    The twisted group's flag Frobenius composes this with the duality
    below; a flag of q-rational subspaces is carried to a flag of
    q-rational subspaces, and the explicit split flags are of this kind.
    """
    return _frob0(data, flag.W) == flag.W and _frob0(data, flag.Wp) == flag.Wp


def flag_frobenius_sl(data: SplitSLData, flag: Flag) -> tuple[la.Matrix, la.Matrix]:
    """The duality-twisted Frobenius on flags of type (d, n-d).

    (W, W') maps to (B ann(F0 W'), B ann(F0 W)) with B the inverse of
    the conjugated form; this is the self-map of the flag variety whose
    composite with itself is the plain q^2-power map.  It interchanges
    the roles of the V/W and W' Jordan data, so stratum labels are not
    preserved by it in general.
    """
    K = data.field
    Abar = data.conj_mat(data.form)
    Binv = la.inverse(K, Abar)

    def image(basis: la.Matrix, outdim: int) -> la.Matrix:
        src = _frob0(data, basis)
        ann = la.nullspace(K, src) if src else la.identity(K, len(data.form))
        rows = tuple(la.mat_vec(K, Binv, v) for v in ann)
        out = la.echelon_basis(K, rows)
        assert len(out) == outdim
        return out

    n = len(data.form)
    return image(flag.Wp, len(flag.W)), image(flag.W, n - len(flag.W))


# ---------------------------------------------------------------------------
# explicit split flags


def _completion_for_w(data: SplitSLData, x: la.Matrix, pows, w: la.Matrix, d: int, lap: Partition) -> la.Matrix:
    """The partner W' for an explicit W: the perp of W when that works
    (the usual situation), else the least valid completion from the
    fibre, preferring q-rational ones.

    The perp degenerates exactly for case III pivots whose row has bare
    multiplicity (the short block pairs with itself); the fibre over
    such a W is still nonempty and tiny, so it is enumerated.
    """
    K = data.field
    n = len(x)
    if 2 * d == n:
        return w
    wp = _perp(data, w)
    if la.span_contains(K, wp, w):
        if la.jordan_partition(K, la.action_between(K, x, w, wp)) == tuple(lap):
            if quotient_type(K, x, wp, pows) == (d,):
                return wp
    qact, lift = _quotient_data(K, x, w)
    candidates = []
    for u_dual in cyclic_subspaces(K, la.transpose(qact), d):
        wp_bar = la.nullspace(K, u_dual)
        mid = la.jordan_partition(K, la.restrict_to_subspace(K, qact, wp_bar)) if wp_bar else ()
        if mid != tuple(lap):
            continue
        cand = la.echelon_basis(K, tuple(lift(v) for v in wp_bar) + w)
        if quotient_type(K, x, cand, pows) == (d,):
            candidates.append(cand)
    if not candidates:
        raise AssertionError("no completion W' exists for the explicit flag")
    rational = [c for c in candidates if _frob0(data, c) == c]
    pool = rational if rational else candidates
    return min(pool)


def _span_vectors_subfield(K: FieldSpec, basis: la.Matrix, sub: list[int]):
    """Vectors in the span with coefficients restricted to a subfield."""
    if not basis:
        return
    n = len(basis[0])
    r = len(basis)
    total = len(sub) ** r
    for code in range(total):
        c = code
        v = [0] * n
        for i in range(r):
            cf = sub[c % len(sub)]
            c //= len(sub)
            if cf:
                for j, rv in enumerate(basis[i]):
                    if rv:
                        v[j] = K.add(v[j], K.mul(cf, rv))
        yield tuple(v)


def _rational_flag_same_stratum(data: SplitSLData, d: int, lap: Partition, target_nu: Partition) -> Optional[Flag]:
    """Least flag with q-rational subspaces in the given stratum, if any."""
    K = data.field
    n = len(data.unipotent)
    x = la.mat_add(K, data.unipotent, la.mat_neg(K, la.identity(K, n)))
    pows = power_images(K, x)
    sub = K.subfield_elements(data.qexp)
    kd = _kernel_of_power(K, x, d)
    best = None
    seen = set()
    for v in _span_vectors_subfield(K, la.mat(kd), sub):
        if not any(v):
            continue
        vecs = []
        cur = v
        ok = True
        for _ in range(d):
            vecs.append(cur)
            cur = la.mat_vec(K, x, cur)
        if any(cur):
            continue
        w = la.echelon_basis(K, vecs)
        if len(w) != d or w in seen:
            continue
        seen.add(w)
        if quotient_type(K, x, w, pows) != tuple(target_nu):
            continue
        try:
            wp = _completion_for_w(data, x, pows, w, d, lap)
        except AssertionError:
            continue
        flag = Flag(
            W=w,
            Wp=wp,
            type_W=(d,),
            type_quotient=tuple(lap),
            type_top=(d,),
            type_mod_W=tuple(target_nu),
        )
        if not verify_flag_sl(data, d, lap, flag):
            continue
        if is_sl_flag_f_stable(data, flag):
            if best is None or (flag.W, flag.Wp) < (best.W, best.Wp):
                best = flag
    return best


def _position_index(la_parts: Partition) -> dict[tuple[int, int], int]:
    out = {}
    t = 0
    for k, h in enumerate(la_parts, start=1):
        for j in range(1, h + 1):
            out[(k, j)] = t
            t += 1
    return out


def split_flag_sl(data: SplitSLData, d: int, lap: Partition, case) -> list[Flag]:
    """The explicit rational flags of the three removal cases.

    Case I: W spanned by the first d Jordan vectors of the pivot part.
    Case II: W generated from an isotropic vector of the auxiliary form
    <v, w> = Psi(v, x^{h-1} w) on the top layer of the two equal parts.
    Case III: both flags, from alpha e_1 + e'_1 with alpha = 1 and 0.
    Each output flag is re-checked against the defining conditions.
    """
    K = data.field
    n = len(data.unipotent)
    x = la.mat_add(K, data.unipotent, la.mat_neg(K, la.identity(K, n)))
    pos = _position_index(data.la)
    pows = power_images(K, x)

    def unit_vec(k, j):
        t = pos[(k, j)]
        return tuple(1 if i == t else 0 for i in range(n))

    def flag_from_w(wvecs) -> Flag:
        w = la.echelon_basis(K, wvecs)
        wp = _completion_for_w(data, x, pows, w, d, lap)
        return Flag(
            W=w,
            Wp=wp,
            type_W=la.jordan_partition(K, la.restrict_to_subspace(K, x, w)),
            type_quotient=la.jordan_partition(K, la.action_between(K, x, w, wp)),
            type_top=quotient_type(K, x, wp, pows),
            type_mod_W=quotient_type(K, x, w, pows),
        )

    out = []
    if case.tag == "I":
        i = case.pivots[0]
        out.append(flag_from_w([unit_vec(i, j) for j in range(1, d + 1)]))
    elif case.tag == "II":
        i = case.pivots[0]
        h = data.la[i - 1]
        # auxiliary form on <v_{i,h}, v_{i+1,h}>
        tops = [unit_vec(i, h), unit_vec(i + 1, h)]
        xpow = la.mat_pow(K, x, h - 1)
        q = K.p**data.qexp

        def aux(vv, ww):
            return la.gram(K, data.form, vv, tuple(data.conj(c) for c in la.mat_vec(K, xpow, ww)))

        def rational(v):
            return all(K.pow(c, q) == c for c in v)

        iso = [v for v in _projective_reps(K, la.mat(tops)) if aux(v, v) == 0]
        if not iso:
            raise AssertionError("no isotropic vector for the auxiliary form")
        iso.sort(key=lambda v: (not rational(v), v))
        vec = iso[0]
        chain = [vec]
        cur = vec
        for _ in range(h - 1):
            cur = la.mat_vec(K, x, cur)
            chain.append(cur)
        # x^{h-1} v, ..., x^{h-d} v
        wvecs = chain[h - d : h][::-1] if d > 0 else []
        flag = flag_from_w(wvecs)
        if not (is_sl_flag_f_stable(data, flag)):
            rat = _rational_flag_same_stratum(data, d, lap, flag.type_mod_W)
            if rat is not None:
                flag = rat
        out.append(flag)
    elif case.tag == "III":
        i, j = case.pivots
        for alpha, label in ((1, "nu"), (0, "nu_prime")):
            wvecs = []
            for t in range(1, d + 1):
                ei = unit_vec(i, t)
                ej = unit_vec(j, t)
                v = tuple(K.add(K.mul(alpha, a), b) for a, b in zip(ei, ej))
                wvecs.append(v)
            out.append(flag_from_w(wvecs))
    else:
        raise ValueError(f"unsupported SL case {case.tag}")
    for f in out:
        if not verify_flag_sl(data, d, lap, f):
            raise AssertionError("explicit split flag fails the defining conditions")
    return out


def split_flag_so(data: SplitSOData, lap: Partition, case) -> list[SOFlag]:
    """Explicit isotropic planes for the supported orthogonal cases.

    Case I: the first two vectors of the pivot block.  Case IV: the two
    planes <e_1, e_2 +- e'_1>.  Case V: the beta family with
    alpha = beta^2 (e'_1, e'_{h-1}) / 2, including beta = 0.
    """
    K = data.field
    x = data.nilpotent
    n = len(x)
    # block starts in coordinate order (pair blocks hold two chains)
    starts: dict[int, tuple[int, int]] = {}
    t = 0
    jdx = 1
    parts = data.la
    while jdx <= len(parts):
        h = parts[jdx - 1]
        if h % 2 == 1:
            starts[jdx] = (t, h)
            t += h
            jdx += 1
        else:
            starts[jdx] = (t, h)
            starts[jdx + 1] = (t + h, h)
            t += 2 * h
            jdx += 2

    def unit(start, a):
        # a is 1-based within the chain
        return tuple(1 if i == start + a - 1 else 0 for i in range(n))

    def make(vecs) -> SOFlag:
        E = la.echelon_basis(K, vecs)
        eperp = la.nullspace(K, la.mat_mul(K, E, data.form))
        return SOFlag(E=E, Eperp=eperp, type_mid=la.jordan_partition(K, la.action_between(K, x, E, eperp)))

    out = []
    if case.tag == "I":
        s, h = starts[case.pivot]
        out.append(make([unit(s, 1), unit(s, 2)]))
    elif case.tag == "IV":
        i = case.pivot
        s_low, h_low = starts[i]  # smaller odd part, size h - 2
        s_hi, h = starts[i + 1]  # larger odd part, size h
        e1 = unit(s_hi, 1)
        e2 = unit(s_hi, 2)
        ep1 = unit(s_low, 1)
        for sign in (1, -1):
            v = tuple(K.add(a, b if sign == 1 else K.neg(b)) for a, b in zip(e2, ep1))
            out.append(make([e1, v]))
    elif case.tag == "V":
        i = case.pivot
        s_odd, h_odd = starts[i]  # odd part of size h - 1
        s_e, h = starts[i + 1]  # first chain of the even pair
        s_f, _ = starts[i + 2]  # second chain
        e1 = unit(s_e, 1)
        e2 = unit(s_e, 2)
        f1 = unit(s_f, 1)
        ep1 = unit(s_odd, 1)
        ep_last = unit(s_odd, h_odd)
        pairing = la.gram(K, data.form, ep1, ep_last)
        half = K.half()
        # isotropy of <e_1, e_2 + z> forces alpha = -beta^2 (e'_1, e'_{h-1})/2
        # with the block pairings of the assembled form
        for beta in K.elements():
            alpha = K.neg(K.mul(K.mul(K.mul(beta, beta), pairing), half))
            z = tuple(
                K.add(K.add(a, K.mul(alpha, b)), K.mul(beta, c)) for a, b, c in zip(e2, f1, ep1)
            )
            out.append(make([e1, z]))
    else:
        raise ValueError(f"unsupported SO case {case.tag}")
    for f in out:
        if not verify_flag_so(data, lap, f):
            raise AssertionError("explicit split flag fails the defining conditions")
    return out
