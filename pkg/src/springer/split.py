"""Explicit split elements: orthogonal nilpotents and twisted SL unipotents.

Orthogonal side: the block forms and shift nilpotents assembled per
partition, at the Lie-algebra level (no exponential is taken, so small
characteristic needs no special cases).

Special linear side: a Jordan-basis unipotent made rational for the
twisted (unitary-type) Frobenius by a Hermitian sesquilinear form.  The
form's antidiagonal carries the prescribed signs (-1)^{j + a_k}; the
remaining entries are completed by solving the invariance and Hermitian
conditions exactly, because a pure Jordan shift preserves no purely
antidiagonal sesquilinear form once the block size exceeds 2.  For even
block sizes the antidiagonal scalar must be trace-zero (conjugation
negates it) for the form to be Hermitian; the completion picks the
canonical such scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from . import flinalg as la
from .clifford import orthonormalize_block, split_so_form
from .component_groups import CyclicGroup, SpinGamma, build_sl_component, build_spin_gamma
from .ffield import FieldSpec, make_field
from .partitions import (
    Partition,
    check_partition,
    delta_index,
    is_in_XN_tilde,
    odd_part_positions,
)


# ---------------------------------------------------------------------------
# orthogonal side


@dataclass(frozen=True)
class SplitSOData:
    la: Partition
    field: FieldSpec
    form: la.Matrix
    nilpotent: la.Matrix
    qexp: int  # q = p^qexp


def _so_shift(la_parts: Partition, K: FieldSpec) -> la.Matrix:
    """The block shift x e^j_a = e^j_{a-1} in the same coordinate order
    as split_so_form."""
    N = sum(la_parts)
    rows = [[0] * N for _ in range(N)]
    start = 0
    j = 0
    k = len(la_parts)
    while j < k:
        h = la_parts[j]
        chains = 1 if h % 2 == 1 else 2
        for c in range(chains):
            base = start + c * h
            for a in range(1, h):
                rows[base + a - 1][base + a] = 1
        start += chains * h
        j += chains
    return la.mat(rows)


def build_so_split(la_parts: Partition, q_p: int, q_k: int = 1) -> SplitSOData:
    """Assembled split orthogonal data (V, f, x) for a partition in X~_N.

    Invariants machine-checked: f symmetric and non-degenerate, x
    skew-adjoint for f, and the Jordan type of x equal to the partition.
    """
    la_parts = check_partition(la_parts)
    if not is_in_XN_tilde(la_parts):
        raise ValueError(f"{la_parts} has an even part with odd multiplicity")
    if q_p == 2:
        raise ValueError("orthogonal split data needs odd q")
    K = make_field(q_p, q_k)
    form, _ = split_so_form(la_parts, K)
    x = _so_shift(la_parts, K)
    if la.transpose(form) != form or la.det(K, form) == 0:
        raise AssertionError("assembled form is not symmetric non-degenerate")
    skew = la.mat_add(K, la.mat_mul(K, la.transpose(x), form), la.mat_mul(K, form, x))
    if any(v for row in skew for v in row):
        raise AssertionError("x is not skew-adjoint for the form")
    if la.jordan_partition(K, x) != la_parts:
        raise AssertionError("Jordan type mismatch")
    return SplitSOData(la=la_parts, field=K, form=form, nilpotent=x, qexp=q_k)


# ---------------------------------------------------------------------------
# special linear side


@dataclass(frozen=True)
class SplitSLData:
    la: Partition
    field: FieldSpec  # F_{q^2}
    qexp: int  # q = p^qexp
    form: la.Matrix  # Hermitian matrix A over F_{q^2}
    unipotent: la.Matrix
    signs: tuple[int, ...]  # the a_k exponents used per part

    def conj(self, c: int) -> int:
        return self.field.frobenius(c, self.qexp)

    def conj_mat(self, m: la.Matrix) -> la.Matrix:
        return tuple(tuple(self.conj(c) for c in row) for row in m)


def jordan_positions(la_parts: Partition) -> list[tuple[int, int]]:
    """Global coordinate order: (k, j) for part k (1-based), j = 1..la_k."""
    out = []
    for k, h in enumerate(la_parts, start=1):
        for j in range(1, h + 1):
            out.append((k, j))
    return out


def _subfield_coords(K2: FieldSpec, qexp: int):
    """F_q-coordinates on F_{q^2}: returns (beta, decompose, subfield list)."""
    sub = K2.subfield_elements(qexp)
    subset = set(sub)
    beta = next(a for a in K2.elements() if a not in subset)
    table = {}
    for c0 in sub:
        for c1 in sub:
            table[K2.add(c0, K2.mul(c1, beta))] = (c0, c1)
    return beta, table, sub


@lru_cache(maxsize=None)
def _solve_block_form(K2: FieldSpec, qexp: int, h: int, a_k: int) -> la.Matrix:
    """The h x h Hermitian block preserved by the Jordan shift unipotent.

    Prescribes B[j, h+1-j] = a_k * (-1)^{j+1} * c_h on the antidiagonal
    (c_h = 1 for odd h, a canonical trace-zero scalar for even h, a_k a
    +-1 block multiplier) and solves the invariance + Hermitian
    conditions over F_q, free variables set to zero.
    """
    beta, table, sub = _subfield_coords(K2, qexp)
    conj_beta = K2.frobenius(beta, qexp)
    cb0, cb1 = table[conj_beta]
    sub_sorted = sorted(sub)

    nvar = 2 * h * h  # (i, j, component)

    def var(i: int, j: int, comp: int) -> int:
        return (i * h + j) * 2 + comp

    rows: list[list[int]] = []
    rhs: list[int] = []

    def add_eq(coeffs: dict[int, int], b0: int = 0):
        row = [0] * nvar
        for v, c in coeffs.items():
            row[v] = K2.add(row[v], c)
        rows.append(row)
        rhs.append(b0)

    # invariance: B[i-1, j] + B[i, j-1] + B[i-1, j-1] = 0 (1-based, absent = 0)
    for i in range(1, h + 1):
        for j in range(1, h + 1):
            coeffs: dict[int, int] = {}
            for (ii, jj) in ((i - 1, j), (i, j - 1), (i - 1, j - 1)):
                if ii >= 1 and jj >= 1:
                    for comp in (0, 1):
                        v = var(ii - 1, jj - 1, comp)
                        coeffs[v] = K2.add(coeffs.get(v, 0), 1)
            if coeffs:
                # component equations: the coefficient 1 acts diagonally
                add_eq({v: c for v, c in coeffs.items() if v % 2 == 0}, 0)
                add_eq({v: c for v, c in coeffs.items() if v % 2 == 1}, 0)

    # Hermitian: B[i][j] - conj(B[j][i]) = 0
    # with B[j][i] = c0 + c1 beta: conj = c0 + c1 (cb0 + cb1 beta)
    for i in range(h):
        for j in range(h):
            # component 0: B[i][j].0 - B[j][i].0 - cb0 * B[j][i].1 = 0
            coeffs = {var(i, j, 0): 1}
            coeffs[var(j, i, 0)] = K2.add(coeffs.get(var(j, i, 0), 0), K2.neg(1))
            coeffs[var(j, i, 1)] = K2.add(coeffs.get(var(j, i, 1), 0), K2.neg(cb0))
            add_eq(coeffs, 0)
            # component 1: B[i][j].1 - cb1 * B[j][i].1 = 0
            coeffs = {var(i, j, 1): 1}
            coeffs[var(j, i, 1)] = K2.add(coeffs.get(var(j, i, 1), 0), K2.neg(cb1))
            add_eq(coeffs, 0)

    # prescribed antidiagonal
    if h % 2 == 1 or K2.p == 2:
        c_h = 1
    else:
        c_h = min(a for a in K2.elements() if a and K2.frobenius(a, qexp) == K2.neg(a))
    if a_k == -1:
        c_h = K2.neg(c_h)
    for j in range(1, h + 1):
        sign = (-1) ** ((j + 1) % 2)
        val = c_h if sign == 1 else K2.neg(c_h)
        v0, v1 = table[val]
        add_eq({var(j - 1, h - j, 0): 1}, v0)
        add_eq({var(j - 1, h - j, 1): 1}, v1)

    # solve over F_q: every coefficient and rhs lives in the subfield, so
    # K2 arithmetic restricted to sub is exactly F_q arithmetic
    sol = _solve_in_subfield(K2, sub_sorted, rows, rhs)
    if sol is None:
        raise AssertionError(f"no invariant Hermitian form with the prescribed antidiagonal (h={h})")
    B = [[0] * h for _ in range(h)]
    for i in range(h):
        for j in range(h):
            c0 = sol[var(i, j, 0)]
            c1 = sol[var(i, j, 1)]
            B[i][j] = K2.add(c0, K2.mul(c1, beta))
    return la.mat(B)


def _solve_in_subfield(K2: FieldSpec, sub_sorted: list[int], rows, rhs) -> Optional[list[int]]:
    """Gaussian elimination where all values stay in the subfield of K2."""
    if not rows:
        return []
    nvar = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(nvar):
        pr = None
        for i in range(r, len(aug)):
            if aug[i][c]:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = K2.inv(aug[r][c])
        aug[r] = [K2.mul(inv, x) for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [K2.sub(x, K2.mul(f, y)) for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][nvar]:
            return None
    sol = [0] * nvar
    for row_idx, c in enumerate(pivots):
        sol[c] = aug[row_idx][nvar]
    return sol


def build_sl_split(
    la_parts: Partition, q_p: int, q_k: int = 1, signs: Optional[Sequence[int]] = None
) -> SplitSLData:
    """Split unipotent of Jordan type la for the twisted SL_n form.

    signs are the a_k exponents, one per part, default all +1.  The
    returned data has, machine-checked: A Hermitian, u of Jordan type
    la, u preserving the sesquilinear form, which is the statement that
    u is fixed by the twisted Frobenius built from A.
    """
    la_parts = check_partition(la_parts)
    n = sum(la_parts)
    if signs is None:
        signs = (1,) * len(la_parts)
    signs = tuple(signs)
    if len(signs) != len(la_parts) or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be one +-1 per part")
    K2 = make_field(q_p, 2 * q_k)

    # unipotent: (u - 1) v_{k,j} = v_{k,j-1}
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pos = jordan_positions(la_parts)
    index = {kj: t for t, kj in enumerate(pos)}
    for (k, j), t in index.items():
        if j >= 2:
            rows[index[(k, j - 1)]][t] = 1
    u = la.mat(rows)

    blocks = []
    for k, h in enumerate(la_parts, start=1):
        blocks.append(_solve_block_form(K2, q_k, h, signs[k - 1]))
    A = [[0] * n for _ in range(n)]
    start = 0
    for b in blocks:
        h = len(b)
        for i in range(h):
            for j in range(h):
                A[start + i][start + j] = b[i][j]
        start += h
    A = la.mat(A)

    data = SplitSLData(la=la_parts, field=K2, qexp=q_k, form=A, unipotent=u, signs=signs)
    _verify_sl_split(data)
    return data


def _verify_sl_split(data: SplitSLData) -> None:
    K = data.field
    A, u = data.form, data.unipotent
    if la.det(K, A) == 0:
        raise AssertionError("form is degenerate")
    if data.conj_mat(la.transpose(A)) != A:
        raise AssertionError("form is not Hermitian")
    if la.mat_mul(K, la.mat_mul(K, la.transpose(u), A), data.conj_mat(u)) != A:
        raise AssertionError("u does not preserve the sesquilinear form")
    if la.jordan_partition(K, la.mat_add(K, u, la.mat_neg(K, la.identity(K, len(u))))) != data.la:
        raise AssertionError("Jordan type mismatch")
    # twisted Frobenius built from A: F(g) = conj(A)^{-1} (conj(g)^T)^{-1} conj(A),
    # whose fixed points are exactly the unitary group of A
    Abar = data.conj_mat(A)
    fu = la.mat_mul(
        K,
        la.mat_mul(K, la.inverse(K, Abar), la.inverse(K, la.transpose(data.conj_mat(u)))),
        Abar,
    )
    if fu != u:
        raise AssertionError("u is not fixed by the twisted Frobenius")


def jordan_type(m: la.Matrix, K: FieldSpec, mode: str = "nilpotent") -> Partition:
    """Jordan type from the rank sequence of powers."""
    if mode == "unipotent":
        m = la.mat_add(K, m, la.mat_neg(K, la.identity(K, len(m))))
    elif mode != "nilpotent":
        raise ValueError("mode must be 'nilpotent' or 'unipotent'")
    return la.jordan_partition(K, m)


# ---------------------------------------------------------------------------
# Frobenius action on component groups


@dataclass(frozen=True)
class SpinFrobeniusReport:
    la: Partition
    q: int
    signs: tuple[int, ...]  # F(x_j) = sign * x_j per odd part, in position order
    tau_group: SpinGamma

    @property
    def tau_is_trivial(self) -> bool:
        return all(s == 1 for s in self.signs)

    @property
    def tau_order(self) -> int:
        return self.tau_group.tau_order()

    @property
    def tau_squared_trivial(self) -> bool:
        return self.tau_order <= 2


@dataclass(frozen=True)
class SLFrobeniusReport:
    la: Partition
    q: int
    group: CyclicGroup

    @property
    def tau_mult(self) -> int:
        return self.group.tau_mult

    @property
    def tau_order(self) -> int:
        return self.group.tau_order()

    @property
    def tau_squared_trivial(self) -> bool:
        return self.tau_order <= 2


def frobenius_action_report(
    data: Union[SplitSOData, SplitSLData], p_for_sl: Optional[int] = None
) -> Union[SpinFrobeniusReport, SLFrobeniusReport]:
    """How F acts on the component group of the split element.

    Orthogonal/spin data: the sign of F on each odd-block generator is
    computed by actually orthonormalizing the block over F_{q^2} and
    applying the coefficient Frobenius; the induced automorphism of the
    component-group model is returned (always an involution).

    SL data: the automorphism a -> a^{-q} of the cyclic group.  Its
    square is q^2-multiplication, which is trivial exactly when the
    group order divides q^2 - 1; the report records the order rather
    than asserting 2.
    """
    if isinstance(data, SplitSOData):
        q = data.field.p**data.qexp
        K2 = make_field(data.field.p, 2 * data.qexp)
        signs = []
        for j in odd_part_positions(data.la):
            h = data.la[j - 1]
            blk = orthonormalize_block(h, delta_index(data.la, j), K2, data.qexp)
            s = 1
            for v in blk.frob_signs:
                s *= v
            signs.append(s)
        tau_group = build_spin_gamma(data.la, tau_signs=tuple(signs))
        report = SpinFrobeniusReport(la=data.la, q=q, signs=tuple(signs), tau_group=tau_group)
        if not report.tau_squared_trivial:
            raise AssertionError("spin tau must square to the identity")
        return report
    if isinstance(data, SplitSLData):
        q = data.field.p**data.qexp
        group = build_sl_component(data.la, data.field.p, q=q)
        return SLFrobeniusReport(la=data.la, q=q, group=group)
    raise TypeError(f"unknown split data {data!r}")
