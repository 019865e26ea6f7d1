"""Exponent bookkeeping and the characteristic-function table rows.

The exponent pair (a_0, r) of a class in a cuspidal series is computed
from the dimension data of the group, the Levi and the two classes; the
identity a_0 + r = (dim G - dim C) - (dim L - dim C_0) is evaluated on
both sides independently and reported, and the emitted sum must be even
for q^{(a_0+r)/2} to stay polynomial.

A table row Y0 lists the exact values Tr(a tau, rho~) over the twisted
classes of the component group of a split element: the computable basis
vector attached to the pair (class, local system) under the convention
that the normalizing scalar is 1 at split elements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .component_groups import (
    ExtendedChar,
    IrrChar,
    build_sl_component,
    build_spin_gamma,
    cyclic_characters_with_xi,
    extend_character,
    is_tau_stable,
    spin_irreducibles,
    twisted_classes,
)
from .cyclotomic import Cyc
from .partitions import (
    Partition,
    check_partition,
    class_dimension,
    defect,
    group_dimension,
    is_in_XN,
    odd_part_positions,
)
from .series import enumerate_spin_series, spin_weyl_rank, xi_is_f_stable


class EmptyFiberError(ValueError):
    """The pair (class, central character) supports no local system."""


class NotFStableError(ValueError):
    """The requested central character or local system is moved by F."""


# ---------------------------------------------------------------------------
# exponents


@dataclass(frozen=True)
class ExponentData:
    a0: int
    r: int
    rhs: int  # (dim G - dim C) - (dim L - dim C_0), computed independently

    @property
    def total(self) -> int:
        return self.a0 + self.r

    @property
    def consistent(self) -> bool:
        return self.total == self.rhs

    @property
    def even(self) -> bool:
        return self.total % 2 == 0


def exponents_sl(la: Partition, d: int) -> ExponentData:
    """Exponent data for a class of SL_n in the order-d series."""
    la = check_partition(la)
    n = sum(la)
    if n % d:
        raise ValueError(f"series label {d} does not divide n = {n}")
    if any(x % d for x in la):
        raise ValueError(f"{la} is outside the order-{d} series (empty fiber)")
    k = n // d
    dim_g = group_dimension("SL", n)
    dim_l = k * d * d - 1
    dim_zl = k - 1
    dim_c0 = k * (d * d - d)  # regular class in each GL_d factor
    dim_c = class_dimension(la, "SL")
    a0 = -dim_zl - dim_c
    r = dim_g - dim_l + dim_c0 + dim_zl
    rhs = (dim_g - dim_c) - (dim_l - dim_c0)
    return ExponentData(a0=a0, r=r, rhs=rhs)


def spin_cuspidal_class(d: int) -> Partition:
    """The unique member of X_{d(2d-1)} with defect d (the series core)."""
    D = d * (2 * d - 1)
    if D == 0:
        return ()
    from .partitions import enumerate_XN

    members = [la for la in enumerate_XN(D) if defect(la) == d]
    if len(members) != 1:
        raise AssertionError(f"expected a unique cuspidal type for d = {d}, got {members}")
    return members[0]


def exponents_spin(la: Partition, d: Optional[int] = None) -> ExponentData:
    """Exponent data for a spin class; d defaults to the defect."""
    la = check_partition(la)
    if not is_in_XN(la):
        raise ValueError(f"{la} is not in X_N")
    N = sum(la)
    if d is None:
        d = defect(la)
    if defect(la) != d:
        raise ValueError(f"{la} lies in the series of {defect(la)}, not {d}")
    m = spin_weyl_rank(N, d)
    D = d * (2 * d - 1)
    dim_g = group_dimension("SO", N)
    dim_l = 4 * m + group_dimension("SO", D)
    dim_zl = m
    core = spin_cuspidal_class(d)
    dim_c0 = 2 * m + (class_dimension(core, "SO") if core else 0)
    dim_c = class_dimension(la, "SO")
    a0 = -dim_zl - dim_c
    r = dim_g - dim_l + dim_c0 + dim_zl
    rhs = (dim_g - dim_c) - (dim_l - dim_c0)
    return ExponentData(a0=a0, r=r, rhs=rhs)


# ---------------------------------------------------------------------------
# table rows


@dataclass(frozen=True)
class GreenBasisRow:
    group: str  # "sl" or "spin"
    q: int
    la: Partition
    series: int  # d: character order (sl) or defect (spin)
    rho_label: str
    extension_label: str
    dim: int
    classes: tuple  # tuple of (representative, size)
    values: tuple  # tuple of Cyc, one per class
    exponents: ExponentData

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "q": self.q,
            "series": self.series,
            "lambda": list(self.la),
            "rho": self.rho_label,
            "extension": self.extension_label,
            "dim": self.dim,
            "classes": [{"rep": _rep_str(self.group, rep), "size": size} for rep, size in self.classes],
            "values": [v.serialize() for v in self.values],
            "a0": self.exponents.a0,
            "r": self.exponents.r,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _rep_str(group: str, rep) -> str:
    if group == "sl":
        return str(rep)
    a, mask = rep
    bits = []
    if a:
        bits.append("eps")
    i = 0
    m = mask
    while m:
        if m & 1:
            bits.append(f"x{i + 1}")
        m >>= 1
        i += 1
    return "*".join(bits) if bits else "1"


def _check_row(row: GreenBasisRow) -> GreenBasisRow:
    ident_value = row.values[0]
    if ident_value.as_int() != row.dim:
        raise AssertionError("identity-class value differs from the dimension")
    if not row.exponents.consistent:
        raise AssertionError("exponent identity failed")
    if not row.exponents.even:
        raise AssertionError(f"odd exponent sum {row.exponents.total} in an emitted row")
    return row


def y0_row_sl(la: Partition, xi_order: int, q_p: int, q_k: int = 1) -> GreenBasisRow:
    """One table row for a class of twisted SL_n.

    Refuses central characters moved by F (order not dividing q + 1) and
    pairs with empty fiber (a part not divisible by the order).
    """
    la = check_partition(la)
    q = q_p**q_k
    if any(x % xi_order for x in la):
        raise EmptyFiberError(f"no local system: {xi_order} does not divide every part of {la}")
    if not xi_is_f_stable(xi_order, q):
        raise NotFStableError(
            f"central character of order {xi_order} is moved by F (it maps to its -q power; {xi_order} does not divide q + 1 = {q + 1})"
        )
    A = build_sl_component(la, q_p, q=q)
    found = cyclic_characters_with_xi(A, xi_order)
    if not found:
        raise EmptyFiberError(f"no character of {A!r} lifts the order-{xi_order} central character")
    rho = found[0]
    if not is_tau_stable(A, rho):
        raise NotFStableError("the local system attached to the pair is moved by F")
    ext = extend_character(rho, A)[0]
    table = twisted_classes(A)
    values = []
    vm = ext.coset_value_map()
    for rep, members in table.classes:
        vals = {tuple(vm[m].coeffs) for m in members}
        if len(vals) != 1:
            raise AssertionError("extension value is not constant on a twisted class")
        values.append(vm[rep])
    exp = exponents_sl(la, xi_order)
    row = GreenBasisRow(
        group="sl",
        q=q,
        la=la,
        series=xi_order,
        rho_label=rho.label,
        extension_label=ext.label,
        dim=rho.dim,
        classes=tuple((rep, len(members)) for rep, members in table.classes),
        values=tuple(values),
        exponents=exp,
    )
    return _check_row(row)


def spin_tau_signs(la: Partition, q: int) -> tuple[int, ...]:
    """F-signs on the odd-block generators: all +1 when q = 1 mod 4, the
    alternating-index pattern otherwise."""
    if q % 4 == 1:
        return tuple(1 for _ in odd_part_positions(la))
    return tuple((-1) ** (((la[j - 1] - 1) // 2 + 1 + j) % 2) for j in odd_part_positions(la))


def y0_row_spin(
    la: Partition,
    q_p: int,
    q_k: int = 1,
    twist: str = "split",
    omega_value: Optional[str] = None,
    extension: Optional[str] = None,
) -> GreenBasisRow:
    """One table row for a spin class with central character -1 at eps.

    For even N the central character also takes a value at omega, which
    selects one of the two candidate local systems: pass omega_value as
    one of "1", "-1", "i", "-i" (matched against the character value on
    the full generator word).  A non-split twist is refused outright:
    the central character is moved by F and the fixed-point set is
    empty.
    """
    la = check_partition(la)
    if not is_in_XN(la):
        raise EmptyFiberError(f"{la} is not in X_N: no local system with central sign -1")
    if q_p == 2:
        raise ValueError("spin tables need odd q")
    q = q_p**q_k
    N = sum(la)
    if twist == "nonsplit":
        if N % 2 == 1:
            raise ValueError("odd N has no non-split form")
        raise NotFStableError(
            "central character with sign -1 at eps is moved by the non-split F (omega maps to -omega), so the fixed-point set is empty"
        )
    if twist != "split":
        raise ValueError(f"unknown twist {twist!r}")
    signs = spin_tau_signs(la, q)
    A = build_spin_gamma(la, tau_signs=signs)
    chars = spin_irreducibles(A, -1)
    if len(chars) > 1:
        if omega_value is None:
            raise ValueError("even generator count: pass omega_value to select the local system")
        ring = chars[0].ring
        target = {"1": ring.one(), "-1": -ring.one(), "i": ring.i(), "-i": -ring.i()}[omega_value]
        w = A.full_word()
        matching = [c for c in chars if c.value(w) == target * c.dim]
        if not matching:
            raise EmptyFiberError(f"no local system with omega acting by {omega_value}")
        rho = matching[0]
    else:
        rho = chars[0]
        if omega_value is not None and N % 2 == 1:
            raise ValueError("odd N has no omega in the center")
    if not is_tau_stable(A, rho):
        raise NotFStableError("the local system attached to the pair is moved by F")
    exts = extend_character(rho, A)
    if len(exts) == 1:
        ext = exts[0]
    else:
        if extension is None:
            raise ValueError(f"two extensions exist; pass extension= one of {[e.label for e in exts]}")
        ext = next(e for e in exts if e.label == extension)
    table = twisted_classes(A)
    vm = ext.coset_value_map()
    values = []
    for rep, members in table.classes:
        vals = {tuple(vm[m].coeffs) for m in members}
        if len(vals) != 1:
            raise AssertionError("extension value is not constant on a twisted class")
        values.append(vm[rep])
    exp = exponents_spin(la)
    row = GreenBasisRow(
        group="spin",
        q=q,
        la=la,
        series=defect(la),
        rho_label=rho.label,
        extension_label=ext.label,
        dim=rho.dim,
        classes=tuple((rep, len(members)) for rep, members in table.classes),
        values=tuple(values),
        exponents=exp,
    )
    return _check_row(row)


def y0_table_sl(n: int, xi_order: int, q_p: int, q_k: int = 1) -> list[GreenBasisRow]:
    """All rows of the order-d series of twisted SL_n."""
    from .partitions import partitions_of

    rows = []
    for la in partitions_of(n):
        if all(x % xi_order == 0 for x in la):
            rows.append(y0_row_sl(la, xi_order, q_p, q_k))
    return rows


def y0_table_spin(
    N: int, q_p: int, q_k: int = 1, omega_value: Optional[str] = None, extension: Optional[str] = None
) -> list[GreenBasisRow]:
    """Rows for every class of X_N (split twist, central sign -1)."""
    from .partitions import enumerate_XN

    rows = []
    for la in enumerate_XN(N):
        kwargs = {}
        if len(odd_part_positions(la)) % 2 == 0 and len(odd_part_positions(la)) > 0:
            kwargs["omega_value"] = omega_value or "1"
        try:
            rows.append(y0_row_spin(la, q_p, q_k, extension=extension, **kwargs))
        except NotFStableError:
            continue
    return rows


def row_orthogonality(rows: list[GreenBasisRow]) -> bool:
    """Exact orthogonality of distinct rows over the same class set
    (meaningful when tau acts trivially, where the twisted classes are
    plain conjugacy classes)."""
    for i in range(len(rows)):
        for j in range(len(rows)):
            if i == j or rows[i].classes != rows[j].classes:
                continue
            s = rows[i].values[0].ring.zero()
            for (rep, size), vi, vj in zip(rows[i].classes, rows[i].values, rows[j].values):
                s = s + vi * vj.conj() * size
            if not s.is_zero():
                return False
    return True
