"""Cuspidal series enumeration and series-level correspondence maps.

For the spin groups the series with nontrivial central character are
labeled by integers d with d = N mod 4 and d(2d - 1) < N; the attached
Weyl group is hyperoctahedral of rank (N - d(2d - 1))/4.  For SL_n the
series are labeled by divisors d of n (the order of a central
character), with symmetric-group Weyl groups of degree n/d.

Only the series-level data is produced here.  The partition-to-label
map is implemented for SL (divide by d); on the spin side the testable
surrogate is the cardinality identity checked by
verify_series_cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .component_groups import p_prime_part
from .partitions import (
    Partition,
    check_partition,
    defect,
    divide,
    enumerate_XN,
    is_in_XN,
    num_partitions,
)


@dataclass(frozen=True)
class CuspidalDatumSpin:
    d: int
    levi_type: str
    weyl_rank: int


@dataclass(frozen=True)
class CuspidalDatumSL:
    d: int
    levi_factors: int  # n/d copies of GL_d
    weyl_degree: int  # symmetric group S_{n/d}
    f_rational: bool | None = None  # d | q + 1 for the twisted form; None if no q given


def spin_weyl_rank(N: int, d: int) -> int:
    num = N - d * (2 * d - 1)
    if num < 0 or num % 4:
        raise ValueError(f"d = {d} is not a series label for N = {N}")
    return num // 4


def _spin_levi_label(N: int, d: int) -> str:
    rank = spin_weyl_rank(N, d)
    core = d * (2 * d - 1)
    if N % 2 == 1:
        head = f"B{(abs(d) - 1) * (2 * abs(d) + 1) // 2}" if core > 1 else "B0"
    else:
        head = f"D{core // 2}"
    a1s = "+".join(["A1"] * rank)
    return head + ("+" + a1s if a1s else "")


def enumerate_spin_series(N: int) -> list[CuspidalDatumSpin]:
    """All series labels d with d = N mod 4 and d(2d-1) <= N, sorted by
    |d| then sign.

    Equality d(2d-1) = N is the rank-zero series whose cuspidal datum
    lives on the whole group; it must be included for every member of
    X_N to land in a series (e.g. N = 3, d = -1).
    """
    if N < 3:
        raise ValueError("spin series need N >= 3")
    out = []
    bound = 1
    while bound * (2 * bound - 1) <= N:
        bound += 1
    for d in range(-bound, bound + 1):
        if (d - N) % 4 == 0 and d * (2 * d - 1) <= N:
            out.append(CuspidalDatumSpin(d=d, levi_type=_spin_levi_label(N, d), weyl_rank=spin_weyl_rank(N, d)))
    out.sort(key=lambda c: (abs(c.d), -c.d))
    return out


def spin_series_of(la: Partition) -> tuple[int, int]:
    """(d, weyl_rank) for a partition in X_N: d is the defect."""
    la = check_partition(la)
    if not is_in_XN(la):
        raise ValueError(f"{la} is not in X_N")
    N = sum(la)
    d = defect(la)
    return d, spin_weyl_rank(N, d)


@dataclass(frozen=True)
class RepLabel:
    kind: str  # "partition" (symmetric group) or "bipartition" (hyperoctahedral)
    content: tuple

    @property
    def size(self) -> int:
        if self.kind == "partition":
            return sum(self.content)
        return sum(sum(p) for p in self.content)


def sl_springer_label(la: Partition, d: int) -> RepLabel:
    """The symmetric-group label of a class in the order-d series: la/d.

    Raises when d fails to divide some part (the series fiber over la is
    then empty)."""
    la = check_partition(la)
    try:
        mu = divide(la, d)
    except ValueError as exc:
        raise ValueError(f"empty fiber: {exc}") from exc
    return RepLabel(kind="partition", content=mu)


def enumerate_sl_series(n: int, p: int, q: int | None = None) -> list[CuspidalDatumSL]:
    """Series labels for SL_n in characteristic p: divisors d of the
    p'-part of n.  Given q, each is flagged F-rational iff d | q + 1."""
    if n < 1:
        raise ValueError("n must be positive")
    nprime = p_prime_part(n, p)
    out = []
    for d in range(1, nprime + 1):
        if nprime % d:
            continue
        flag = None if q is None else (q + 1) % d == 0
        out.append(CuspidalDatumSL(d=d, levi_factors=n // d, weyl_degree=n // d, f_rational=flag))
    return out


def xi_is_f_stable(d: int, q: int) -> bool:
    """Direct computation: xi of order d satisfies xi^{-q} = xi iff
    (-q) = 1 mod d, i.e. d | q + 1."""
    return (-q) % d == 1 % d


@lru_cache(maxsize=None)
def count_bipartitions(m: int) -> int:
    """Ordered pairs of partitions of total size m (hyperoctahedral
    irreducible count)."""
    if m < 0:
        raise ValueError("size must be non-negative")
    return sum(num_partitions(k) * num_partitions(m - k) for k in range(m + 1))


@dataclass(frozen=True)
class SeriesCountEntry:
    d: int
    weyl_rank: int
    class_count: int
    bipartition_count: int

    @property
    def ok(self) -> bool:
        return self.class_count == self.bipartition_count


@dataclass(frozen=True)
class SeriesCardinalityReport:
    N: int
    entries: tuple[SeriesCountEntry, ...]
    all_classes_mapped: bool

    @property
    def ok(self) -> bool:
        return self.all_classes_mapped and all(e.ok for e in self.entries)


def verify_series_cardinality(N: int) -> SeriesCardinalityReport:
    """Per series d: |{la in X_N : defect = d}| versus the number of
    bipartitions of the series rank; also checks every class lands in an
    enumerated series."""
    series = enumerate_spin_series(N)
    labels = {s.d for s in series}
    members = enumerate_XN(N)
    by_d: dict[int, int] = {}
    mapped = True
    for la in members:
        d = defect(la)
        if d not in labels:
            mapped = False
        by_d[d] = by_d.get(d, 0) + 1
    entries = tuple(
        SeriesCountEntry(
            d=s.d,
            weyl_rank=s.weyl_rank,
            class_count=by_d.get(s.d, 0),
            bipartition_count=count_bipartitions(s.weyl_rank),
        )
        for s in series
    )
    return SeriesCardinalityReport(N=N, entries=entries, all_classes_mapped=mapped)
