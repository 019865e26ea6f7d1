"""Partition combinatorics parametrizing unipotent classes.

Partitions are ascending tuples of positive integers; the sum is the
rank N (or n) of the ambient classical group.  This module knows which
partitions support the interesting local systems (the set X_N), the
defect statistic that selects a cuspidal series, the classification of
partition pairs that appear in two-step restriction, and the closed
class-dimension formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

Partition = tuple[int, ...]


def normalize(parts) -> Partition:
    """Ascending tuple with zero parts dropped; rejects negatives."""
    ps = sorted(int(x) for x in parts if int(x) != 0)
    if ps and ps[0] < 0:
        raise ValueError(f"negative part in {parts}")
    return tuple(ps)


def check_partition(la: Partition) -> Partition:
    la = tuple(la)
    if any(x <= 0 for x in la):
        raise ValueError(f"non-positive part in {la}")
    if any(la[i] > la[i + 1] for i in range(len(la) - 1)):
        raise ValueError(f"parts of {la} are not ascending")
    return la


def multiplicities(la: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for x in la:
        out[x] = out.get(x, 0) + 1
    return out


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    desc = sorted(la, reverse=True)
    return tuple(sorted((sum(1 for x in desc if x >= i) for i in range(1, desc[0] + 1))))


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n as ascending tuples, lexicographically sorted."""

    def gen(n: int, maxpart: int):
        if n == 0:
            yield ()
            return
        for first in range(1, min(n, maxpart) + 1):
            for rest in gen(n - first, first):
                yield rest + (first,)

    yield from sorted(gen(n, n))


@lru_cache(maxsize=None)
def num_partitions(n: int) -> int:
    if n < 0:
        return 0
    if n == 0:
        return 1
    # Euler's pentagonal recurrence
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if g1 <= n:
            total += sign * num_partitions(n - g1)
        if g2 <= n:
            total += sign * num_partitions(n - g2)
        k += 1
    return total


# ---------------------------------------------------------------------------
# X_N and the defect


def is_in_XN_tilde(la: Partition) -> bool:
    """Even parts occur with even multiplicity (orthogonal Jordan types)."""
    return all(m % 2 == 0 for part, m in multiplicities(check_partition(la)).items() if part % 2 == 0)


def is_in_XN(la: Partition) -> bool:
    """Members of X_N: orthogonal type and odd parts with multiplicity <= 1."""
    mult = multiplicities(check_partition(la))
    for part, m in mult.items():
        if part % 2 == 0 and m % 2 != 0:
            return False
        if part % 2 == 1 and m > 1:
            return False
    return True


def enumerate_XN(N: int, tilde: bool = False) -> list[Partition]:
    """All members of X_N (or of the larger set X~_N), lexicographically sorted."""
    test = is_in_XN_tilde if tilde else is_in_XN
    return [la for la in partitions_of(N) if test(la)]


def part_defect(m: int) -> int:
    if m % 2 == 0:
        return 0
    return 1 if m % 4 == 1 else -1


def defect(la: Partition) -> int:
    """Sum of the per-part defects: 0 for even parts, +-1 for odd parts
    according to the residue of the part mod 4."""
    return sum(part_defect(x) for x in la)


def delta_index(la: Partition, j: int) -> int:
    """The index (part_j - 1)/2 + j attached to an odd part (j is 1-based)."""
    la = check_partition(la)
    if not 1 <= j <= len(la):
        raise IndexError(f"part index {j} out of range for {la}")
    if la[j - 1] % 2 == 0:
        raise ValueError(f"part {la[j-1]} at index {j} is even")
    return (la[j - 1] - 1) // 2 + j


def odd_part_positions(la: Partition) -> list[int]:
    """1-based positions of the odd parts."""
    return [j for j, x in enumerate(la, start=1) if x % 2 == 1]


def divide(la: Partition, d: int) -> Partition:
    la = check_partition(la)
    if d < 1:
        raise ValueError(f"divisor {d} must be positive")
    if any(x % d for x in la):
        raise ValueError(f"{d} does not divide every part of {la}")
    return tuple(x // d for x in la)


# ---------------------------------------------------------------------------
# pair-case classification


@dataclass(frozen=True)
class PairCaseSpin:
    """Matching case for a pair (la, la') with |la| - |la'| = 4.

    tag is one of "I", "II", "III", "IV", "V"; pivot is the 1-based
    index i in la.  Tag III is recognized (it has a distinct removal
    pattern) but marked unsupported: no downstream construction uses it.
    """

    tag: str
    pivot: int
    supported: bool = True


@dataclass(frozen=True)
class PairCaseSL:
    """Matching case for (mu, mu') with |mu| - |mu'| = 2.

    tag "I": one part drops by 2; "II": two equal parts drop by 1 each;
    "III": two distinct parts drop by 1 each.  pivots holds (i,) or (i, j),
    1-based indices into mu.
    """

    tag: str
    pivots: tuple[int, ...]


_SPIN_CASE_ORDER = ("I", "II", "III", "IV", "V")


def _spin_case_matches(la: Partition, lap: Partition, tag: str, i: int) -> bool:
    """Whether the tag's inequalities hold at pivot i and the part drops
    produce la' (as a multiset).  i is 1-based; la_0 is treated as 0."""
    k = len(la)

    def part(j: int) -> int:
        return la[j - 1] if 1 <= j <= k else 0

    drops: dict[int, int]
    if tag == "I":
        if i < 1 or i > k:
            return False
        if part(i) % 2 == 0 or not part(i) > part(i - 1) + 4:
            return False
        drops = {i: 4}
    elif tag == "II":
        if i < 1 or i + 1 > k:
            return False
        if part(i) != part(i + 1) or not part(i) >= part(i - 1) + 2:
            return False
        drops = {i: 2, i + 1: 2}
    elif tag == "III":
        if i < 1 or i + 1 > k:
            return False
        if part(i) != part(i + 1) or not part(i) >= part(i - 1) + 4:
            return False
        drops = {i: 3, i + 1: 1}
    elif tag == "IV":
        if i < 1 or i + 1 > k:
            return False
        if part(i + 1) - 2 != part(i) or not part(i) >= part(i - 1) + 1:
            return False
        drops = {i: 1, i + 1: 3}
    elif tag == "V":
        if i < 1 or i + 2 > k:
            return False
        if not (part(i + 2) == part(i + 1) == part(i) + 1):
            return False
        drops = {i: 1, i + 1: 2, i + 2: 1}
    else:
        raise ValueError(f"unknown spin case tag {tag}")
    new_parts = [part(j) - drops.get(j, 0) for j in range(1, k + 1)]
    if any(x < 0 for x in new_parts):
        return False
    return normalize(new_parts) == tuple(lap)


def match_pair_spin_all(la: Partition, lap: Partition) -> list[tuple[str, int]]:
    """Every (tag, pivot) whose inequalities and removal pattern match."""
    la = check_partition(la)
    lap = check_partition(lap)
    out = []
    if sum(la) - sum(lap) != 4:
        return out
    for tag in _SPIN_CASE_ORDER:
        for i in range(1, len(la) + 1):
            if _spin_case_matches(la, lap, tag, i):
                out.append((tag, i))
    return out


def classify_pair_spin(la: Partition, lap: Partition) -> Optional[PairCaseSpin]:
    """The unique case tag for the pair, with the smallest matching pivot.

    Returns None when no case applies.  A pair matching two different
    tags would be an error; none occur for N <= 20 and the constraint is
    enforced.  Case III pairs are returned with supported=False.
    """
    matches = match_pair_spin_all(la, lap)
    if not matches:
        return None
    tags = sorted({t for t, _ in matches})
    if len(tags) > 1:
        raise ValueError(f"ambiguous spin case for {la} -> {lap}: tags {tags}")
    tag = tags[0]
    pivot = min(i for t, i in matches if t == tag)
    return PairCaseSpin(tag=tag, pivot=pivot, supported=tag != "III")


def classify_pair_sl(mu: Partition, mup: Partition) -> Optional[PairCaseSL]:
    """Two-box removal pattern between mu and mu', or None.

    The pattern is read off the Young diagrams (descending rows): a
    horizontal pair in one row is case I, a vertical pair (two equal
    parts each losing a box) is case II, two boxes in distinct rows and
    columns is case III.
    """
    mu = check_partition(mu)
    mup = check_partition(mup)
    if sum(mu) - sum(mup) != 2:
        return None
    desc = sorted(mu, reverse=True)
    descp = sorted(mup, reverse=True) + [0] * (len(mu) - len(mup))
    if len(descp) > len(desc):
        return None
    diffs = [a - b for a, b in zip(desc, descp)]
    if any(d < 0 for d in diffs):
        return None
    changed = [r for r, d in enumerate(diffs) if d]

    def asc_index(desc_row: int) -> int:
        # 1-based index of the same part in the ascending presentation;
        # among equal parts take the first ascending slot not yet used.
        return len(mu) - desc_row

    if len(changed) == 1 and diffs[changed[0]] == 2:
        return PairCaseSL(tag="I", pivots=(asc_index(changed[0]),))
    if len(changed) == 2 and all(diffs[r] == 1 for r in changed):
        r1, r2 = changed
        i1, i2 = sorted((asc_index(r1), asc_index(r2)))
        if desc[r1] == desc[r2]:
            return PairCaseSL(tag="II", pivots=(i1,))
        return PairCaseSL(tag="III", pivots=(i1, i2))
    return None


# ---------------------------------------------------------------------------
# class dimensions

GROUP_KINDS = ("GL", "SL", "SO", "Sp")


def group_dimension(kind: str, n: int) -> int:
    if kind == "GL":
        return n * n
    if kind == "SL":
        return n * n - 1
    if kind == "SO":
        return n * (n - 1) // 2
    if kind == "Sp":
        if n % 2:
            raise ValueError("Sp rank must be even")
        return n * (n + 1) // 2
    raise ValueError(f"unknown group kind {kind}")


def class_dimension(la: Partition, group_kind: str) -> int:
    """Dimension of the unipotent (or nilpotent) class of Jordan type la.

    Standard conjugate-partition formulas; the test suite ties them to a
    finite-field point-count oracle instead of trusting transcription.
    """
    la = check_partition(la)
    n = sum(la)
    lam_conj = conjugate(la)
    sq = sum(x * x for x in lam_conj)
    odd = sum(1 for x in la if x % 2 == 1)
    if group_kind in ("GL", "SL"):
        return n * n - sq
    if group_kind == "SO":
        if not is_in_XN_tilde(la):
            raise ValueError(f"{la} is not an orthogonal Jordan type")
        return n * (n - 1) // 2 - (sq - odd) // 2
    if group_kind == "Sp":
        if n % 2 or any(x % 2 == 1 and m % 2 for x, m in multiplicities(la).items()):
            raise ValueError(f"{la} is not a symplectic Jordan type")
        return n * (n + 1) // 2 - (sq + odd) // 2
    raise ValueError(f"unknown group kind {group_kind}")


def centralizer_algebra_dimension(la: Partition) -> int:
    """dim of {m : m x = x m} for x nilpotent of type la (any field)."""
    la = check_partition(la)
    return sum(min(a, b) for a in la for b in la)


def serialize(la: Partition) -> list[int]:
    return list(la)
