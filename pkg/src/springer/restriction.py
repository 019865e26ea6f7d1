"""Two-step symmetric-group branching and the restriction crosscheck.

The multiplicity of an irreducible of S_{m-2} in the restriction of an
irreducible of S_m is the number of two-box removal paths between the
shapes; it is 1 when the removed boxes share a row or a column and 2
otherwise, which is the case table of the removal classification.  The
crosscheck compares that number against the count of Jordan-type strata
in the corresponding flag enumeration over a small field.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .partitions import Partition, check_partition, classify_pair_sl, divide, normalize
from .split import build_sl_split
from .varieties import sl_stratum_analysis


def one_box_removals(mu: Partition) -> list[Partition]:
    """Shapes obtained by removing one corner box."""
    desc = sorted(mu, reverse=True)
    out = []
    for i in range(len(desc)):
        if i == len(desc) - 1 or desc[i] > desc[i + 1]:
            cand = list(desc)
            cand[i] -= 1
            out.append(normalize(cand))
    # distinct parts give distinct shapes; keep deterministic order
    seen = []
    for s in out:
        if s not in seen:
            seen.append(s)
    return seen


@dataclass(frozen=True)
class BranchResult:
    multiplicity: int
    witnesses: tuple[Partition, ...]  # intermediate shapes, one per path
    case_tag: Optional[str]


def branch_two_step(mu: Partition, mup: Partition) -> BranchResult:
    """Multiplicity of mu' in the two-step restriction from mu.

    Counted by the classical one-box rule applied twice; the result is
    checked on the spot against the case table (1 for a shared row or
    column, 2 for distinct rows and columns, 0 when no case applies).
    """
    mu = check_partition(mu)
    mup = check_partition(mup)
    if sum(mu) - sum(mup) != 2:
        raise ValueError(f"sizes {sum(mu)} and {sum(mup)} do not differ by 2")
    witnesses = tuple(kappa for kappa in one_box_removals(mu) if mup in one_box_removals(kappa))
    case = classify_pair_sl(mu, mup)
    expected = 0 if case is None else (2 if case.tag == "III" else 1)
    if len(witnesses) != expected:
        raise AssertionError(f"branching oracle {len(witnesses)} disagrees with case table {expected} for {mu} -> {mup}")
    return BranchResult(multiplicity=len(witnesses), witnesses=witnesses, case_tag=None if case is None else case.tag)


@dataclass(frozen=True)
class CrosscheckReport:
    la: Partition
    lap: Partition
    d: int
    q: int
    lhs_strata: int
    rhs_multiplicity: int
    strata_types: tuple[Partition, ...]
    principal_types: tuple[Partition, ...]

    @property
    def ok(self) -> bool:
        return self.lhs_strata == self.rhs_multiplicity


def restriction_crosscheck_sl(la: Partition, lap: Partition, d: int, q_p: int, q_k: int = 1) -> CrosscheckReport:
    """Principal stratum count of the flag variety versus the branching
    number.

    The isotypic piece lives on the top-dimensional components, which are
    the strata labeled by single-row drops of the ambient type; strata
    with mixed-strip labels occur for d > 1 but in smaller dimension and
    are reported without being counted.  Incompatible inputs (a part not
    divisible by d on either side) give 0 = 0.
    """
    la = check_partition(la)
    lap = check_partition(lap)
    q = q_p**q_k
    compatible = all(x % d == 0 for x in la) and all(x % d == 0 for x in lap)
    if sum(la) - sum(lap) != 2 * d:
        compatible = False
    if not compatible:
        # no central character of order d lives on either side, so no
        # isotypic piece exists: both sides of the identity are zero
        return CrosscheckReport(
            la=la, lap=lap, d=d, q=q, lhs_strata=0, rhs_multiplicity=0, strata_types=(), principal_types=()
        )
    rhs = branch_two_step(divide(la, d), divide(lap, d) if lap else ()).multiplicity
    data = build_sl_split(la, q_p, q_k)
    report = sl_stratum_analysis(data, d, lap)
    return CrosscheckReport(
        la=la,
        lap=lap,
        d=d,
        q=q,
        lhs_strata=len(report.principal_types),
        rhs_multiplicity=rhs,
        strata_types=report.types,
        principal_types=report.principal_types,
    )
