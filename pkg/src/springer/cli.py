"""Command-line surface.

Subcommands: series, xn, split, flags, restrict, tables, verify.  All
numeric output is exact (integers or cyclotomic coefficient vectors),
TSV uses tab separators without quoting, JSON is canonical (sorted
keys), and identical invocations produce byte-identical output.  The
environment variable SPRINGER_BUDGET overrides the enumeration caps.

Exit status: 0 on success, 1 on verification failure (with a
machine-readable report), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import flinalg as fla
from . import partitions as pt
from . import restriction as rs
from . import series as sr
from . import split as sp
from . import tables as tb
from . import varieties as vr


def _parse_partition(text: str) -> pt.Partition:
    if not text:
        return ()
    return pt.check_partition(tuple(int(x) for x in text.split(",")))


def _prime_of(q: int) -> tuple[int, int]:
    """(p, k) with q = p^k."""
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def _emit(lines: list[str], out: Optional[str]) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _mat_str(K, m) -> str:
    return json.dumps([[K.serialize_element(c) for c in row] for row in m])


# ---------------------------------------------------------------------------
# subcommands


def cmd_series(args) -> int:
    lines = []
    if args.group == "spin":
        if args.N is None:
            raise SystemExit(2)
        lines.append("d\tlevi_type\tweyl_rank")
        for c in sr.enumerate_spin_series(args.N):
            lines.append(f"{c.d}\t{c.levi_type}\t{c.weyl_rank}")
    else:
        if args.n is None or args.q is None:
            raise SystemExit(2)
        p, _ = _prime_of(args.q)
        lines.append("d\tf_rational")
        for c in sr.enumerate_sl_series(args.n, p, q=args.q):
            lines.append(f"{c.d}\t{str(bool(c.f_rational)).lower()}")
    _emit(lines, args.output)
    return 0


def cmd_xn(args) -> int:
    members = pt.enumerate_XN(args.N, tilde=args.tilde)
    ordered = sorted(members, reverse=True)
    _emit([json.dumps([list(la) for la in ordered])], args.output)
    return 0


def cmd_split(args) -> int:
    lam = _parse_partition(args.lam)
    p, k = _prime_of(args.q)
    lines = []
    if args.group == "sl":
        data = sp.build_sl_split(lam, p, k)
        K = data.field
        lines.append(f"unipotent u over F_{K.q} (rows of coefficient vectors):")
        lines.append(_mat_str(K, data.unipotent))
        lines.append("hermitian form A:")
        lines.append(_mat_str(K, data.form))
        lines.append("check form_hermitian: pass")
        lines.append("check u_preserves_form: pass")
        lines.append(f"check jordan_type: {list(sp.jordan_type(data.unipotent, K, 'unipotent'))}")
        lines.append("check fixed_by_twisted_frobenius: pass")
    else:
        data = sp.build_so_split(lam, p, k)
        K = data.field
        lines.append(f"nilpotent x over F_{K.q} (rows of coefficient vectors):")
        lines.append(_mat_str(K, data.nilpotent))
        lines.append("symmetric form f:")
        lines.append(_mat_str(K, data.form))
        lines.append("check form_symmetric_nondegenerate: pass")
        lines.append("check x_skew_adjoint: pass")
        lines.append(f"check jordan_type: {list(sp.jordan_type(data.nilpotent, K, 'nilpotent'))}")
        rep = sp.frobenius_action_report(data)
        lines.append(f"frobenius_signs_on_generators: {list(rep.signs)}")
    _emit(lines, args.output)
    return 0


def cmd_flags(args) -> int:
    lam = _parse_partition(args.lam)
    p, k = _prime_of(args.q)
    lines = ["flag_id\tlambda_prime\tW\tWp\ttype_mod_W\torbit\tf_stable"]
    if args.group == "sl":
        data = sp.build_sl_split(lam, p, k)
        n = sum(lam)
        laps = [ _parse_partition(args.lam_prime) ] if args.lam_prime is not None else list(pt.partitions_of(max(n - 2 * args.d, 0)))
        for lap in laps:
            flags = vr.enumerate_flags_sl(data, args.d, lap)
            orbit_of = {}
            if flags and args.orbits:
                K = data.field
                x = fla.mat_add(K, data.unipotent, fla.mat_neg(K, fla.identity(K, n)))
                try:
                    units = vr.centralizer_units(x, K)
                    dec = vr.orbit_decomposition(flags, units, K)
                    for idx, (orbit, _) in enumerate(dec.orbits):
                        for key in orbit:
                            orbit_of[key] = idx
                except vr.VarietyBudgetError:
                    orbit_of = {}
            for idx, f in enumerate(flags):
                orb = orbit_of.get((f.W, f.Wp), "-")
                stable = vr.is_sl_flag_f_stable(data, f)
                lines.append(
                    "\t".join(
                        [
                            str(idx),
                            json.dumps(list(lap)),
                            json.dumps([list(r) for r in f.W]),
                            json.dumps([list(r) for r in f.Wp]),
                            json.dumps(list(f.type_mod_W)),
                            str(orb),
                            str(stable).lower(),
                        ]
                    )
                )
    else:
        data = sp.build_so_split(lam, p, k)
        laps = [ _parse_partition(args.lam_prime) ] if args.lam_prime is not None else list(pt.partitions_of(max(sum(lam) - 4, 0)))
        for lap in laps:
            flags = vr.enumerate_flags_so(data, lap)
            for idx, f in enumerate(flags):
                stable = vr.is_so_flag_f_stable(data, f)
                lines.append(
                    "\t".join(
                        [
                            str(idx),
                            json.dumps(list(lap)),
                            json.dumps([list(r) for r in f.E]),
                            json.dumps([list(r) for r in f.Eperp]),
                            json.dumps(list(f.type_mid)),
                            "-",
                            str(stable).lower(),
                        ]
                    )
                )
    _emit(lines, args.output)
    return 0


def cmd_restrict(args) -> int:
    lines = ["lambda\tlambda_prime\tcase\tmultiplicity"]
    n, d = args.n, args.d
    if n - 2 * d < 0:
        raise SystemExit(2)
    for la in pt.partitions_of(n):
        if any(x % d for x in la):
            continue
        for lap in pt.partitions_of(n - 2 * d):
            if any(x % d for x in lap):
                continue
            mu, mup = pt.divide(la, d), pt.divide(lap, d) if lap else ()
            case = pt.classify_pair_sl(mu, mup)
            mult = rs.branch_two_step(mu, mup).multiplicity
            lines.append(
                "\t".join(
                    [
                        json.dumps(list(la)),
                        json.dumps(list(lap)),
                        case.tag if case else "-",
                        str(mult),
                    ]
                )
            )
    _emit(lines, args.output)
    return 0


def cmd_tables(args) -> int:
    p, k = _prime_of(args.q)
    if args.group == "sl":
        if args.n is None or args.xi_order is None:
            raise SystemExit(2)
        rows = tb.y0_table_sl(args.n, args.xi_order, p, k)
        series = args.xi_order
    else:
        if args.N is None:
            raise SystemExit(2)
        rows = tb.y0_table_spin(args.N, p, k, omega_value=args.omega, extension=args.extension)
        series = "by-defect"
    if args.format == "json":
        doc = {
            "group": args.group,
            "q": args.q,
            "series": series,
            "rows": [r.to_dict() for r in rows],
        }
        _emit([json.dumps(doc, sort_keys=True)], args.output)
    else:
        lines = ["lambda\trho\textension\tdim\tclass_rep\tclass_size\tvalue"]
        for r in rows:
            for (rep, size), val in zip(r.classes, r.values):
                lines.append(
                    "\t".join(
                        [
                            json.dumps(list(r.la)),
                            r.rho_label,
                            r.extension_label,
                            str(r.dim),
                            tb._rep_str(r.group, rep),
                            str(size),
                            json.dumps(val.serialize()),
                        ]
                    )
                )
        _emit(lines, args.output)
    return 0


def cmd_verify(args) -> int:
    report: dict = {"suite": args.suite, "results": [], "ok": True}
    if args.suite == "spin-series":
        for N in range(3, args.N_max + 1):
            r = sr.verify_series_cardinality(N)
            entry = {
                "N": N,
                "ok": r.ok,
                "series": [
                    {"d": e.d, "classes": e.class_count, "bipartitions": e.bipartition_count} for e in r.entries
                ],
            }
            report["results"].append(entry)
            report["ok"] = report["ok"] and r.ok
    elif args.suite == "restriction":
        for n in range(2, args.n_max + 1):
            for d in (1, 2):
                if n - 2 * d < 0:
                    continue
                for la in pt.partitions_of(n):
                    for lap in pt.partitions_of(n - 2 * d):
                        r = rs.restriction_crosscheck_sl(la, lap, d, 3)
                        if not r.ok:
                            report["ok"] = False
                            report["results"].append(
                                {"lambda": list(la), "lambda_prime": list(lap), "d": d, "lhs": r.lhs_strata, "rhs": r.rhs_multiplicity}
                            )
        if report["ok"]:
            report["results"].append({"checked": "all", "n_max": args.n_max})
    else:
        raise SystemExit(2)
    _emit([json.dumps(report, sort_keys=True)], args.output)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="springer",
        description="Unipotent-class series, split elements, flag enumerations and exact character tables over small finite fields.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument("--output", help="write to this path instead of stdout")

    p = sub.add_parser("series", help="enumerate cuspidal series labels")
    p.add_argument("--group", choices=("spin", "sl"), required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    add_output(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("xn", help="list the partitions of N with even parts paired and odd parts distinct")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--tilde", action="store_true", help="drop the odd-multiplicity condition")
    add_output(p)
    p.set_defaults(func=cmd_xn)

    p = sub.add_parser("split", help="construct a split element and print its verification checklist")
    p.add_argument("--group", choices=("sl", "so"), required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="ascending parts, comma separated")
    p.add_argument("--q", type=int, required=True)
    add_output(p)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("flags", help="enumerate flag varieties over a small field")
    p.add_argument("--group", choices=("sl", "so"), required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--lambda-prime", dest="lam_prime", default=None)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--orbits", action="store_true", help="also compute centralizer-unit orbit ids (budget permitting)")
    add_output(p)
    p.set_defaults(func=cmd_flags)

    p = sub.add_parser("restrict", help="two-step branching case and multiplicity table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    add_output(p)
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("tables", help="emit characteristic-function table rows")
    p.add_argument("--group", choices=("sl", "spin"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--xi-order", dest="xi_order", type=int)
    p.add_argument("--omega", choices=("1", "-1", "i", "-i"))
    p.add_argument("--extension", choices=("plus", "minus", "trivial"))
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    add_output(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run a verification suite; exit 1 on failure")
    p.add_argument("--suite", choices=("spin-series", "restriction"), required=True)
    p.add_argument("--N-max", dest="N_max", type=int, default=20)
    p.add_argument("--n-max", dest="n_max", type=int, default=6)
    add_output(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (tb.EmptyFiberError, tb.NotFStableError, vr.VarietyBudgetError, ValueError) as exc:
        report = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(report, sort_keys=True) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
