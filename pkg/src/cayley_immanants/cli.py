"""Command-line entry point.

Subcommands: imm, twin, support, padic, minors, verify, explore,
search-pd-gap.  Output is JSON on stdout (CSV for padic) unless --out is
given; all randomness sits behind --seed.  Exit codes: 0 ok, 1 check failed,
2 usage or parse error, 3 enumeration envelope exceeded.  The IMM_THREADS
environment variable caps the engine's worker count (0 = auto).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .characters import Partition
from .groups import GroupSpec, _prime_factorization, parse_group
from .immanants import (
    EnvelopeError,
    immanant,
    perm_class_stats,
    twin_difference,
)
from .minors import (
    F1,
    T2,
    T12,
    IdentityCheckError,
    inverse_profile,
    jacobi_check,
    lemma43_scalars,
    random_specialization,
    reduction_check,
    specialized_det,
)
from .supports import (
    count_D,
    count_I_nearhook,
    count_P,
    det_coeff,
    monomial_sequence,
    near_hook_coeff,
    padic_profile,
    sorted_hall_support,
)
from .verify import SUITES, run_suite

MINOR_CHECKS = ("conv", "jacobi", "f1", "t2t12", "scalars", "reduction")


def _group_arg(text: str) -> GroupSpec:
    try:
        return parse_group(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _partition_arg(text: str) -> Partition:
    try:
        parts = tuple(int(p) for p in text.split(","))
        return Partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")


def _json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def cmd_imm(args) -> int:
    spec = args.group
    poly = immanant(spec, args.partition, mode=args.mode)
    doc = poly.to_json_dict()
    summary = {
        "group": spec.name,
        "partition": list(args.partition.parts),
        "mode": args.mode,
        "support_size": poly.support_size,
    }
    if args.out:
        # the file carries the bare polynomial schema; stdout the summary
        _emit(_json(doc), args.out)
        summary["out"] = args.out
        _emit(_json(summary), None)
    else:
        _emit(_json(doc | summary), None)
    return 0


def cmd_twin(args) -> int:
    poly = twin_difference(args.group)
    doc = {"group": args.group.name, "support_size": poly.support_size}
    if args.out:
        _emit(_json(poly.to_json_dict()), args.out)
        doc["out"] = args.out
    _emit(_json(doc), None)
    return 0


def cmd_support(args) -> int:
    spec = args.group
    hook, cohook = count_I_nearhook(spec)
    doc = {
        "group": spec.name,
        "P": count_P(spec),
        "D": count_D(spec),
        "I_hook": hook,
        "I_cohook": cohook,
    }
    if args.report == "full":
        rows = []
        for mono in sorted_hall_support(spec):
            stats = perm_class_stats(spec, mono)
            h, c = near_hook_coeff(spec, mono, stats)
            rows.append(
                {
                    "exp": list(mono),
                    "p_m": stats.p_m,
                    "d_m": stats.d_m,
                    "det_coeff": det_coeff(spec, mono),
                    "hook_coeff": h,
                    "cohook_coeff": c,
                }
            )
        doc["monomials"] = rows
    _emit(_json(doc), args.out)
    return 0


def _format_element(element) -> str:
    return ":".join(str(r) for r in element)


def _parse_sequence(text: str):
    out = []
    for chunk in text.split(","):
        residues = tuple(int(r) for r in chunk.strip().split(":"))
        out.append(residues)
    return tuple(out)


def cmd_padic(args) -> int:
    spec = args.group
    if len(_prime_factorization(spec.order)) != 1:
        print(f"error: {spec.name} does not have prime-power order", file=sys.stderr)
        return 2
    if args.sequence:
        sequences = [_parse_sequence(args.sequence)]
    elif args.all:
        sequences = [monomial_sequence(spec, m) for m in sorted_hall_support(spec)]
    else:
        print("error: provide --all or --sequence", file=sys.stderr)
        return 2
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["sequence", "min_valuation", "strictly_minimal"])
    for seq in sequences:
        profile = padic_profile(spec, seq)
        rendered = " ".join(_format_element(g) for g in seq)
        min_val = min(v for _, v in profile.terms)
        writer.writerow([rendered, min_val, profile.strictly_minimal])
    _emit(buffer.getvalue(), args.out)
    return 0


def cmd_minors(args) -> int:
    spec = args.group
    checks = args.checks.split(",") if args.checks else list(MINOR_CHECKS)
    for name in checks:
        if name not in MINOR_CHECKS:
            print(
                f"error: unknown check {name!r} (choose from {', '.join(MINOR_CHECKS)})",
                file=sys.stderr,
            )
            return 2
    n = spec.order
    results: dict[str, dict] = {}

    def record(name, status, counterexample=None):
        results[name] = {"status": status, "counterexample": counterexample}

    twin = None
    if "reduction" in checks and n >= 6:
        twin = twin_difference(spec)
    for name in checks:
        failure = None
        skipped = None
        if name in ("f1", "t2t12", "scalars") and n % 2 == 0:
            skipped = "odd order required"
        elif name == "reduction" and n < 6:
            skipped = "group order below 6"
        if skipped:
            record(name, "skipped", skipped)
            continue
        for i in range(args.seeds):
            rho = random_specialization(spec, args.seed + i, args.range)
            try:
                if name == "conv":
                    inverse_profile(spec, rho)
                elif name == "jacobi":
                    report = jacobi_check(spec, rho)
                    if not report.passed:
                        subset, lhs, rhs = report.violations[0]
                        failure = {"seed": args.seed + i, "subset": list(subset),
                                   "lhs": str(lhs), "rhs": str(rhs)}
                elif name == "f1":
                    lhs, rhs = F1(spec, rho), specialized_det(spec, rho)
                    if lhs != rhs:
                        failure = {"seed": args.seed + i, "F1": str(lhs), "det": str(rhs)}
                elif name == "t2t12":
                    lhs, rhs = T12(spec, rho), T2(spec, rho)
                    if lhs != rhs:
                        failure = {"seed": args.seed + i, "T12": str(lhs), "T2": str(rhs)}
                elif name == "scalars":
                    lemma43_scalars(spec, rho)
                elif name == "reduction":
                    report = reduction_check(spec, rho, twin=twin)
                    if not report.passed:
                        failure = {
                            "seed": args.seed + i,
                            "twin_value": str(report.twin_value),
                            "minor_value": str(report.minor_value),
                        }
            except IdentityCheckError as exc:
                failure = {"seed": args.seed + i, "equation": exc.equation,
                           "lhs": str(exc.lhs), "rhs": str(exc.rhs)}
            if failure:
                break
        record(name, "fail" if failure else "pass", failure)
    doc = {"group": spec.name, "seeds": args.seeds, "checks": results}
    _emit(_json(doc), args.out)
    return 0 if all(r["status"] != "fail" for r in results.values()) else 1


def cmd_verify(args) -> int:
    groups = args.groups.split(",") if args.groups else None
    reports = run_suite(args.suite, groups=groups, max_order=args.max_order, seed=args.seed)
    doc = {
        "suite": args.suite,
        "reports": [r.to_json_dict(with_timings=args.timings) for r in reports],
        "passed": all(r.status != "fail" for r in reports),
    }
    _emit(_json(doc), args.out)
    return 0 if doc["passed"] else 1


def cmd_explore(args) -> int:
    if args.conjecture != 3:
        print("error: only conjecture 3 is implemented", file=sys.stderr)
        return 2
    n = args.n
    spec = GroupSpec((n,))
    if n % 2 == 0 or n < 7:
        print("error: conjecture 3 concerns odd n >= 7", file=sys.stderr)
        return 2
    poly = immanant(spec, Partition((n - 2, 1, 1)))
    doc = {
        "conjecture": 3,
        "group": spec.name,
        "I_(n-2,1,1)": poly.support_size,
        "P": count_P(spec),
        "equal": poly.support_size == count_P(spec),
        "note": "reported for exploration; no result is asserted",
    }
    _emit(_json(doc), args.out)
    return 0


def _abelian_groups_of_order(order: int) -> list[GroupSpec]:
    from .characters import partitions_of

    specs = [[]]
    for p, e in sorted(_prime_factorization(order).items()):
        extended = []
        for lam in partitions_of(e):
            factors = [p**part for part in lam.parts]
            extended.extend(base + factors for base in specs)
        specs = extended
    # present each group by its invariant factors, e.g. c6 rather than c2xc3
    return sorted(
        {GroupSpec(GroupSpec(tuple(sorted(f))).canonical_form()) for f in specs},
        key=lambda s: s.factors,
    )


def cmd_search_pd_gap(args) -> int:
    rows = []
    gap_orders = set()
    for order in range(2, args.max_order + 1):
        for spec in _abelian_groups_of_order(order):
            p, d = count_P(spec), count_D(spec)
            rows.append({"group": spec.name, "order": order, "P": p, "D": d,
                         "gap": d < p})
            if d < p:
                gap_orders.add(order)
    doc = {
        "max_order": args.max_order,
        "groups": rows,
        "gap_orders": sorted(gap_orders),
        "note": "reported for exploration; no result is asserted",
    }
    _emit(_json(doc), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley-imm",
        description="Exact immanants of Cayley-table matrices of finite abelian groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, group=True):
        if group:
            p.add_argument("--group", type=_group_arg, required=True,
                           help="group spec, e.g. c3 or c2xc4")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("imm", help="compute one immanant as a sparse polynomial")
    add_common(p)
    p.add_argument("--partition", type=_partition_arg, required=True,
                   help="comma-separated decreasing parts, e.g. 4,1,1,1")
    p.add_argument("--mode", choices=("bruteforce", "orbit"), default="bruteforce")
    p.set_defaults(func=cmd_imm)

    p = sub.add_parser("twin", help="support size of the twin-immanant difference")
    add_common(p)
    p.set_defaults(func=cmd_twin)

    p = sub.add_parser("support", help="P, D and near-hook support counts")
    add_common(p)
    p.add_argument("--report", choices=("counts", "full"), default="counts")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("padic", help="valuation profiles of zero-sum sequences")
    add_common(p)
    p.add_argument("--all", action="store_true",
                   help="profile every zero-sum multiset of length n")
    p.add_argument("--sequence",
                   help="one sequence, elements comma-separated, residues colon-joined")
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("minors", help="exact minor-identity checks at random points")
    add_common(p)
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--range", type=int, default=32)
    p.add_argument("--checks", help=f"comma list from: {','.join(MINOR_CHECKS)}")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("verify", help="run a theorem-verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--groups", help="comma list of group specs overriding the defaults")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--timings", action="store_true",
                   help="include wall times (breaks byte-identical output)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="numerical exploration of open items")
    p.add_argument("--conjecture", type=int, required=True, choices=(3,))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("search-pd-gap", help="orders where D < P (report only)")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search_pd_gap)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnvelopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
