"""One-shot verification suites: every theorem-level check behind the CLI.

Each suite returns machine-parseable reports.  Group lists default to the
orders the checks were designed around and can be overridden; all randomness
is derived from the caller's seed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .characters import (
    CycleType,
    Partition,
    char_n3_3,
    char_n3_111,
    cohook_char,
    dimension,
    hook_char_n11,
    mn_character,
    partitions_of,
    twin_diff_char,
)
from .groups import (
    GroupSpec,
    _prime_factorization,
    add_table,
    doubling_counts,
    parse_group,
)
from .immanants import (
    EnvelopeError,
    determinant,
    immanant,
    perm_class_stats,
    permanent,
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
from .polynomials import GroupPolynomial
from .supports import (
    count_D,
    count_I_nearhook,
    count_P,
    hall_support,
    monomial_sequence,
    near_hook_coeff,
    near_hook_scalar_numerator,
    padic_profile,
    sorted_hall_support,
)

SUITES = ("hall", "thm13", "thm14", "thm15", "prop42", "jacobi", "scalars", "all")

HALL_GROUPS = ("c4", "c5", "c6", "c7", "c8", "c2xc2", "c2xc4", "c3xc3")
PRIME_POWER_GROUPS = (
    "c2", "c3", "c4", "c2xc2", "c5", "c7", "c8", "c2xc4", "c2xc2xc2", "c9", "c3xc3",
)
PADIC_GROUPS = ("c4", "c8", "c9")
ODD_GROUPS = ("c3", "c5", "c7", "c9", "c3xc3")
TWIN_GROUPS = ("c7", "c9", "c3xc3")
JACOBI_GROUPS = ("c3", "c4", "c5", "c6", "c7", "c8", "c2xc2", "c2xc4", "c2xc2xc2")
SCALAR_GROUPS = ("c3", "c5", "c7", "c9")
REDUCTION_GROUPS = ("c6", "c7", "c8", "c9")
REGULAR_CHAR_GROUPS = ("c2", "c3", "c4", "c2xc2", "c5", "c6")


@dataclass
class VerifyReport:
    """Machine-parseable outcome of one theorem check on one group."""

    theorem: str
    group: str
    params: dict = field(default_factory=dict)
    status: str = "pass"
    witness: str | None = None
    seconds: float = 0.0

    def to_json_dict(self, with_timings: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "group": self.group,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
        }
        if with_timings:
            out["seconds"] = round(self.seconds, 3)
        return out


class SkipCheck(Exception):
    """A check whose theorem hypothesis the group does not satisfy."""


def _require(condition: bool, reason: str) -> None:
    if not condition:
        raise SkipCheck(reason)


def _run(theorem: str, group: str, params: dict, fn) -> VerifyReport:
    start = time.perf_counter()
    try:
        witness = fn()
        status = "pass" if witness is None else "fail"
    except (EnvelopeError, SkipCheck) as exc:
        status, witness = "skipped", str(exc)
    except (IdentityCheckError, ArithmeticError, ValueError) as exc:
        status, witness = "fail", f"{type(exc).__name__}: {exc}"
    return VerifyReport(
        theorem=theorem,
        group=group,
        params=params,
        status=status,
        witness=witness,
        seconds=time.perf_counter() - start,
    )


def _groups(names, override, max_order):
    chosen = tuple(override) if override else tuple(names)
    specs = [parse_group(name) for name in chosen]
    if max_order is not None:
        specs = [s for s in specs if s.order <= max_order]
    return specs


DET_C3 = {(3, 0, 0): -1, (0, 3, 0): -1, (0, 0, 3): -1, (1, 1, 1): 3}
PER_C3 = {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): 3}


def suite_hall(groups=None, max_order=None, seed=1) -> list[VerifyReport]:
    reports = []

    def c3_ground_truth():
        spec = GroupSpec((3,))
        if determinant(spec) != GroupPolynomial.from_terms(spec, DET_C3):
            return "det(M_C3) differs from the expanded form"
        if permanent(spec) != GroupPolynomial.from_terms(spec, PER_C3):
            return "per(M_C3) differs from the expanded form"
        if (count_P(spec), count_D(spec)) != (4, 4):
            return f"(P, D)(C3) = {(count_P(spec), count_D(spec))} != (4, 4)"
        return None

    reports.append(_run("c3-ground-truth", "c3", {}, c3_ground_truth))
    for spec in _groups(HALL_GROUPS, groups, max_order):

        def check(spec=spec):
            got = permanent(spec).support()
            expected = hall_support(spec)
            if got != expected:
                extra = sorted(got ^ expected)[:3]
                return f"support mismatch, e.g. {extra}"
            return None

        reports.append(_run("hall-permanent-support", spec.name, {}, check))
    return reports


def suite_thm13(groups=None, max_order=None, seed=1) -> list[VerifyReport]:
    reports = []
    for spec in _groups(PRIME_POWER_GROUPS, groups, max_order):

        def check(spec=spec):
            _require(
                len(_prime_factorization(spec.order)) == 1,
                f"order {spec.order} is not a prime power",
            )
            p, d = count_P(spec), count_D(spec)
            if p != d:
                return f"P = {p} != D = {d}"
            if spec.order <= 8:
                if permanent(spec).support_size != p:
                    return "formula P differs from brute force"
                if determinant(spec).support_size != d:
                    return "formula D differs from brute force"
            return None

        reports.append(
            _run("prime-power-P-equals-D", spec.name, {"order": spec.order}, check)
        )
    for spec in _groups(PADIC_GROUPS, groups, max_order):

        def check(spec=spec):
            _require(
                len(_prime_factorization(spec.order)) == 1,
                f"order {spec.order} is not a prime power",
            )
            for mono in sorted_hall_support(spec):
                profile = padic_profile(spec, monomial_sequence(spec, mono))
                if not profile.strictly_minimal:
                    return f"one-block term not strictly minimal at {mono}"
            return None

        reports.append(_run("padic-certificate", spec.name, {}, check))
    return reports


def suite_thm14(groups=None, max_order=None, seed=1) -> list[VerifyReport]:
    reports = []
    for spec in _groups(ODD_GROUPS, groups, max_order):

        def check(spec=spec):
            n = spec.order
            _require(n % 2 == 1, f"order {n} is not odd")
            hook = immanant(spec, Partition((n - 1, 1)))
            if not hook.is_zero:
                return f"imm_(n-1,1) has {hook.support_size} terms"
            cohook = immanant(spec, Partition((2,) + (1,) * (n - 2)))
            if not cohook.is_zero:
                return f"imm_(2,1^(n-2)) has {cohook.support_size} terms"
            for mono in hall_support(spec):
                if near_hook_scalar_numerator(spec, mono) != 0:
                    return f"scalar numerator nonzero at {mono}"
            return None

        reports.append(_run("odd-order-near-hooks-vanish", spec.name, {}, check))

    def c6_check():
        spec = GroupSpec((6,))
        hook = immanant(spec, Partition((5, 1)))
        cohook = immanant(spec, Partition((2, 1, 1, 1, 1)))
        counts = count_I_nearhook(spec)
        if counts != (hook.support_size, cohook.support_size):
            return f"formula counts {counts} differ from brute force"
        if counts != (count_P(spec), count_D(spec)):
            return f"(I_hook, I_cohook) = {counts} != (P, D)"
        return None

    reports.append(_run("two-mod-four-near-hook-counts", "c6", {"path": "bruteforce"}, c6_check))

    def c10_check():
        spec = GroupSpec((10,))
        counts = count_I_nearhook(spec)
        expected = (count_P(spec), count_D(spec))
        if counts != expected:
            return f"(I_hook, I_cohook) = {counts} != (P, D) = {expected}"
        return None

    reports.append(_run("two-mod-four-near-hook-counts", "c10", {"path": "formula"}, c10_check))

    for name in ("c6", "c7"):
        spec = parse_group(name)

        def check(spec=spec):
            n = spec.order
            hook = immanant(spec, Partition((n - 1, 1)))
            cohook = immanant(spec, Partition((2,) + (1,) * (n - 2)))
            for mono in sorted_hall_support(spec):
                stats = perm_class_stats(spec, mono)
                got = near_hook_coeff(spec, mono, stats)
                expected = (hook.coefficient(mono), cohook.coefficient(mono))
                if got != expected:
                    return f"coefficient mismatch {got} != {expected} at {mono}"
            return None

        reports.append(_run("near-hook-master-formula", spec.name, {}, check))
    return reports


def suite_thm15(groups=None, max_order=None, seed=1) -> list[VerifyReport]:
    reports = []
    for spec in _groups(TWIN_GROUPS, groups, max_order):

        def check(spec=spec):
            _require(
                spec.order % 2 == 1 and spec.order >= 7,
                f"order {spec.order} is not odd and >= 7",
            )
            diff = twin_difference(spec)
            if not diff.is_zero:
                return f"twin difference has {diff.support_size} terms"
            return None

        reports.append(_run("odd-order-twin-immanants", spec.name, {}, check))
    return reports


def suite_prop42(groups=None, max_order=None, seed=1) -> list[VerifyReport]:
    reports = []
    for spec in _groups(("c6", "c8"), groups, max_order):

        def check(spec=spec):
            n = spec.order
            _require(
                spec.rank == 1 and n % 2 == 0 and n >= 6,
                f"{spec.name} is not an even cyclic group of order >= 6",
            )
            expected = (3 - n) * (-1) ** ((n - 2) // 2)
            mono = (n,) + (0,) * (n - 1)
            got = twin_difference(spec).coefficient(mono)
            if got != expected:
                return f"[x_0^{n}] twin difference = {got} != {expected}"
            return None

        reports.append(
            _run("even-cyclic-twin-x0-coefficient", spec.name, {"order": spec.order}, check)
        )
    return reports


def suite_jacobi(groups=None, max_order=None, seed=1, seeds=5) -> list[VerifyReport]:
    reports = []
    for spec in _groups(JACOBI_GROUPS, groups, max_order):

        def check(spec=spec):
            add = add_table(spec)
            n = spec.order
            for i in range(seeds):
                rho = random_specialization(spec, seed + i)
                profile = inverse_profile(spec, rho)
                for s in range(n):
                    residual = sum(rho.values[r] * profile.y[add[r][s]] for r in range(n))
                    if residual != (1 if s == 0 else 0):
                        return f"convolution residual {residual} at s={s}, seed {seed + i}"
                report = jacobi_check(spec, rho)
                if not report.passed:
                    subset, lhs, rhs = report.violations[0]
                    return f"minor {subset}: {lhs} != {rhs} at seed {seed + i}"
            return None

        reports.append(_run("jacobi-complementary-minors", spec.name, {"seeds": seeds}, check))
    return reports


def suite_scalars(groups=None, max_order=None, seed=1, seeds=5) -> list[VerifyReport]:
    reports = []
    for spec in _groups(SCALAR_GROUPS, groups, max_order):

        def check(spec=spec):
            _require(spec.order % 2 == 1, f"order {spec.order} is not odd")
            for i in range(seeds):
                rho = random_specialization(spec, seed + i)
                if F1(spec, rho) != specialized_det(spec, rho):
                    return f"F1 != det at seed {seed + i}"
                if T12(spec, rho) != T2(spec, rho):
                    return f"T12 != T2 at seed {seed + i}"
                lemma43_scalars(spec, rho)
            return None

        reports.append(_run("odd-order-minor-scalars", spec.name, {"seeds": seeds}, check))
    for spec in _groups(REDUCTION_GROUPS, groups, max_order):

        def check(spec=spec):
            _require(spec.order >= 6, f"order {spec.order} is below 6")
            twin = twin_difference(spec)
            for i in range(3):
                rho = random_specialization(spec, seed + i)
                report = reduction_check(spec, rho, twin=twin)
                if not report.passed:
                    return (
                        f"twin value {report.twin_value} != minor value "
                        f"{report.minor_value} at seed {seed + i}"
                    )
            return None

        reports.append(_run("principal-minor-reduction", spec.name, {"seeds": 3}, check))
    return reports


def suite_charlayer(groups=None, max_order=None, seed=1) -> list[VerifyReport]:
    reports = []

    def closed_forms():
        for n in range(6, 10):
            hook = Partition((n - 1, 1))
            cohook = Partition((2,) + (1,) * (n - 2))
            h3 = Partition((n - 3, 1, 1, 1))
            j3 = Partition((n - 3, 3))
            twin_a = Partition((4,) + (1,) * (n - 4))
            twin_b = Partition((2, 2, 2) + (1,) * (n - 6))
            for p in partitions_of(n):
                mu = CycleType(p.parts)
                pairs = [
                    (hook_char_n11(mu), mn_character(hook, mu)),
                    (cohook_char(mu), mn_character(cohook, mu)),
                    (char_n3_111(mu), mn_character(h3, mu)),
                    (char_n3_3(mu), mn_character(j3, mu)),
                    (
                        twin_diff_char(mu),
                        mn_character(twin_a, mu) - mn_character(twin_b, mu),
                    ),
                ]
                for got, expected in pairs:
                    if got != expected:
                        return f"closed form {got} != MN {expected} on class {mu.lengths}"
        return None

    reports.append(_run("closed-character-forms", "s6..s9", {}, closed_forms))
    for spec in _groups(REGULAR_CHAR_GROUPS, groups, max_order):

        def check(spec=spec):
            n = spec.order
            total = GroupPolynomial.zero(spec)
            for lam in partitions_of(n):
                total = total.add_scaled(immanant(spec, lam), dimension(lam))
            expected = GroupPolynomial.from_terms(
                spec, {tuple(doubling_counts(spec)): math.factorial(n)}
            )
            if total != expected:
                return "regular-character sum differs from n! * prod x_{2a}"
            return None

        reports.append(_run("regular-character-identity", spec.name, {}, check))
    return reports


_SUITE_FUNCS = {
    "hall": suite_hall,
    "thm13": suite_thm13,
    "thm14": suite_thm14,
    "thm15": suite_thm15,
    "prop42": suite_prop42,
    "jacobi": suite_jacobi,
    "scalars": suite_scalars,
}


def run_suite(suite: str, groups=None, max_order=None, seed: int = 1) -> list[VerifyReport]:
    if suite == "all":
        reports = []
        for name in ("hall", "thm13", "thm14", "thm15", "prop42", "jacobi", "scalars"):
            reports.extend(_SUITE_FUNCS[name](groups, max_order, seed))
        reports.extend(suite_charlayer(groups, max_order, seed))
        return reports
    if suite not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r} (choose from {', '.join(SUITES)})")
    return _SUITE_FUNCS[suite](groups, max_order, seed)
