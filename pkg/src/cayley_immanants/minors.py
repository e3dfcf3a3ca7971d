"""Exact-rational verification of the inverse/minor identities.

Everything here is exact: determinants go through fraction-free Bareiss
elimination on integer matrices (denominators cleared per row), the
convolution system is solved by Cramer determinants, and the direct matrix
inverse is a separate Gauss-Jordan route used to cross-check the
group-Hankel structure.  Identity checks compare rationals for equality,
never within a tolerance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .groups import GroupSpec, add_table, double_table, neg_table
from .immanants import twin_difference
from .polynomials import GroupPolynomial, RationalSpecialization


class IdentityCheckError(AssertionError):
    """An exact identity that a theorem guarantees failed to hold."""

    def __init__(self, equation: str, lhs, rhs):
        super().__init__(f"{equation}: {lhs} != {rhs}")
        self.equation = equation
        self.lhs = lhs
        self.rhs = rhs


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix; empty matrix gives 1."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def exact_det(rows) -> Fraction:
    """Exact determinant of a rational matrix via row-wise denominator clearing."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    cleared = []
    scale = 1
    for row in rows:
        fracs = [Fraction(v) for v in row]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        cleared.append([int(f * mult) for f in fracs])
        scale *= mult
    return Fraction(bareiss_det(cleared), scale)


def cayley_matrix(spec: GroupSpec, rho: RationalSpecialization) -> list[list[Fraction]]:
    """The specialized matrix (x_{a+b}) in element-index order."""
    add = add_table(spec)
    vals = rho.values
    n = spec.order
    return [[vals[add[a][b]] for b in range(n)] for a in range(n)]


def specialized_det(spec: GroupSpec, rho: RationalSpecialization) -> Fraction:
    return exact_det(cayley_matrix(spec, rho))


def random_specialization(
    spec: GroupSpec, seed: int, value_range: int = 32, max_retries: int = 16
) -> RationalSpecialization:
    """Seeded integer specialization with a nonzero determinant.

    Values are uniform on [1, value_range]; singular draws are resampled up
    to max_retries times (practically unreachable for value_range >= 8).
    """
    if value_range < 2:
        raise ValueError("value_range must be at least 2")
    rng = random.Random(seed)
    n = spec.order
    for _ in range(max_retries):
        values = tuple(Fraction(rng.randint(1, value_range)) for _ in range(n))
        rho = RationalSpecialization(spec, values, seed)
        if specialized_det(spec, rho) != 0:
            return rho
    raise RuntimeError(
        f"no nonsingular specialization for {spec.name} after {max_retries} draws"
    )


@dataclass(frozen=True)
class InverseProfile:
    """The inverse's generating values y_g and the determinant at rho."""

    y: tuple[Fraction, ...]
    delta: Fraction


def _solve_convolution(spec: GroupSpec, rho: RationalSpecialization) -> tuple[Fraction, ...]:
    # equations sum_r x_r y_{r+s} = [s = 0]; unknown y_t has coefficient
    # x_{t-s} in equation s.  Solved by Cramer with fraction-free determinants.
    n = spec.order
    add = add_table(spec)
    negs = neg_table(spec)
    vals = rho.values
    system = [[vals[add[t][negs[s]]] for t in range(n)] for s in range(n)]
    denom = exact_det(system)
    if denom == 0:
        raise ValueError("specialized matrix is singular")
    ys = []
    for t in range(n):
        replaced = [
            [Fraction(1 if s == 0 else 0) if c == t else system[s][c] for c in range(n)]
            for s in range(n)
        ]
        ys.append(exact_det(replaced) / denom)
    return tuple(ys)


def _gauss_jordan_inverse(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def inverse_profile(spec: GroupSpec, rho: RationalSpecialization) -> InverseProfile:
    """Solve the convolution equations and confirm the group-Hankel inverse.

    The y vector comes from the linear system; the entrywise inverse comes
    from an independent Gauss-Jordan pass, and the two must agree at every
    position (a, b) through y_{a+b}.
    """
    n = spec.order
    add = add_table(spec)
    delta = specialized_det(spec, rho)
    if delta == 0:
        raise ValueError("specialized matrix is singular")
    ys = _solve_convolution(spec, rho)
    inv = _gauss_jordan_inverse(cayley_matrix(spec, rho))
    for a in range(n):
        for b in range(n):
            if inv[a][b] != ys[add[a][b]]:
                raise IdentityCheckError(
                    f"group-Hankel inverse at ({a},{b})", inv[a][b], ys[add[a][b]]
                )
    return InverseProfile(y=ys, delta=delta)


def _principal_minor(matrix, removed) -> Fraction:
    keep = [i for i in range(len(matrix)) if i not in removed]
    return exact_det([[matrix[r][c] for c in keep] for r in keep])


def F1(spec: GroupSpec, rho: RationalSpecialization) -> Fraction:
    """sum_i a_ii det A(i|i) over the specialized Cayley matrix."""
    m = cayley_matrix(spec, rho)
    return sum((m[i][i] * _principal_minor(m, {i}) for i in range(len(m))), Fraction(0))


def T2(spec: GroupSpec, rho: RationalSpecialization) -> Fraction:
    """sum_{i<j} a_ij a_ji det A(i,j|i,j)."""
    m = cayley_matrix(spec, rho)
    n = len(m)
    total = Fraction(0)
    for i, j in itertools.combinations(range(n), 2):
        total += m[i][j] * m[j][i] * _principal_minor(m, {i, j})
    return total


def T12(spec: GroupSpec, rho: RationalSpecialization) -> Fraction:
    """sum over i not in {j,k}, j<k of a_ii a_jk a_kj det A(i,j,k|i,j,k)."""
    m = cayley_matrix(spec, rho)
    n = len(m)
    total = Fraction(0)
    for j, k in itertools.combinations(range(n), 2):
        cross = m[j][k] * m[k][j]
        if cross == 0:
            continue
        for i in range(n):
            if i != j and i != k:
                total += m[i][i] * cross * _principal_minor(m, {i, j, k})
    return total


def gamma_expression(
    spec: GroupSpec, y: tuple[Fraction, ...], i: int, j: int, k: int
) -> Fraction:
    """The symmetric five-term minor expression in the y values.

    Adopted verbatim for every index triple; its vanishing at repeated
    indices is a checked consequence, not part of the definition.
    """
    add = add_table(spec)
    dbl = double_table(spec)
    y2i, y2j, y2k = y[dbl[i]], y[dbl[j]], y[dbl[k]]
    yij, yik, yjk = y[add[i][j]], y[add[i][k]], y[add[j][k]]
    return (
        y2i * y2j * y2k
        + 2 * yij * yik * yjk
        - y2i * yjk**2
        - y2j * yik**2
        - y2k * yij**2
    )


@dataclass(frozen=True)
class JacobiReport:
    """Outcome of the complementary-minor checks on 1-, 2-, 3-subsets."""

    checked: int
    violations: tuple[tuple[tuple[int, ...], Fraction, Fraction], ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def jacobi_check(spec: GroupSpec, rho: RationalSpecialization) -> JacobiReport:
    """Compare every principal minor of size n-1, n-2, n-3 with its y form."""
    n = spec.order
    m = cayley_matrix(spec, rho)
    profile = inverse_profile(spec, rho)
    y, delta = profile.y, profile.delta
    add = add_table(spec)
    dbl = double_table(spec)
    checked = 0
    violations = []

    def record(subset, lhs, rhs):
        nonlocal checked
        checked += 1
        if lhs != rhs:
            violations.append((subset, lhs, rhs))

    for i in range(n):
        record((i,), _principal_minor(m, {i}), delta * y[dbl[i]])
    for i, j in itertools.combinations(range(n), 2):
        rhs = delta * (y[dbl[i]] * y[dbl[j]] - y[add[i][j]] ** 2)
        record((i, j), _principal_minor(m, {i, j}), rhs)
    for i, j, k in itertools.combinations(range(n), 3):
        rhs = delta * gamma_expression(spec, y, i, j, k)
        record((i, j, k), _principal_minor(m, {i, j, k}), rhs)
    return JacobiReport(checked=checked, violations=tuple(violations))


def lemma43_scalars(
    spec: GroupSpec, rho: RationalSpecialization
) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]:
    """The proof scalars (C, S, B1..B5), with every intermediate identity checked.

    Requires odd group order; each B value is computed from its defining
    triple sum and compared against the reductions the convolution equations
    force.  The first broken equation raises, naming itself.
    """
    n = spec.order
    if n % 2 == 0:
        raise ValueError("the scalar identities assume odd group order")
    add = add_table(spec)
    dbl = double_table(spec)
    negs = neg_table(spec)
    x = rho.values
    profile = inverse_profile(spec, rho)
    y, delta = profile.y, profile.delta

    c_val = sum(
        (
            x[s] ** 2 * y[t] * y[add[dbl[s]][negs[t]]]
            for s in range(n)
            for t in range(n)
        ),
        Fraction(0),
    )
    s_val = sum((x[s] ** 2 * y[s] ** 2 for s in range(n)), Fraction(0))

    b1 = b2 = b3 = b4 = b5 = Fraction(0)
    for i in range(n):
        x2i = x[dbl[i]]
        y2i = y[dbl[i]]
        for j in range(n):
            y2j = y[dbl[j]]
            yij = y[add[i][j]]
            for k in range(n):
                w = x2i * x[add[j][k]] ** 2
                y2k = y[dbl[k]]
                yik = y[add[i][k]]
                yjk = y[add[j][k]]
                b1 += w * y2i * y2j * y2k
                b2 += w * yij * yik * yjk
                b3 += w * y2i * yjk**2
                b4 += w * y2j * yik**2
                b5 += w * y2k * yij**2

    t2 = T2(spec, rho)
    t12 = T12(spec, rho)
    checks = [
        ("2*T2 = delta*(C - n*S)", 2 * t2, delta * (c_val - n * s_val)),
        ("B1 = C", b1, c_val),
        ("B2 = S", b2, s_val),
        ("B3 = n*S", b3, n * s_val),
        ("B4 = S", b4, s_val),
        ("B5 = S", b5, s_val),
        ("2*T12 = delta*(C - n*S)", 2 * t12, delta * (c_val - n * s_val)),
    ]
    for equation, lhs, rhs in checks:
        if lhs != rhs:
            raise IdentityCheckError(equation, lhs, rhs)
    return (c_val, s_val, b1, b2, b3, b4, b5)


@dataclass(frozen=True)
class ReductionReport:
    """Both sides of the principal-minor reduction at one specialization."""

    twin_value: Fraction
    minor_value: Fraction

    @property
    def passed(self) -> bool:
        return self.twin_value == self.minor_value


def reduction_check(
    spec: GroupSpec,
    rho: RationalSpecialization,
    twin: GroupPolynomial | None = None,
) -> ReductionReport:
    """Evaluate the twin-immanant difference against F1 - det + 2(T12 - T2).

    The identity is matrix-general, so it holds for even groups too.  A
    precomputed twin polynomial can be passed to amortize the sweep across
    seeds.
    """
    if spec.order < 6:
        raise ValueError("both twin shapes need group order >= 6")
    if twin is None:
        twin = twin_difference(spec)
    lhs = twin.evaluate(rho)
    rhs = F1(spec, rho) - specialized_det(spec, rho) + 2 * (T12(spec, rho) - T2(spec, rho))
    return ReductionReport(twin_value=lhs, minor_value=rhs)
