"""Exact immanants of the Cayley-table matrix (x_{a+b}).

The brute-force path walks all n! permutations of the group in lexicographic
image order, weighting each monomial by the character of the permutation's
cycle type.  The orbit path groups permutations into orbits of the
translation action (gamma * sigma)(u) = sigma(u - gamma) - gamma, which
preserves sign and monomial (but not cycle type), so the monomial is built
once per orbit while characters are summed over the orbit's members.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .characters import (
    CycleType,
    Partition,
    cycle_type,
    mn_character,
    partitions_of,
    twin_diff_char,
)
from .groups import GroupSpec, add_table, neg_table
from .polynomials import GroupPolynomial, Monomial

MAX_SWEEP_ORDER = 10


class EnvelopeError(ValueError):
    """A full-enumeration request above the supported group order."""


def _check_envelope(spec: GroupSpec) -> None:
    if spec.order > MAX_SWEEP_ORDER:
        raise EnvelopeError(
            f"group order {spec.order} exceeds the n! enumeration envelope "
            f"({MAX_SWEEP_ORDER}); use the formula paths instead"
        )


def _char_weights(lam: Partition) -> dict[tuple[int, ...], int]:
    """chi^lam on every class of S_n, keyed by descending cycle lengths."""
    n = lam.weight
    return {
        p.parts: mn_character(lam, CycleType(p.parts)) for p in partitions_of(n)
    }


def _twin_weights(n: int) -> dict[tuple[int, ...], int]:
    return {p.parts: twin_diff_char(CycleType(p.parts)) for p in partitions_of(n)}


def _sweep_terms(
    spec: GroupSpec, weights: dict[tuple[int, ...], int], first: int | None = None
) -> dict[Monomial, int]:
    """Accumulate weight(type(sigma)) per monomial over permutations of G.

    With `first` set, only permutations with sigma(0) = first are visited;
    that is the partitioning used by parallel workers.
    """
    n = spec.order
    add = [list(row) for row in add_table(spec)]
    terms: dict[Monomial, int] = {}
    visited = [0] * n
    stamp = 0
    if first is None:
        perms = itertools.permutations(range(n))
    else:
        rest = [v for v in range(n) if v != first]
        perms = ((first,) + tail for tail in itertools.permutations(rest))
    for images in perms:
        stamp += 1
        lengths = []
        for u0 in range(n):
            if visited[u0] != stamp:
                size = 0
                u = u0
                while visited[u] != stamp:
                    visited[u] = stamp
                    u = images[u]
                    size += 1
                lengths.append(size)
        lengths.sort(reverse=True)
        w = weights[tuple(lengths)]
        if w == 0:
            continue
        exp = [0] * n
        for u in range(n):
            exp[add[u][images[u]]] += 1
        key = tuple(exp)
        if key in terms:
            terms[key] += w
        else:
            terms[key] = w
    return terms


def _sweep_block_task(args):
    factors, weights, first = args
    return _sweep_terms(GroupSpec(factors), weights, first)


def resolve_workers(workers: int | None = None) -> int:
    """Worker count: explicit value, else the IMM_THREADS env cap (0 = auto)."""
    if workers is None:
        raw = os.environ.get("IMM_THREADS", "1")
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"IMM_THREADS must be an integer, got {raw!r}")
    if workers == 0:
        workers = os.cpu_count() or 1
    if workers < 0:
        raise ValueError("worker count cannot be negative")
    return workers


def _sweep(
    spec: GroupSpec, weights: dict[tuple[int, ...], int], workers: int | None = None
) -> dict[Monomial, int]:
    workers = resolve_workers(workers)
    n = spec.order
    if workers <= 1 or n < 4:
        return _sweep_terms(spec, weights)
    try:
        import multiprocessing as mp

        ctx = mp.get_context("fork")
        tasks = [(spec.factors, weights, first) for first in range(n)]
        with ctx.Pool(min(workers, n)) as pool:
            partials = pool.map(_sweep_block_task, tasks)
    except (ImportError, OSError, ValueError):
        return _sweep_terms(spec, weights)
    merged: dict[Monomial, int] = {}
    for part in partials:
        for key, w in part.items():
            new = merged.get(key, 0) + w
            if new:
                merged[key] = new
            else:
                merged.pop(key, None)
    return merged


def translated(spec: GroupSpec, images: tuple[int, ...], gamma: int) -> tuple[int, ...]:
    """The translation action on permutations, in element-index form."""
    add = add_table(spec)
    ng = neg_table(spec)[gamma]
    return tuple(add[images[add[u][ng]]][ng] for u in range(spec.order))


def _orbit_terms(
    spec: GroupSpec, weights: dict[tuple[int, ...], int]
) -> dict[Monomial, int]:
    """Orbit-reduced sweep: one monomial per orbit, characters summed over it.

    The action preserves the monomial but can change cycle type, so the
    character must be accumulated member by member; weighting a single
    representative by orbit size would be wrong for general shapes.
    """
    n = spec.order
    add = add_table(spec)
    negs = neg_table(spec)
    terms: dict[Monomial, int] = {}
    seen: set[tuple[int, ...]] = set()
    for images in itertools.permutations(range(n)):
        if images in seen:
            continue
        orbit = {images}
        for gamma in range(1, n):
            ng = negs[gamma]
            orbit.add(tuple(add[images[add[u][ng]]][ng] for u in range(n)))
        seen |= orbit
        w = sum(weights[cycle_type(member).lengths] for member in orbit)
        if w == 0:
            continue
        exp = [0] * n
        for u in range(n):
            exp[add[u][images[u]]] += 1
        key = tuple(exp)
        new = terms.get(key, 0) + w
        if new:
            terms[key] = new
        else:
            terms.pop(key, None)
    return terms


def orbit_of(spec: GroupSpec, images: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All distinct translates of a permutation; size divides |G|."""
    return {translated(spec, images, g) for g in range(spec.order)}


def immanant(
    spec: GroupSpec,
    lam: Partition,
    mode: str = "bruteforce",
    workers: int | None = None,
) -> GroupPolynomial:
    """imm_lam of the Cayley-table matrix of the group, exactly."""
    _check_envelope(spec)
    if lam.weight != spec.order:
        raise ValueError(
            f"partition weight {lam.weight} != group order {spec.order}"
        )
    weights = _char_weights(lam)
    if mode == "bruteforce":
        terms = _sweep(spec, weights, workers)
    elif mode == "orbit":
        terms = _orbit_terms(spec, weights)
    else:
        raise ValueError(f"unknown mode {mode!r} (expected 'bruteforce' or 'orbit')")
    return GroupPolynomial.from_terms(spec, terms)


def determinant(spec: GroupSpec, mode: str = "bruteforce", workers: int | None = None):
    return immanant(spec, Partition((1,) * spec.order), mode, workers)


def permanent(spec: GroupSpec, mode: str = "bruteforce", workers: int | None = None):
    return immanant(spec, Partition((spec.order,)), mode, workers)


def twin_difference(spec: GroupSpec, workers: int | None = None) -> GroupPolynomial:
    """imm_(4,1^(n-4)) - imm_(2,2,2,1^(n-6)) in a single weighted sweep."""
    _check_envelope(spec)
    n = spec.order
    if n < 6:
        raise ValueError(f"both twin shapes need group order >= 6, got {n}")
    return GroupPolynomial.from_terms(spec, _sweep(spec, _twin_weights(n), workers))


@dataclass(frozen=True)
class PermClassStats:
    """Statistics of the permutation class P(m) producing one monomial."""

    p_m: int
    d_m: int
    fix_sum: int
    signed_fix_sum: int
    per_a_counts: tuple[int, ...]
    per_a_signed: tuple[int, ...]


def perm_class_stats(spec: GroupSpec, mono: Monomial) -> PermClassStats:
    """Enumerate exactly the permutations with prod x_{u+sigma(u)} = mono.

    Capacity-constrained backtracking: sigma(u) may only be an unused b with
    remaining demand for x_{u+b}.  Cost scales with the class size, not n!.
    """
    n = spec.order
    if len(mono) != n or sum(mono) != n:
        raise ValueError(f"monomial {mono!r} is not a degree-{n} exponent vector")
    add = add_table(spec)
    capacity = list(mono)
    images = [0] * n
    used = [False] * n
    p = d = fix_sum = signed_fix_sum = 0
    per_a = [0] * n
    per_a_signed = [0] * n

    def descend(u: int) -> None:
        nonlocal p, d, fix_sum, signed_fix_sum
        if u == n:
            sign = 1
            seen = [False] * n
            fixed = 0
            for s in range(n):
                if images[s] == s:
                    fixed += 1
                if not seen[s]:
                    size = 0
                    v = s
                    while not seen[v]:
                        seen[v] = True
                        v = images[v]
                        size += 1
                    if size % 2 == 0:
                        sign = -sign
            p += 1
            d += sign
            fix_sum += fixed
            signed_fix_sum += sign * fixed
            per_a[images[0]] += 1
            per_a_signed[images[0]] += sign
            return
        row = add[u]
        for b in range(n):
            if not used[b] and capacity[row[b]] > 0:
                used[b] = True
                capacity[row[b]] -= 1
                images[u] = b
                descend(u + 1)
                used[b] = False
                capacity[row[b]] += 1

    descend(0)
    return PermClassStats(
        p, d, fix_sum, signed_fix_sum, tuple(per_a), tuple(per_a_signed)
    )
