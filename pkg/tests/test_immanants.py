import itertools
import math
import random

import pytest

from cayley_immanants.characters import Partition, cycle_type, partitions_of
from cayley_immanants.groups import (
    GroupSpec,
    doubling_counts,
    neg_table,
    perm_parity,
)
from cayley_immanants.immanants import (
    EnvelopeError,
    PermClassStats,
    _char_weights,
    _sweep,
    determinant,
    immanant,
    orbit_of,
    perm_class_stats,
    permanent,
    translated,
    twin_difference,
)
from cayley_immanants.polynomials import GroupPolynomial, monomial_of_perm

C2 = GroupSpec((2,))
C3 = GroupSpec((3,))
C4 = GroupSpec((4,))
C5 = GroupSpec((5,))
C6 = GroupSpec((6,))
C7 = GroupSpec((7,))
C2xC2 = GroupSpec((2, 2))

DET_C3 = GroupPolynomial.from_terms(
    C3, {(3, 0, 0): -1, (0, 3, 0): -1, (0, 0, 3): -1, (1, 1, 1): 3}
)
PER_C3 = GroupPolynomial.from_terms(
    C3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): 3}
)


def test_c3_ground_truth():
    assert immanant(C3, Partition((1, 1, 1))) == DET_C3
    assert immanant(C3, Partition((3,))) == PER_C3


def test_c2_det_per():
    assert determinant(C2) == GroupPolynomial.from_terms(C2, {(2, 0): 1, (0, 2): -1})
    assert permanent(C2) == GroupPolynomial.from_terms(C2, {(2, 0): 1, (0, 2): 1})


def test_near_hook_immanants_vanish_on_c5():
    assert immanant(C5, Partition((4, 1))).is_zero
    assert immanant(C5, Partition((2, 1, 1, 1))).is_zero


def test_weight_mismatch_and_envelope():
    with pytest.raises(ValueError):
        immanant(C5, Partition((3, 1)))
    with pytest.raises(EnvelopeError):
        determinant(GroupSpec((12,)))
    with pytest.raises(ValueError):
        immanant(C5, Partition((4, 1)), mode="magic")
    with pytest.raises(ValueError):
        twin_difference(C5)


def test_translation_action_preserves_sign_and_monomial():
    # exhaustive on n <= 6, randomized spot checks on n = 7 and 8
    for spec in (C3, C4, C2xC2, C5, C6, GroupSpec((2, 3))):
        n = spec.order
        for images in itertools.permutations(range(n)):
            m = monomial_of_perm(spec, images)
            s = perm_parity(images)
            for gamma in range(n):
                moved = translated(spec, images, gamma)
                assert perm_parity(moved) == s
                assert monomial_of_perm(spec, moved) == m
    rng = random.Random(7)
    for spec in (C7, GroupSpec((8,)), GroupSpec((2, 4))):
        n = spec.order
        for _ in range(200):
            images = tuple(rng.sample(range(n), n))
            m = monomial_of_perm(spec, images)
            s = perm_parity(images)
            for gamma in range(1, n):
                moved = translated(spec, images, gamma)
                assert perm_parity(moved) == s
                assert monomial_of_perm(spec, moved) == m


def test_translation_action_is_group_action():
    spec = C6
    rng = random.Random(11)
    for _ in range(50):
        images = tuple(rng.sample(range(6), 6))
        for g1 in range(6):
            for g2 in range(6):
                lhs = translated(spec, translated(spec, images, g2), g1)
                rhs = translated(spec, images, (g1 + g2) % 6)
                assert lhs == rhs


def test_translation_action_can_change_cycle_type():
    # the orbit of the transposition (0 1) in C4 contains a 4-cycle, so
    # per-representative character weighting would miscount general shapes
    swap = (1, 0, 2, 3)
    types = {cycle_type(member).lengths for member in orbit_of(C4, swap)}
    assert types == {(2, 1, 1), (4,)}


def test_orbit_sizes_divide_group_order():
    for spec in (C4, C5, C2xC2, C6):
        n = spec.order
        total = 0
        seen = set()
        for images in itertools.permutations(range(n)):
            if images in seen:
                continue
            orb = orbit_of(spec, images)
            seen |= orb
            assert n % len(orb) == 0
            total += len(orb)
        assert total == math.factorial(n)


def test_orbit_mode_matches_bruteforce():
    for spec in (C2, C3, C4, C2xC2, C5, C6, GroupSpec((2, 3)), C7):
        n = spec.order
        for lam in partitions_of(n):
            assert immanant(spec, lam, mode="orbit") == immanant(spec, lam)


def test_parallel_sweep_matches_serial():
    lam = Partition((3, 2))
    assert immanant(C5, lam, workers=2) == immanant(C5, lam, workers=1)
    assert twin_difference(C6, workers=2) == twin_difference(C6, workers=1)


def test_imm_threads_env(monkeypatch):
    from cayley_immanants.immanants import resolve_workers

    monkeypatch.delenv("IMM_THREADS", raising=False)
    assert resolve_workers() == 1
    monkeypatch.setenv("IMM_THREADS", "3")
    assert resolve_workers() == 3
    assert resolve_workers(2) == 2  # explicit argument wins
    monkeypatch.setenv("IMM_THREADS", "0")
    assert resolve_workers() >= 1
    monkeypatch.setenv("IMM_THREADS", "lots")
    with pytest.raises(ValueError):
        resolve_workers()
    monkeypatch.setenv("IMM_THREADS", "-1")
    with pytest.raises(ValueError):
        resolve_workers()
    monkeypatch.setenv("IMM_THREADS", "2")
    assert immanant(C4, Partition((2, 1, 1))) == immanant(
        C4, Partition((2, 1, 1)), workers=1
    )


def test_perm_class_stats_c3_all_distinct():
    stats = perm_class_stats(C3, (1, 1, 1))
    assert stats.p_m == 3
    assert stats.d_m == 3


def test_perm_class_stats_x0_power():
    for spec in (C3, C4, C6, C2xC2):
        n = spec.order
        stats = perm_class_stats(spec, (n,) + (0,) * (n - 1))
        assert stats.p_m >= 1
        # negation is the only permutation over a cyclic group of odd order
        if n % 2 == 1:
            assert stats.p_m == 1


def test_perm_class_stats_c4_x1_fourth():
    # u + sigma(u) = 1 forces sigma(u) = 1 - u, which is a permutation:
    # the class is the single involution (0 1)(2 3), of positive sign
    stats = perm_class_stats(C4, (0, 4, 0, 0))
    assert stats.p_m == 1
    assert stats.d_m == 1


def test_perm_class_stats_match_det_per_coefficients():
    for spec in (C3, C4, C2xC2, C5):
        per = permanent(spec)
        det = determinant(spec)
        for mono in sorted(per.support()):
            stats = perm_class_stats(spec, mono)
            assert stats.p_m == per.coefficient(mono)
            assert stats.d_m == det.coefficient(mono)
        # a monomial outside the support has an empty class
        n = spec.order
        absent = (n - 1, 1) + (0,) * (n - 2)
        if absent not in per.support():
            empty = perm_class_stats(spec, absent)
            assert empty == PermClassStats(0, 0, 0, 0, (0,) * n, (0,) * n)


def test_translation_fiber_counts():
    # per-a class sizes refine p_m and d_m proportionally to the exponents
    for spec in (C3, C4, C2xC2, C5, C6, C7):
        n = spec.order
        per = permanent(spec)
        for mono in sorted(per.support()):
            stats = perm_class_stats(spec, mono)
            for a in range(n):
                assert n * stats.per_a_counts[a] == mono[a] * stats.p_m
                assert n * stats.per_a_signed[a] == mono[a] * stats.d_m


def test_regular_character_identity_polynomials():
    # sum over lam of dim(lam) * imm_lam = n! * prod_a x_{2a}
    for spec in (C2, C3, C4, C2xC2, C5, C6):
        n = spec.order
        total = GroupPolynomial.zero(spec)
        from cayley_immanants.characters import dimension

        for lam in partitions_of(n):
            total = total.add_scaled(immanant(spec, lam), dimension(lam))
        expected = GroupPolynomial.from_terms(
            spec, {tuple(doubling_counts(spec)): math.factorial(n)}
        )
        assert total == expected


def test_conjugate_shape_is_sign_twisted_sweep():
    for spec in (C4, C5, C6, C2xC2):
        n = spec.order
        for lam in partitions_of(n):
            weights = _char_weights(lam)
            twisted = {
                mu: (-1 if sum(c - 1 for c in mu) % 2 else 1) * w
                for mu, w in weights.items()
            }
            direct = immanant(spec, lam.conjugate())
            assert direct == GroupPolynomial.from_terms(spec, _sweep(spec, twisted))


def test_c6_near_hook_supports_match_det_per():
    assert immanant(C6, Partition((5, 1))).support() == permanent(C6).support()
    assert immanant(C6, Partition((2, 1, 1, 1, 1))).support() == determinant(C6).support()


def test_twin_difference_c7_zero():
    assert twin_difference(C7).is_zero


def test_twin_difference_c6_x0_coefficient():
    diff = twin_difference(C6)
    assert diff.coefficient((6, 0, 0, 0, 0, 0)) == -3
    assert not diff.is_zero
    # agrees with the two immanants computed separately
    direct = immanant(C6, Partition((4, 1, 1))) - immanant(C6, Partition((2, 2, 2)))
    assert diff == direct


def test_twin_difference_matches_immanant_difference_c7():
    direct = immanant(C7, Partition((4, 1, 1, 1))) - immanant(
        C7, Partition((2, 2, 2, 1))
    )
    assert twin_difference(C7) == direct


def test_negation_monomial_in_every_support():
    # sigma: a -> -a always contributes x_0^n
    for spec in (C3, C4, C6, C2xC2):
        n = spec.order
        assert (n,) + (0,) * (n - 1) in permanent(spec).support()
        images = tuple(neg_table(spec))
        assert monomial_of_perm(spec, images) == (n,) + (0,) * (n - 1)
