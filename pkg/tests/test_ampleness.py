import random
from fractions import Fraction

import pytest

from amplecheck import (
    PreconditionError,
    Surface,
    ample_gg_verdict,
    asymptotic_ample_certificate,
    dimension_count,
    effective_n_bound,
    enumerate_bad_curves,
    gieseker_character,
    kernel_character,
    make_character,
    multiplier_lower_bound,
    normalize_character,
    splitting_codim,
)
from conftest import ALL_SURFACES, random_gg_slope_character, random_slope_character
from oracles import (
    brute_force_bad_curves,
    brute_min_multiplier,
    matches_bad_curve_shape,
    naive_family_cutoff,
)

P2 = Surface.projective_plane()
F1 = Surface.hirzebruch(1)
F2 = Surface.hirzebruch(2)

INTRO = make_character(2, P2.divisor(3), Fraction(1, 2))
TANGENT = make_character(2, P2.divisor(3), Fraction(3, 2))


class TestBadCurves:
    def test_plane_single_bad_line(self):
        bad = enumerate_bad_curves(make_character(2, P2.divisor(4), 0))
        assert [b.curve.coords for b in bad] == [(1,)]
        assert bad[0].chi_twist == -2

    def test_plane_none(self):
        assert enumerate_bad_curves(make_character(2, P2.divisor(4), 2)) == ()

    def test_f1_fiber_is_bad(self):
        v = make_character(2, F1.divisor(3, 5), Fraction(5, 2))
        bad = enumerate_bad_curves(v)
        by_coords = {b.curve.coords: b for b in bad}
        assert (0, 1) in by_coords  # the fiber
        assert by_coords[(0, 1)].chi_twist == -1
        assert set(by_coords) == {(0, 1), (1, 0)}

    def test_f0_both_families_contribute(self):
        v = make_character(2, Surface.hirzebruch(0).divisor(3, 3), -4)
        bad = {b.curve.coords: b for b in enumerate_bad_curves(v)}
        assert set(bad) == {(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)}
        assert bad[(0, 1)].chi_twist == -7 and bad[(1, 1)].chi_twist == -4
        assert all(b.passes for b in bad.values())

    def test_f3_no_bad_curves(self):
        v = make_character(2, Surface.hirzebruch(3).divisor(3, 11), Fraction(19, 2))
        assert enumerate_bad_curves(v) == ()
        cert = ample_gg_verdict(v)
        assert cert.ample_general and cert.bad_curves == ()

    def test_agrees_with_brute_force(self):
        rng = random.Random(99)
        for surface in ALL_SURFACES:
            for _ in range(8):
                v = random_gg_slope_character(rng, surface)
                bad = {b.curve.coords for b in enumerate_bad_curves(v)}
                box = naive_family_cutoff(v) + 5
                assert bad == brute_force_bad_curves(v, box)
                assert all(matches_bad_curve_shape(surface, c) for c in bad)

    def test_requires_slope_hypotheses(self):
        with pytest.raises(PreconditionError):
            enumerate_bad_curves(TANGENT)

    def test_requires_global_generation(self):
        # slope hypotheses hold but chi(v(-1)) < 0 and chi small
        v = make_character(2, P2.divisor(5), Fraction(-27, 2))
        with pytest.raises(PreconditionError):
            enumerate_bad_curves(v)


class TestDimensionCount:
    def test_plane_line(self):
        count = dimension_count(make_character(2, P2.divisor(4), 0), P2.divisor(1))
        assert (count.d, count.c, count.passes) == (2, 3, True)

    def test_plane_conic(self):
        count = dimension_count(make_character(2, P2.divisor(4), 0), P2.divisor(2))
        assert (count.d, count.c, count.passes) == (5, 7, True)

    def test_fiber(self):
        v = make_character(2, F1.divisor(3, 5), Fraction(5, 2))
        count = dimension_count(v, F1.divisor(0, 1))
        assert (count.d, count.c, count.passes) == (1, 2, True)

    def test_rejects_reducible_classes(self):
        with pytest.raises(PreconditionError):
            dimension_count(INTRO, P2.divisor(0))


class TestSplittingCodim:
    def test_values(self):
        assert splitting_codim(1, 2, 4) == 3
        assert splitting_codim(2, 2, 4) == 8

    def test_minimized_at_k_equals_one(self):
        for rank in range(2, 6):
            for degree in range(rank, rank + 8):
                values = [splitting_codim(k, rank, degree) for k in range(1, rank + 1)]
                assert min(values) == values[0]

    def test_k_range_checked(self):
        with pytest.raises(ValueError):
            splitting_codim(0, 2, 4)
        with pytest.raises(ValueError):
            splitting_codim(3, 2, 4)

    def test_slope_hypothesis_checked(self):
        with pytest.raises(PreconditionError):
            splitting_codim(1, 3, 2)

    def test_matches_dimension_count_bound(self):
        v = make_character(2, F1.divisor(3, 5), Fraction(5, 2))
        for d in (F1.divisor(0, 1), F1.divisor(1, 0), F1.divisor(2, 2)):
            degree = int(v.c1.dot(d))
            assert dimension_count(v, d).c == splitting_codim(1, v.rank, degree)


class TestAmpleGGVerdict:
    def test_worked_example(self):
        cert = ample_gg_verdict(make_character(2, P2.divisor(4), 0))
        assert cert.ample_general
        assert [b.curve.coords for b in cert.bad_curves] == [(1,)]
        assert cert.gg is not None and cert.gg.case == 2
        assert cert.nonspecial is not None and cert.nonspecial.holds

    def test_intro_character_fails_slope(self):
        cert = ample_gg_verdict(INTRO)
        assert not cert.ample_general
        assert cert.failure_reason.startswith("slope")

    def test_tangent_bundle_cross_reference(self):
        cert = ample_gg_verdict(TANGENT)
        assert not cert.ample_general
        assert cert.failure_reason.startswith("slope")
        assert any("tangent" in note for note in cert.notes)

    def test_rank_one_fails(self):
        cert = ample_gg_verdict(make_character(1, P2.divisor(2), 2))
        assert not cert.ample_general and cert.failure_reason.startswith("rank")

    def test_f1_example(self):
        cert = ample_gg_verdict(make_character(2, F1.divisor(3, 5), Fraction(5, 2)))
        assert cert.ample_general
        assert {b.curve.coords for b in cert.bad_curves} == {(0, 1), (1, 0)}

    def test_deterministic(self):
        v = make_character(2, F2.divisor(3, 8), 2)
        assert ample_gg_verdict(v) == ample_gg_verdict(v)

    def test_random_suite_always_passes_dimension_counts(self):
        rng = random.Random(41)
        for surface in ALL_SURFACES:
            for _ in range(6):
                v = random_gg_slope_character(rng, surface)
                cert = ample_gg_verdict(v)
                assert cert.ample_general
                assert all(b.passes for b in cert.bad_curves)


class TestNormalization:
    def test_plane_large_slope(self):
        v = make_character(2, P2.divisor(20), -142)
        normalized, twist = normalize_character(v)
        assert twist == P2.divisor(8)
        assert normalized.nu == P2.divisor(2)
        assert normalized.delta == v.delta

    def test_already_in_range(self):
        normalized, twist = normalize_character(INTRO)
        assert twist == P2.zero and normalized == INTRO

    def test_hirzebruch_preserves_section_slope(self):
        v = make_character(2, F2.divisor(4, 14), 20)
        normalized, twist = normalize_character(v)
        assert twist == F2.zero
        assert normalized.nu.dot(F2.divisor(1, 0)) == v.nu.dot(F2.divisor(1, 0))

    def test_hirzebruch_twist_direction(self):
        v = make_character(2, F2.divisor(8, 30), 40)  # nu.F = 4
        normalized, twist = normalize_character(v)
        assert twist == F2.divisor(2, 4)  # m*(E + eF) with m = 2
        assert 1 < normalized.nu.dot(F2.fiber_class) <= 2
        assert normalized.nu.dot(F2.divisor(1, 0)) == v.nu.dot(F2.divisor(1, 0))
        assert normalized.delta == v.delta

    def test_rejects_small_slope(self):
        with pytest.raises(PreconditionError):
            normalize_character(make_character(2, P2.divisor(2), 0))


class TestKernelCharacter:
    def test_gieseker_values(self):
        v = gieseker_character(12)
        u2 = kernel_character(v, 2, 2)
        assert u2 == make_character(2, P2.divisor(-34), 287)
        assert u2.delta == 1
        u1 = kernel_character(v, 1, 2)
        assert u1 == make_character(2, P2.divisor(-16), 144)
        assert u1.delta == -40

    def test_rank_is_always_s(self):
        rng = random.Random(3)
        for surface in ALL_SURFACES:
            v = random_slope_character(rng, surface)
            for s in (2, 3, 5):
                for n in (1, 2, 7):
                    assert kernel_character(v, n, s).rank == s

    def test_parameter_validation(self):
        with pytest.raises(PreconditionError):
            kernel_character(INTRO, 1, 1)
        with pytest.raises(PreconditionError):
            kernel_character(INTRO, 0, 2)


class TestEffectiveBound:
    def test_gieseker_direct_bounds(self):
        for d in range(4, 51):
            v = gieseker_character(d)
            expected = 2 * Fraction((d - 1) ** 2, (d - 3) ** 2) - 1
            assert multiplier_lower_bound(v, 2) == expected
            n_min = effective_n_bound(v, 2)
            assert n_min == 2 if d >= 12 else n_min > 2

    def test_zero_discriminant_gives_one(self):
        v = make_character(2, P2.divisor(4), 4)  # delta = 0
        assert effective_n_bound(v) == 1

    def test_closed_form_matches_search(self):
        rng = random.Random(57)
        for surface in ALL_SURFACES:
            for _ in range(10):
                v = random_slope_character(rng, surface)
                base, _ = normalize_character(v)
                for s in (2, 3):
                    assert effective_n_bound(base, s) == brute_min_multiplier(base, s)

    def test_kernel_discriminant_monotone_past_bound(self):
        rng = random.Random(58)
        for surface in ALL_SURFACES:
            v = random_slope_character(rng, surface)
            base, _ = normalize_character(v)
            n_min = effective_n_bound(base)
            for n in range(n_min, n_min + 12):
                assert kernel_character(base, n, 2).delta >= 0

    def test_requires_big_and_nef(self):
        with pytest.raises(PreconditionError):
            multiplier_lower_bound(make_character(2, P2.divisor(2), 0))  # nu = H


class TestAsymptoticCertificate:
    def test_gieseker_direct_mode(self):
        cert = asymptotic_ample_certificate(gieseker_character(12), direct=True)
        assert cert.mode == "direct"
        assert cert.bound == Fraction(161, 81)
        assert cert.n_min == 2
        assert cert.chi_dual_twist == -170
        assert cert.delta_kernel == 1
        assert cert.delta_kernel_prev == -40
        assert cert.kernel == make_character(2, P2.divisor(-34), 287)

    def test_intro_character_normalized(self):
        cert = asymptotic_ample_certificate(INTRO)
        assert cert.mode == "normalized"
        assert cert.bound == 6 and cert.n_min == 6
        assert cert.chi_dual_twist == -2
        assert cert.delta_kernel == 0
        assert cert.delta_kernel_prev == Fraction(-5, 8)
        assert cert.chi_kernel_dual_twist == 12
        assert cert.kernel_twist_gg
        assert cert.wbn_kernel.applicable

    def test_f1_example(self):
        v = make_character(2, F1.divisor(3, 5), Fraction(5, 2))
        cert = asymptotic_ample_certificate(v)
        assert cert.bound == 10 and cert.n_min == 10
        assert cert.b == F1.divisor(Fraction(1, 2), Fraction(1, 2))
        assert cert.chi_dual_twist == -3

    def test_s_independent_success(self):
        rng = random.Random(71)
        for surface in ALL_SURFACES:
            v = random_slope_character(rng, surface)
            verdicts = set()
            for s in (2, 3, 5):
                cert = asymptotic_ample_certificate(v, s)
                assert cert.delta_kernel >= 0 and cert.chi_kernel_dual_twist >= 0
                verdicts.add(cert.mode)
            assert verdicts == {"normalized"}

    def test_slope_hypotheses_enforced(self):
        with pytest.raises(PreconditionError):
            asymptotic_ample_certificate(make_character(2, P2.divisor(2), 0))  # nu.H = 1

    def test_bogomolov_enforced(self):
        v = make_character(2, P2.divisor(5), Fraction(15, 2))  # delta < 0
        with pytest.raises(PreconditionError):
            asymptotic_ample_certificate(v)

    def test_s_must_be_at_least_two(self):
        with pytest.raises(PreconditionError):
            asymptotic_ample_certificate(INTRO, 1)

    def test_normalized_certificate_certifies_original_character(self):
        v = make_character(2, P2.divisor(20), -142)
        cert = asymptotic_ample_certificate(v)
        # scaling and twisting commute, so a bundle for the normalized
        # multiple twists back to one for the original multiple
        n = cert.n_min
        assert cert.base.scale(n).twist(cert.twist_used) == v.scale(n)

    def test_deterministic(self):
        v = make_character(2, F2.divisor(3, 8), 2)
        assert asymptotic_ample_certificate(v) == asymptotic_ample_certificate(v)


class TestGiesekerCharacter:
    def test_values(self):
        assert gieseker_character(12) == make_character(2, P2.divisor(20), -142)
        assert gieseker_character(4) == make_character(2, P2.divisor(4), -14)

    def test_discriminant_closed_form(self):
        for d in range(4, 51):
            assert gieseker_character(d).delta == (d - 1) ** 2

    def test_requires_d_at_least_four(self):
        with pytest.raises(PreconditionError):
            gieseker_character(3)
