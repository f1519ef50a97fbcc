from fractions import Fraction

import pytest
from hypothesis import given, settings

from qcatalyst import (
    DegenerateSpectrumError,
    EpsilonTriple,
    Spectrum4,
    StarViolation,
    Verdict,
    analyze,
    closed_form_lambda_prime,
    compute_M,
    compute_m,
    epsilon_decompose,
    is_infinite,
    is_valid_catalyst,
    make_spectrum,
    oracle_valid_catalyst,
    partial_sums,
    augment,
    two_qubit_catalyst,
)

from support import catalyst_params, star_pairs

F = Fraction

CAT_SOURCE = make_spectrum(["0.4", "0.4", "0.1", "0.1"])
CAT_TARGET = make_spectrum(["0.5", "0.25", "0.25", "0"])
CAT_EPS = EpsilonTriple(F(1, 10), F(1, 20), F(1, 10))

HARD_SOURCE = make_spectrum(["0.45", "0.45", "0.05", "0.05"])
HARD_TARGET = make_spectrum(["0.5", "0.35", "0.15", "0"])
HARD_EPS = EpsilonTriple(F(1, 20), F(1, 20), F(1, 20))


class TestComputeBounds:
    def test_catalyzable_example(self):
        # max(3/10 / 1/2, 0 / 1/5, 1/20 / 1/10) and min(1/5 / 3/10, 1/10 / 1/20)
        assert compute_m(CAT_SOURCE, CAT_EPS) == F(3, 5)
        assert compute_M(CAT_SOURCE, CAT_EPS) == F(2, 3)

    def test_infeasible_example(self):
        assert compute_m(HARD_SOURCE, HARD_EPS) == F(1)
        assert compute_M(HARD_SOURCE, HARD_EPS) == F(1, 4)

    def test_zero_eps1_gives_infinity(self):
        eps = EpsilonTriple(F(0), F(1, 20), F(1, 20))
        assert is_infinite(compute_m(HARD_SOURCE, eps))

    def test_zero_eps3_gives_zero_upper_bound(self):
        source = make_spectrum(["0.4", "0.4", "0.1", "0.1"])
        eps = EpsilonTriple(F(1, 20), F(1, 20), F(0))
        assert compute_M(source, eps) == 0

    def test_vanishing_tail_skips_vacuous_ratio(self):
        # alpha3 = alpha4 = eps3 = 0 makes the middle ratio 0/0; the max runs
        # over the two well-defined terms.
        alpha = make_spectrum(["0.5", "0.5", "0", "0"])
        eps = EpsilonTriple(F(1, 10), F(1, 10), F(0))
        assert compute_m(alpha, eps) == F(1)
        assert compute_M(alpha, eps) == F(0)
        target = Spectrum4((F(3, 5), F(3, 10), F(1, 10), F(0)))
        report = analyze(alpha, target)
        assert report.verdict is Verdict.INFEASIBLE

    def test_vanishing_tail_with_zero_eps1(self):
        alpha = make_spectrum(["0.5", "0.5", "0", "0"])
        eps = EpsilonTriple(F(0), F(1, 10), F(0))
        assert is_infinite(compute_m(alpha, eps))

    def test_degenerate_second_coefficient(self):
        alpha = make_spectrum(["0.7", "0.1", "0.1", "0.1"])
        eps = EpsilonTriple(F(1, 10), F(1, 20), F(0))
        with pytest.raises(DegenerateSpectrumError, match="second"):
            compute_M(alpha, eps)


class TestAnalyze:
    def test_catalyzable_example(self):
        report = analyze(CAT_SOURCE, CAT_TARGET)
        assert report.verdict is Verdict.CATALYZABLE
        assert report.m == F(3, 5)
        assert report.M == F(2, 3)
        assert report.r_interval == (F(3, 5), F(2, 3))
        assert report.p_interval == (F(3, 5), F(5, 8))
        assert report.reason is None

    def test_infeasible_example(self):
        report = analyze(HARD_SOURCE, HARD_TARGET)
        assert report.verdict is Verdict.INFEASIBLE
        assert report.m == F(1)
        assert report.M == F(1, 4)
        assert report.reason.kind == "empty_interval"
        assert report.r_interval is None and report.p_interval is None

    def test_identity_is_locc_possible(self):
        report = analyze(CAT_SOURCE, CAT_SOURCE)
        assert report.verdict is Verdict.LOCC_ALREADY_POSSIBLE
        assert report.m is None and report.M is None

    def test_star_violation_reported(self):
        report = analyze(CAT_TARGET, CAT_SOURCE)
        assert report.verdict is Verdict.INFEASIBLE
        assert report.reason.kind == "star_violated"
        assert report.reason.star_violation is StarViolation.EPS1_NEGATIVE
        assert report.m is None and report.M is None


class TestIsValidCatalyst:
    def test_worked_catalyst(self):
        assert is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(3, 5))

    def test_even_catalyst_is_too_weak(self):
        # p = 1/2 means ratio 1, above the upper bound 2/3.
        assert not is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(1, 2))

    def test_endpoints_inclusive(self):
        assert is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(3, 5))
        assert is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(5, 8))

    def test_just_outside_endpoints(self):
        assert not is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(3, 5) - F(1, 1000))
        assert not is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(5, 8) + F(1, 1000))

    @pytest.mark.parametrize("p", ["1/2", "11/20", "3/5", "7/10", "1"])
    def test_infeasible_pair_always_false(self, p):
        assert not is_valid_catalyst(HARD_SOURCE, HARD_TARGET, F(p))

    def test_product_catalyst_never_works(self):
        assert not is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(1))

    def test_p_out_of_range(self):
        with pytest.raises(ValueError, match=r"\[1/2, 1\]"):
            is_valid_catalyst(CAT_SOURCE, CAT_TARGET, F(2, 5))

    def test_locc_possible_pair_rejected(self):
        with pytest.raises(ValueError, match="already possible"):
            is_valid_catalyst(CAT_SOURCE, CAT_SOURCE, F(3, 5))


class TestClosedFormLambdaPrime:
    def test_worked_example(self):
        values = closed_form_lambda_prime(CAT_TARGET, CAT_EPS, F(3, 5))
        assert values == (
            F(3, 10),
            F(1, 2),
            F(13, 20),
            F(4, 5),
            F(9, 10),
            F(1),
            F(1),
            F(1),
        )

    def test_second_entry_is_top_target_coefficient(self):
        values = closed_form_lambda_prime(CAT_TARGET, CAT_EPS, F(5, 8))
        assert values[1] == F(1, 2)
        assert values[7] == F(1)

    def test_outside_interval_rejected(self):
        with pytest.raises(ValueError, match="outside feasible interval"):
            closed_form_lambda_prime(CAT_TARGET, CAT_EPS, F(9, 10))

    def test_matches_sorted_augmented_sums(self):
        for p in (F(3, 5), F(29, 48), F(5, 8)):
            catalyst = two_qubit_catalyst(p)
            expected = partial_sums(augment(CAT_TARGET, catalyst))
            assert closed_form_lambda_prime(CAT_TARGET, CAT_EPS, p) == expected


class TestReportInvariants:
    @given(star_pairs())
    def test_bounds_and_intervals(self, pair):
        source, target = pair
        report = analyze(source, target)
        assert report.verdict in (Verdict.CATALYZABLE, Verdict.INFEASIBLE)
        assert report.m is not None and report.M is not None
        assert report.m > 0
        assert report.M <= 1
        if report.verdict is Verdict.CATALYZABLE:
            lo, hi = report.p_interval
            assert F(1, 2) <= lo <= hi <= 1
            assert lo == 1 / (1 + report.M) and hi == 1 / (1 + report.m)
            # Weak inequalities: both endpoints really work.
            assert is_valid_catalyst(source, target, lo)
            assert is_valid_catalyst(source, target, hi)
        else:
            assert report.m > report.M

    @given(star_pairs(), catalyst_params())
    @settings(max_examples=200)
    def test_agrees_with_oracle(self, pair, p):
        source, target = pair
        predicted = is_valid_catalyst(source, target, p)
        actual = oracle_valid_catalyst(source, target, two_qubit_catalyst(p))
        assert predicted == actual

    @given(star_pairs())
    def test_closed_form_matches_oracle_inside_interval(self, pair):
        source, target = pair
        report = analyze(source, target)
        if report.verdict is not Verdict.CATALYZABLE:
            return
        eps = epsilon_decompose(source, target)
        lo, hi = report.p_interval
        for p in (lo, hi, (lo + hi) / 2):
            expected = partial_sums(augment(target, two_qubit_catalyst(p)))
            assert closed_form_lambda_prime(target, eps, p) == expected


class TestNecessityOfSlack:
    @given(star_pairs())
    def test_zero_eps1_means_infeasible(self, pair):
        # Fold the first slack back into the target: the pair keeps a valid
        # decomposition with eps1 = 0 and must become infeasible (m infinite).
        source, target = pair
        eps = epsilon_decompose(source, target)
        adjusted = Spectrum4((source[0], target[1] + eps.eps1, target[2], target[3]))
        assert epsilon_decompose(source, adjusted) == EpsilonTriple(
            F(0), eps.eps2, eps.eps3
        )
        report = analyze(source, adjusted)
        assert report.verdict is Verdict.INFEASIBLE
        assert is_infinite(report.m)

    @given(star_pairs())
    def test_zero_eps3_means_infeasible(self, pair):
        # Same with the last slack: eps3 = 0 collapses the upper bound to 0.
        source, target = pair
        eps = epsilon_decompose(source, target)
        adjusted = Spectrum4((target[0], target[1], source[2] + eps.eps2, source[3]))
        assert epsilon_decompose(source, adjusted) == EpsilonTriple(
            eps.eps1, eps.eps2, F(0)
        )
        report = analyze(source, adjusted)
        assert report.verdict is Verdict.INFEASIBLE
        assert report.M == 0
