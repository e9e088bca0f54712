import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mdswe.binary_avg import avg_binary_pwgf, avg_binary_wgf, bits_per_symbol
from mdswe.errorprob import (FREE, FULL, ZERO, ConditionCountMismatchError,
                             ParamOutOfRangeError, at_most, bep_curve, bep_ml_union,
                             bm_curve, cep_bm, cep_ml_union, channel_map,
                             conditional_pwgf, make_union_bound, multiuser_bep,
                             multiuser_curve, multiuser_sep, parse_condition, sep_bm,
                             snr_grid, sphere_distance_prob, user_iowe)
from mdswe.gf import Field
from mdswe.linear_code import brute_force_weights, rs_code
from mdswe.mds_enum import MdsParams, pwgf, weight_distribution
from mdswe.montecarlo import BmSphereOracle

P738 = MdsParams(7, 3, 8)
P1511 = MdsParams(15, 11, 16)
SIZES_1511 = (3, 3, 5, 4)


def _distance_distribution_oracle(n, q, h, p):
    """Exhaustive distance distribution for tiny channels: enumerate every
    received word with its probability against a fixed weight-h codeword."""
    codeword = [1] * h + [0] * (n - h)
    dist = [0.0] * (n + 1)
    for word in itertools.product(range(q), repeat=n):
        prob = 1.0
        for v in word:
            prob *= (1 - p) if v == 0 else p / (q - 1)
        d = sum(1 for a, b in zip(word, codeword) if a != b)
        dist[d] += prob
    return dist


class TestChannelMap:
    def test_high_snr_limit(self):
        ch = channel_map(40.0, 7, 3, 3)
        assert ch.p_bit < 1e-12 and ch.p_symbol < 1e-11

    def test_zero_linear_snr_gives_half(self):
        ch = channel_map(-300.0, 7, 3, 3)
        assert ch.p_bit == pytest.approx(0.5, abs=1e-6)

    def test_m1_symbol_equals_bit(self):
        ch = channel_map(3.0, 7, 4, 1)
        assert ch.p_symbol == ch.p_bit

    def test_symbol_from_bit(self):
        ch = channel_map(2.0, 15, 11, 4)
        assert ch.p_symbol == pytest.approx(1 - (1 - ch.p_bit) ** 4, rel=1e-12)


class TestSphereDistanceProb:
    def test_error_free_channel(self):
        for h in range(8):
            for t in range(8):
                expected = 1.0 if t == h else 0.0
                assert sphere_distance_prob(7, 8, h, t, 0.0) == expected

    def test_small_case_frozen_value(self):
        # weight-1 codeword at distance 0 needs the single support symbol
        # flipped to the codeword value and no other errors
        assert sphere_distance_prob(3, 2, 1, 0, 0.1) == pytest.approx(0.081, abs=1e-15)

    @pytest.mark.parametrize("q,n,h", [(2, 3, 1), (2, 4, 2), (4, 3, 3), (8, 2, 1)])
    @pytest.mark.parametrize("p", [0.1, 0.35])
    def test_matches_exhaustive_oracle(self, q, n, h, p):
        oracle = _distance_distribution_oracle(n, q, h, p)
        for t in range(n + 1):
            assert sphere_distance_prob(n, q, h, t, p) == pytest.approx(
                oracle[t], abs=1e-14)

    @pytest.mark.parametrize("q,n", [(2, 7), (8, 7), (16, 15)])
    def test_total_probability(self, q, n):
        for h in range(n + 1):
            for p in (0.01, 0.1, 0.4):
                total = sum(sphere_distance_prob(n, q, h, t, p) for t in range(n + 1))
                assert abs(total - 1.0) <= 1e-12

    @given(st.floats(0.0, 1.0), st.integers(0, 7), st.integers(0, 7))
    @settings(max_examples=60, deadline=None)
    def test_in_unit_interval(self, p, h, t):
        v = sphere_distance_prob(7, 8, h, t, p)
        assert -1e-15 <= v <= 1.0 + 1e-12

    def test_param_validation(self):
        with pytest.raises(ParamOutOfRangeError):
            sphere_distance_prob(7, 8, 9, 0, 0.1)
        with pytest.raises(ParamOutOfRangeError):
            sphere_distance_prob(7, 8, 0, 0, 1.5)


class TestBmDecoder:
    def test_zero_error_channel(self):
        E = weight_distribution(P738)
        assert cep_bm(E, 7, 5, 0.0, 8) == 0.0
        assert sep_bm(E, 7, 5, 0.0, 8) == 0.0

    def test_sep_below_cep(self):
        E = weight_distribution(P1511)
        for p in (0.01, 0.05, 0.2):
            assert sep_bm(E, 15, 5, p, 16) <= cep_bm(E, 15, 5, p, 16)

    @pytest.mark.parametrize("p", [0.05, 0.1, 0.2])
    def test_monte_carlo_agreement(self, p):
        code = rs_code(Field(2, 3), 7, 3)
        E = brute_force_weights(code)
        sim = BmSphereOracle(code).simulate(p, 200_000, seed=7)
        assert sim.cep.within(cep_bm(E, 7, 5, p, 8))
        assert sim.sep.within(sep_bm(E, 7, 5, p, 8))


class TestMlUnionBounds:
    def test_high_snr_limit(self):
        avg = avg_binary_wgf(P738)
        assert bep_ml_union(avg, 7, 3, 3, 40.0) < 1e-12

    def test_bep_below_cep(self):
        avg = avg_binary_wgf(P1511)
        for g in (2.0, 4.0, 6.0):
            assert bep_ml_union(avg, 15, 4, 11, g) <= cep_ml_union(avg, 15, 4, 11, g)

    def test_bit_coefficient_ratio(self):
        # the BEP coefficient is (h / mn) E~(h) for every weight
        avg = avg_binary_wgf(P738)
        for h in range(1, 22):
            if avg[h]:
                assert Fraction(h, 21) * avg[h] == avg[h] * Fraction(h, 21)

    def test_custom_term_plugs_in(self):
        avg = avg_binary_wgf(P738)
        flat = bep_ml_union(avg, 7, 3, 3, 5.0, term=lambda g, h: 1.0)
        # with F == 1 the sum telescopes to sum_h (h/mn) E~(h), clamped
        exact = sum(Fraction(h, 21) * avg[h] for h in range(1, 22))
        assert flat == min(1.0, float(exact))


class TestConditionalPwgf:
    def test_paper_filter(self):
        poly = pwgf(P738, (1, 1, 2, 3))
        kept = conditional_pwgf(poly, (1, 1, 2, 3), (ZERO, FULL, FREE, FREE))
        assert kept.terms == {(0, 1, 1, 3): 14, (0, 1, 2, 2): 21, (0, 1, 2, 3): 21}

    def test_all_free_unchanged(self):
        poly = pwgf(P738, (1, 1, 2, 3))
        assert conditional_pwgf(poly, (1, 1, 2, 3), (FREE,) * 4) == poly

    def test_all_full_single_term(self):
        poly = pwgf(P738, (1, 1, 2, 3))
        kept = conditional_pwgf(poly, (1, 1, 2, 3), (FULL,) * 4)
        assert kept.terms == {(1, 1, 2, 3): 217}

    def test_at_most_fraction(self):
        poly = pwgf(P738, (3, 4))
        kept = conditional_pwgf(poly, (3, 4), (at_most(Fraction(1, 3)), FREE))
        assert all(e[0] <= 1 for e in kept.terms)

    def test_binary_full_weight(self):
        binary = avg_binary_pwgf(pwgf(P738, (3, 4)), 3)
        kept = conditional_pwgf(binary, (3, 4), (FULL, FREE), binary=True, m=3)
        assert all(e[0] == 9 for e in kept.terms)
        assert len(kept) > 0

    def test_condition_count_mismatch(self):
        poly = pwgf(P738, (3, 4))
        with pytest.raises(ConditionCountMismatchError):
            conditional_pwgf(poly, (3, 4), (FREE,))

    def test_parse_condition(self):
        assert parse_condition("zero") == ZERO
        assert parse_condition("atmost:0.25") == at_most(Fraction(1, 4))
        with pytest.raises(ValueError):
            parse_condition("half")


class TestUserIowe:
    def test_marginal_is_weight_distribution(self):
        poly = pwgf(P1511, SIZES_1511)
        E = weight_distribution(P1511)
        for j in range(4):
            ow = user_iowe(poly, j)
            for h in range(16):
                assert sum(c for (w, hh), c in ow.items() if hh == h) == E[h]

    def test_user_index_validated(self):
        with pytest.raises(ValueError):
            user_iowe(pwgf(P738, (3, 4)), 2)


class TestMultiuser:
    def test_unconditional_sep_equals_code_sep(self):
        # with all blocks free, O_h collapses to (h/n) E(h): the user SEP
        # is the plain symbol error probability, bit for bit
        E = weight_distribution(P1511)
        for u in range(3):
            for p in (0.01, 0.1):
                assert multiuser_sep(P1511, SIZES_1511, u, (FREE,) * 4, p) == \
                    sep_bm(E, 15, 5, p, 16)

    def test_unconditional_bep_equals_code_bep(self):
        avg = avg_binary_wgf(P1511)
        for u in range(3):
            assert multiuser_bep(P1511, SIZES_1511, u, (FREE,) * 4, 5.0) == \
                pytest.approx(bep_ml_union(avg, 15, 4, 11, 5.0), rel=1e-12)

    def test_zero_error_channel(self):
        assert multiuser_sep(P1511, SIZES_1511, 2, (ZERO, FULL, FREE, FREE), 0.0) == 0.0

    def test_conditional_ordering_at_fixed_gamma(self):
        p = channel_map(5.0, 15, 11, 4).p_symbol
        v00 = multiuser_sep(P1511, SIZES_1511, 2, (ZERO, ZERO, FREE, FREE), p)
        v01 = multiuser_sep(P1511, SIZES_1511, 2, (ZERO, FULL, FREE, FREE), p)
        v11 = multiuser_sep(P1511, SIZES_1511, 2, (FULL, FULL, FREE, FREE), p)
        assert v11 < v01 < v00

    def test_collapsed_bit_route_matches_literal_pipeline(self):
        # the production path folds blocks into (user bits, total bits)
        # before the F substitution; the literal pipeline substitutes into
        # all blocks, filters at bit level, then extracts
        from mdswe.errorprob import _user_bit_profile

        sizes = (1, 1, 2, 3)
        m = 3
        for conds in [(FREE,) * 4, (ZERO, FULL, FREE, FREE),
                      (FREE, at_most(Fraction(1, 2)), FREE, FREE)]:
            for user in (0, 2):
                if conds[user].kind in ("zero", "full"):
                    continue
                sym = conditional_pwgf(pwgf(P738, sizes), sizes, conds)
                bits = conditional_pwgf(avg_binary_pwgf(sym, m), sizes, conds,
                                        binary=True, m=m)
                expected = {}
                for (w, h), c in user_iowe(bits, user).items():
                    if w:
                        expected[h] = expected.get(h, Fraction(0)) + \
                            Fraction(w, m * sizes[user]) * c
                assert _user_bit_profile(P738, sizes, user, conds) == expected

    def test_user_condition_must_be_free_or_atmost(self):
        with pytest.raises(ValueError):
            multiuser_sep(P1511, SIZES_1511, 1, (ZERO, FULL, FREE, FREE), 0.1)

    def test_condition_count_checked(self):
        with pytest.raises(ConditionCountMismatchError):
            multiuser_sep(P1511, SIZES_1511, 0, (FREE, FREE), 0.1)


class TestCurves:
    GRID = snr_grid(4.0, 8.0, 1.0)

    def test_snr_grid_inclusive(self):
        assert snr_grid(4.0, 8.0, 0.25)[0] == 4.0
        assert snr_grid(4.0, 8.0, 0.25)[-1] == 8.0
        assert len(snr_grid(4.0, 8.0, 0.25)) == 17

    def test_bm_curves_monotone_and_bounded(self):
        for metric in ("cep", "sep"):
            curve = bm_curve(P1511, self.GRID, metric)
            probs = [v for _, v in curve.points]
            assert all(0.0 <= v <= 1.0 for v in probs)
            assert all(b <= a for a, b in zip(probs, probs[1:]))

    def test_bep_curve_monotone(self):
        probs = [v for _, v in bep_curve(P738, self.GRID).points]
        assert all(b <= a for a, b in zip(probs, probs[1:]))
        assert all(0.0 <= v <= 1.0 for v in probs)

    def test_unconditional_sep_identical_across_users(self):
        curves = [multiuser_curve(P1511, SIZES_1511, u, (FREE,) * 4, self.GRID, "sep")
                  for u in range(3)]
        assert curves[0].points == curves[1].points == curves[2].points

    def test_metric_validation(self):
        with pytest.raises(ValueError):
            bm_curve(P1511, self.GRID, "bep")
        with pytest.raises(ValueError):
            multiuser_curve(P1511, SIZES_1511, 0, (FREE,) * 4, self.GRID, "cep")
