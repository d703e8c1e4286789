"""Occurrence sets, chi-site selection, safety validators, and the
simulated head shift."""

import pytest

from fourshift.core import Config, ZERO, shift
from fourshift.safety import (ExplicitWords, HeadLayoutWords, IllFormedSpec,
                              IllFormedWordSet, NonzeroWords,
                              SIGMA3_PI_SPEC, SIGMA3_TAU_SPEC,
                              apply_safe_rewrite, chi_sites, head_shift_once,
                              invert_spec, make_explicit_spec,
                              make_zero_padded_spec, occurrences,
                              strict_params, validate_sufficient_safety,
                              validate_zero_padded)

from conftest import rand_config, rand_single_head


def cfg(offset, digits):
    return Config.from_word(offset, digits)


def demo_spec(pairs=(("030", "031"), ("031", "030"))):
    return make_explicit_spec(["030", "031"], ["3"], pairs, ell=5, m_rad=12)


class TestOccurrences:
    def test_explicit_window_match(self):
        assert occurrences(cfg(1, "3"), ExplicitWords.of(["030", "031"])) == \
            frozenset({0})

    def test_zero_point(self):
        assert occurrences(ZERO, ExplicitWords.of(["030"])) == frozenset()

    def test_marker_singleton(self):
        assert occurrences(cfg(0, "33"), ExplicitWords.of(["3"])) == \
            frozenset({0, 1})

    def test_nonzero_words(self):
        # every window of length 2 touching a nonzero cell
        assert occurrences(cfg(0, "1"), NonzeroWords(2)) == frozenset({-1, 0})

    def test_all_zero_word_rejected(self):
        with pytest.raises(IllFormedWordSet):
            ExplicitWords.of(["000"])

    def test_translation_equivariance(self, rng):
        wset = ExplicitWords.of(["030", "031", "132"])
        for _ in range(100):
            x = rand_config(rng)
            n = rng.randrange(-7, 8)
            shifted = occurrences(shift(x, n), wset)
            assert shifted == frozenset(i - n for i in occurrences(x, wset))

    def test_layout_family_counts_heads_only(self):
        ws = HeadLayoutWords(21, frozenset({frozenset({10})}))
        assert occurrences(cfg(0, "3"), ws) == frozenset({-10})
        assert occurrences(cfg(0, "33"), ws) == frozenset()


class TestChiSites:
    def test_single_site(self):
        assert chi_sites(cfg(1, "3"), demo_spec()) == frozenset({0})

    def test_close_occurrences_blocked(self):
        x = Config.from_cells({1: 3, 5: 3})
        assert chi_sites(x, demo_spec()) == frozenset()

    def test_zero_point(self):
        assert chi_sites(ZERO, demo_spec()) == frozenset()


class TestApplySafeRewrite:
    def test_single_rewrite(self):
        assert apply_safe_rewrite(cfg(1, "3"), demo_spec()) == cfg(1, "31")

    def test_blocked_rewrite_unchanged(self):
        x = Config.from_cells({1: 3, 5: 3})
        assert apply_safe_rewrite(x, demo_spec()) == x

    def test_zero_fixed(self):
        assert apply_safe_rewrite(ZERO, demo_spec()) == ZERO

    def test_chi_stability(self, rng):
        spec = demo_spec()
        for _ in range(300):
            x = rand_config(rng, span=12)
            assert chi_sites(apply_safe_rewrite(x, spec), spec) == \
                chi_sites(x, spec)

    def test_involution(self, rng):
        spec = demo_spec()
        for _ in range(200):
            x = rand_config(rng, span=12)
            assert apply_safe_rewrite(apply_safe_rewrite(x, spec), spec) == x

    def test_invert_spec_round_trip(self, rng):
        spec = make_explicit_spec(
            ["030", "031", "032"], ["3"],
            [("030", "031"), ("031", "032"), ("032", "030")],
            ell=5, m_rad=12)
        inv = invert_spec(spec)
        for _ in range(200):
            x = rand_config(rng, span=12)
            assert apply_safe_rewrite(apply_safe_rewrite(x, spec), inv) == x


class TestValidators:
    def test_sufficient_ok(self):
        assert validate_sufficient_safety(["030", "031"], 3, 1) is None

    def test_sufficient_shape_violation(self):
        assert validate_sufficient_safety(["030", "300"], 3, 1) is not None

    def test_sufficient_leftmost_violation(self):
        assert validate_sufficient_safety(["030", "013"], 3, 1) is not None

    def test_zero_padded_ok(self):
        assert validate_zero_padded(["010", "020"], 1) is None

    def test_zero_padded_offset_violation(self):
        assert validate_zero_padded(["010000", "001000"], 2) is not None

    def test_zero_padded_all_zero(self):
        assert validate_zero_padded(["000"], 1) is not None

    def test_relaxed_radii_need_flag(self):
        with pytest.raises(IllFormedSpec):
            make_explicit_spec(["030", "031"], ["3"],
                               [("030", "031"), ("031", "030")],
                               ell=2, m_rad=12)

    def test_zero_padded_spec_round_trip(self, rng):
        spec = make_zero_padded_spec(
            ["010", "020"], [("010", "020"), ("020", "010")])
        for _ in range(100):
            x = rand_config(rng)
            assert apply_safe_rewrite(apply_safe_rewrite(x, spec), spec) == x


class TestStrictParams:
    def test_sigma3_constants(self):
        p = strict_params(21, 1)
        assert (p.ell, p.m_rad) == (5, 48)

    def test_small(self):
        p = strict_params(3, 1)
        assert (p.ell, p.m_rad) == (5, 12)

    def test_saturation_flag(self):
        p = strict_params(30, 20)
        assert p.saturated and p.ell == 4**20 + 1


class TestHeadShift:
    def test_lone_head_moves_right(self):
        assert head_shift_once(cfg(0, "3"), +1) == cfg(1, "3")

    def test_swaps_displaced_symbol(self):
        assert head_shift_once(cfg(0, "31"), +1) == cfg(0, "13")

    def test_round_trip(self):
        assert head_shift_once(head_shift_once(cfg(0, "3"), +1), -1) == \
            cfg(0, "3")

    def test_single_head_law(self, rng):
        for _ in range(300):
            x = rand_single_head(rng)
            q = next(p for p, s in x.cells if s == 3)
            y = head_shift_once(x, +1)
            want = x.as_dict()
            displaced = want.pop(q + 1, 0)
            del want[q]
            want[q + 1] = 3
            if displaced:
                want[q] = displaced
            else:
                want.pop(q, None)
            assert y == Config.from_cells(want)

    def test_inverse_on_arbitrary_configs(self, rng):
        for _ in range(300):
            x = rand_config(rng, span=10, max_cells=6)
            assert head_shift_once(head_shift_once(x, +1), -1) == x
            assert head_shift_once(head_shift_once(x, -1), +1) == x

    def test_sigma3_involutions(self, rng):
        for spec in (SIGMA3_PI_SPEC, SIGMA3_TAU_SPEC):
            for _ in range(150):
                x = rand_config(rng, span=10, max_cells=6)
                assert apply_safe_rewrite(apply_safe_rewrite(x, spec), spec) == x
