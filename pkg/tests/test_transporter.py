"""Clock readings, the good/great/canonical pipeline, and transport."""

import pytest

from fourshift.core import Config, ZERO, classify, shift, tracks, validate_tuple
from fourshift.generators import (SWAP_23, Particle, SymbolPerm,
                                  TransportWord, apply_instruction,
                                  apply_word, invert_word)
from fourshift.reset import LengthMismatch
from fourshift.transporter import (NotGood, NotGreat, Reading, canonical_great,
                                   first_buzz_schedule, make_canonical,
                                   make_good, make_great, phi_clock, pipeline,
                                   transport, verify)

from conftest import rand_config, rand_tuple


def cfg(offset, digits):
    return Config.from_word(offset, digits)


DEMO3 = validate_tuple((cfg(0, "3"), cfg(-1, "201"), cfg(0, "22")))
DEMO3_GOOD = validate_tuple((cfg(-5, "100102"), cfg(-4, "1102"),
                            cfg(-2, "1122")))


def phi_bruteforce(x):
    """Literal oracle: apply Particle(-1) until a head appears."""
    span = x.max_pos() - x.min_pos() + 2
    cur = x
    for s in range(1, span + 1):
        cur = apply_instruction(cur, Particle(-1))
        heads = [p for p, sym in cur.cells if sym == 3]
        if heads:
            if len(heads) == 1:
                return Reading(heads[0], s - 1)
            return None
    return None


class TestPhiClock:
    def test_demo_component(self):
        assert phi_clock(cfg(-2, "1122")) == Reading(0, 0)

    def test_no_walls(self):
        assert phi_clock(cfg(0, "1")) is None

    def test_double_collision(self):
        assert phi_clock(cfg(0, "1212")) is None

    def test_rejects_zero(self):
        with pytest.raises(Exception):
            phi_clock(ZERO)

    def test_matches_bruteforce(self, rng):
        for _ in range(2000):
            x = rand_config(rng, span=9, max_cells=6)
            if any(s == 3 for _, s in x.cells):
                continue  # the oracle counts from a head-free start
            assert phi_clock(x) == phi_bruteforce(x)


class TestMakeGood:
    def test_demo_word_and_endpoint(self):
        word, out = make_good(DEMO3)
        assert word.steps == (Particle(3), SymbolPerm(SWAP_23), Particle(2))
        assert out.components == DEMO3_GOOD.components

    def test_already_good_empty_word(self):
        word, out = make_good(DEMO3_GOOD)
        assert word.steps == () and out.components == DEMO3_GOOD.components

    def test_single_wall(self):
        word, out = make_good(validate_tuple((cfg(0, "2"),)))
        assert classify(out[0]).good
        assert apply_word(cfg(0, "2"), word) == out[0]

    def test_random(self, rng):
        for _ in range(200):
            t = rand_tuple(rng, rng.randrange(1, 4))
            word, out = make_good(t)
            assert all(classify(c).good for c in out)
            assert apply_word(t, word).components == out.components


class TestBuzzSchedule:
    def test_demo_schedule(self):
        plan = first_buzz_schedule(DEMO3_GOOD)
        assert [tau for _, tau in plan.entries] == [2, 2, 1]
        assert [a for a, _ in plan.entries] == [0, -1, 0]
        assert plan.horizon == 3

    def test_single_component(self):
        plan = first_buzz_schedule(validate_tuple((cfg(-1, "12"),)))
        assert plan.entries == ((0, 1),) and plan.horizon == 2

    def test_requires_good(self):
        with pytest.raises(NotGood):
            first_buzz_schedule(validate_tuple((cfg(0, "1"),)))


class TestMakeGreat:
    def test_demo_tuple(self):
        word, out = make_great(DEMO3_GOOD)
        assert all(classify(c).great for c in out)
        assert apply_word(DEMO3_GOOD, word).components == out.components

    def test_single_component(self):
        t = validate_tuple((cfg(-1, "12"),))
        _, out = make_great(t)
        assert classify(out[0]).great

    def test_simultaneous_buzz(self):
        # two components with equal first-buzz times share one event
        t = validate_tuple((cfg(-1, "12"), cfg(-1, "122")))
        word, out = make_great(t)
        assert all(classify(c).great for c in out)

    def test_random(self, rng):
        for _ in range(100):
            t = rand_tuple(rng, rng.randrange(1, 4))
            _, good = make_good(t)
            word, out = make_great(good)
            assert all(classify(c).great for c in out)
            assert apply_word(good, word).components == out.components


class TestCanonical:
    def test_canonical_great_shape(self):
        assert canonical_great(3).components == \
            (cfg(0, "31"), cfg(0, "301"), cfg(0, "3001"))

    def test_canonical_great_orbit_distinct(self):
        for k in range(1, 51):
            validate_tuple(canonical_great(k).components)

    def test_fixed_point(self):
        word, out = make_canonical(canonical_great(4))
        assert out.components == canonical_great(4).components
        assert apply_word(canonical_great(4), word).components == out.components

    def test_far_particle(self):
        t = validate_tuple((Config.from_cells({0: 3, 7: 1}),))
        _, out = make_canonical(t)
        assert out.components == canonical_great(1).components

    def test_requires_great(self):
        with pytest.raises(NotGreat):
            make_canonical(validate_tuple((cfg(0, "1"),)))


class TestTransport:
    def test_src_equals_dst(self, rng):
        t = rand_tuple(rng, 2)
        word = transport(t, t)
        assert verify(word, t, t)

    def test_demo_to_canonical(self):
        word = transport(DEMO3, canonical_great(3))
        assert verify(word, DEMO3, canonical_great(3))

    def test_length_mismatch(self, rng):
        with pytest.raises(LengthMismatch):
            transport(rand_tuple(rng, 2), rand_tuple(rng, 3))

    def test_inverse_word_transports_back(self, rng):
        for _ in range(30):
            k = rng.randrange(1, 4)
            s, d = rand_tuple(rng, k), rand_tuple(rng, k)
            word = transport(s, d)
            assert verify(word, s, d)
            assert verify(invert_word(word), d, s)


class TestVerify:
    def test_empty_word_identity(self, rng):
        t = rand_tuple(rng, 2)
        assert verify(TransportWord(()), t, t)

    def test_exact_not_orbit_equality(self, rng):
        t = rand_tuple(rng, 1)
        shifted = validate_tuple((shift(t[0], 1),))
        assert not verify(TransportWord(()), t, shifted)
