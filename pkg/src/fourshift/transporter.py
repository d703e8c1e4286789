"""Transport of distinct-orbit tuples: classify, make good, make great,
normalize to the canonical great vector, and splice with the inverted
destination pipeline.

Every emitted word is built by simulating its own application, so the
returned tuple is always the exact replay result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Config, DomainError, TupleK, classify, tracks, validate_tuple
from .generators import (SWAP_13, SWAP_23, HeadLocal, HeadShift, Particle,
                         SymbolPerm, TransportWord, apply_instruction,
                         apply_word, invert_word)
from .permbuild import build_mapping_perm
from .reset import LengthMismatch


class NotGood(DomainError):
    pass


class NotGreat(DomainError):
    pass


class InternalScheduleViolation(AssertionError):
    """An unplanned head coincidence during the great-making phase."""


@dataclass(frozen=True)
class Reading:
    """First-collision data of a clock-like point: shifting by `a` after
    t+1 inverse particle steps yields a great point."""

    a: int
    t: int


def phi_clock(x: Config) -> Optional[Reading]:
    """Closed-form clock reading; None when the point is not clock-like."""
    if x.is_zero():
        raise DomainError("zero point has no clock reading")
    particles, walls = tracks(x)
    gaps = sorted(w - p for p in particles for w in walls if w - p >= 1)
    if not gaps:
        return None
    s = gaps[0]
    hits = [w for w in walls if w - s in particles]
    if len(hits) != 1:
        return None
    return Reading(hits[0], s - 1)


@dataclass(frozen=True)
class BuzzPlan:
    """Per component: first-buzz position and time; horizon strictly later
    than every buzz."""

    entries: tuple[tuple[int, int], ...]  # (a_i, tau_i), tau_i >= 1
    horizon: int


def first_buzz_schedule(t: TupleK) -> BuzzPlan:
    entries = []
    for c in t:
        if not classify(c).good:
            raise NotGood("schedule requires a good tuple")
        r = phi_clock(c)
        if r is None:  # good points are always clock-like
            raise InternalScheduleViolation("good component without a reading")
        entries.append((r.a, r.t + 1))
    horizon = max(tau for _, tau in entries) + 1
    return BuzzPlan(tuple(entries), horizon)


def _align_amount(comps: list[Config]) -> int:
    """Smallest particle move putting all particles strictly left of all
    walls in every component."""
    need = 0
    for c in comps:
        particles, walls = tracks(c)
        for p in particles:
            for w in walls:
                need = max(need, p - w + 1)
    return need


def make_good(t: TupleK) -> tuple[TransportWord, TupleK]:
    """Particle moves and symbol swaps producing a good tuple; phases whose
    target already holds are skipped."""
    steps: list = []
    comps = list(t.components)

    def emit(ins):
        nonlocal comps
        steps.append(ins)
        comps = [apply_instruction(c, ins) for c in comps]

    if not all(classify(c).prepregood for c in comps):
        emit(Particle(_align_amount(comps)))
    if not all(classify(c).pregood for c in comps):
        emit(SymbolPerm(SWAP_23))
        emit(Particle(_align_amount(comps)))
    if not all(classify(c).good for c in comps):
        emit(SymbolPerm(SWAP_13))
        emit(Particle(_align_amount(comps)))
    out = TupleK(tuple(comps))
    if not all(classify(c).good for c in out):
        raise InternalScheduleViolation("good phase failed")
    return TransportWord(tuple(steps)), out


def _heads_of(c: Config) -> set[int]:
    return {p for p, s in c.cells if s == 3}


def _window_word(c: Config, center: int, r: int) -> str:
    offsets = (*range(-r, 0), *range(1, r + 1))
    return "".join(str(c.sym(center + d)) for d in offsets)


def make_great(t: TupleK) -> tuple[TransportWord, TupleK]:
    """Drive the tuple through the one-reset buzz schedule so that every
    component ends with exactly one head, at the origin."""
    plan = first_buzz_schedule(t)
    horizon = plan.horizon
    steps: list = []
    comps = list(t.components)
    now = 0

    def emit(ins):
        nonlocal comps
        steps.append(ins)
        comps = [apply_instruction(c, ins) for c in comps]

    by_time: dict[int, list[int]] = {}
    for i, (_, tau) in enumerate(plan.entries):
        by_time.setdefault(tau, []).append(i)

    for tau in sorted(by_time):
        buzzing = by_time[tau]
        emit(Particle(-(tau - now)))
        now = tau
        for i, c in enumerate(comps):
            heads = _heads_of(c)
            want = {plan.entries[i][0]} if i in buzzing else set()
            if heads != want:
                raise InternalScheduleViolation(
                    f"component {i} has heads {sorted(heads)} at time {tau}")
        e = max(1, 2 - min(plan.entries[i][0] for i in buzzing))
        emit(HeadShift(e))
        kpos = {i: plan.entries[i][0] + e for i in buzzing}
        for i in buzzing:
            if _heads_of(comps[i]) != {kpos[i]}:
                raise InternalScheduleViolation("head shift missed its target")
        targets = {
            i: Config.from_cells({
                0: 2,                      # wall for the rescheduled collision
                -(horizon - tau): 1,       # particle that buzzes at 0 at horizon
                kpos[i]: 3,                # the head stays put
                kpos[i] + i + 2: 1,        # orbit-separating companion
            })
            for i in buzzing
        }
        r = 1
        for i in buzzing:
            q = kpos[i]
            for p in set(comps[i].support()) | set(targets[i].support()):
                if p != q:
                    r = max(r, abs(p - q))
        pairs = [(_window_word(comps[i], kpos[i], r),
                  _window_word(targets[i], kpos[i], r)) for i in buzzing]
        emit(HeadLocal(r, build_mapping_perm(pairs, 2 * r)))
        for i in buzzing:
            if comps[i] != targets[i]:
                raise InternalScheduleViolation("reset rewrite missed its target")

    emit(Particle(-(horizon - now)))
    out = TupleK(tuple(comps))
    if not all(classify(c).great for c in out):
        raise InternalScheduleViolation("great phase failed")
    return TransportWord(tuple(steps)), out


def canonical_great(k: int) -> TupleK:
    """The target vector: component i has a head at 0 and a particle at i."""
    if k < 1:
        raise DomainError("k must be positive")
    return TupleK(tuple(
        Config.from_cells({0: 3, i: 1}) for i in range(1, k + 1)))


def make_canonical(t: TupleK) -> tuple[TransportWord, TupleK]:
    """One head-local rewrite mapping a great tuple to canonical_great(k)."""
    k = len(t)
    for c in t:
        if not classify(c).great:
            raise NotGreat("canonical phase requires a great tuple")
    goal = canonical_great(k)
    r = max(k, 1)
    for c, g in zip(t, goal):
        for p in (*c.support(), *g.support()):
            if p != 0:
                r = max(r, abs(p))
    pairs = [(_window_word(c, 0, r), _window_word(g, 0, r))
             for c, g in zip(t, goal)]
    wp = build_mapping_perm(pairs, 2 * r)
    ins = HeadLocal(r, wp)
    comps = tuple(apply_instruction(c, ins) for c in t)
    if comps != goal.components:
        raise InternalScheduleViolation("canonical rewrite missed its target")
    return TransportWord((ins,)), goal


def pipeline(t: TupleK) -> tuple[TransportWord, TupleK]:
    """Full normalization: good, then great, then canonical."""
    w1, t1 = make_good(t)
    w2, t2 = make_great(t1)
    w3, t3 = make_canonical(t2)
    return w1 + w2 + w3, t3


def transport(src: TupleK, dst: TupleK) -> TransportWord:
    """A word whose replay maps src to dst exactly."""
    src = validate_tuple(src.components)
    dst = validate_tuple(dst.components)
    if len(src) != len(dst):
        raise LengthMismatch("tuples have different arity")
    word_s, canon_s = pipeline(src)
    word_d, canon_d = pipeline(dst)
    if canon_s != canon_d:
        raise InternalScheduleViolation("pipelines reached different vectors")
    word = word_s + invert_word(word_d)
    if not verify(word, src, dst):
        raise InternalScheduleViolation("transport word failed replay")
    return word


def verify(word: TransportWord, src: TupleK, dst: TupleK) -> bool:
    """Exact componentwise equality of the replay result with dst."""
    if len(src) != len(dst):
        return False
    return apply_word(src, word).components == dst.components
