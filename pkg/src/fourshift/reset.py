"""The reset system: alarm clocks on (position, countdown) pairs.

A generator acts componentwise: a running clock ticks down, a buzzing clock
(countdown 0) is re-armed to the generator's value.  The solver reaches the
all-(0,0) state with the shortest possible word of zero generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError


class LengthMismatch(DomainError):
    pass


@dataclass(frozen=True)
class ResetState:
    clocks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.clocks:
            raise DomainError("a reset state needs at least one clock")
        if any(t < 0 for _, t in self.clocks):
            raise DomainError("countdowns are nonnegative")


@dataclass(frozen=True)
class ResetGen:
    values: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(t < 0 for _, t in self.values):
            raise DomainError("countdowns are nonnegative")


def reset_act(g: ResetGen, v: ResetState) -> ResetState:
    if len(g.values) != len(v.clocks):
        raise LengthMismatch("generator and state have different arities")
    out = []
    for gi, (n, t) in zip(g.values, v.clocks):
        out.append((n, t - 1) if t > 0 else gi)
    return ResetState(tuple(out))


def reset_solve_zero(v: ResetState) -> list[ResetGen]:
    """Word of all-(0,0) generators taking v to the all-(0,0) state; its
    length is exactly max countdown + 1."""
    k = len(v.clocks)
    zero = ResetGen(((0, 0),) * k)
    steps = max(t for _, t in v.clocks) + 1
    return [zero] * steps


def reset_reach(u: ResetState, v: ResetState) -> list[ResetGen]:
    """Generator word taking v to u: run v's countdowns out, then re-arm
    every (now buzzing) clock to u in one final step."""
    if len(u.clocks) != len(v.clocks):
        raise LengthMismatch("states have different arities")
    k = len(v.clocks)
    zero = ResetGen(((0, 0),) * k)
    return [zero] * max(t for _, t in v.clocks) + [ResetGen(u.clocks)]
