"""The five generator families as exact evaluators on finite points.

An instruction is one of: the particle rule power, a cellwise symbol
permutation fixing 0, a head-local window permutation, a power of the
simulated head shift, or a general safe rewrite.  A transport word is a
flat list of instructions applied left to right; every instruction is an
automorphism, so words invert by reversing the list of inverted steps.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from . import safety
from .core import Config, DomainError, TupleK, from_tracks, tracks
from .permbuild import WordPerm


class IllFormedInstruction(DomainError):
    pass


@dataclass(frozen=True)
class Perm4:
    """Permutation of the symbols {0,1,2,3} fixing 0."""

    img: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.img) != [0, 1, 2, 3] or self.img[0] != 0:
            raise IllFormedInstruction(f"not a 0-fixing symbol permutation: {self.img}")

    def apply(self, s: int) -> int:
        return self.img[s]

    def inverse(self) -> "Perm4":
        inv = [0] * 4
        for i, j in enumerate(self.img):
            inv[j] = i
        return Perm4(tuple(inv))


SWAP_12 = Perm4((0, 2, 1, 3))
SWAP_13 = Perm4((0, 3, 2, 1))
SWAP_23 = Perm4((0, 1, 3, 2))


@dataclass(frozen=True)
class Particle:
    """P^e: moves every particle e cells to the left, walls stay put."""

    e: int


@dataclass(frozen=True)
class SymbolPerm:
    perm: Perm4


@dataclass(frozen=True)
class HeadLocal:
    """Rewrite the radius-r window around every sufficiently isolated head
    by a permutation of {0,1,2}^(2r)."""

    r: int
    wp: WordPerm

    def __post_init__(self):
        if self.r < 1:
            raise IllFormedInstruction("radius must be positive")
        if self.wp.length != 2 * self.r:
            raise IllFormedInstruction("window permutation length must be 2r")


@dataclass(frozen=True)
class HeadShift:
    """e-th power of the simulated shift of an isolated head."""

    e: int


@dataclass(frozen=True)
class SafeRewrite:
    spec: safety.SafeRewriteSpec


Instruction = Particle | SymbolPerm | HeadLocal | HeadShift | SafeRewrite


@dataclass(frozen=True)
class TransportWord:
    steps: tuple[Instruction, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "TransportWord") -> "TransportWord":
        return TransportWord(self.steps + other.steps)


def _apply_particle(x: Config, e: int) -> Config:
    particles, walls = tracks(x)
    return from_tracks((p - e for p in particles), walls)


def _apply_symbol_perm(x: Config, perm: Perm4) -> Config:
    return Config.from_cells((p, perm.apply(s)) for p, s in x.cells)


def _apply_head_local(x: Config, ins: HeadLocal) -> Config:
    r = ins.r
    heads = sorted(p for p, s in x.cells if s == 3)
    isolated = [q for q in heads
                if all(q == p or abs(q - p) >= 2 * r + 3 for p in heads)]
    if not isolated:
        return x
    cells = x.as_dict()
    for q in isolated:
        window = "".join(str(x.sym(q + d)) for d in (*range(-r, 0), *range(1, r + 1)))
        if "3" in window:
            raise IllFormedInstruction("head inside an isolated window")
        out = ins.wp.apply(window)
        offsets = (*range(-r, 0), *range(1, r + 1))
        for d in offsets:
            cells.pop(q + d, None)
        for d, ch in zip(offsets, out):
            if ch != "0":
                cells[q + d] = int(ch)
    return Config.from_cells(cells)


def _apply_head_shift(x: Config, e: int) -> Config:
    step = 1 if e > 0 else -1
    cur = x
    for _ in range(abs(e)):
        cur = safety.head_shift_once(cur, step)
    return cur


def apply_instruction(x: Config, ins: Instruction) -> Config:
    if isinstance(ins, Particle):
        return _apply_particle(x, ins.e)
    if isinstance(ins, SymbolPerm):
        return _apply_symbol_perm(x, ins.perm)
    if isinstance(ins, HeadLocal):
        return _apply_head_local(x, ins)
    if isinstance(ins, HeadShift):
        return _apply_head_shift(x, ins.e)
    if isinstance(ins, SafeRewrite):
        return safety.apply_safe_rewrite(x, ins.spec)
    raise IllFormedInstruction(f"unknown instruction {ins!r}")


def apply_word(target: Config | TupleK, word: TransportWord):
    """Left-to-right fold of apply_instruction, componentwise on tuples."""
    if isinstance(target, TupleK):
        comps = list(target.components)
        for ins in word.steps:
            comps = [apply_instruction(c, ins) for c in comps]
        return TupleK(tuple(comps))
    cur = target
    for ins in word.steps:
        cur = apply_instruction(cur, ins)
    return cur


def invert_instruction(ins: Instruction) -> Instruction:
    if isinstance(ins, Particle):
        return Particle(-ins.e)
    if isinstance(ins, SymbolPerm):
        return SymbolPerm(ins.perm.inverse())
    if isinstance(ins, HeadLocal):
        return HeadLocal(ins.r, ins.wp.inverse())
    if isinstance(ins, HeadShift):
        return HeadShift(-ins.e)
    if isinstance(ins, SafeRewrite):
        return SafeRewrite(safety.invert_spec(ins.spec))
    raise IllFormedInstruction(f"unknown instruction {ins!r}")


def invert_word(word: TransportWord) -> TransportWord:
    return TransportWord(tuple(invert_instruction(i) for i in reversed(word.steps)))


def size_report(word: TransportWord) -> dict[str, int]:
    """Instruction counts by tag, for word-length reporting."""
    return dict(Counter(type(ins).__name__ for ins in word.steps))
