"""Auxiliary invariants: the k(X) case table for finite permutation
subshifts with a brute-force oracle, a non-shift witness search, and
sampled commutation checks."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

from .core import Config, DomainError, canonical_form, shift
from .generators import TransportWord, apply_word


class TooLarge(DomainError):
    pass


@dataclass(frozen=True)
class CycleSpec:
    """Multiset of cycle lengths of the shift on a finite subshift,
    stored as sorted (length, count) pairs."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.counts:
            raise DomainError("empty cycle spec")
        seen = set()
        for length, count in self.counts:
            if length < 1 or count < 1 or length in seen:
                raise DomainError("ill-formed cycle counts")
            seen.add(length)
        if self.counts != tuple(sorted(self.counts)):
            raise DomainError("cycle counts must be sorted by length")

    @staticmethod
    def of(lengths: Iterable[int]) -> "CycleSpec":
        lengths = list(lengths)
        return CycleSpec(tuple(sorted(
            (l, lengths.count(l)) for l in set(lengths))))

    @property
    def c1(self) -> int:
        """Number of fixed points."""
        return dict(self.counts).get(1, 0)

    @property
    def n(self) -> int:
        """Number of distinct cycle lengths >= 2."""
        return sum(1 for l, _ in self.counts if l >= 2)

    @property
    def c(self) -> Optional[int]:
        """Count of cycles of the unique length >= 2, when n = 1."""
        long = [cnt for l, cnt in self.counts if l >= 2]
        return long[0] if len(long) == 1 else None

    @property
    def total(self) -> int:
        return sum(l * cnt for l, cnt in self.counts)

    def lengths(self) -> list[int]:
        return [l for l, cnt in self.counts for _ in range(cnt)]


class KValue(Enum):
    BOTTOM = "bottom"
    ZERO = "zero"
    TWO = "two"


def k_of_finite(cs: CycleSpec) -> KValue:
    """Case table for the minimal size of a set of automorphisms whose
    common centralizer is exactly the shift group.

    The automorphism group splits over the cycle lengths as a product of
    wreath products Z_l wr S_{c_l}, whose center is S_2 when c_1 = 2
    times one uniform rotation group Z_l per length l >= 2 present.  The
    shift generates the diagonal of that torus, of order lcm of the
    lengths, so the centralizer of any family still exceeds the shift
    group exactly when c_1 = 2 or the lengths >= 2 are not pairwise
    coprime (product of distinct lengths != their lcm).  Otherwise zero
    automorphisms suffice precisely when the whole group is the shift
    group: at most one fixed point and one cycle per length, glued into
    a single cyclic group by coprimality.  In every remaining case two
    automorphisms suffice, acting in parallel on each length class (a
    two-generator reduction per class, with coprimality recombining the
    per-class shift exponents into one global shift power).
    """
    c1 = cs.c1
    long_lengths = [l for l, _ in cs.counts if l >= 2]
    bottom = c1 == 2 or math.prod(long_lengths) != math.lcm(*long_lengths)
    zero = (not bottom and c1 in (0, 1)
            and all(cnt == 1 for l, cnt in cs.counts if l >= 2))
    two = not bottom and not zero
    assert bottom + zero + two == 1, cs
    if bottom:
        return KValue.BOTTOM
    return KValue.ZERO if zero else KValue.TWO


# -- brute-force oracle --------------------------------------------------

Perm = tuple[int, ...]


def _compose(f: Perm, g: Perm) -> Perm:
    """f after g."""
    return tuple(f[i] for i in g)


def _materialize_sigma(cs: CycleSpec) -> Perm:
    img = []
    base = 0
    for length in cs.lengths():
        img.extend(base + (j + 1) % length for j in range(length))
        base += length
    return tuple(img)


def _sigma_powers(sigma: Perm) -> frozenset[Perm]:
    powers = {tuple(range(len(sigma)))}
    f = sigma
    while f not in powers:
        powers.add(f)
        f = _compose(sigma, f)
    return frozenset(powers)


def k_of_finite_bruteforce(cs: CycleSpec, seed: int = 0) -> KValue:
    """Independent oracle: enumerate every bijection commuting with the
    materialized shift permutation and measure its centralizer structure."""
    if cs.total > 8:
        raise TooLarge(f"{cs.total} points exceed the brute-force bound")
    sigma = _materialize_sigma(cs)
    n = len(sigma)
    aut = [f for f in itertools.permutations(range(n))
           if _compose(f, sigma) == _compose(sigma, f)]
    powers = _sigma_powers(sigma)

    def central(h: Perm) -> bool:
        return all(_compose(h, g) == _compose(g, h) for g in aut)

    if any(h not in powers and central(h) for h in aut):
        return KValue.BOTTOM
    if len(aut) == len(powers):
        return KValue.ZERO

    # k = 1 cannot occur: any f with centralizer <sigma> lies in its own
    # centralizer, hence in <sigma>; but at this point every sigma-power
    # is central, so its centralizer is the whole (larger) group.

    def centralizer(f: Perm) -> list[Perm]:
        return [h for h in aut if _compose(h, f) == _compose(f, h)]

    rng = random.Random(seed)
    candidates = [aut[rng.randrange(len(aut))] for _ in range(40)]
    f_best = min(candidates, key=lambda f: len(centralizer(f)))
    cf = centralizer(f_best)
    order = list(aut)
    rng.shuffle(order)
    for g in order:
        if all(h in powers or _compose(h, g) != _compose(g, h) for h in cf):
            return KValue.TWO
    raise AssertionError("no two-element generating pair found")


# -- non-shift witness search --------------------------------------------


@dataclass(frozen=True)
class Witness:
    x: Config
    image: Config


@dataclass(frozen=True)
class IsShift:
    n: int


@dataclass(frozen=True)
class Inconclusive:
    pass


WitnessResult = Union[Witness, IsShift, Inconclusive]


def _canonical_words(support_bound: int, width_bound: int) -> list[str]:
    words = []
    for length in range(1, width_bound + 1):
        for digits in itertools.product("0123", repeat=length):
            w = "".join(digits)
            if w[0] == "0" or w[-1] == "0":
                continue
            if length - w.count("0") > support_bound:
                continue
            words.append(w)
    return sorted(words)


def find_nonshift_witness(word: TransportWord, support_bound: int = 2,
                          width_bound: int = 2) -> WitnessResult:
    """First (in lexicographic word order) nonzero finite point moved out
    of its own orbit; IsShift(n) when every tested point is shifted by the
    same n, Inconclusive otherwise."""
    shifts: set[int] = set()
    for w in _canonical_words(support_bound, width_bound):
        x = Config.from_word(0, w)
        y = apply_word(x, word)
        if y.is_zero() or canonical_form(x)[0] != canonical_form(y)[0]:
            return Witness(x, y)
        n = x.min_pos() - y.min_pos()
        if shift(x, n) != y:
            return Witness(x, y)
        shifts.add(n)
    if len(shifts) == 1:
        return IsShift(shifts.pop())
    return Inconclusive()


# -- sampled commutation check --------------------------------------------


@dataclass(frozen=True)
class AllCommuted:
    pass


@dataclass(frozen=True)
class CounterExample:
    x: Config


def _sample_configs(samples: int, seed: int) -> list[Config]:
    configs = [Config.from_word(0, w) for w in _canonical_words(3, 3)]
    rng = random.Random(seed)
    for _ in range(samples):
        cells = {}
        for _ in range(rng.randrange(1, 6)):
            cells[rng.randrange(-8, 9)] = rng.randrange(1, 4)
        if cells:
            configs.append(Config.from_cells(cells))
    return configs


def check_commute(wa: TransportWord, wb: TransportWord,
                  samples: int = 200, seed: int = 1
                  ) -> Union[AllCommuted, CounterExample]:
    """Semi-decision: evaluate both compositions on a small exhaustive set
    plus seeded random configurations and report the first disagreement."""
    for x in _sample_configs(samples, seed):
        ab = apply_word(apply_word(x, wb), wa)
        ba = apply_word(apply_word(x, wa), wb)
        if ab != ba:
            return CounterExample(x)
    return AllCommuted()
