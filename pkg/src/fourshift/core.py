"""Finite-support configurations on the four-symbol full shift.

Symbols: 0 (background), 1 (particle), 2 (wall), 3 (head, i.e. a particle
sitting on a wall).  A configuration stores only its nonzero cells, so the
empty configuration is the all-zero point.  All values are immutable and
all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

SYMBOLS = (0, 1, 2, 3)
PARTICLE, WALL, HEAD = 1, 2, 3

# Positions are conceptually 64-bit signed; anything beyond this bound is
# an overflow error rather than wraparound.
POSITION_LIMIT = 2**62


class DomainError(Exception):
    """Base class for domain-rule violations."""


class ZeroPoint(DomainError):
    """The all-zero point was supplied where a nonzero point is required."""


class OrbitCollision(DomainError):
    """Two tuple components lie in the same shift orbit."""

    def __init__(self, i: int, j: int):
        super().__init__(f"components {i} and {j} are in the same shift orbit")
        self.i = i
        self.j = j


class PositionOverflow(DomainError):
    """A cell position left the supported integer range."""


def _check_pos(p: int) -> int:
    if not -POSITION_LIMIT <= p <= POSITION_LIMIT:
        raise PositionOverflow(f"position {p} out of range")
    return p


@dataclass(frozen=True)
class Config:
    """A finite-support point, stored as sorted (position, symbol) pairs.

    No stored cell carries symbol 0, so structural equality coincides with
    pointwise equality of configurations.
    """

    cells: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def from_cells(cells: Mapping[int, int] | Iterable[tuple[int, int]]) -> "Config":
        items = cells.items() if isinstance(cells, Mapping) else cells
        kept = []
        for p, s in items:
            if s == 0:
                continue
            if s not in (1, 2, 3):
                raise DomainError(f"invalid symbol {s!r} at position {p}")
            kept.append((_check_pos(p), s))
        kept.sort()
        for (p1, _), (p2, _) in zip(kept, kept[1:]):
            if p1 == p2:
                raise DomainError(f"duplicate cell at position {p1}")
        return Config(tuple(kept))

    @staticmethod
    def from_word(offset: int, digits: str) -> "Config":
        """Configuration whose symbols are `digits` starting at `offset`."""
        cells = []
        for i, ch in enumerate(digits):
            if ch not in "0123":
                raise DomainError(f"invalid digit {ch!r}")
            if ch != "0":
                cells.append((offset + i, int(ch)))
        return Config.from_cells(cells)

    def is_zero(self) -> bool:
        return not self.cells

    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.cells)

    def min_pos(self) -> int:
        if not self.cells:
            raise ZeroPoint("zero point has no support")
        return self.cells[0][0]

    def max_pos(self) -> int:
        if not self.cells:
            raise ZeroPoint("zero point has no support")
        return self.cells[-1][0]

    def sym(self, p: int) -> int:
        for q, s in self.cells:
            if q == p:
                return s
            if q > p:
                return 0
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.cells)

    def word(self) -> tuple[int, str]:
        """(offset, digits) with nonzero first and last digit; zero -> (0, "")."""
        if not self.cells:
            return (0, "")
        lo, hi = self.cells[0][0], self.cells[-1][0]
        row = ["0"] * (hi - lo + 1)
        for p, s in self.cells:
            row[p - lo] = str(s)
        return (lo, "".join(row))


ZERO = Config()


def shift(x: Config, n: int) -> Config:
    """The shift power sigma^n: the result holds x's symbol from i+n at i."""
    if n == 0:
        return x
    return Config(tuple((_check_pos(p - n), s) for p, s in x.cells))


def canonical_form(x: Config) -> tuple[Config, int]:
    """Shift x so its leftmost nonzero cell sits at 0; returns (result, offset)."""
    if x.is_zero():
        raise ZeroPoint("zero point has no canonical form")
    off = x.min_pos()
    return shift(x, off), off


def orbit_equal(x: Config, y: Config) -> bool:
    """True iff y is a shift of x.  The zero point is orbit-equal only to itself."""
    if x.is_zero() or y.is_zero():
        return x.is_zero() and y.is_zero()
    return canonical_form(x)[0] == canonical_form(y)[0]


def tracks(x: Config) -> tuple[frozenset[int], frozenset[int]]:
    """Split x into its particle and wall tracks (heads appear in both)."""
    particles = frozenset(p for p, s in x.cells if s in (PARTICLE, HEAD))
    walls = frozenset(p for p, s in x.cells if s in (WALL, HEAD))
    return particles, walls


def from_tracks(particles: Iterable[int], walls: Iterable[int]) -> Config:
    """Inverse of tracks: overlapping positions become heads."""
    particles = set(particles)
    walls = set(walls)
    cells = {}
    for p in particles | walls:
        cells[p] = HEAD if (p in particles and p in walls) else (
            PARTICLE if p in particles else WALL)
    return Config.from_cells(cells)


@dataclass(frozen=True)
class ClassFlags:
    prepregood: bool
    pregood: bool
    good: bool
    unihead: bool
    great: bool


def classify(x: Config) -> ClassFlags:
    """Staged normal-form flags of a nonzero finite point."""
    if x.is_zero():
        raise ZeroPoint("cannot classify the zero point")
    particles, walls = tracks(x)
    heads = particles & walls
    prepregood = not heads and (
        not particles or not walls or max(particles) < min(walls))
    pregood = prepregood and bool(particles)
    good = pregood and bool(walls)
    unihead = len(heads) == 1
    great = unihead and 0 in heads
    return ClassFlags(prepregood, pregood, good, unihead, great)


@dataclass(frozen=True)
class TupleK:
    """An ordered tuple of nonzero points from pairwise distinct shift orbits."""

    components: tuple[Config, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Config:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)


def validate_tuple(components: Sequence[Config]) -> TupleK:
    comps = tuple(components)
    if not comps:
        raise DomainError("a tuple needs at least one component")
    canon = []
    for i, c in enumerate(comps):
        if c.is_zero():
            raise ZeroPoint(f"component {i} is the zero point")
        canon.append(canonical_form(c)[0])
    for i in range(len(canon)):
        for j in range(i + 1, len(canon)):
            if canon[i] == canon[j]:
                raise OrbitCollision(i, j)
    return TupleK(comps)
