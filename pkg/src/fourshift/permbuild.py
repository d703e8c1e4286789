"""Sparse permutations of fixed-length words over the track alphabet {0,1,2}.

A WordPerm stores only its moved pairs; everything else is fixed.  The main
construction completes a partial injection into a permutation and, if needed,
composes it with one extra transposition to make it even while keeping every
requested pair intact.

Also contains the ``G0`` layer: words of shifts and local window permutations
acting on head-free configurations, with the shift-counting homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import Config, DomainError, shift

TRACK_ALPHABET = "012"


class DuplicateSource(DomainError):
    pass


class DuplicateTarget(DomainError):
    pass


class NoRoom(DomainError):
    """Not enough untouched words are left for a parity-fixing transposition."""


class HeadSymbolPresent(DomainError):
    """A G0 word was applied to a configuration containing the head symbol."""


def _check_word(w: str, length: int) -> str:
    if len(w) != length or any(c not in TRACK_ALPHABET for c in w):
        raise DomainError(f"not a track word of length {length}: {w!r}")
    return w


@dataclass(frozen=True)
class WordPerm:
    """Permutation of {0,1,2}^length moving only finitely many words."""

    length: int
    moved: tuple[tuple[str, str], ...]  # sorted by source, src != dst

    def __post_init__(self):
        mapping = dict(self.moved)
        if len(mapping) != len(self.moved):
            raise DuplicateSource("repeated source word")
        images = set(mapping.values())
        if len(images) != len(self.moved):
            raise DuplicateTarget("repeated target word")
        if set(mapping) != images:
            raise DomainError("moved pairs do not form a bijection")
        for s, d in self.moved:
            _check_word(s, self.length)
            _check_word(d, self.length)
            if s == d:
                raise DomainError("identity pair stored in moved set")

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[str, str]], length: int) -> "WordPerm":
        moved = tuple(sorted((s, d) for s, d in pairs if s != d))
        return WordPerm(length, moved)

    @staticmethod
    def identity(length: int) -> "WordPerm":
        return WordPerm(length, ())

    def mapping(self) -> dict[str, str]:
        return dict(self.moved)

    def apply(self, w: str) -> str:
        _check_word(w, self.length)
        return dict(self.moved).get(w, w)

    def inverse(self) -> "WordPerm":
        return WordPerm.from_pairs(((d, s) for s, d in self.moved), self.length)

    def compose(self, other: "WordPerm") -> "WordPerm":
        """self after other: (self.compose(other)).apply(w) = self(other(w))."""
        if self.length != other.length:
            raise DomainError("length mismatch")
        mine, theirs = dict(self.moved), dict(other.moved)
        domain = set(mine) | set(theirs)
        pairs = [(w, mine.get(theirs.get(w, w), theirs.get(w, w))) for w in domain]
        return WordPerm.from_pairs(pairs, self.length)

    def is_identity(self) -> bool:
        return not self.moved


def parity(wp: WordPerm) -> int:
    """0 for even, 1 for odd: sum of (cycle length - 1) over the moved set."""
    mapping = dict(wp.moved)
    seen: set[str] = set()
    sign = 0
    for start in mapping:
        if start in seen:
            continue
        n = 0
        w = start
        while w not in seen:
            seen.add(w)
            w = mapping[w]
            n += 1
        sign ^= (n - 1) & 1
    return sign


def parity_of_permutation(img: Sequence[int]) -> int:
    """0 for even, 1 for odd, for a permutation of range(len(img))."""
    seen = [False] * len(img)
    sign = 0
    for start in range(len(img)):
        if seen[start]:
            continue
        n = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = img[i]
            n += 1
        sign ^= (n - 1) & 1
    return sign


def complete_partial_injection(pairs: Sequence[tuple[str, str]], length: int) -> WordPerm:
    """Extend a partial injection to a permutation by closing each chain.

    Each maximal chain s0 -> s1 -> ... -> sm (where sm is not a source) is
    closed by adding sm -> s0, which is the smallest completion.
    """
    srcs = [s for s, _ in pairs]
    dsts = [d for _, d in pairs]
    if len(set(srcs)) != len(srcs):
        raise DuplicateSource("repeated source word")
    if len(set(dsts)) != len(dsts):
        raise DuplicateTarget("repeated target word")
    mapping = {s: d for s, d in pairs if s != d}
    for w in list(mapping):
        _check_word(w, length)
        _check_word(mapping[w], length)
    dst_set = set(mapping.values())
    closed = dict(mapping)
    for start in mapping:
        if start in dst_set:
            continue  # not the head of a chain
        w = start
        while w in mapping:
            w = mapping[w]
        if w != start:
            closed[w] = start
    return WordPerm.from_pairs(closed.items(), length)


def make_even(wp: WordPerm, length: int,
              protected: frozenset[str] = frozenset()) -> WordPerm:
    """Compose an odd permutation with one transposition of untouched words.

    The transposition uses the two lexicographically smallest words that are
    neither moved by wp nor listed in `protected`, so every original pair
    (including requested fixed points) survives.
    """
    if parity(wp) == 0:
        return wp
    avoid = {s for s, _ in wp.moved} | protected
    if 3**length - len(avoid) < 2:
        raise NoRoom("fewer than two untouched words available")
    found = []
    for w in _lex_words(length):
        if w not in avoid:
            found.append(w)
            if len(found) == 2:
                break
    if len(found) < 2:
        raise NoRoom("fewer than two untouched words available")
    swap = WordPerm.from_pairs([(found[0], found[1]), (found[1], found[0])], length)
    return wp.compose(swap)


def _lex_words(length: int):
    """All of {0,1,2}^length in lexicographic order, generated lazily."""
    digits = [0] * length
    while True:
        yield "".join(str(d) for d in digits)
        i = length - 1
        while i >= 0 and digits[i] == 2:
            digits[i] = 0
            i -= 1
        if i < 0:
            return
        digits[i] += 1


def build_mapping_perm(pairs: Sequence[tuple[str, str]], length: int) -> WordPerm:
    """Even permutation of {0,1,2}^length realizing every requested pair."""
    wp = complete_partial_injection(pairs, length)
    protected = frozenset(s for s, _ in pairs) | frozenset(d for _, d in pairs)
    return make_even(wp, length, protected)


# --- the G0 layer: shifts and local window permutations on {0,1,2}-points ---

@dataclass(frozen=True)
class G0Shift:
    e: int


@dataclass(frozen=True)
class G0Local:
    lo: int
    hi: int  # inclusive absolute neighborhood [lo, hi]
    wp: WordPerm

    def __post_init__(self):
        if self.hi < self.lo:
            raise DomainError("empty neighborhood")
        if self.wp.length != self.hi - self.lo + 1:
            raise DomainError("word length does not match neighborhood size")


G0Step = G0Shift | G0Local
G0Word = tuple[G0Step, ...]


def _window_word(x: Config, lo: int, hi: int) -> str:
    return "".join(str(x.sym(p)) for p in range(lo, hi + 1))


def g0_apply(y: Config, word: Sequence[G0Step]) -> Config:
    """Fold the G0 steps left to right over a head-free configuration."""
    if any(s == 3 for _, s in y.cells):
        raise HeadSymbolPresent("G0 acts on {0,1,2}-configurations only")
    cur = y
    for step in word:
        if isinstance(step, G0Shift):
            cur = shift(cur, step.e)
        else:
            w = _window_word(cur, step.lo, step.hi)
            out = step.wp.apply(w)
            cells = {p: s for p, s in cur.cells if not step.lo <= p <= step.hi}
            for i, ch in enumerate(out):
                if ch != "0":
                    cells[step.lo + i] = int(ch)
            cur = Config.from_cells(cells)
    return cur


def g0_psi(word: Sequence[G0Step]) -> int:
    """Shift-counting homomorphism: local steps contribute 0."""
    return sum(step.e for step in word if isinstance(step, G0Shift))
