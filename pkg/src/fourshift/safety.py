"""Safe-rewrite automorphisms by isolated local rewriting.

A rewrite spec carries a word set U, a marker set V, a boundary-preserving
permutation of U and two radii.  A position is rewritten only when its
U-occurrence is alone within the large radius and all nearby V-occurrences
sit inside the rewritten block; under the safety conditions this yields an
automorphism whose rewrite sites are stable, hence a group action.

Word families that are too large to enumerate (the head-gap families of the
simulated shift, and "all nonzero words of length n") are kept schematic and
matched by pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Config, DomainError

SIGMA_SIZE = 4
HEAD_CHAR = "3"

# Radii larger than this cannot occur as distances between cells of any
# practical configuration; strict_params flags them as saturated.
SATURATION_BOUND = 2**32


class IllFormedWordSet(DomainError):
    pass


class IllFormedSpec(DomainError):
    pass


# --- word set descriptors -------------------------------------------------

@dataclass(frozen=True)
class ExplicitWords:
    """A finite, explicitly listed set of words over {0,1,2,3}."""

    length: int
    words: frozenset[str]

    def __post_init__(self):
        for w in self.words:
            if len(w) != self.length or any(c not in "0123" for c in w):
                raise IllFormedWordSet(f"bad word {w!r}")
            if set(w) == {"0"}:
                raise IllFormedWordSet("word set contains the all-zero word")
        if not self.words:
            raise IllFormedWordSet("empty word set")

    @staticmethod
    def of(words: Iterable[str]) -> "ExplicitWords":
        ws = frozenset(words)
        lengths = {len(w) for w in ws}
        if len(lengths) != 1:
            raise IllFormedWordSet("words of mixed length")
        return ExplicitWords(lengths.pop(), ws)


@dataclass(frozen=True)
class HeadLayoutWords:
    """All words of a fixed length whose head symbols sit at one of the
    given offset sets, every other letter ranging over {0,1,2}."""

    length: int
    layouts: frozenset[frozenset[int]]

    def __post_init__(self):
        if not self.layouts:
            raise IllFormedWordSet("no layouts")
        for lay in self.layouts:
            if not lay:
                raise IllFormedWordSet("a layout must place at least one head")
            if any(not 0 <= off < self.length for off in lay):
                raise IllFormedWordSet("layout offset out of range")


@dataclass(frozen=True)
class NonzeroWords:
    """All nonzero words of a fixed length (never enumerated)."""

    length: int


WordSetDesc = ExplicitWords | HeadLayoutWords | NonzeroWords


def occurrences(x: Config, wset: WordSetDesc) -> frozenset[int]:
    """Positions i with x[i .. i+len-1] in the word set; exact and finite."""
    if x.is_zero():
        return frozenset()
    lo, hi = x.min_pos(), x.max_pos()
    if isinstance(wset, ExplicitWords):
        k = wset.length
        out = []
        for i in range(lo - k + 1, hi + 1):
            w = "".join(str(x.sym(i + j)) for j in range(k))
            if w in wset.words:
                out.append(i)
        return frozenset(out)
    if isinstance(wset, HeadLayoutWords):
        L = wset.length
        heads = [p for p, s in x.cells if s == 3]
        head_set = set(heads)
        candidates = {p - off for p in heads for lay in wset.layouts for off in lay}
        out = []
        for i in candidates:
            rel = frozenset(q - i for q in head_set if i <= q < i + L)
            if rel in wset.layouts:
                out.append(i)
        return frozenset(out)
    if isinstance(wset, NonzeroWords):
        n = wset.length
        out: set[int] = set()
        for p, _ in x.cells:
            out.update(range(p - n + 1, p + 1))
        return frozenset(out)
    raise IllFormedWordSet(f"unknown word set {wset!r}")


# --- permutations of word sets --------------------------------------------

@dataclass(frozen=True)
class ExplicitWordMap:
    """Permutation of an explicit U given by its moved pairs."""

    pairs: tuple[tuple[str, str], ...]

    def apply(self, w: str) -> str:
        return dict(self.pairs).get(w, w)

    def inverse(self) -> "ExplicitWordMap":
        return ExplicitWordMap(tuple(sorted((d, s) for s, d in self.pairs)))


@dataclass(frozen=True)
class RuleWordMap:
    """A named rule-based involution (head-gap rearrangement families)."""

    tag: str  # "SIGMA3_PI" or "SIGMA3_TAU"

    def apply(self, w: str) -> str:
        heads = [i for i, c in enumerate(w) if c == HEAD_CHAR]
        m = SIGMA3_M
        if self.tag == "SIGMA3_PI":
            if heads == [m + 1]:  # one head: encode the preceding letter as a gap
                u, a, v = w[:m], int(w[m]), w[m + 2:]
                return u + HEAD_CHAR + v[:a] + HEAD_CHAR + v[a:]
            j = heads[1] - m - 1  # two heads: decode the gap back to a letter
            u, v = w[:m], w[m + 1:heads[1]] + w[heads[1] + 1:]
            return u + str(j) + HEAD_CHAR + v
        if self.tag == "SIGMA3_TAU":
            if heads == [m]:  # one centred head: gap-encode the letter after it
                u, a, v = w[:m], int(w[m + 1]), w[m + 2:]
                return u + HEAD_CHAR + v[:a] + HEAD_CHAR + v[a:]
            j = heads[1] - m - 1
            u, v = w[:m], w[m + 1:heads[1]] + w[heads[1] + 1:]
            return u + HEAD_CHAR + str(j) + v
        raise IllFormedSpec(f"unknown rule tag {self.tag!r}")

    def inverse(self) -> "RuleWordMap":
        return self  # both rules are involutions


WordMap = ExplicitWordMap | RuleWordMap


# --- safety validators ------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    reason: str
    words: tuple[str, ...]


def validate_sufficient_safety(words: Iterable[str], s: int, k3: int) -> Optional[Violation]:
    """Check the third-anchored sufficient condition for {s}-safety.

    All words must have length 3*k3 with s confined to the middle third,
    every word must contain s, and words with equal s-count must agree on
    the leftmost s position.
    """
    sc = str(s)
    ws = sorted(set(words))
    leftmost_by_count: dict[int, tuple[int, str]] = {}
    for w in ws:
        if len(w) != 3 * k3:
            return Violation("wrong length", (w,))
        if sc not in w:
            return Violation("word lacks the marker symbol", (w,))
        first = w.index(sc)
        last = w.rindex(sc)
        if first < k3 or last >= 2 * k3:
            return Violation("marker outside the middle third", (w,))
        count = w.count(sc)
        if count in leftmost_by_count:
            pos, prev = leftmost_by_count[count]
            if pos != first:
                return Violation("equal marker count, different leftmost position",
                                 (prev, w))
        else:
            leftmost_by_count[count] = (first, w)
    return None


def validate_layout_safety(layouts: Iterable[frozenset[int]], length: int) -> Optional[Violation]:
    """Schematic analogue of validate_sufficient_safety for head-gap families."""
    if length % 3 != 0:
        return Violation("length not divisible by three", ())
    k3 = length // 3
    leftmost_by_count: dict[int, int] = {}
    for lay in layouts:
        if any(not k3 <= off < 2 * k3 for off in lay):
            return Violation("marker outside the middle third",
                             (",".join(map(str, sorted(lay))),))
        count = len(lay)
        first = min(lay)
        if count in leftmost_by_count and leftmost_by_count[count] != first:
            return Violation("equal marker count, different leftmost position",
                             (",".join(map(str, sorted(lay))),))
        leftmost_by_count.setdefault(count, first)
    return None


def validate_zero_padded(words: Iterable[str], n: int) -> Optional[Violation]:
    """Check the zero-padded sufficient condition (marker set = all nonzero
    words of length n): shape 0^n w 0^n, no all-zero word, and no core at
    two distinct offsets."""
    core_offset: dict[str, tuple[int, str]] = {}
    for w in sorted(set(words)):
        if len(w) != 3 * n:
            return Violation("wrong length", (w,))
        if set(w) == {"0"}:
            return Violation("all-zero word", (w,))
        if w[:n].strip("0") or w[2 * n:].strip("0"):
            return Violation("nonzero symbol outside the middle third", (w,))
        first = len(w) - len(w.lstrip("0"))
        core = w.strip("0")
        if core in core_offset:
            off, prev = core_offset[core]
            if off != first:
                return Violation("same core at two offsets", (prev, w))
        else:
            core_offset[core] = (first, w)
    return None


@dataclass(frozen=True)
class StrictParams:
    ell: int
    m_rad: int
    saturated: bool


def strict_params(k: int, h: int) -> StrictParams:
    """Minimal strict radii over the 4-symbol alphabet: ell = 4^h + 1 and
    m_rad = ell + 2k + h.  Values are exact; the flag marks radii beyond any
    practical support span."""
    if not k >= h >= 1:
        raise IllFormedSpec("need k >= h >= 1")
    ell = SIGMA_SIZE**h + 1
    m_rad = ell + 2 * k + h
    return StrictParams(ell, m_rad, m_rad > SATURATION_BOUND)


# --- the rewrite spec -------------------------------------------------------

@dataclass(frozen=True)
class SafeRewriteSpec:
    k: int
    h: int
    U: WordSetDesc
    V: WordSetDesc
    pi: WordMap
    ell: int
    m_rad: int
    relaxed: bool = False


def _boundary_equivalent(u: str, v: str, ell: int) -> bool:
    return ell == 0 or (u[:ell] == v[:ell] and u[-ell:] == v[-ell:])


def make_explicit_spec(words: Iterable[str], marker_words: Iterable[str],
                       pairs: Iterable[tuple[str, str]],
                       ell: int | None = None, m_rad: int | None = None,
                       relaxed: bool = False) -> SafeRewriteSpec:
    """Build and validate a rewrite spec with explicit U, V and mapping."""
    U = ExplicitWords.of(words)
    V = ExplicitWords.of(marker_words)
    k, h = U.length, V.length
    if h > k:
        raise IllFormedSpec("marker words longer than rewrite words")
    moved = tuple(sorted((s, d) for s, d in dict(pairs).items() if s != d))
    pi = ExplicitWordMap(moved)
    image = {pi.apply(u) for u in U.words}
    if image != U.words or any(s not in U.words for s, _ in moved):
        raise IllFormedSpec("mapping is not a permutation of U")
    for u in U.words:
        if not _boundary_equivalent(u, pi.apply(u), h - 1):
            raise IllFormedSpec(f"pair {u!r} -> {pi.apply(u)!r} changes a boundary")
        if not any(u[i:i + h] in V.words for i in range(k - h + 1)):
            raise IllFormedSpec(f"word {u!r} contains no marker word")
    strict = strict_params(k, h)
    if ell is None:
        ell = strict.ell
    if m_rad is None:
        m_rad = strict.m_rad
    if not relaxed:
        if ell < strict.ell or m_rad < strict.m_rad:
            raise IllFormedSpec("radii below the strict bounds; use relaxed mode")
        if V.words == frozenset({HEAD_CHAR}) and k % 3 == 0:
            bad = validate_sufficient_safety(U.words, 3, k // 3)
        else:
            bad = Violation("no applicable safety validator", ())
        if bad is not None:
            raise IllFormedSpec(f"safety validation failed: {bad.reason}")
    if m_rad < k:
        raise IllFormedSpec("m_rad smaller than the word length")
    return SafeRewriteSpec(k, h, U, V, pi, ell, m_rad, relaxed)


def make_zero_padded_spec(words: Iterable[str],
                          pairs: Iterable[tuple[str, str]]) -> SafeRewriteSpec:
    """Spec for U of shape 0^n w 0^n with V = all nonzero words of length n."""
    U = ExplicitWords.of(words)
    if U.length % 3 != 0:
        raise IllFormedSpec("zero-padded words must have length 3n")
    n = U.length // 3
    bad = validate_zero_padded(U.words, n)
    if bad is not None:
        raise IllFormedSpec(f"zero-padding validation failed: {bad.reason}")
    moved = tuple(sorted((s, d) for s, d in dict(pairs).items() if s != d))
    pi = ExplicitWordMap(moved)
    if {pi.apply(u) for u in U.words} != U.words:
        raise IllFormedSpec("mapping is not a permutation of U")
    strict = strict_params(U.length, n)
    return SafeRewriteSpec(U.length, n, U, NonzeroWords(n), pi,
                           strict.ell, strict.m_rad)


# --- chi-site selection and rewriting ---------------------------------------

def chi_sites(x: Config, spec: SafeRewriteSpec) -> frozenset[int]:
    """Rewrite sites: U-occurrences alone within m_rad whose nearby
    V-occurrences all lie inside the rewritten block."""
    occ_u = occurrences(x, spec.U)
    if not occ_u:
        return frozenset()
    occ_v = occurrences(x, spec.V)
    sites = []
    for i in occ_u:
        if any(j != i and abs(j - i) <= spec.m_rad for j in occ_u):
            continue
        ok = True
        for j in occ_v:
            # marker occurrences within ell of EITHER block edge must lie
            # inside the block, else a rewrite could create or destroy a
            # U-occurrence straddling that edge
            if (i - spec.ell <= j <= i + spec.k - 1 + spec.ell
                    and not i <= j <= i + spec.k - spec.h):
                ok = False
                break
        if ok:
            sites.append(i)
    return frozenset(sites)


def apply_safe_rewrite(x: Config, spec: SafeRewriteSpec) -> Config:
    """Replace the k-block at every chi site by its image under the spec's
    permutation; all other cells are unchanged."""
    sites = sorted(chi_sites(x, spec))
    if not sites:
        return x
    cells = x.as_dict()
    for i in sites:
        block = "".join(str(x.sym(i + j)) for j in range(spec.k))
        image = spec.pi.apply(block)
        if len(image) != spec.k:
            raise IllFormedSpec("permutation changed the word length")
        for j in range(spec.k):
            cells.pop(i + j, None)
        for j, ch in enumerate(image):
            if ch != "0":
                cells[i + j] = int(ch)
    return Config.from_cells(cells)


def invert_spec(spec: SafeRewriteSpec) -> SafeRewriteSpec:
    return SafeRewriteSpec(spec.k, spec.h, spec.U, spec.V, spec.pi.inverse(),
                           spec.ell, spec.m_rad, spec.relaxed)


# --- the simulated head shift ------------------------------------------------

# Head-gap window of the simulated shift: the smallest length divisible by 3
# for which all head offsets of the three families fall in the middle third.
SIGMA3_M = 10
SIGMA3_LEN = 2 * SIGMA3_M + 1

_GAP_LAYOUTS = frozenset(
    frozenset({SIGMA3_M, SIGMA3_M + 1 + j}) for j in range(3))
SIGMA3_PI_WORDS = HeadLayoutWords(
    SIGMA3_LEN, _GAP_LAYOUTS | {frozenset({SIGMA3_M + 1})})
SIGMA3_TAU_WORDS = HeadLayoutWords(
    SIGMA3_LEN, _GAP_LAYOUTS | {frozenset({SIGMA3_M})})

_SIGMA3_STRICT = strict_params(SIGMA3_LEN, 1)
_HEAD_MARKER = ExplicitWords.of([HEAD_CHAR])

SIGMA3_PI_SPEC = SafeRewriteSpec(
    SIGMA3_LEN, 1, SIGMA3_PI_WORDS, _HEAD_MARKER, RuleWordMap("SIGMA3_PI"),
    _SIGMA3_STRICT.ell, _SIGMA3_STRICT.m_rad)
SIGMA3_TAU_SPEC = SafeRewriteSpec(
    SIGMA3_LEN, 1, SIGMA3_TAU_WORDS, _HEAD_MARKER, RuleWordMap("SIGMA3_TAU"),
    _SIGMA3_STRICT.ell, _SIGMA3_STRICT.m_rad)

for _ws in (SIGMA3_PI_WORDS, SIGMA3_TAU_WORDS):
    _bad = validate_layout_safety(_ws.layouts, _ws.length)
    if _bad is not None:  # pragma: no cover - construction constants
        raise IllFormedSpec(_bad.reason)


def head_shift_once(x: Config, direction: int) -> Config:
    """One step of the simulated shift.  On a configuration with a single
    isolated head the +1 direction moves the head one cell right and swaps
    the displaced symbol; -1 is the exact inverse on every configuration."""
    if direction == 1:
        y = apply_safe_rewrite(x, SIGMA3_TAU_SPEC)
        return apply_safe_rewrite(y, SIGMA3_PI_SPEC)
    if direction == -1:
        y = apply_safe_rewrite(x, SIGMA3_PI_SPEC)
        return apply_safe_rewrite(y, SIGMA3_TAU_SPEC)
    raise DomainError("direction must be +1 or -1")
