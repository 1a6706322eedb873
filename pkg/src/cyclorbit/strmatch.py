"""Linear-time string matching and rotation-exponent sets for cycle projections."""

from dataclasses import dataclass

from . import _backend


@dataclass(frozen=True)
class MatchResult:
    """1-based positions of every (possibly overlapping) occurrence, ascending,
    plus the exact number of symbol comparisons the search spent."""

    positions: tuple[int, ...]
    comparisons: int


def kmp_find_all(text: str, pattern: str) -> MatchResult:
    """Knuth-Morris-Pratt search for all occurrences of pattern in text."""
    if not pattern:
        raise ValueError("empty pattern")
    positions, comparisons = _backend.kmp_search_count(text, pattern)
    return MatchResult(tuple(p + 1 for p in positions), comparisons)


def rotate_right(s: str, r: int) -> str:
    """s cyclically shifted right r times (the last symbol wraps to the front)."""
    if not s:
        return s
    r %= len(s)
    if r == 0:
        return s
    return s[-r:] + s[:-r]


def rotation_exponents(vc: str, wc: str, counter=None) -> tuple[int, ...]:
    """All r in [0, k) with rotate_right(vc, r) == wc, ascending.

    Found by matching vc inside the doubled wc: an occurrence at 0-based
    offset p means vc is wc rotated left p times, i.e. wc == rotate_right(vc, p).
    Offsets >= k would repeat offset 0 and are dropped.  If a counter is
    given it is charged one word op per symbol comparison.
    """
    k = len(vc)
    if len(wc) != k:
        raise ValueError(f"projection lengths differ: {k} vs {len(wc)}")
    if k == 0:
        raise ValueError("empty projection")
    if k == 1:
        if counter is not None:
            counter.add_word_ops(1)
        return (0,) if vc == wc else ()
    positions, comparisons = _backend.kmp_search_count(wc + wc, vc)
    if counter is not None:
        counter.add_word_ops(comparisons)
    return tuple(p for p in positions if p < k)
