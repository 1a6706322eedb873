"""Permutations in disjoint cycle form and their action on configurations.

A configuration is a length-n string over a finite alphabet.  A permutation
g of [1, n] acts by moving symbols to their image positions: position g(j)
of g(x) holds the symbol x had at position j.  Restricted to one cycle
(written in successor order) a single application is exactly a cyclic right
shift of the projected string, which is what the whole reduction to
congruences rests on.
"""

from __future__ import annotations

import math

Configuration = str


class CycleNotationError(ValueError):
    """Malformed cycle notation; position is the 0-based offset of the problem."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Cycle:
    """A k-cycle (j_1,...,j_k): j_1 -> j_2 -> ... -> j_k -> j_1, indices 1-based.

    Element order is significant and preserved verbatim: projections and
    rotation exponents are stated relative to it.
    """

    __slots__ = ("elements",)

    def __init__(self, elements):
        elems = tuple(int(e) for e in elements)
        if not elems:
            raise ValueError("a cycle needs at least one element")
        if any(e < 1 for e in elems):
            raise ValueError(f"cycle indices must be >= 1, got {elems}")
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate index inside cycle {elems}")
        self.elements = elems

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "(" + ",".join(str(e) for e in self.elements) + ")"


class Permutation:
    """A permutation of [1, n] given as a product of pairwise disjoint cycles.

    Cycles of length 1 are accepted but dropped: those indices become plain
    fixed points, as does every index not mentioned at all.
    """

    __slots__ = ("n", "cycles", "_image")

    def __init__(self, n: int, cycles=()):
        if n < 1:
            raise ValueError(f"degree must be >= 1, got {n}")
        seen = set()
        kept = []
        for c in cycles:
            if not isinstance(c, Cycle):
                c = Cycle(c)
            for e in c.elements:
                if e > n:
                    raise ValueError(f"index {e} outside [1, {n}]")
                if e in seen:
                    raise ValueError(f"index {e} appears in more than one cycle")
                seen.add(e)
            if len(c) >= 2:
                kept.append(c)
        self.n = n
        self.cycles = tuple(kept)
        self._image = None

    def mapping(self):
        """0-based image table: mapping()[j] == g(j+1) - 1."""
        if self._image is None:
            image = list(range(self.n))
            for c in self.cycles:
                e = c.elements
                k = len(e)
                for t in range(k):
                    image[e[t] - 1] = e[(t + 1) % k] - 1
            self._image = image
        return self._image

    def moved_mask(self):
        """bytearray of length n, entry j-1 set iff some cycle contains j."""
        mask = bytearray(self.n)
        for c in self.cycles:
            for e in c.elements:
                mask[e - 1] = 1
        return mask

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.n == other.n and self.cycles == other.cycles

    def __hash__(self):
        return hash((self.n, self.cycles))

    def __repr__(self):
        return f"Permutation({self.n}, {format_permutation(self)!r})"


def order(g: Permutation) -> int:
    """Order of the cyclic group <g>: the lcm of the cycle lengths."""
    return math.lcm(*(len(c) for c in g.cycles))


def apply(g: Permutation, v: Configuration) -> Configuration:
    """One application of g to v."""
    if len(v) != g.n:
        raise ValueError(f"configuration length {len(v)} does not match degree {g.n}")
    out = list(v)
    for c in g.cycles:
        e = c.elements
        k = len(e)
        for t in range(k):
            out[e[(t + 1) % k] - 1] = v[e[t] - 1]
    return "".join(out)


def apply_power(g: Permutation, r: int, v: Configuration) -> Configuration:
    """g^r v computed in one pass: each cycle's projection is right-shifted r mod k times."""
    if r < 0:
        raise ValueError(f"exponent must be >= 0, got {r}")
    if len(v) != g.n:
        raise ValueError(f"configuration length {len(v)} does not match degree {g.n}")
    out = list(v)
    for c in g.cycles:
        e = c.elements
        k = len(e)
        s = r % k
        if s == 0:
            continue
        proj = [v[j - 1] for j in e]
        rot = proj[-s:] + proj[:-s]
        for j, ch in zip(e, rot):
            out[j - 1] = ch
    return "".join(out)


def project(v: Configuration, c: Cycle) -> str:
    """v restricted to the cycle's indices, in the cycle's stored order."""
    if any(j > len(v) for j in c.elements):
        raise ValueError(f"cycle {c!r} reaches outside the configuration")
    return "".join(v[j - 1] for j in c.elements)


def format_permutation(g: Permutation) -> str:
    """Cycle notation, e.g. "(6,5,7,3,2,1)(4,8)"; the identity formats as ""."""
    return "".join(repr(c) for c in g.cycles)


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse cycle notation like "(6,5,7,3,2,1)(4,8)" into a Permutation of [1, n].

    Whitespace is allowed between cycles and around indices.  Blank text is
    the identity.  Raises CycleNotationError carrying the character position
    of the first problem: bad syntax, an index outside [1, n], or an index
    used twice.
    """
    cycles = []
    seen: dict[int, int] = {}
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise CycleNotationError(f"expected '(' but found {ch!r}", i)
        i += 1
        elems = []
        while True:
            while i < length and text[i].isspace():
                i += 1
            start = i
            while i < length and text[i].isdigit():
                i += 1
            if i == start:
                raise CycleNotationError("expected a cycle index", i)
            val = int(text[start:i])
            if not 1 <= val <= n:
                raise CycleNotationError(f"index {val} outside [1, {n}]", start)
            if val in seen:
                raise CycleNotationError(f"index {val} already used", start)
            seen[val] = start
            elems.append(val)
            while i < length and text[i].isspace():
                i += 1
            if i < length and text[i] == ",":
                i += 1
                continue
            if i < length and text[i] == ")":
                i += 1
                break
            raise CycleNotationError("expected ',' or ')'", i)
        cycles.append(Cycle(elems))
    return Permutation(n, cycles)


def first_primes(count: int) -> list[int]:
    """The first `count` primes, by trial division against the primes found so far."""
    if count < 0:
        raise ValueError("count must be >= 0")
    primes: list[int] = []
    cand = 2
    while len(primes) < count:
        if all(cand % p for p in primes if p * p <= cand):
            primes.append(cand)
        cand += 1
    return primes


def primorial_permutation(i: int) -> Permutation:
    """Disjoint consecutive cycles whose lengths are the first i primes.

    On degree 2 + 3 + ... + p_i; the cycle lengths are pairwise coprime, so
    the order is their product, which grows exponentially in the degree.
    """
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    cycles = []
    lo = 1
    for p in first_primes(i):
        cycles.append(Cycle(range(lo, lo + p)))
        lo += p
    return Permutation(lo - 1, cycles)
