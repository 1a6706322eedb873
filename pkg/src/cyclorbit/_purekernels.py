"""Pure Python kernels: reference implementations of the hot inner loops.

The compiled backend in ``_speedups`` mirrors these exactly, including the
comparison counts, so the two are interchangeable and testable against each
other.
"""


def kmp_search_count(text, pattern):
    """All 0-based occurrences of pattern in text, plus symbol comparisons spent.

    Overlapping matches are reported.  Every equality test between two
    symbols counts exactly one comparison, both while building the failure
    table and while scanning, so the count is an exact machine-independent
    cost for the search.
    """
    n = len(text)
    m = len(pattern)
    if m == 0:
        raise ValueError("empty pattern")
    fail = [0] * m
    comparisons = 0
    k = 0
    for i in range(1, m):
        ci = pattern[i]
        while True:
            comparisons += 1
            if ci == pattern[k]:
                k += 1
                break
            if k == 0:
                break
            k = fail[k - 1]
        fail[i] = k
    positions = []
    q = 0
    for i in range(n):
        ci = text[i]
        while True:
            comparisons += 1
            if ci == pattern[q]:
                q += 1
                break
            if q == 0:
                break
            q = fail[q - 1]
        if q == m:
            positions.append(i - m + 1)
            q = fail[q - 1]
    return positions, comparisons


def orbit_scan(mapping, v, w, max_steps):
    """All r in [0, max_steps) with g^r v == w, stepping g once per candidate.

    mapping is the 0-based image table of g; v and w are equal-length lists
    of symbol codes.  The configuration is advanced incrementally, never
    recomputed from scratch, so the scan costs O(n * max_steps).
    """
    n = len(mapping)
    if len(v) != n or len(w) != n:
        raise ValueError("configuration length does not match the mapping")
    # nxt[i] = cur[inv[i]]: position i of g(x) holds the symbol of x at g^-1(i)
    inv = [0] * n
    for j in range(n):
        inv[mapping[j]] = j
    cur = list(v)
    tgt = list(w)
    hits = []
    for r in range(max_steps):
        if cur == tgt:
            hits.append(r)
        if r + 1 < max_steps:
            cur = [cur[j] for j in inv]
    return hits


def cycles_of_mapping(mapping):
    """Cycles of length >= 2 of a 0-based permutation table.

    Each cycle starts at its smallest element and the cycles are ordered by
    that element; fixed points are omitted.
    """
    n = len(mapping)
    seen = bytearray(n)
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = 1
        j = mapping[start]
        if j == start:
            continue
        cyc = [start]
        while j != start:
            seen[j] = 1
            cyc.append(j)
            j = mapping[j]
        out.append(cyc)
    return out
