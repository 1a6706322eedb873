# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Must stay behaviourally identical to _purekernels,
comparison counts included; test_backends checks that."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef Py_UCS4* _as_ucs4(s, Py_ssize_t length) except NULL:
    cdef Py_UCS4* buf = <Py_UCS4*> PyMem_Malloc(length * sizeof(Py_UCS4))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(length):
        buf[i] = s[i]
    return buf


def kmp_search_count(text, pattern):
    """All 0-based occurrences of pattern in text, plus symbol comparisons spent."""
    cdef Py_ssize_t n = len(text)
    cdef Py_ssize_t m = len(pattern)
    if m == 0:
        raise ValueError("empty pattern")
    cdef Py_UCS4* t = NULL
    cdef Py_UCS4* p = NULL
    cdef Py_ssize_t* fail = NULL
    cdef long long comparisons = 0
    cdef Py_ssize_t i, k, q
    cdef Py_UCS4 ci
    cdef list positions = []
    try:
        t = _as_ucs4(text, n)
        p = _as_ucs4(pattern, m)
        fail = <Py_ssize_t*> PyMem_Malloc(m * sizeof(Py_ssize_t))
        if fail == NULL:
            raise MemoryError()
        fail[0] = 0
        k = 0
        for i in range(1, m):
            ci = p[i]
            while True:
                comparisons += 1
                if ci == p[k]:
                    k += 1
                    break
                if k == 0:
                    break
                k = fail[k - 1]
            fail[i] = k
        q = 0
        for i in range(n):
            ci = t[i]
            while True:
                comparisons += 1
                if ci == p[q]:
                    q += 1
                    break
                if q == 0:
                    break
                q = fail[q - 1]
            if q == m:
                positions.append(i - m + 1)
                q = fail[q - 1]
        return positions, comparisons
    finally:
        if fail != NULL:
            PyMem_Free(fail)
        if p != NULL:
            PyMem_Free(p)
        if t != NULL:
            PyMem_Free(t)


def orbit_scan(mapping, v, w, long long max_steps):
    """All r in [0, max_steps) with g^r v == w, stepping g once per candidate."""
    cdef Py_ssize_t n = len(mapping)
    if len(v) != n or len(w) != n:
        raise ValueError("configuration length does not match the mapping")
    cdef Py_ssize_t* inv = NULL
    cdef long* cur = NULL
    cdef long* nxt = NULL
    cdef long* tgt = NULL
    cdef long* tmp
    cdef Py_ssize_t i, j
    cdef long long r
    cdef bint equal
    cdef list hits = []
    try:
        inv = <Py_ssize_t*> PyMem_Malloc(n * sizeof(Py_ssize_t))
        cur = <long*> PyMem_Malloc(n * sizeof(long))
        nxt = <long*> PyMem_Malloc(n * sizeof(long))
        tgt = <long*> PyMem_Malloc(n * sizeof(long))
        if inv == NULL or cur == NULL or nxt == NULL or tgt == NULL:
            raise MemoryError()
        for j in range(n):
            inv[<Py_ssize_t> mapping[j]] = j
        for j in range(n):
            cur[j] = v[j]
            tgt[j] = w[j]
        for r in range(max_steps):
            equal = True
            for i in range(n):
                if cur[i] != tgt[i]:
                    equal = False
                    break
            if equal:
                hits.append(r)
            if r + 1 < max_steps:
                for i in range(n):
                    nxt[i] = cur[inv[i]]
                tmp = cur
                cur = nxt
                nxt = tmp
        return hits
    finally:
        if tgt != NULL:
            PyMem_Free(tgt)
        if nxt != NULL:
            PyMem_Free(nxt)
        if cur != NULL:
            PyMem_Free(cur)
        if inv != NULL:
            PyMem_Free(inv)


def cycles_of_mapping(mapping):
    """Cycles of length >= 2 of a 0-based permutation table, ordered by smallest element."""
    cdef Py_ssize_t n = len(mapping)
    cdef Py_ssize_t* image = NULL
    cdef char* seen = NULL
    cdef Py_ssize_t start, j
    cdef list out = []
    cdef list cyc
    try:
        image = <Py_ssize_t*> PyMem_Malloc(n * sizeof(Py_ssize_t))
        seen = <char*> PyMem_Malloc(n * sizeof(char))
        if image == NULL or seen == NULL:
            raise MemoryError()
        for j in range(n):
            image[j] = mapping[j]
            seen[j] = 0
        for start in range(n):
            if seen[start]:
                continue
            seen[start] = 1
            j = image[start]
            if j == start:
                continue
            cyc = [start]
            while j != start:
                seen[j] = 1
                cyc.append(j)
                j = image[j]
            out.append(cyc)
        return out
    finally:
        if seen != NULL:
            PyMem_Free(seen)
        if image != NULL:
            PyMem_Free(image)
