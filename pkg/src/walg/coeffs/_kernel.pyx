# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernel.

Same algorithm and output as ``_kernel_py``; entries stay Python integers
(arbitrary precision), the loops and dict traffic run at C level.
"""

from heapq import heapify, heappop, heappush
from math import gcd


cdef dict _primitive(dict row):
    cdef object g = 0
    cdef object v
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


cdef dict _combine(dict row, dict prow, object c):
    cdef object p = prow[c]
    cdef object a = row[c]
    cdef object g = gcd(p, a)
    cdef dict new
    cdef object col, v, nv
    p = p // g
    a = a // g
    if p == 1:
        new = dict(row)
    else:
        new = {}
        for col, v in row.items():
            new[col] = p * v
    del new[c]
    for col, v in prow.items():
        if col == c:
            continue
        nv = new.get(col, 0) - a * v
        if nv:
            new[col] = nv
        else:
            new.pop(col, None)
    if new:
        return _primitive(new)
    return new


cdef dict _negate(dict row):
    cdef object col, v
    return {col: -v for col, v in row.items()}


def echelon(rows, bint reduce=True):
    cdef dict work = {}
    cdef list heap = []
    cdef list pivots = []
    cdef Py_ssize_t idx, k, j, n
    cdef dict prow, new, rk, rj
    cdef object c, ck, cj, r
    for idx, r in enumerate(rows):
        if r:
            work[idx] = _primitive(dict(r))
            heap.append((min(r), idx))
    heapify(heap)
    while heap:
        c, idx = heappop(heap)
        prow = work.pop(idx)
        while heap and heap[0][0] == c:
            k = heappop(heap)[1]
            new = _combine(<dict>work[k], prow, c)
            if new:
                work[k] = new
                heappush(heap, (min(new), k))
            else:
                del work[k]
        if prow[c] < 0:
            prow = _negate(prow)
        pivots.append((c, prow))
    if reduce:
        n = len(pivots)
        for k in range(n - 1, -1, -1):
            ck, rk = pivots[k]
            for j in range(k):
                cj, rj = pivots[j]
                if ck in rj:
                    new = _combine(rj, rk, ck)
                    if new[cj] < 0:
                        new = _negate(new)
                    pivots[j] = (cj, new)
    return pivots


def rank(rows):
    return len(echelon(rows, False))
