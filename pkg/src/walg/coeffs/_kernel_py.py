"""Pure-Python elimination kernel (fallback for the compiled ``_kernel``).

Rows are ``dict[int, int]`` (column -> nonzero integer).  Elimination is
fraction-free: combinations ``p*row - a*pivot`` followed by division by the
row content keep every entry an integer of moderate size.  The pivot of
each step is the first row (in input order) whose leading column is the
smallest remaining one.
"""

from heapq import heapify, heappop, heappush
from math import gcd


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _combine(row, prow, c):
    # row <- p*row - a*prow, eliminating column c
    p = prow[c]
    a = row[c]
    g = gcd(p, a)
    p //= g
    a //= g
    if p == 1:
        new = dict(row)
    else:
        new = {col: p * v for col, v in row.items()}
    del new[c]
    for col, v in prow.items():
        if col == c:
            continue
        nv = new.get(col, 0) - a * v
        if nv:
            new[col] = nv
        else:
            new.pop(col, None)
    return _primitive(new) if new else new


def echelon(rows, reduce=True):
    """Return ``[(pivot_col, row), ...]`` sorted by pivot column.

    With ``reduce`` the rows are fully reduced (Gauss-Jordan), so each
    pivot column is zero in every other returned row.  Pivot entries are
    positive.  Input rows are not modified.
    """
    work = {}
    heap = []
    for idx, r in enumerate(rows):
        if r:
            work[idx] = _primitive(dict(r))
            heap.append((min(r), idx))
    heapify(heap)
    pivots = []
    while heap:
        c, idx = heappop(heap)
        prow = work.pop(idx)
        while heap and heap[0][0] == c:
            _, k = heappop(heap)
            new = _combine(work[k], prow, c)
            if new:
                work[k] = new
                heappush(heap, (min(new), k))
            else:
                del work[k]
        if prow[c] < 0:
            prow = {col: -v for col, v in prow.items()}
        pivots.append((c, prow))
    if reduce:
        for k in range(len(pivots) - 1, -1, -1):
            ck, rk = pivots[k]
            for j in range(k):
                cj, rj = pivots[j]
                if ck in rj:
                    new = _combine(rj, rk, ck)
                    if new[cj] < 0:
                        new = {col: -v for col, v in new.items()}
                    pivots[j] = (cj, new)
    return pivots


def rank(rows):
    return len(echelon(rows, reduce=False))
