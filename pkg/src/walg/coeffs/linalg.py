"""Exact rank, reduced echelon form, nullspace and solve.

Matrices with only rational entries go through the integer elimination
kernel (compiled when available, see :data:`BACKEND`).  Matrices with
rational-function entries use pivoted Gauss-Jordan over Q(t), or, for
larger systems, :func:`rank_by_specialization`.

The pivot rule is the same on every path: the smallest column holding a
nonzero entry among unprocessed rows, pivoting on the first such row.
Reduced echelon forms are unique, so all paths return identical results.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import lcm

from walg.coeffs.matrix import SparseMatrix
from walg.coeffs.ratfunc import RatFunc, pdivmod, pgcd, pmul
from walg.errors import DimensionMismatch, InconsistentSystem

if os.environ.get("WALG_PURE_PYTHON"):
    from walg.coeffs import _kernel_py as _kernel

    BACKEND = "python"
else:
    try:
        from walg.coeffs import _kernel  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        from walg.coeffs import _kernel_py as _kernel

        BACKEND = "python"


def _is_rational(m: SparseMatrix) -> bool:
    for _, row in m.nonzero_rows():
        for v in row.values():
            if not isinstance(v, (int, Fraction)):
                return False
    return True


def _integer_rows(m: SparseMatrix) -> list[dict[int, int]]:
    out = []
    for i in range(m.nrows):
        row = m.row(i)
        if not row:
            continue
        den = lcm(*(Fraction(v).denominator for v in row.values()))
        out.append({j: int(Fraction(v) * den) for j, v in row.items()})
    return out


def _generic_echelon(rows: list[dict], reduce: bool = True) -> list[tuple[int, dict]]:
    remaining = [dict(r) for r in rows if r]
    pivots = []
    while remaining:
        c = min(min(r) for r in remaining)
        k = next(idx for idx, r in enumerate(remaining) if c in r)
        prow = remaining.pop(k)
        inv = 1 / prow[c]
        prow = {j: v * inv for j, v in prow.items()}
        nxt = []
        for r in remaining:
            a = r.get(c)
            if a is not None:
                r = _axpy(r, prow, -a)
            if r:
                nxt.append(r)
        remaining = nxt
        pivots.append((c, prow))
    if reduce:
        for k in range(len(pivots) - 1, -1, -1):
            ck, rk = pivots[k]
            for j in range(k):
                cj, rj = pivots[j]
                a = rj.get(ck)
                if a is not None:
                    pivots[j] = (cj, _axpy(rj, rk, -a))
    return pivots


def _axpy(row: dict, prow: dict, a) -> dict:
    out = dict(row)
    for j, v in prow.items():
        s = out.get(j, 0) + a * v
        if s == 0:
            out.pop(j, None)
        else:
            out[j] = s
    return out


def rref(m: SparseMatrix) -> tuple[list[int], list[dict[int, object]]]:
    """Reduced row echelon form: ``(pivot_columns, rows)`` with unit pivots."""
    if _is_rational(m):
        piv = _kernel.echelon(_integer_rows(m), True)
        out = []
        for c, row in piv:
            p = row[c]
            out.append({j: Fraction(v, p) for j, v in row.items()})
        return [c for c, _ in piv], out
    piv = _generic_echelon([m.row(i) for i in range(m.nrows)], True)
    return [c for c, _ in piv], [r for _, r in piv]


def rank(m: SparseMatrix) -> int:
    """Exact rank over the field of the entries.

    >>> rank(SparseMatrix.from_dense([[1, 2], [2, 4]]))
    1
    """
    if m.is_zero():
        return 0
    if _is_rational(m):
        return _kernel.rank(_integer_rows(m))
    return len(_generic_echelon([m.row(i) for i in range(m.nrows)], False))


def nullity(m: SparseMatrix) -> int:
    return m.ncols - rank(m)


def nullspace(m: SparseMatrix) -> list[tuple]:
    """Kernel basis, returned in reduced echelon form (as row vectors).

    >>> nullspace(SparseMatrix.from_dense([[2, -1]]))
    [(Fraction(1, 1), Fraction(2, 1))]
    """
    pivots, rows = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivset]
    if not free:
        return []
    zero, one = _zero_one(m)
    raw = {}
    for t, f in enumerate(free):
        vec = {f: one}
        for c, row in zip(pivots, rows):
            v = row.get(f)
            if v is not None:
                vec[c] = -v
        raw[t] = vec
    basis = SparseMatrix(len(free), m.ncols, raw)
    _, brows = rref(basis)
    return [tuple(r.get(j, zero) for j in range(m.ncols)) for r in brows]


def _zero_one(m: SparseMatrix):
    for _, row in m.nonzero_rows():
        for v in row.values():
            if isinstance(v, RatFunc):
                return RatFunc.const(0, v.var), RatFunc.const(1, v.var)
            break
        break
    return Fraction(0), Fraction(1)


def solve(m: SparseMatrix, rhs) -> tuple:
    """One solution ``x`` of ``m x = rhs`` (free variables set to zero)."""
    if len(rhs) != m.nrows:
        raise DimensionMismatch("right-hand side length mismatch")
    rows = {}
    for i in range(m.nrows):
        r = dict(m.row(i))
        if rhs[i] != 0:
            r[m.ncols] = rhs[i]
        if r:
            rows[i] = r
    aug = SparseMatrix(m.nrows, m.ncols + 1, rows)
    pivots, rref_rows = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        raise InconsistentSystem("system has no solution")
    zero, _ = _zero_one(aug)
    x = [zero] * m.ncols
    for c, row in zip(pivots, rref_rows):
        x[c] = row.get(m.ncols, zero)
    return tuple(x)


def inverse(m: SparseMatrix) -> SparseMatrix:
    n = m.nrows
    if m.ncols != n:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = SparseMatrix(n, 2 * n, {i: {**m.row(i), n + i: 1} for i in range(n)})
    pivots, rows = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise InconsistentSystem("matrix is singular")
    return SparseMatrix(n, n, {i: {j - n: v for j, v in rows[i].items() if j >= n} for i in range(n)})


def _poly_lcm(a, b):
    return pdivmod(pmul(a, b), pgcd(a, b))[0]


def _horner_int(p: tuple, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _evaluation_points():
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def rank_by_specialization(m: SparseMatrix) -> int:
    """Exact rank over Q(t) certified by evaluation at rational points.

    Each row is cleared of denominators, giving polynomial entries of degree
    at most ``D``.  Every ``(r+1)``-minor is then a polynomial of degree at
    most ``(r+1)*D``; once that many points plus one all show rank ``<= r``
    (and some point shows rank ``r``) the rank over Q(t) is exactly ``r``.
    """
    if not _is_rational(m) and not all(
        isinstance(v, (RatFunc, int, Fraction)) for _, r in m.nonzero_rows() for v in r.values()
    ):
        raise TypeError("rank_by_specialization needs rational or RatFunc entries")
    if _is_rational(m):
        return rank(m)
    poly_rows = []
    degree = 0
    for _, row in m.nonzero_rows():
        vals = {j: (v if isinstance(v, RatFunc) else RatFunc.const(v)) for j, v in row.items()}
        den = (Fraction(1),)
        for v in vals.values():
            den = _poly_lcm(den, v.den)
        prow = {}
        for j, v in vals.items():
            p = pmul(v.num, pdivmod(den, v.den)[0])
            degree = max(degree, len(p) - 1)
            prow[j] = p
        scale = lcm(*(c.denominator for p in prow.values() for c in p))
        poly_rows.append({j: tuple(int(c * scale) for c in p) for j, p in prow.items()})
    full = min(m.nrows, m.ncols)
    best = 0
    seen = 0
    for x in _evaluation_points():
        rows = []
        for prow in poly_rows:
            r = {}
            for j, p in prow.items():
                v = _horner_int(p, x)
                if v:
                    r[j] = v
            if r:
                rows.append(r)
        best = max(best, _kernel.rank(rows))
        seen += 1
        if best == full or seen >= (best + 1) * degree + 1:
            return best
