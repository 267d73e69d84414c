"""Brute-force oracles, deliberately independent of the library code paths.

Nothing here imports ``walg``; golden files under ``tests/golden`` and
``src/walg/data`` were produced from these functions by ``make_golden.py``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

import sympy


def colored_partitions(r: int, d: int) -> int:
    """Count r-colored partitions of d by enumerating multiplicity vectors."""
    parts = [(k, c) for k in range(1, d + 1) for c in range(r)]

    def rec(idx, remaining):
        if remaining == 0:
            return 1
        if idx == len(parts):
            return 0
        k = parts[idx][0]
        return sum(rec(idx + 1, remaining - e * k) for e in range(remaining // k + 1))

    return rec(0, d)


def _sign(perm) -> int:
    s, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        s *= (-1) ** (length - 1)
    return s


def type_a_character(lam, mu, order: int) -> list[int]:
    """Twisted character for sl(n+1) via a permutation sum in epsilon coordinates."""
    n = len(lam)

    def eps(coords):
        # fundamental weight omega_i = e_1 + ... + e_i
        v = [0] * (n + 1)
        for i, c in enumerate(coords):
            for k in range(i + 1):
                v[k] += c
        return v

    lr = eps([c + 1 for c in lam])
    mr = eps([c + 1 for c in mu])
    top = sum(a * b for a, b in zip(lr, mr))
    weyl = [0] * (order + 1)
    for perm in permutations(range(n + 1)):
        moved = [lr[perm[k]] for k in range(n + 1)]
        e = top - sum(a * b for a, b in zip(moved, mr))
        assert e >= 0
        if e <= order:
            weyl[e] += _sign(perm)
    euler = [colored_partitions(n, d) for d in range(order + 1)]
    return [sum(weyl[k] * euler[d - k] for k in range(d + 1)) for d in range(order + 1)]


def _traceless(coords):
    n = len(coords)
    v = [Fraction(0)] * (n + 1)
    for i, c in enumerate(coords):
        for k in range(i + 1):
            v[k] += c
    mean = sum(v) / (n + 1)
    return [x - mean for x in v]


def type_a_prefactor(lam, mu):
    """``((lam|lam+2rho)/2, (mu|mu+2rho)/2, <rho,rho>)`` in traceless epsilon coordinates.

    For sl(n+1) the standard dot product gives (alpha|alpha) = 2 and identifies
    coweights with weights, so one form serves both sides.
    """
    n = len(lam)
    rho = _traceless([1] * n)
    lv, mv = _traceless(lam), _traceless(mu)

    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    two_rho = [2 * x for x in rho]
    return (
        dot(lv, [a + b for a, b in zip(lv, two_rho)]) / 2,
        dot(mv, [a + b for a, b in zip(mv, two_rho)]) / 2,
        dot(rho, rho),
    )


def two_tower_series(order: int) -> list[int]:
    """Monomials in generators of degrees 2,3,4,... and 3,4,5,... (two towers)."""
    gens = list(range(2, order + 1)) + list(range(3, order + 1))
    out = [0] * (order + 1)

    def rec(idx, deg):
        if idx == len(gens):
            out[deg] += 1
            return
        k = gens[idx]
        e = 0
        while deg + e * k <= order:
            rec(idx + 1, deg + e * k)
            e += 1

    rec(0, 0)
    return out


def schur_oracle(N: int):
    """Schur polynomials S_{-k}, k <= N, by expanding the exponential with sympy."""
    z = sympy.Symbol("z")
    xs = sympy.symbols(f"x1:{N + 1}")
    series = sympy.exp(sum(xs[m - 1] * z**m / m for m in range(1, N + 1)))
    expanded = sympy.series(series, z, 0, N + 1).removeO()
    return xs, [sympy.expand(expanded.coeff(z, k)) for k in range(N + 1)]


# rank-1 Fock / Virasoro oracle ------------------------------------------------


def _basis(d: int):
    """Partitions of d as exponent dicts {k: e}, ordered by the (k, e) sequence."""
    out = []

    def rec(rem, mx, acc):
        if rem == 0:
            out.append(dict(acc))
            return
        for k in range(min(rem, mx), 0, -1):
            for e in range(rem // k, 0, -1):
                acc[k] = e
                rec(rem - e * k, k - 1, acc)
                del acc[k]

    rec(d, d, {})
    return sorted(out, key=lambda m: tuple(sorted(m.items())))


def _label(m: dict) -> str:
    if not m:
        return "1"
    return "*".join(f"b_{{-{k}}}" + (f"^{e}" if e > 1 else "") for k, e in sorted(m.items()))


def virasoro_matrices(gamma, p, d: int, ns=(1, 2)):
    """Dense sympy matrices of L_n (n > 0) from degree d, via the explicit mode formula

    L_n = (1/4g)(2 p b_n + sum_{a+b=n, a,b>0} b_a b_b + 2 sum_{k>0} b_{-k} b_{n+k}) - (n+1)(1/2 - 1/2g) b_n
    with b_{-k} = multiplication by y_k and b_k = 2 g k d/dy_k.
    """
    g = sympy.Rational(gamma)
    p = sympy.Rational(p)
    ys = sympy.symbols(f"y1:{d + 1}") if d else ()

    def ann(k, f):
        if k > d:
            return sympy.Integer(0)
        return 2 * g * k * sympy.diff(f, ys[k - 1])

    def cre(k, f):
        return ys[k - 1] * f

    def L(n, f):
        tot = 2 * p * ann(n, f)
        for a in range(1, n):
            tot += ann(a, ann(n - a, f))
        for k in range(1, d + 1):
            tot += 2 * cre(k, ann(n + k, f))
        return sympy.expand(tot / (4 * g) - (n + 1) * (sympy.Rational(1, 2) - 1 / (2 * g)) * ann(n, f))

    def mono(m):
        out = sympy.Integer(1)
        for k, e in m.items():
            out *= ys[k - 1] ** e
        return out

    src = _basis(d)
    mats = []
    for n in ns:
        tgt = _basis(d - n) if d - n >= 0 else []
        M = sympy.zeros(len(tgt), len(src))
        for col, m in enumerate(src):
            img = sympy.Poly(L(n, mono(m)), *ys) if d else sympy.Poly(0, sympy.Symbol("u"))
            for row, t in enumerate(tgt):
                M[row, col] = img.coeff_monomial(mono(t)) if d else 0
        mats.append(M)
    return src, mats


def singvec_oracle(gamma, p, max_degree: int) -> dict:
    g = sympy.Rational(gamma)
    pr = sympy.Rational(p)
    h = pr * (pr + 2) / (4 * g) - pr / 2
    c = 13 - 6 * g - 6 / g
    degrees = []
    for d in range(1, max_degree + 1):
        src, (L1, L2) = virasoro_matrices(gamma, p, d)
        stacked = L1.col_join(L2)
        kernel = stacked.nullspace()
        if kernel:
            K = sympy.Matrix.hstack(*kernel).T.rref()[0]
            vecs = [[str(K[i, j]) for j in range(K.cols)] for i in range(K.rows)]
        else:
            vecs = []
        degrees.append(
            {
                "degree": d,
                "basis": [_label(m) for m in src],
                "l0_eigenvalue": str(h + d),
                "stacked_rank": stacked.rank(),
                "kernel": vecs,
            }
        )
    return {"gamma": str(g), "nu": str(pr), "central_charge": str(c), "lowest_weight": str(h), "degrees": degrees}


def shapovalov_level2(c, h):
    """Closed-form level-2 Gram matrix in the basis (L_{-2}, L_{-1}^2)."""
    return [[4 * h + c / 2, 6 * h], [6 * h, 4 * h * (2 * h + 1)]]


def fraction(s: str) -> Fraction:
    return Fraction(s)
