"""Classical-limit screening derivations on ``C[x^i_n]``.

``Q_{i,(mu_i)}`` sends the generator ``x^j_n`` (``n < -mu_i``) to
``(alpha_i|alpha_j) S^i_{n+mu_i+1}`` and kills the others, where ``S^i_k``
are the Schur polynomials of ``exp(sum_{m<0} -x^i_m z^m / m)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from walg._parallel import pmap
from walg.coeffs import SparseMatrix, rank, vstack
from walg.errors import DimensionMismatch, NonDominant
from walg.fock import (
    Derivation,
    component,
    component_or_empty,
    mono_mul,
    poly_add_to,
    poly_mul,
    poly_scale,
    var_color,
    var_degree,
    var_index,
)
from walg.rootsys import SimpleLieData


@lru_cache(maxsize=None)
def _schur(color: int, r: int, k: int) -> tuple:
    # S_{-k} via k*S_{-k} = sum_{j=1..k} x_{-j} S_{-(k-j)}
    if k == 0:
        return (((), Fraction(1)),)
    acc: dict = {}
    for j in range(1, k + 1):
        gen = ((var_index(color, -j, r), 1),)
        for m, c in _schur(color, r, k - j):
            poly_add_to(acc, {mono_mul(m, gen): c})
    return tuple(sorted((m, c / k) for m, c in acc.items()))


def schur_coeffs(i: int, N: int, r: int = 1) -> dict[int, dict]:
    """``{n: S^i_n}`` for ``n = 0, -1, ..., -N`` as polynomials in color ``i`` of ``r``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return {-k: dict(_schur(i, r, k)) for k in range(N + 1)}


def _check_index(g: SimpleLieData, i: int):
    if not 0 <= i < g.rank:
        raise DimensionMismatch(f"node index {i} out of range for {g.type_label}")


@lru_cache(maxsize=None)
def screening_derivation(g: SimpleLieData, i: int, mu_i: int) -> Derivation:
    """``Q_{i,(mu_i)}`` as a derivation; images on generators are cached."""
    _check_index(g, i)
    if mu_i < 0:
        raise NonDominant("twist mu_i must be >= 0")
    r = g.rank
    form = g.root_form

    def image(var: int) -> dict:
        k = var_degree(var, r)
        if k < mu_i + 1:
            return {}
        a = form[i][var_color(var, r)]
        if a == 0:
            return {}
        return poly_scale(dict(_schur(i, r, k - mu_i - 1)), a)

    return Derivation(r, image, mu_i + 1)


@lru_cache(maxsize=None)
def _q_matrix(g: SimpleLieData, i: int, mu_i: int, d: int) -> SparseMatrix:
    return screening_derivation(g, i, mu_i).matrix(d)


def q_matrix(g: SimpleLieData, i: int, mu_i: int, d: int) -> SparseMatrix:
    """Matrix of ``Q_{i,(mu_i)}`` from component(r, d) to component(r, d - mu_i - 1)."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    _check_index(g, i)
    return _q_matrix(g, i, mu_i, d)


def q_power(g: SimpleLieData, i: int, mu_i: int, k: int, d: int) -> SparseMatrix:
    """Matrix of ``Q_{i,(mu_i)}^k`` on component(r, d)."""
    return _compose(g, [(i, mu_i)] * k, d)


def _compose(g: SimpleLieData, ops: list, d: int) -> SparseMatrix:
    # ops act right to left in list order: ops[0] first
    mat = SparseMatrix.identity(len(component(g.rank, d)))
    deg = d
    for node, mu_i in ops:
        if deg >= 0:
            mat = q_matrix(g, node, mu_i, deg) @ mat
        deg -= mu_i + 1
    return mat


def _dominant(g: SimpleLieData, coords, what: str) -> tuple:
    coords = tuple(coords)
    if len(coords) != g.rank:
        raise DimensionMismatch(f"{what} needs {g.rank} coordinates, got {len(coords)}")
    if any(not isinstance(c, int) or c < 0 for c in coords):
        raise NonDominant(f"{what}={coords} is not dominant")
    return coords


def _kernel_dim(args) -> int:
    g, lam, mu, d = args
    mats = [q_power(g, i, mu[i], lam[i] + 1, d) for i in range(g.rank)]
    return len(component(g.rank, d)) - rank(vstack(mats))


def kernel_dims(g: SimpleLieData, lam, mu_check, N: int) -> list[int]:
    """``dim`` of ``cap_i Ker Q_{i,(mu_i)}^{lam_i+1}`` on each degree ``0..N``."""
    lam = _dominant(g, lam, "lambda")
    mu = _dominant(g, mu_check, "mu_check")
    if N < 0:
        raise ValueError("N must be >= 0")
    return pmap(_kernel_dim, [(g, lam, mu, d) for d in range(N + 1)])


# Serre relations -----------------------------------------------------------


def _ad_power(a: Derivation, b: Derivation, m: int) -> Derivation:
    out = b
    for _ in range(m):
        out = a.bracket(out)
    return out


def _vanishes(dv: Derivation, N: int) -> bool:
    # a derivation vanishes on all components of degree <= N iff it kills
    # every generator of degree <= N
    r = dv.r
    return all(not dv.on_generator(v) for v in range(N * r))


def serre_pairs(g: SimpleLieData) -> list[tuple[int, int]]:
    return [(i, j) for i in range(g.rank) for j in range(g.rank) if i != j]


def ad_matrix(g: SimpleLieData, i: int, j: int, mu: tuple, m: int, d: int) -> SparseMatrix:
    """Matrix of ``(ad Q_i)^m Q_j`` on component(r, d) from compositions of q_matrix."""
    r = g.rank
    d_out = d - m * (mu[i] + 1) - mu[j] - 1
    total = SparseMatrix.zeros(len(component_or_empty(r, d_out)), len(component(r, d)))
    for k in range(m + 1):
        # (ad A)^m B = sum_k (-1)^k C(m,k) A^(m-k) B A^k
        ops = [(i, mu[i])] * k + [(j, mu[j])] + [(i, mu[i])] * (m - k)
        total = total + _compose(g, ops, d).scale((-1) ** k * comb(m, k))
    return total


def serre_relation_vanishes(g: SimpleLieData, i: int, j: int, mu: tuple, N: int, method: str = "derivation") -> bool:
    """``(ad Q_i)^{1-a_ij} Q_j = 0`` on all components of degree <= N."""
    m = 1 - g.cartan[i][j]
    if method == "derivation":
        dv = _ad_power(screening_derivation(g, i, mu[i]), screening_derivation(g, j, mu[j]), m)
        return _vanishes(dv, N)
    if method == "matrix":
        return all(ad_matrix(g, i, j, mu, m, d).is_zero() for d in range(N + 1))
    raise ValueError(f"unknown method {method!r}")


def serre_check(g: SimpleLieData, mu_check, N: int, method: str = "derivation") -> bool:
    """Serre relations for every ordered pair ``i != j`` on degrees <= N."""
    mu = _dominant(g, mu_check, "mu_check")
    return all(serre_relation_vanishes(g, i, j, mu, N, method) for i, j in serre_pairs(g))


def commrel_closed_form(g: SimpleLieData, i: int, j: int, mu: tuple, m: int) -> Derivation:
    """Right-hand side of the closed formula for ``(ad Q_i)^m Q_j`` with ``C_m = 1``."""
    r = g.rank
    form = g.root_form
    mi, mj = mu[i], mu[j]
    factor = -g.cartan[i][j] - m + 1

    def image(var: int) -> dict:
        K = var_degree(var, r)
        k = var_color(var, r)
        out: dict = {}
        if factor == 0:
            return out
        # modes n_l = -a_l with a_l > mu_i (l <= m), a_{m+1} > mu_j, sum a_l = K
        for parts in _compositions(K, m, mi + 1, mj + 1):
            n = [-a for a in parts]
            total = -K
            coef = Fraction(factor)
            for nl in n[:m]:
                coef /= nl
            s = sum(Fraction(n[l], total - n[l]) for l in range(m))
            c = coef * (s * form[i][k] - form[j][k])
            if c == 0:
                continue
            term = {(): c}
            for a in parts[:m]:
                term = poly_mul(term, dict(_schur(i, r, a - mi - 1)))
            term = poly_mul(term, dict(_schur(j, r, parts[m] - mj - 1)))
            poly_add_to(out, term)
        return out

    return Derivation(r, image, m * (mi + 1) + mj + 1)


def _compositions(K: int, m: int, low_i: int, low_j: int):
    for head in product(range(low_i, K + 1), repeat=m):
        last = K - sum(head)
        if last >= low_j:
            yield head + (last,)


def commrel_proportionality_check(g: SimpleLieData, i: int, j: int, mu_check, m: int, N: int) -> bool:
    """``(ad Q_i)^m Q_j`` equals one global scalar times the closed form, on degrees <= N."""
    mu = _dominant(g, mu_check, "mu_check")
    _check_index(g, i)
    _check_index(g, j)
    if i == j:
        raise ValueError("need i != j")
    if not 1 <= m <= 1 - g.cartan[i][j]:
        raise ValueError(f"m must lie in 1..{1 - g.cartan[i][j]}")
    lhs = _ad_power(screening_derivation(g, i, mu[i]), screening_derivation(g, j, mu[j]), m)
    rhs = commrel_closed_form(g, i, j, mu, m)
    return _proportional(lhs, rhs, N * g.rank)


def _proportional(lhs: Derivation, rhs: Derivation, nvars: int) -> bool:
    scale = None  # lhs = scale * rhs
    for v in range(nvars):
        a, b = lhs.on_generator(v), rhs.on_generator(v)
        if not b:
            if a:
                return False
            continue
        if scale is None:
            m0 = min(b)
            scale = a.get(m0, 0) / b[m0]
            if scale == 0:
                return False
        if a != {mm: scale * c for mm, c in b.items() if scale * c != 0}:
            return False
    return True
