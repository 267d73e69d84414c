"""Rank-1 Virasoro structure on Fock modules and Verma modules.

On the rank-1 Fock module with ``(alpha|alpha) = 2`` (so gamma = kappa)

    L_n = (1/4g) sum_m :b_m b_{n-m}: - (n+1)(1/2 - 1/2g) b_n,

which has central charge ``13 - 6g - 6/g`` and lowest L0 eigenvalue
``p(p+2)/4g - p/2`` on the vacuum with b_0 eigenvalue ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from walg.coeffs.ratfunc import padd, pdivmod, pgcd, pmul, pscale
from walg.coeffs import RatFunc, SparseMatrix, exact_str, nullspace, rank, rank_by_specialization, vstack
from walg.errors import CapExceeded, GammaZero, NonDominant
from walg.fock import HighestWeightData, apply_b_state, component, poly_add_to, state_matrix

FieldElem = Union[Fraction, RatFunc]

SINGVEC_CAP = 8
SHAPOVALOV_CAP = 10


def symbolic_gamma() -> RatFunc:
    return RatFunc.gen("γ")


def _field(x) -> FieldElem:
    if isinstance(x, RatFunc):
        return x
    return Fraction(x)


@dataclass(frozen=True)
class VirasoroParams:
    gamma: FieldElem
    central_charge: FieldElem = field(init=False)

    def __post_init__(self):
        g = _field(self.gamma)
        if g == 0:
            raise GammaZero("gamma must be nonzero")
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "central_charge", 13 - 6 * g - 6 / g)

    @classmethod
    def symbolic(cls) -> "VirasoroParams":
        return cls(symbolic_gamma())

    def dual(self) -> "VirasoroParams":
        return VirasoroParams(1 / self.gamma)

    def fock(self, nu) -> HighestWeightData:
        return HighestWeightData(nu, self.gamma)

    def fock_lambda_mu(self, lam: int, mu: int) -> HighestWeightData:
        return HighestWeightData.from_lambda_mu(lam, mu, self.gamma)


@dataclass(frozen=True)
class LowestWeight:
    lambda_i: int
    mu_i: int
    value: FieldElem


def delta_value(gamma: FieldElem, lam: int, mu: int) -> FieldElem:
    """``lam(lam+2)/4g + g mu(mu+2)/4 - (lam mu + lam + mu)/2``."""
    if gamma == 0:
        raise GammaZero("gamma must be nonzero")
    return Fraction(lam * (lam + 2), 4) / gamma + gamma * Fraction(mu * (mu + 2), 4) - Fraction(lam * mu + lam + mu, 2)


def delta(params: VirasoroParams, lambda_i: int, mu_i: int) -> LowestWeight:
    if lambda_i < 0 or mu_i < 0:
        raise NonDominant("lambda_i and mu_i must be >= 0")
    return LowestWeight(lambda_i, mu_i, delta_value(params.gamma, lambda_i, mu_i))


# Fock realization ----------------------------------------------------------


def apply_L_state(params: VirasoroParams, hw: HighestWeightData, n: int, state: dict, degree: int) -> dict:
    """``L_n`` on a homogeneous state of the given degree."""
    g = params.gamma
    quad = 1 / (4 * g)
    lin = -(n + 1) * (Fraction(1, 2) - 1 / (2 * g))
    out: dict = {}
    reach = degree + abs(n) + 1
    for m in range(-reach, reach + 1):
        a, c = m, n - m
        first, second = (a, c) if a >= c else (c, a)  # annihilator acts first
        if first > degree:
            continue
        s = apply_b_state(first, hw, state)
        if not s:
            continue
        s = apply_b_state(second, hw, s)
        poly_add_to(out, s, quad)
    if lin != 0:
        poly_add_to(out, apply_b_state(n, hw, state), lin)
    return out


def l_matrix(params: VirasoroParams, nu: HighestWeightData, n: int, d: int) -> SparseMatrix:
    """Matrix of ``L_n`` from degree ``d`` to degree ``d - n`` of the rank-1 Fock module."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    return _l_matrix(params, nu, n, d)


@lru_cache(maxsize=4096)
def _l_matrix(params: VirasoroParams, nu: HighestWeightData, n: int, d: int) -> SparseMatrix:
    return state_matrix(lambda s: apply_L_state(params, nu, n, s, d), 1, d, d - n)


def singular_vectors(params: VirasoroParams, nu: HighestWeightData, N: int, cap: int = SINGVEC_CAP) -> list[tuple[int, list]]:
    """``(d, kernel basis of [L1; L2] on degree d)`` for ``d = 1..N`` with nonzero kernel."""
    if N > cap:
        raise CapExceeded(f"degree {N} exceeds cap {cap}")
    out = []
    for d in range(1, N + 1):
        stacked = vstack([l_matrix(params, nu, 1, d), l_matrix(params, nu, 2, d)])
        basis = nullspace(stacked)
        if basis:
            out.append((d, basis))
    return out


def singular_vectors_report(params: VirasoroParams, nu, N: int) -> dict:
    """Exact, JSON-ready record of the [L1; L2] kernels on degrees 1..N."""
    hw = params.fock(nu)
    h = hw.nu * (hw.nu + 2) / (4 * params.gamma) - hw.nu / 2
    degrees = []
    for d in range(1, N + 1):
        stacked = vstack([l_matrix(params, hw, 1, d), l_matrix(params, hw, 2, d)])
        kernel = nullspace(stacked)
        degrees.append(
            {
                "degree": d,
                "basis": fock_basis_labels(d),
                "l0_eigenvalue": exact_str(h + d),
                "stacked_rank": rank(stacked),
                "kernel": [[exact_str(x) for x in vec] for vec in kernel],
            }
        )
    return {
        "gamma": exact_str(params.gamma),
        "nu": exact_str(hw.nu),
        "central_charge": exact_str(params.central_charge),
        "lowest_weight": exact_str(h),
        "degrees": degrees,
    }


def fock_basis_labels(d: int) -> list[str]:
    """Human-readable labels ``b_{-k}^e`` of the degree-d Fock basis."""
    labels = []
    for m in component(1, d).basis:
        if not m:
            labels.append("1")
            continue
        parts = []
        for v, e in m:
            parts.append(f"b_{{-{v + 1}}}" + (f"^{e}" if e > 1 else ""))
        labels.append("*".join(parts))
    return labels


# Verma module and Shapovalov form -------------------------------------------

# Verma vectors are dicts partition -> coefficient, where partition (k1 >= k2 >= ...)
# stands for L_{-k1} L_{-k2} ... v and coefficients are polynomials in (c, h)
# stored as dicts {(i, j): Fraction} meaning sum a_ij c^i h^j.


def _cp_add(acc: dict, p: dict, scale=1):
    for k, v in p.items():
        s = acc.get(k, 0) + scale * v
        if s == 0:
            acc.pop(k, None)
        else:
            acc[k] = s


def _cp_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (a, b), x in p.items():
        for (c, d), y in q.items():
            k = (a + c, b + d)
            s = out.get(k, 0) + x * y
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
    return out


_ONE = {(0, 0): Fraction(1)}
_C = {(1, 0): Fraction(1)}
_H = {(0, 1): Fraction(1)}


def _vec_add(acc: dict, vec: dict, coef: dict):
    for part, p in vec.items():
        cur = acc.get(part)
        prod = _cp_mul(p, coef)
        if cur is None:
            if prod:
                acc[part] = prod
        else:
            _cp_add(cur, prod)
            if not cur:
                del acc[part]


@lru_cache(maxsize=None)
def _act(n: int, part: tuple) -> tuple:
    """``L_n`` applied to ``L_{-part} v`` in PBW order, as a sorted tuple."""
    out: dict = {}
    if not part:
        if n < 0:
            out[(-n,)] = dict(_ONE)
        elif n == 0:
            out[()] = dict(_H)
        return _freeze(out)
    k1, rest = part[0], part[1:]
    if n < 0 and -n >= k1:
        return _freeze({(-n,) + part: dict(_ONE)})
    # L_n L_{-k1} R = L_{-k1} (L_n R) + (n+k1) L_{n-k1} R + (c/12)(n^3-n) delta_{n,k1} R
    for p, coef in _act(n, rest):
        _vec_add(out, _thaw(_act(-k1, p)), dict(coef))
    if n + k1 != 0:
        _vec_add(out, _thaw(_act(n - k1, rest)), {(0, 0): Fraction(n + k1)})
    if n == k1:
        _vec_add(out, {rest: dict(_ONE)}, {(1, 0): Fraction(n**3 - n, 12)})
    return _freeze(out)


def _freeze(vec: dict) -> tuple:
    return tuple(sorted((p, tuple(sorted(c.items()))) for p, c in vec.items() if c))


def _thaw(vec: tuple) -> dict:
    return {p: dict(c) for p, c in vec}


def partitions(n: int) -> list[tuple]:
    """Partitions of n in graded reverse-lexicographic order: (n), (n-1,1), ..., (1,...,1)."""
    out = []

    def rec(rem, mx, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for k in range(min(rem, mx), 0, -1):
            rec(rem - k, k, prefix + [k])

    rec(n, n, [])
    return out


@lru_cache(maxsize=None)
def gram_polynomials(level: int) -> tuple:
    """Gram matrix of the level-``level`` Verma basis with entries in Q[c, h]."""
    basis = partitions(level)
    rows = []
    for lam in basis:
        row = []
        for mu in basis:
            vec = {mu: dict(_ONE)}
            # <L_{-lam} v, w> = <v, L_{lam_j} ... L_{lam_1} w>
            for k in lam:
                nxt: dict = {}
                for p, coef in vec.items():
                    _vec_add(nxt, _thaw(_act(k, p)), coef)
                vec = nxt
            row.append(tuple(sorted(vec.get((), {}).items())))
        rows.append(tuple(row))
    return tuple(rows)


def _substitute(polys: tuple, c: FieldElem, h: FieldElem) -> list[list]:
    """Evaluate every ``sum a_ij c^i h^j`` at (c, h), sharing the power table."""
    keys = sorted({k for row in polys for p in row for k, _ in p})
    monos = {(i, j): c**i * h**j for i, j in keys}
    if not any(isinstance(v, RatFunc) for v in monos.values()):
        return [[sum((a * monos[k] for k, a in p), Fraction(0)) for p in row] for row in polys]
    # put all power products over one denominator so each entry is one polynomial sum
    var = next(v.var for v in monos.values() if isinstance(v, RatFunc))
    monos = {k: v if isinstance(v, RatFunc) else RatFunc.const(v, var) for k, v in monos.items()}
    den = (Fraction(1),)
    for v in monos.values():
        den = pmul(den, pdivmod(v.den, pgcd(den, v.den))[0])
    scaled = {k: pmul(v.num, pdivmod(den, v.den)[0]) for k, v in monos.items()}
    out = []
    for row in polys:
        out_row = []
        for p in row:
            num: tuple = ()
            for k, a in p:
                num = padd(num, pscale(scaled[k], a))
            out_row.append(RatFunc(num, den, var))
        out.append(out_row)
    return out


def shapovalov(params: VirasoroParams, delta_val: FieldElem, level: int, cap: int = SHAPOVALOV_CAP) -> tuple[SparseMatrix, int]:
    """``(Gram matrix, corank)`` of the Verma module M(c(gamma), delta_val) at ``level``."""
    if level < 0:
        raise ValueError("level must be >= 0")
    if level > cap:
        raise CapExceeded(f"level {level} exceeds cap {cap}")
    polys = gram_polynomials(level)
    c = params.central_charge
    h = _field(delta_val)
    n = len(polys)
    gram = SparseMatrix.from_dense(_substitute(polys, c, h), ncols=n)
    if isinstance(c, RatFunc) or isinstance(h, RatFunc):
        r = rank_by_specialization(gram)
    else:
        r = rank(gram)
    return gram, n - r


def first_corank_level(params: VirasoroParams, delta_val: FieldElem, max_level: int) -> int | None:
    for lvl in range(1, max_level + 1):
        if shapovalov(params, delta_val, lvl)[1] > 0:
            return lvl
    return None
