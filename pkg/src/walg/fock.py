"""Graded monomial bases of Fock polynomial rings and rank-1 Heisenberg modes.

A monomial in the generators ``x^i_n`` (color ``i``, mode ``n < 0``) is a
sorted tuple of ``(var, exponent)`` pairs with ``var = (-n-1)*r + i``, so
the principal degree of ``var`` is ``var // r + 1``.  Polynomials are plain
dicts ``monomial -> coefficient``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from walg.coeffs import SparseMatrix
from walg.errors import RankUnsupported

Monomial = tuple  # ((var, exp), ...), var increasing
Poly = dict


def var_index(color: int, mode: int, r: int) -> int:
    if mode >= 0:
        raise ValueError("Fock generators have negative modes")
    return (-mode - 1) * r + color


def var_degree(var: int, r: int) -> int:
    return var // r + 1


def var_color(var: int, r: int) -> int:
    return var % r


def var_mode(var: int, r: int) -> int:
    return -(var // r) - 1


def monomial_degree(m: Monomial, r: int) -> int:
    return sum(e * var_degree(v, r) for v, e in m)


def _sort_key(m: Monomial, r: int) -> tuple:
    # graded lexicographic on (mode, color, exponent), read from the deepest mode
    return tuple((var_degree(v, r), var_color(v, r), e) for v, e in m)


@dataclass(frozen=True)
class FockComponent:
    """Degree-``d`` piece of ``C[x^i_n]`` with a fixed ordered monomial basis."""

    rank: int
    degree: int
    basis: tuple

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> dict:
        return _index(self.rank, self.degree)


def _monomials(r: int, d: int, max_var: int) -> list:
    # multisets of generators with var <= max_var and total degree d
    if d == 0:
        return [()]
    out = []
    for v in range(min(max_var, d * r - 1), -1, -1):
        k = var_degree(v, r)
        for e in range(1, d // k + 1):
            for rest in _monomials(r, d - e * k, v - 1):
                out.append(rest + ((v, e),))
    return out


@lru_cache(maxsize=None)
def component(r: int, d: int) -> FockComponent:
    """Ordered monomial basis of the degree-``d`` component in ``r`` colors."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    if d < 0:
        raise ValueError("degree must be >= 0")
    basis = sorted(_monomials(r, d, d * r - 1), key=lambda m: _sort_key(m, r))
    return FockComponent(r, d, tuple(basis))


@lru_cache(maxsize=None)
def _index(r: int, d: int) -> dict:
    return {m: k for k, m in enumerate(component(r, d).basis)}


def component_or_empty(r: int, d: int) -> FockComponent:
    """Negative degrees give a genuine 0-dimensional space."""
    if d < 0:
        return FockComponent(r, d, ())
    return component(r, d)


# polynomial helpers -------------------------------------------------------


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_div_var(m: Monomial, var: int) -> tuple[int, Monomial]:
    """``(exponent, m / x_var)``; exponent 0 means ``x_var`` does not divide ``m``."""
    for k, (v, e) in enumerate(m):
        if v == var:
            if e == 1:
                return e, m[:k] + m[k + 1 :]
            return e, m[:k] + ((v, e - 1),) + m[k + 1 :]
    return 0, m


def poly_add_to(acc: Poly, p: Mapping, scale=1) -> Poly:
    for m, c in p.items():
        s = acc.get(m, 0) + scale * c
        if s == 0:
            acc.pop(m, None)
        else:
            acc[m] = s
    return acc


def poly_mul(p: Mapping, q: Mapping) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = mono_mul(m1, m2)
            s = out.get(m, 0) + c1 * c2
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
    return out


def poly_scale(p: Mapping, c) -> Poly:
    if c == 0:
        return {}
    return {m: c * v for m, v in p.items()}


def poly_sub(p: Mapping, q: Mapping) -> Poly:
    return poly_add_to(dict(p), q, -1)


class Derivation:
    """A derivation of ``C[x^i_n]`` given by its images on generators.

    ``image(var)`` returns a polynomial; results are cached.  Brackets are
    again derivations, ``[D1, D2](x) = D1(D2 x) - D2(D1 x)``.
    """

    def __init__(self, r: int, image: Callable[[int], Poly], shift: int):
        self.r = r
        self._image = image
        self.shift = shift  # degree lowered
        self._cache: dict[int, Poly] = {}

    def on_generator(self, var: int) -> Poly:
        p = self._cache.get(var)
        if p is None:
            p = self._image(var)
            self._cache[var] = p
        return p

    def on_monomial(self, m: Monomial) -> Poly:
        out: Poly = {}
        for v, e in m:
            img = self.on_generator(v)
            if not img:
                continue
            _, rest = mono_div_var(m, v)
            for mi, c in img.items():
                mm = mono_mul(rest, mi)
                s = out.get(mm, 0) + e * c
                if s == 0:
                    out.pop(mm, None)
                else:
                    out[mm] = s
        return out

    def __call__(self, p: Mapping) -> Poly:
        out: Poly = {}
        for m, c in p.items():
            poly_add_to(out, self.on_monomial(m), c)
        return out

    def bracket(self, other: "Derivation") -> "Derivation":
        def image(var):
            x = {((var, 1),): 1}
            return poly_sub(self(other(x)), other(self(x)))

        return Derivation(self.r, image, self.shift + other.shift)

    def matrix(self, d: int) -> SparseMatrix:
        """Matrix from component(r, d) to component(r, d - shift), columns = source."""
        src = component(self.r, d)
        tgt = component_or_empty(self.r, d - self.shift)
        idx = _index(self.r, tgt.degree) if tgt.degree >= 0 else {}
        rows: dict = {}
        for col, m in enumerate(src.basis):
            for mm, c in self.on_monomial(m).items():
                rows.setdefault(idx[mm], {})[col] = c
        return SparseMatrix(len(tgt), len(src), rows)


# rank-1 quantum Fock module -------------------------------------------------


@dataclass(frozen=True)
class HighestWeightData:
    """Rank-1 Fock data: ``nu`` is the b_0 eigenvalue ``(nu|alpha)``, ``level`` is kappa."""

    nu: object
    level: object
    rank: int = 1

    @classmethod
    def from_lambda_mu(cls, lam: int, mu: int, level) -> "HighestWeightData":
        """``nu = lam*omega - kappa*mu*omega_check`` in rank 1, so ``(nu|alpha) = lam - kappa*mu``."""
        return cls(lam - level * mu, level)


def _check_rank1(hw: HighestWeightData):
    if hw.rank != 1:
        raise RankUnsupported("quantum Fock modes are implemented in rank 1 only")


def apply_b_state(n: int, hw: HighestWeightData, state: Mapping) -> Poly:
    """``b_n`` on a state of the rank-1 Fock module (monomials in ``b_{-k}``)."""
    _check_rank1(hw)
    if n == 0:
        return poly_scale(state, hw.nu)
    if n < 0:
        gen = ((var_index(0, n, 1), 1),)
        return {mono_mul(m, gen): c for m, c in state.items()}
    # b_n = kappa*(alpha|alpha)*n * d/d b_{-n}, with (alpha|alpha) = 2
    var = var_index(0, -n, 1)
    k = 2 * n * hw.level
    out: Poly = {}
    for m, c in state.items():
        e, rest = mono_div_var(m, var)
        if e:
            s = out.get(rest, 0) + k * e * c
            if s == 0:
                out.pop(rest, None)
            else:
                out[rest] = s
    return out


def state_matrix(op: Callable[[Mapping], Mapping], r: int, d: int, d_out: int) -> SparseMatrix:
    """Matrix of a linear operator on basis states, degree ``d`` to ``d_out``."""
    src = component_or_empty(r, d)
    tgt = component_or_empty(r, d_out)
    idx = _index(r, d_out) if d_out >= 0 else {}
    rows: dict = {}
    for col, m in enumerate(src.basis):
        for mm, c in op({m: 1}).items():
            rows.setdefault(idx[mm], {})[col] = c
    return SparseMatrix(len(tgt), len(src), rows)


def apply_b(n: int, hw: HighestWeightData, comp: FockComponent) -> SparseMatrix:
    """Matrix of ``b_n`` from ``comp`` (degree d) to degree ``d - n``."""
    _check_rank1(hw)
    if comp.rank != 1:
        raise RankUnsupported("quantum Fock modes are implemented in rank 1 only")
    return state_matrix(lambda s: apply_b_state(n, hw, s), 1, comp.degree, comp.degree - n)
