"""Characters of the twisted modules T_{lambda, mu}.

Two independent routes produce the same normalized q-series:

* :func:`char_T` -- the alternating Weyl sum of q-powers
  ``<lam+rho - w(lam+rho), mu+rho_check>`` times ``prod (1-q^n)^{-r}``;
* :func:`char_T_resolution` -- the Fock resolution, where each Weyl term
  contributes the L0 lowest weight ``Delta^kappa_{w.lam, mu}`` of a Fock
  module and exponents are read off from differences of those weights.

Both series start at ``q^0``; absolute L0 offsets are carried separately as
:class:`ExponentExpr` values ``a/kappa + b*kappa + c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from walg.coeffs import RatFunc
from walg.errors import DimensionMismatch, NonDominant
from walg.qseries import QSeries, euler_product
from walg.rootsys import (
    Coweight,
    SimpleLieData,
    Weight,
    act,
    dot_action,
    inner,
    langlands_dual,
    pair,
    weyl_elements,
)


@dataclass(frozen=True)
class ExponentExpr:
    """Exact expression ``inv_kappa/kappa + kappa_coef*kappa + const``."""

    inv_kappa: Fraction = Fraction(0)
    kappa: Fraction = Fraction(0)
    const: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("inv_kappa", "kappa", "const"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: "ExponentExpr") -> "ExponentExpr":
        if isinstance(other, (int, Fraction)):
            other = ExponentExpr(const=other)
        return ExponentExpr(self.inv_kappa + other.inv_kappa, self.kappa + other.kappa, self.const + other.const)

    __radd__ = __add__

    def __neg__(self) -> "ExponentExpr":
        return ExponentExpr(-self.inv_kappa, -self.kappa, -self.const)

    def __sub__(self, other) -> "ExponentExpr":
        if isinstance(other, (int, Fraction)):
            other = ExponentExpr(const=other)
        return self + (-other)

    def is_constant(self) -> bool:
        return self.inv_kappa == 0 and self.kappa == 0

    def evaluate(self, kappa) -> Fraction:
        """Specialize at a nonzero rational level (used for reporting only)."""
        kappa = Fraction(kappa)
        return self.inv_kappa / kappa + self.kappa * kappa + self.const

    def as_ratfunc(self, var: str = "κ") -> RatFunc:
        k = RatFunc.gen(var)
        return self.inv_kappa / k + self.kappa * k + self.const

    def dualize(self, lacing: int) -> "ExponentExpr":
        """Rewrite in the dual level ``kappa_check = 1/(m*kappa)``."""
        return ExponentExpr(self.kappa / lacing, self.inv_kappa * lacing, self.const)

    def __str__(self) -> str:
        return f"{self.inv_kappa}/κ + {self.kappa}*κ + {self.const}"


@dataclass(frozen=True)
class CharTable:
    """Normalized character: ``ch = q^(prefactor - shift) * series``."""

    algebra: str
    lam: tuple
    mu_check: tuple
    order: int
    series: QSeries
    prefactor: Union[int, ExponentExpr] = 0
    shift: Fraction = Fraction(0)


def _weight(g: SimpleLieData, lam) -> Weight:
    w = lam if isinstance(lam, Weight) and not isinstance(lam, Coweight) else Weight(tuple(lam))
    if len(w) != g.rank:
        raise DimensionMismatch(f"{g.type_label} needs {g.rank} weight coordinates, got {len(w)}")
    return w


def _coweight(g: SimpleLieData, mu) -> Coweight:
    c = mu if isinstance(mu, Coweight) else Coweight(tuple(mu))
    if len(c) != g.rank:
        raise DimensionMismatch(f"{g.type_label} needs {g.rank} coweight coordinates, got {len(c)}")
    return c


def _dominant_pair(g: SimpleLieData, lam, mu_check) -> tuple[Weight, Coweight]:
    lam, mu = _weight(g, lam), _coweight(g, mu_check)
    if not all(isinstance(x, int) for x in lam.coords + mu.coords):
        raise NonDominant("weights must be integral")
    if not lam.is_dominant():
        raise NonDominant(f"lambda={lam.coords} is not dominant")
    if not mu.is_dominant():
        raise NonDominant(f"mu_check={mu.coords} is not dominant")
    return lam, mu


def _as_int(x: Fraction, what: str) -> int:
    if Fraction(x).denominator != 1:
        raise ArithmeticError(f"{what} = {x} is not an integer")
    return int(x)


def weyl_exponents(g: SimpleLieData, lam, mu_check) -> list[tuple[int, int]]:
    """``(exponent, sign)`` of each Weyl term, in enumeration order."""
    lam, mu = _dominant_pair(g, lam, mu_check)
    lr = lam + g.rho
    mr = mu + g.rho_check
    top = pair(lr, mr, g)
    out = []
    for w in weyl_elements(g):
        e = top - pair(act(w, lr, g), mr, g)
        out.append((_as_int(e, "Weyl exponent"), -1 if w.length % 2 else 1))
    return out


def char_mu_V(g: SimpleLieData, lam, mu_check, order: int) -> QSeries:
    """Graded character of V_lambda with ``deg f_alpha = <alpha, mu+rho_check>``."""
    lam, mu = _dominant_pair(g, lam, mu_check)
    mr = mu + g.rho_check
    numer = QSeries.from_exponents(weyl_exponents(g, lam, mu), order)
    denom = QSeries.one(order)
    for beta in g.positive_roots:
        h = _as_int(pair(g.root_as_weight(beta), mr, g), "root degree")
        denom = denom * (QSeries.one(order) - QSeries.monomial(h, order))
    return numer * denom.inv()


def char_T(g: SimpleLieData, lam, mu_check, order: int) -> CharTable:
    """Character of T_{lambda, mu} normalized to start at q^0."""
    lam, mu = _dominant_pair(g, lam, mu_check)
    weyl_sum = QSeries.from_exponents(weyl_exponents(g, lam, mu), order)
    series = weyl_sum * euler_product(g.rank, order)
    return CharTable(g.type_label, lam.coords, mu.coords, order, series)


def delta_kappa(g: SimpleLieData, nu: Weight, mu_check: Coweight) -> ExponentExpr:
    """L0 lowest weight of the Fock module pi_{nu - kappa*mu}.

    ``(nu|nu+2rho)/2kappa + kappa(mu|mu+2rho_check)/2 - <nu+rho, mu+rho_check> + <rho, rho_check>``
    """
    nu, mu = _weight(g, nu), _coweight(g, mu_check)
    return ExponentExpr(
        inv_kappa=inner(nu, nu + 2 * g.rho, g) / 2,
        kappa=inner(mu, mu + 2 * g.rho_check, g) / 2,
        const=-pair(nu + g.rho, mu + g.rho_check, g) + pair(g.rho, g.rho_check, g),
    )


def delta_tilde(g: SimpleLieData, lam, mu_check) -> ExponentExpr:
    lam, mu = _weight(g, lam), _coweight(g, mu_check)
    return ExponentExpr(
        inv_kappa=inner(lam, lam + 2 * g.rho, g) / 2,
        kappa=inner(mu, mu + 2 * g.rho_check, g) / 2,
        const=pair(g.rho, g.rho_check, g),
    )


def char_T_resolution(g: SimpleLieData, lam, mu_check, order: int) -> CharTable:
    """Character from the Fock resolution: ``sum_w (-1)^l(w) ch(pi_{w.lam - kappa mu})``.

    Each term's exponent is ``Delta_{w.lam} - Delta_{lam}``, which must be a
    kappa-independent non-negative integer.
    """
    lam, mu = _dominant_pair(g, lam, mu_check)
    base = delta_kappa(g, lam, mu)
    terms = []
    for w in weyl_elements(g):
        diff = delta_kappa(g, dot_action(w, lam, g), mu) - base
        if not diff.is_constant():
            raise ArithmeticError(f"level-dependent exponent shift {diff} for w={w.reduced_word}")
        e = _as_int(diff.const, "resolution exponent")
        if e < 0:
            raise ArithmeticError(f"negative exponent {e} for w={w.reduced_word}")
        terms.append((e, -1 if w.length % 2 else 1))
    series = QSeries.from_exponents(terms, order) * euler_product(g.rank, order)
    shift = pair(lam + g.rho, mu + g.rho_check, g)
    return CharTable(g.type_label, lam.coords, mu.coords, order, series, delta_tilde(g, lam, mu), shift)


def prefactor_shift(g: SimpleLieData, lam, mu_check) -> ExponentExpr:
    """``Delta~_{lam,mu} - Delta_{lam,mu}`` as an exact expression in kappa."""
    lam, mu = _dominant_pair(g, lam, mu_check)
    return delta_tilde(g, lam, mu) - delta_kappa(g, lam, mu)


def prefactor_shift_check(g: SimpleLieData, lam, mu_check) -> bool:
    """Check ``Delta~ - Delta = <lam+rho, mu+rho_check>`` identically in kappa."""
    lam, mu = _dominant_pair(g, lam, mu_check)
    expected = pair(lam + g.rho, mu + g.rho_check, g)
    diff = prefactor_shift(g, lam, mu)
    as_function = delta_tilde(g, lam, mu).as_ratfunc() - delta_kappa(g, lam, mu).as_ratfunc()
    return diff.is_constant() and diff.const == expected and as_function == expected


def duality_check(g: SimpleLieData, lam, mu_check, order: int) -> bool:
    """``char T_{lam,mu}(g) == char T_{mu,lam}(Langlands dual of g)`` coefficientwise."""
    lhs = char_T(g, lam, mu_check, order)
    rhs = char_T(langlands_dual(g), tuple(_coweight(g, mu_check).coords), tuple(_weight(g, lam).coords), order)
    return lhs.series == rhs.series


def dominant_grid(rank: int, bound: int) -> list[tuple[int, ...]]:
    """All coordinate tuples with entries in ``0..bound``, lexicographic."""
    from itertools import product

    return [tuple(p) for p in product(range(bound + 1), repeat=rank)]

