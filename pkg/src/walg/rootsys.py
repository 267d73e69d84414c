"""Finite root systems, Weyl groups with the dot action, and Langlands duality.

Conventions
-----------
* Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>``.
* Weights are stored in fundamental-weight coordinates
  (``lam[i] = <lam, alpha_i^vee>``), coweights in fundamental-coweight
  coordinates (``mu[i] = <alpha_i, mu>``), roots in simple-root coordinates.
* The invariant form is normalized so that long roots have squared length 2;
  on the coweight side we use the same form transported to the Cartan
  subalgebra, so ``(alpha^vee | alpha^vee) = 4 / (alpha | alpha)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm

from walg.coeffs import SparseMatrix, inverse
from walg.errors import CapExceeded, DimensionMismatch, UnsupportedType

DEFAULT_WEYL_CAP = 384


@dataclass(frozen=True)
class Weight:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        _same_kind(self, other)
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_kind(self, other)
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def __rmul__(self, k):
        return type(self)(tuple(k * a for a in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)


@dataclass(frozen=True)
class Coweight(Weight):
    pass


def _same_kind(a, b):
    if type(a) is not type(b) or len(a.coords) != len(b.coords):
        raise DimensionMismatch(f"incompatible {type(a).__name__}{a.coords} and {type(b).__name__}{b.coords}")


@dataclass(frozen=True)
class WeylElement:
    reduced_word: tuple

    @property
    def length(self) -> int:
        return len(self.reduced_word)


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    if family in "ABCD":
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
        if family == "B" and rank >= 2:
            # alpha_{n} short
            a[rank - 1][rank - 2] = -2
        elif family == "C" and rank >= 2:
            # alpha_{n} long
            a[rank - 2][rank - 1] = -2
        elif family == "D":
            a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
            a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    elif family == "G":
        # alpha_1 short, alpha_2 long
        a[0][1], a[1][0] = -3, -1
    return tuple(tuple(r) for r in a)


_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "G": lambda n: n == 2,
}


def _parse_label(label: str) -> tuple[str, int]:
    label = label.strip().upper()
    try:
        family, rank = label[0], int(label[1:])
    except (IndexError, ValueError):
        raise UnsupportedType(f"cannot parse algebra label {label!r}") from None
    return family, rank


@dataclass(frozen=True)
class SimpleLieData:
    """Root datum of a simple Lie algebra.

    ``dual_of_label`` records the type label produced by Langlands duality;
    the Cartan matrix alone determines everything else.
    """

    type_label: str
    cartan: tuple
    symmetrizers: tuple = field(compare=False)
    positive_roots: tuple = field(compare=False)
    lacing_m: int = field(compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def family(self) -> str:
        return self.type_label[0]

    @property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    @property
    def rho_check(self) -> Coweight:
        return Coweight((1,) * self.rank)

    @cached_property
    def root_form(self) -> tuple:
        """Gram matrix ``(alpha_i | alpha_j)`` of the simple roots."""
        d, a = self.symmetrizers, self.cartan
        return tuple(tuple(d[i] * a[i][j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def coroot_form(self) -> tuple:
        """Gram matrix ``(alpha_i^vee | alpha_j^vee)`` of the simple coroots."""
        b, d = self.root_form, self.symmetrizers
        return tuple(
            tuple(b[i][j] / (d[i] * d[j]) for j in range(self.rank)) for i in range(self.rank)
        )

    @cached_property
    def _cartan_inverse(self) -> tuple:
        inv = inverse(SparseMatrix.from_dense(self.cartan)).to_dense(Fraction(0))
        return tuple(tuple(Fraction(x) for x in r) for r in inv)

    def simple_root(self, i: int) -> Weight:
        return Weight(tuple(self.cartan[j][i] for j in range(self.rank)))

    def simple_coroot(self, i: int) -> Coweight:
        return Coweight(tuple(self.cartan[i][j] for j in range(self.rank)))

    def root_as_weight(self, beta) -> Weight:
        """Convert simple-root coordinates to a weight."""
        return Weight(tuple(sum(beta[i] * self.cartan[j][i] for i in range(self.rank)) for j in range(self.rank)))

    def weight_root_coords(self, lam: Weight) -> tuple:
        """Simple-root coordinates of ``lam`` (rational in general)."""
        ainv = self._cartan_inverse
        return tuple(sum(ainv[i][j] * lam.coords[j] for j in range(self.rank)) for i in range(self.rank))

    def coweight_coroot_coords(self, mu: Coweight) -> tuple:
        ainv = self._cartan_inverse
        # mu_i = sum_j c_j a_ji, so c = A^{-T} mu
        return tuple(sum(ainv[j][i] * mu.coords[j] for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def _pair_form(self) -> tuple:
        # <x, y> = x^T A^{-T} y in fundamental coordinates
        ainv, n = self._cartan_inverse, self.rank
        return _integer_form([[ainv[i][j] for i in range(n)] for j in range(n)])

    @cached_property
    def _weight_form(self) -> tuple:
        ainv, b, n = self._cartan_inverse, self.root_form, self.rank
        return _integer_form(
            [[sum(ainv[i][j] * b[i][k] * ainv[k][l] for i in range(n) for k in range(n)) for l in range(n)] for j in range(n)]
        )

    @cached_property
    def _coweight_form(self) -> tuple:
        ainv, b, n = self._cartan_inverse, self.coroot_form, self.rank
        return _integer_form(
            [[sum(ainv[j][i] * b[i][k] * ainv[l][k] for i in range(n) for k in range(n)) for l in range(n)] for j in range(n)]
        )

    @cached_property
    def weyl_order(self) -> int:
        return len(_weyl_closure(self.cartan))

    def __repr__(self) -> str:
        return f"SimpleLieData({self.type_label})"


def _positive_roots(cartan) -> tuple:
    n = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: p down-steps, q = p - <beta, alpha_i^vee> up-steps
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(roots, key=lambda b: (sum(b), b)))


def _symmetrizers(cartan) -> tuple:
    # d_i a_ij = d_j a_ji on each connected edge, then rescale so max d_i = 1
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _lacing(cartan) -> int:
    n = len(cartan)
    m = 1
    for i in range(n):
        for j in range(n):
            if i != j and cartan[i][j] != 0:
                m = max(m, cartan[i][j] * cartan[j][i])
    return m


def from_cartan(type_label: str, cartan) -> SimpleLieData:
    cartan = tuple(tuple(int(x) for x in r) for r in cartan)
    return SimpleLieData(
        type_label=type_label,
        cartan=cartan,
        symmetrizers=_symmetrizers(cartan),
        positive_roots=_positive_roots(cartan),
        lacing_m=_lacing(cartan),
    )


@lru_cache(maxsize=None)
def build_algebra(type_label: str, rank: int | None = None) -> SimpleLieData:
    """Root datum for ``A_n`` (n>=1), ``B_n``/``C_n`` (n>=2), ``D_n`` (n>=4), ``G_2``.

    Accepts either ``build_algebra("B", 2)`` or ``build_algebra("B2")``.
    E and F types are not implemented; adding them only needs their Cartan
    matrices in ``_cartan_matrix`` (F4 already exceeds the default Weyl cap).
    """
    if rank is None:
        family, rank = _parse_label(type_label)
    else:
        family = type_label.strip().upper()
    if family not in _VALID or not _VALID[family](rank):
        raise UnsupportedType(f"unsupported algebra {family}{rank}")
    return from_cartan(f"{family}{rank}", _cartan_matrix(family, rank))


def langlands_dual(g: SimpleLieData) -> SimpleLieData:
    """Transpose the Cartan matrix; B and C are exchanged, other labels kept."""
    label = g.type_label
    swap = {"B": "C", "C": "B"}
    if label[0] in swap and g.rank >= 2:
        label = swap[label[0]] + label[1:]
    cartan_t = tuple(tuple(g.cartan[j][i] for j in range(g.rank)) for i in range(g.rank))
    return from_cartan(label, cartan_t)


# --- Weyl group -------------------------------------------------------------


def reflect(i: int, lam: tuple, cartan) -> tuple:
    """Simple reflection ``s_i`` on fundamental-weight coordinates."""
    li = lam[i]
    if li == 0:
        return tuple(lam)
    return tuple(lam[j] - li * cartan[j][i] for j in range(len(lam)))


@lru_cache(maxsize=None)
def _weyl_closure(cartan, cap: int | None = None) -> tuple:
    """Breadth-first enumeration; returns ``(word, w(rho))`` pairs by length."""
    n = len(cartan)
    rho = (1,) * n
    seen = {rho: ()}
    out = [((), rho)]
    layer = out[:]
    while layer:
        nxt = []
        for word, image in layer:
            for i in range(n):
                img = reflect(i, image, cartan)
                if img not in seen:
                    w = (i,) + word
                    seen[img] = w
                    nxt.append((w, img))
                    if cap is not None and len(seen) > cap:
                        raise CapExceeded(f"Weyl group order exceeds cap {cap}")
        out.extend(nxt)
        layer = nxt
    return tuple(out)


def weyl_elements(g: SimpleLieData, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    """All Weyl group elements, enumerated by length (shortlex within a length)."""
    return [WeylElement(w) for w, _ in _weyl_closure(g.cartan, cap)]


def act(w: WeylElement, lam: Weight, g: SimpleLieData) -> Weight:
    coords = tuple(lam.coords)
    if len(coords) != g.rank:
        raise DimensionMismatch("weight rank mismatch")
    for i in reversed(w.reduced_word):
        coords = reflect(i, coords, g.cartan)
    return type(lam)(coords)


def dot_action(w: WeylElement, lam: Weight, g: SimpleLieData) -> Weight:
    """``w . lam = w(lam + rho) - rho``."""
    return act(w, lam + g.rho, g) - g.rho


# --- pairings ---------------------------------------------------------------


def _integer_form(mat) -> tuple:
    """``(integer matrix, denominator)`` with the same value as a rational matrix."""
    den = 1
    for row in mat:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    return tuple(tuple(int(x * den) for x in row) for row in mat), den


def _evaluate_form(form: tuple, x: tuple, y: tuple) -> Fraction:
    mat, den = form
    total = 0
    for xi, row in zip(x, mat):
        if xi:
            total += xi * sum(m * yj for m, yj in zip(row, y))
    return Fraction(total, den)


def pair(x: Weight, y: Coweight, g: SimpleLieData) -> Fraction:
    """Canonical pairing ``<x, y>`` of a weight with a coweight."""
    if isinstance(x, Coweight) and isinstance(y, Weight) and not isinstance(y, Coweight):
        x, y = y, x
    if isinstance(x, Coweight) or not isinstance(y, Coweight):
        raise DimensionMismatch("pair expects a weight and a coweight")
    if len(x) != g.rank or len(y) != g.rank:
        raise DimensionMismatch("rank mismatch in pairing")
    return _evaluate_form(g._pair_form, x.coords, y.coords)


def inner(x: Weight, y: Weight, g: SimpleLieData) -> Fraction:
    """Normalized invariant form on weights, or on coweights."""
    if type(x) is not type(y):
        raise DimensionMismatch("inner expects two weights or two coweights")
    if len(x) != g.rank or len(y) != g.rank:
        raise DimensionMismatch("rank mismatch in inner product")
    form = g._coweight_form if isinstance(x, Coweight) else g._weight_form
    return _evaluate_form(form, x.coords, y.coords)


def weyl_dimension(g: SimpleLieData, lam: Weight) -> int:
    """Dimension of the irreducible module with highest weight ``lam``."""
    num = Fraction(1)
    lr = lam + g.rho
    for beta in g.positive_roots:
        cor = _coroot_coweight(g, beta)
        num *= pair(lr, cor, g) / pair(g.rho, cor, g)
    assert num.denominator == 1
    return int(num)


def _coroot_coweight(g: SimpleLieData, beta) -> Coweight:
    # beta^vee = sum_i beta_i (alpha_i|alpha_i)/(beta|beta) alpha_i^vee
    bw = g.root_as_weight(beta)
    norm = inner(bw, bw, g)
    coeffs = [Fraction(beta[i]) * 2 * g.symmetrizers[i] / norm for i in range(g.rank)]
    out = [Fraction(0)] * g.rank
    for i, c in enumerate(coeffs):
        for j in range(g.rank):
            out[j] += c * g.cartan[i][j]
    return Coweight(tuple(out))
