"""Univariate rational functions over Q.

Polynomials are dense tuples of :class:`fractions.Fraction`, lowest degree
first, with no trailing zeros (the zero polynomial is ``()``).  A
:class:`RatFunc` is kept reduced with a monic denominator, so equality is
structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from walg.errors import DivisionByZero, PoleError

Poly = tuple

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return _trim(out)


def psub(a: Poly, b: Poly) -> Poly:
    out = list(a) + [_ZERO] * (len(b) - len(a))
    for k, c in enumerate(b):
        out[k] -= c
    return _trim(out)


def pscale(a: Poly, s) -> Poly:
    if s == 0:
        return ()
    return tuple(c * s for c in a)


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(rem) <= db:
        return (), _trim(rem)
    quot = [_ZERO] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = c / lead
        quot[k - db] = f
        for j in range(db + 1):
            rem[k - db + j] -= f * b[j]
    return _trim(quot), _trim(rem[:db])


def pmonic(a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def peval(a: Poly, x):
    acc = _ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pdeg(a: Poly) -> int:
    return len(a) - 1


def _low_zeros(a: Poly) -> int:
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    return k


def _is_monomial(a: Poly) -> bool:
    # monic x^k
    return a[-1] == 1 and all(c == 0 for c in a[:-1])


def _format_poly(a: Poly, var: str) -> str:
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


Scalar = Union[int, Fraction]


class RatFunc:
    """An element of Q(t) for a single indeterminate t.

    The indeterminate's name (``var``) is cosmetic; it takes part in
    printing only, never in equality or arithmetic.

    >>> g = RatFunc.gen("g")
    >>> (g * g - 1) / (g - 1)
    RatFunc('g + 1')
    >>> (1 / g).evaluate(-2)
    Fraction(-1, 2)
    """

    __slots__ = ("num", "den", "var")

    def __init__(self, num: Sequence = (), den: Sequence = (1,), var: str = "t", *, _reduced: bool = False):
        if _reduced:
            self.num, self.den, self.var = num, den, var
            return
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            self.num, self.den, self.var = (), (_ONE,), var
            return
        if len(den) > 1:
            if _is_monomial(den):
                k = min(_low_zeros(num), len(den) - 1)
                if k:
                    num = num[k:]
                    den = den[k:]
            else:
                g = pgcd(num, den)
                if len(g) > 1:
                    num = pdivmod(num, g)[0]
                    den = pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.num, self.den, self.var = num, den, var

    # construction -------------------------------------------------------
    @classmethod
    def gen(cls, var: str = "t") -> "RatFunc":
        return cls((_ZERO, _ONE), (_ONE,), var, _reduced=True)

    @classmethod
    def const(cls, c: Scalar, var: str = "t") -> "RatFunc":
        c = Fraction(c)
        return cls((c,) if c else (), (_ONE,), var, _reduced=True)

    def _coerce(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, self.var)
        return None

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else _ZERO

    def __bool__(self) -> bool:
        return bool(self.num)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o if o.var == self.var else RatFunc(o.num, o.den, self.var, _reduced=True)
        if self.den == o.den:
            return RatFunc(padd(self.num, o.num), self.den, self.var)
        return RatFunc(
            padd(pmul(self.num, o.den), pmul(o.num, self.den)),
            pmul(self.den, o.den),
            self.var,
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(tuple(-c for c in self.num), self.den, self.var, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc((), (_ONE,), self.var, _reduced=True)
            return RatFunc(tuple(c * other for c in self.num), self.den, self.var, _reduced=True)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(pmul(self.num, o.num), pmul(self.den, o.den), self.var)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.den, self.num, self.var)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise DivisionByZero("division by zero rational function")
        if o.is_constant():
            c = o.num[0]
            return RatFunc(tuple(x / c for x in self.num), self.den, self.var, _reduced=True)
        return RatFunc(pmul(self.num, o.den), pmul(self.den, o.num), self.var)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.const(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    # evaluation ---------------------------------------------------------
    def evaluate(self, x) -> Fraction:
        d = peval(self.den, x)
        if d == 0:
            raise PoleError(f"{self} has a pole at {x}")
        return peval(self.num, x) / d

    __call__ = evaluate

    def degree_bound(self) -> int:
        return max(len(self.num), len(self.den)) - 1

    # printing -----------------------------------------------------------
    def __str__(self) -> str:
        n = _format_poly(self.num, self.var)
        if self.den == (_ONE,):
            return n
        d = _format_poly(self.den, self.var)
        if len(self.num) > 1 and any(c != 0 for c in self.num[:-1]):
            n = f"({n})"
        if sum(1 for c in self.den if c != 0) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self) -> str:
        return f"RatFunc('{self}')"


def is_field_elem(x) -> bool:
    return isinstance(x, (int, Fraction, RatFunc))


def exact_str(x) -> str:
    """Serialize a scalar exactly: rationals as ``p/q``, rational functions symbolically."""
    if isinstance(x, RatFunc):
        if x.is_constant():
            return exact_str(x.constant_value())
        return str(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
