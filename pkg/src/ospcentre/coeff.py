"""Exact scalars: rationals, univariate polynomials and rational functions.

Rationals are :class:`fractions.Fraction`.  Polynomials carry a variable tag
(``"ω"`` for the Brauer parameter, ``"K"`` for the central element) and are
stored as immutable tuples of coefficients, lowest degree first.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd, lcm
from typing import Iterable, Union

from .errors import DivisionByZero, InvalidArgument, PoleAtEvaluation

Rational = Fraction
OMEGA = "ω"
KVAR = "K"

Scalar = Union[int, Fraction]


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class VarPoly:
    """Univariate polynomial with rational coefficients."""

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = OMEGA):
        self.coeffs = _trim(Fraction(c) for c in coeffs)
        self.var = var
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar, var: str = OMEGA) -> "VarPoly":
        return cls((c,), var)

    @classmethod
    def x(cls, var: str = OMEGA) -> "VarPoly":
        return cls((0, 1), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _coerce(self, other) -> "VarPoly":
        if isinstance(other, VarPoly):
            if other.var != self.var and other.degree > 0 and self.degree > 0:
                raise InvalidArgument(f"mixed variables {self.var} and {other.var}")
            return other
        return VarPoly((other,), self.var)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return VarPoly(
            ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)),
            self.var,
        )

    __radd__ = __add__

    def __neg__(self):
        return VarPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, VarPoly):
            c = Fraction(other)
            return VarPoly((c * a for a in self.coeffs), self.var)
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return VarPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return VarPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = VarPoly((1,), self.var)
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, other: "VarPoly"):
        other = self._coerce(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        d = other.degree
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + d] / lead
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return VarPoly(q, self.var), VarPoly(rem[:d] if d else (), self.var)

    def monic(self) -> "VarPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lead())

    def gcd(self, other: "VarPoly") -> "VarPoly":
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, VarPoly):
            return self.coeffs == other.coeffs and (self.var == other.var or self.degree <= 0)
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"VarPoly({self})"

    def __str__(self):
        return render_poly(self)


def _int_terms(int_coeffs, var):
    parts = []
    for deg in range(len(int_coeffs) - 1, -1, -1):
        c = int_coeffs[deg]
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def _integerize(p: VarPoly):
    den = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    return [int(c * den) for c in p.coeffs], den


def render_poly(p: VarPoly) -> str:
    """Integer coefficients over a common positive denominator, e.g. ``(ω^2 + 3ω + 2)/12``."""
    ints, den = _integerize(p)
    body = _int_terms(ints, p.var)
    if den == 1:
        return body
    nterms = sum(1 for c in ints if c)
    if nterms > 1:
        return f"({body})/{den}"
    return f"{body}/{den}"


class RatFun:
    """Reduced quotient of polynomials in ω with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, VarPoly):
            num = VarPoly((num,))
        if den is None:
            den = VarPoly((1,))
        elif not isinstance(den, VarPoly):
            den = VarPoly((den,))
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def omega(cls) -> "RatFun":
        return cls(VarPoly.x(OMEGA), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFun(self.num + other.num, self.den, _reduced=True)
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_ratfun(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFun(VarPoly(()), _reduced=True)
            return RatFun(self.num * other, self.den, _reduced=True)
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFun(self.num * other.num, _reduced=True)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_ratfun(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFun(self.num ** e, self.den ** e, _reduced=True)

    def __call__(self, w0) -> Fraction:
        return ratfun_eval(self, w0)

    def __eq__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        return render_ratfun(self)


def _as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, VarPoly):
        return RatFun(x, _reduced=True)
    if isinstance(x, (int, Fraction)):
        return RatFun(VarPoly((x,)), _reduced=True)
    return NotImplemented


def _reduce(num: VarPoly, den: VarPoly):
    if num.is_zero():
        return VarPoly((), num.var), VarPoly((1,), den.var)
    if den.degree > 0:
        g = num.gcd(den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
    lead = den.lead()
    if lead != 1:
        num = num * (1 / lead)
        den = den * (1 / lead)
    return num, den


def ratfun_normalize(num: VarPoly, den: VarPoly) -> RatFun:
    return RatFun(num, den)


def ratfun_eval(f: RatFun, w0) -> Fraction:
    d = f.den(w0)
    if d == 0:
        raise PoleAtEvaluation(f"{f} has a pole at ω={w0}", point=w0)
    return f.num(w0) / d


def render_ratfun(f: RatFun) -> str:
    if f.den.degree == 0:
        return render_poly(f.num)
    num_ints, num_den = _integerize(f.num)
    den_ints, den_den = _integerize(f.den)
    # f = (num_ints/num_den) / (den_ints/den_den)
    scale = Fraction(den_den, num_den)
    num_ints = [c * scale.numerator for c in num_ints]
    den_ints = [c * scale.denominator for c in den_ints]
    g = 0
    for c in num_ints + den_ints:
        g = gcd(g, c)
    num_ints = [c // g for c in num_ints]
    den_ints = [c // g for c in den_ints]
    num_s = _int_terms(num_ints, OMEGA)
    den_s = _int_terms(den_ints, OMEGA)
    if sum(1 for c in num_ints if c) > 1:
        num_s = f"({num_s})"
    den_nonzero = [c for c in den_ints if c]
    if len(den_nonzero) > 1 or den_nonzero[0] != 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


def half_binomial(m: int, r: int) -> VarPoly:
    """``binom(ω/2 + m - 2, r)`` as a polynomial in ω."""
    if r < 0:
        raise InvalidArgument(f"negative r={r}")
    out = VarPoly((1,))
    for j in range(r):
        out = out * VarPoly((m - 2 - j, Fraction(1, 2)))
    return out * Fraction(1, factorial(r))


def binomial_at(x, k: int) -> Fraction:
    """Generalised binomial coefficient ``x(x-1)...(x-k+1)/k!`` for rational x."""
    if k < 0:
        return Fraction(0)
    out = Fraction(1)
    for j in range(k):
        out *= Fraction(x) - j
    return out / factorial(k)


def gamma(m: int) -> RatFun:
    """``(ω + m - 2)/(ω + 2m - 2)``."""
    return RatFun(VarPoly((m - 2, 1)), VarPoly((2 * m - 2, 1)))


def as_ratfun(x) -> RatFun:
    out = _as_ratfun(x)
    if out is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to RatFun")
    return out
