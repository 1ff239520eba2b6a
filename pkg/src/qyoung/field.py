"""Exact arithmetic in the rational function field Q(q, K1..K6, P3).

Every scalar in the package is a :class:`RationalFunction`.  Numerator and
denominator are integer polynomials kept in lowest terms, with the
denominator's leading coefficient positive under graded-lex order
(q > K1 > ... > K6 > P3), so structural equality is field equality.

Polynomial multiplication and gcd are delegated to FLINT's ``fmpz_mpoly``.
The roots kappa and alpha of the two quadratics used for the H(3,q)
representatives live in a :class:`QuadraticExtension`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

import flint

VARIABLES = ("q", "K1", "K2", "K3", "K4", "K5", "K6", "P3")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_CTX = flint.fmpz_mpoly_ctx.get(VARIABLES, "deglex")
_ONE = _CTX.constant(1)
_ZERO = _CTX.constant(0)


class FieldError(ArithmeticError):
    """Base class for coefficient-field errors."""


class MalformedInputError(FieldError, ValueError):
    pass


class PoleError(FieldError, ZeroDivisionError):
    """A denominator vanished under a substitution."""

    def __init__(self, message, factors=()):
        super().__init__(message)
        self.factors = tuple(factors)


class NotInvertibleError(FieldError, ZeroDivisionError):
    pass


Scalar = Union[int, Fraction, "RationalFunction"]


def _fmpz(n: int):
    return _CTX.constant(int(n))


def _normalized(num, den):
    if den.is_zero():
        raise MalformedInputError("zero denominator")
    if num.is_zero():
        return _ZERO, _ONE
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
    return num, den


class MultiPoly:
    """Polynomial with rational coefficients over :data:`VARIABLES`.

    Stored as an integer polynomial together with a positive integer
    denominator, which gives a unique representation once the content is
    divided out.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, value=0):
        if isinstance(value, MultiPoly):
            self._num, self._den = value._num, value._den
            return
        if isinstance(value, RationalFunction):
            if not value._den.is_constant():
                raise MalformedInputError(f"not a polynomial: {value}")
            num, den = value._num, int(value._den.leading_coefficient())
        elif isinstance(value, Rational):
            value = Fraction(value)
            num, den = _fmpz(value.numerator), value.denominator
        elif isinstance(value, flint.fmpz_mpoly):
            num, den = value, 1
        else:
            raise TypeError(f"cannot build MultiPoly from {type(value).__name__}")
        self._num, self._den = num, den

    @classmethod
    def from_terms(cls, terms: Mapping[tuple, Rational]) -> "MultiPoly":
        """Build from ``{exponent_vector: coefficient}``; zero entries are dropped."""
        fracs = {tuple(e): Fraction(c) for e, c in terms.items() if c != 0}
        den = 1
        for c in fracs.values():
            den = den * c.denominator // _gcd(den, c.denominator)
        poly = _CTX.from_dict({e: int(c * den) for e, c in fracs.items()}) if fracs else _ZERO
        out = cls.__new__(cls)
        out._num, out._den = poly, den
        return out

    def terms(self):
        """(exponent vector, Fraction) pairs in descending graded-lex order."""
        return [(tuple(e), Fraction(int(c), self._den)) for e, c in self._num.terms()]

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def to_rational_function(self) -> "RationalFunction":
        return RationalFunction._make(self._num, _fmpz(self._den))

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly(other)
            except (TypeError, MalformedInputError):
                return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self):
        return hash((str(self._num), self._den))

    def __add__(self, other):
        return MultiPoly(self.to_rational_function() + _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return MultiPoly(self.to_rational_function() - _coerce(other))

    def __rsub__(self, other):
        return MultiPoly(_coerce(other) - self.to_rational_function())

    def __mul__(self, other):
        return MultiPoly(self.to_rational_function() * _coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        out = MultiPoly.__new__(MultiPoly)
        out._num, out._den = -self._num, self._den
        return out

    def __str__(self):
        return format_poly(self.terms())

    def __repr__(self):
        return f"MultiPoly('{self}')"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class RationalFunction:
    """Element of Q(q, K1, ..., K6, P3) in canonical reduced form."""

    __slots__ = ("_num", "_den")

    def __init__(self, numerator=0, denominator=1):
        num, dnum = _as_pair(numerator)
        den, dden = _as_pair(denominator)
        self._num, self._den = _normalized(num * dden, den * dnum)

    @classmethod
    def _make(cls, num, den, normalize=True):
        out = cls.__new__(cls)
        if normalize:
            num, den = _normalized(num, den)
        out._num, out._den = num, den
        return out

    @classmethod
    def var(cls, name: str) -> "RationalFunction":
        if name not in _INDEX:
            raise MalformedInputError(f"unknown variable {name!r}")
        return cls._make(_CTX.gens()[_INDEX[name]], _ONE, normalize=False)

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        from .parser import parse_scalar

        return parse_scalar(text)

    # -- structure -----------------------------------------------------

    @property
    def numerator(self) -> MultiPoly:
        return MultiPoly(self._num)

    @property
    def denominator(self) -> MultiPoly:
        return MultiPoly(self._den)

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        return self._num.is_constant() and self._den.is_constant()

    def is_polynomial(self) -> bool:
        return self._den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise MalformedInputError(f"not a constant: {self}")
        return Fraction(int(self._num.leading_coefficient()) if not self._num.is_zero() else 0,
                        int(self._den.leading_coefficient()))

    def variables(self) -> frozenset:
        degs = [max(a, b) for a, b in zip(self._num.degrees(), self._den.degrees())]
        return frozenset(name for name, d in zip(VARIABLES, degs) if d > 0)

    def degree(self, name: str) -> int:
        """Degree of the numerator in ``name``."""
        return self._num.degrees()[_INDEX[name]]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self._den == other._den:
            return RationalFunction._make(self._num + other._num, self._den)
        if other._den.is_one():
            return RationalFunction._make(self._num + other._num * self._den, self._den, False)
        if self._den.is_one():
            return RationalFunction._make(self._num * other._den + other._num, other._den, False)
        g = self._den.gcd(other._den)
        a, b = self._den / g, other._den / g
        return RationalFunction._make(self._num * b + other._num * a, a * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self._num, self._den, False)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        if self._num.is_zero() or other._num.is_zero():
            return ZERO
        g1 = self._num.gcd(other._den)
        g2 = other._num.gcd(self._den)
        num = (self._num / g1) * (other._num / g2)
        den = (self._den / g2) * (other._den / g1)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RationalFunction._make(num, den, False)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self._num.is_zero():
            raise NotInvertibleError("division by zero rational function")
        num, den = self._den, self._num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RationalFunction._make(num, den, False)

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._make(self._num ** k, self._den ** k, False)

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((str(self._num), str(self._den)))

    def __bool__(self):
        return not self._num.is_zero()

    # -- substitution --------------------------------------------------

    def substitute(self, bindings: Mapping[str, Scalar]) -> "RationalFunction":
        """Replace variables by rationals or rational functions.

        Raises :class:`PoleError` if the (reduced) denominator vanishes.
        """
        if not bindings:
            return self
        for name in bindings:
            if name not in _INDEX:
                raise MalformedInputError(f"unknown variable {name!r}")
        num_n, num_d = _eval_poly(self._num, bindings)
        den_n, den_d = _eval_poly(self._den, bindings)
        if den_n.is_zero():
            raise PoleError(
                f"denominator {format_fmpz(self._den)} vanishes at {_fmt_bindings(bindings)}",
                _vanishing_factors(self._den, bindings),
            )
        return RationalFunction._make(num_n * den_d, num_d * den_n)

    def evaluate(self, bindings: Mapping[str, Rational]) -> Fraction:
        return self.substitute(bindings).to_fraction()

    # -- text ----------------------------------------------------------

    def __str__(self):
        return format_rational_function(self)

    def __repr__(self):
        return f"RationalFunction('{self}')"


def _as_pair(value):
    """Return (numerator, denominator) fmpz_mpoly for a scalar-ish value."""
    if isinstance(value, RationalFunction):
        return value._num, value._den
    if isinstance(value, MultiPoly):
        return value._num, _fmpz(value._den)
    if isinstance(value, flint.fmpz_mpoly):
        return value, _ONE
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return _fmpz(value), _ONE
    if isinstance(value, Rational):
        value = Fraction(value)
        return _fmpz(value.numerator), _fmpz(value.denominator)
    if isinstance(value, str):
        rf = RationalFunction.parse(value)
        return rf._num, rf._den
    raise TypeError(f"cannot convert {type(value).__name__} to RationalFunction")


def _coerce(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, MultiPoly):
        return value.to_rational_function()
    if isinstance(value, int) and not isinstance(value, bool):
        return RationalFunction._make(_fmpz(value), _ONE, False)
    if isinstance(value, Rational):
        value = Fraction(value)
        return RationalFunction._make(_fmpz(value.numerator), _fmpz(value.denominator), False)
    raise TypeError(f"cannot convert {type(value).__name__} to RationalFunction")


def _coerce_or_none(value):
    try:
        return _coerce(value)
    except TypeError:
        return None


def as_scalar(value) -> RationalFunction:
    """Coerce ints, Fractions and polynomials into the field."""
    return _coerce(value)


ZERO = RationalFunction._make(_ZERO, _ONE, False)
ONE = RationalFunction._make(_ONE, _ONE, False)


def symbols(names: str):
    """``q, K4 = symbols("q K4")``"""
    out = [RationalFunction.var(n) for n in names.replace(",", " ").split()]
    return out[0] if len(out) == 1 else out


def normalize(f: RationalFunction) -> RationalFunction:
    """Canonical representative; arithmetic already keeps values reduced."""
    return RationalFunction._make(f._num, f._den)


def substitute(f: RationalFunction, bindings: Mapping[str, Scalar]) -> RationalFunction:
    return _coerce(f).substitute(bindings)


# -- polynomial evaluation -------------------------------------------------


def _eval_poly(poly, bindings):
    """Evaluate an fmpz_mpoly under bindings; returns (num, den) fmpz_mpoly."""
    numeric = {}
    symbolic = {}
    for name, value in bindings.items():
        if isinstance(value, RationalFunction):
            if value.is_constant():
                numeric[name] = value.to_fraction()
            else:
                symbolic[name] = value
        else:
            numeric[name] = Fraction(value)
    num, den = poly, _ONE
    integral = {k: int(v) for k, v in numeric.items() if v.denominator == 1}
    if integral:
        num = num.subs(integral)
    fractional = {k: v for k, v in numeric.items() if v.denominator != 1}
    if fractional or symbolic:
        values = {k: RationalFunction(v) for k, v in fractional.items()}
        values.update(symbolic)
        rf = _eval_terms(num, values)
        num, den = rf._num, rf._den
    return num, den


def _eval_terms(poly, values: Mapping[str, RationalFunction]) -> RationalFunction:
    idx = [(_INDEX[k], v) for k, v in values.items()]
    keep = [i for i in range(len(VARIABLES)) if i not in dict(idx)]
    powers: dict = {}
    total = ZERO
    for exps, coeff in poly.terms():
        mono = [0] * len(VARIABLES)
        for i in keep:
            mono[i] = exps[i]
        term = RationalFunction._make(_CTX.from_dict({tuple(mono): int(coeff)}), _ONE, False)
        for i, value in idx:
            e = int(exps[i])
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = value ** e
                term = term * powers[key]
        total = total + term
    return total


def _vanishing_factors(den, bindings):
    out = []
    _, factors = den.factor()
    for factor, _mult in factors:
        n, _ = _eval_poly(factor, bindings)
        if n.is_zero():
            out.append(format_fmpz(factor))
    return out


def _fmt_bindings(bindings):
    return "{" + ", ".join(f"{k}:={v}" for k, v in sorted(bindings.items())) + "}"


# -- text form ---------------------------------------------------------------


def _format_monomial(exps) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(terms) -> str:
    """Format (exponents, Fraction) pairs as ``2*q^2*K4 - 1/2*K6 + 3``."""
    if not terms:
        return "0"
    out = []
    for k, (exps, c) in enumerate(terms):
        mono = _format_monomial(exps)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_fmpz(poly) -> str:
    return format_poly([(tuple(e), Fraction(int(c))) for e, c in poly.terms()])


def _single_power(poly) -> bool:
    """True if ``poly`` prints as a bare variable power like ``q`` or ``q^2``."""
    terms = list(poly.terms())
    if len(terms) != 1:
        return False
    exps, c = terms[0]
    return int(c) == 1 and sum(1 for e in exps if e) == 1


def format_rational_function(f: RationalFunction) -> str:
    num = format_fmpz(f._num)
    if f._den.is_one():
        return num
    if len(f._num) > 1:
        num = f"({num})"
    den = format_fmpz(f._den)
    if not (f._den.is_constant() or _single_power(f._den)):
        den = f"({den})"
    return f"{num}/{den}"


# -- quadratic extension -----------------------------------------------------


class QuadraticExtension:
    """F(z) with c2*z^2 + c1*z + c0 = 0, c2 != 0.

    Equality tests treat {1, z} as a basis, which assumes the quadratic is
    irreducible over the ground field; callers that specialise parameters
    should check :meth:`discriminant` is not a square.
    """

    def __init__(self, c2, c1, c0, name: str = "z"):
        self.c2, self.c1, self.c0 = _coerce(c2), _coerce(c1), _coerce(c0)
        if self.c2.is_zero():
            raise MalformedInputError("leading coefficient of the minimal relation is zero")
        self.name = name
        self._s = self.c1 / self.c2
        self._t = self.c0 / self.c2

    @property
    def root(self) -> "QuadExtElement":
        return QuadExtElement(self, ZERO, ONE)

    def element(self, a, b=0) -> "QuadExtElement":
        return QuadExtElement(self, _coerce(a), _coerce(b))

    def discriminant(self) -> RationalFunction:
        return self.c1 * self.c1 - 4 * self.c2 * self.c0

    def reduce(self, coeffs: Iterable) -> "QuadExtElement":
        """Reduce sum(coeffs[k] * z**k) to a + b*z."""
        a, b = ZERO, ZERO
        power = (ONE, ZERO)  # z^k as a + b z
        for k, c in enumerate(coeffs):
            c = _coerce(c)
            if k:
                pa, pb = power
                # z * (pa + pb z) = pa z + pb z^2 = -pb t + (pa - pb s) z
                power = (-pb * self._t, pa - pb * self._s)
            a = a + c * power[0]
            b = b + c * power[1]
        return QuadExtElement(self, a, b)

    def substitute(self, bindings) -> "QuadraticExtension":
        return QuadraticExtension(self.c2.substitute(bindings), self.c1.substitute(bindings),
                                  self.c0.substitute(bindings), self.name)

    def __eq__(self, other):
        return (isinstance(other, QuadraticExtension)
                and self._s == other._s and self._t == other._t)

    def __hash__(self):
        return hash((self._s, self._t))

    def __repr__(self):
        return f"QuadraticExtension({self.c2}, {self.c1}, {self.c0}, name={self.name!r})"


class QuadExtElement:
    """a + b*z in a :class:`QuadraticExtension`."""

    __slots__ = ("ext", "a", "b")

    def __init__(self, ext: QuadraticExtension, a: RationalFunction, b: RationalFunction):
        self.ext, self.a, self.b = ext, a, b

    def _lift(self, other):
        if isinstance(other, QuadExtElement):
            if other.ext is not self.ext and other.ext != self.ext:
                raise MalformedInputError("mixing different quadratic extensions")
            return other
        c = _coerce_or_none(other)
        if c is None:
            return None
        return QuadExtElement(self.ext, c, ZERO)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return QuadExtElement(self.ext, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(self.ext, -self.a, -self.b)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return QuadExtElement(self.ext, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        s, t = self.ext._s, self.ext._t
        bd = self.b * other.b
        a = self.a * other.a - bd * t
        b = self.a * other.b + self.b * other.a - bd * s
        return QuadExtElement(self.ext, a, b)

    __rmul__ = __mul__

    def norm(self) -> RationalFunction:
        s, t = self.ext._s, self.ext._t
        return self.a * self.a - self.a * self.b * s + self.b * self.b * t

    def inverse(self) -> "QuadExtElement":
        n = self.norm()
        if n.is_zero():
            raise NotInvertibleError(f"norm of {self} is zero")
        s = self.ext._s
        return QuadExtElement(self.ext, (self.a - self.b * s) / n, -self.b / n)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        out = QuadExtElement(self.ext, ONE, ZERO)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def substitute(self, bindings) -> "QuadExtElement":
        ext = self.ext.substitute(bindings)
        return QuadExtElement(ext, self.a.substitute(bindings), self.b.substitute(bindings))

    def __str__(self):
        if self.b.is_zero():
            return str(self.a)
        b = str(self.b)
        if len(self.b._num) > 1 or not self.b._den.is_one():
            b = f"({b})"
        zpart = self.ext.name if self.b == ONE else f"{b}*{self.ext.name}"
        return zpart if self.a.is_zero() else f"{self.a} + {zpart}"

    __repr__ = __str__


def quad_reduce(ext: QuadraticExtension, coeffs: Iterable) -> QuadExtElement:
    return ext.reduce(coeffs)
