"""Multivectors of Cl(B, V) for a possibly non-symmetric bilinear form B.

Blades are bitmasks over the generators e1..e_{2n} (bit i-1 <-> e_i) and
the empty mask is the unit ``Id``.  The Clifford product is built from the
Grassmann (wedge) product and the left contraction

    e_i * y = e_i ^ y + e_i _| y,

extended to blades by peeling off the lowest generator, so that no
symmetry of B is ever assumed.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence

from .field import ONE, ZERO, RationalFunction, as_scalar, symbols


class CliffordError(ValueError):
    pass


class DimensionMismatch(CliffordError):
    pass


# -- bilinear form -----------------------------------------------------------


class BilinearForm:
    """A 2n x 2n matrix of field elements with 1-based access ``B(i, j)``."""

    __slots__ = ("n", "entries", "_hash")

    def __init__(self, n: int, entries: Sequence[Sequence]):
        if n < 1:
            raise CliffordError("n must be positive")
        rows = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        if len(rows) != 2 * n or any(len(r) != 2 * n for r in rows):
            raise DimensionMismatch(f"bilinear form must be {2 * n}x{2 * n}")
        self.n = n
        self.entries = rows
        self._hash = hash((n, rows))

    @property
    def dim(self) -> int:
        return 2 * self.n

    def __call__(self, i: int, j: int) -> RationalFunction:
        return self.entries[i - 1][j - 1]

    def __eq__(self, other):
        return (self is other or isinstance(other, BilinearForm)
                and self._hash == other._hash and self.entries == other.entries)

    def __hash__(self):
        return self._hash

    def substitute(self, bindings) -> "BilinearForm":
        return BilinearForm(self.n, [[x.substitute(bindings) for x in row] for row in self.entries])

    def __repr__(self):
        rows = ",\n ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"BilinearForm(n={self.n},\n [{rows}])"


def b_entry(i: int, j: int, n: int, q) -> RationalFunction:
    """One entry of the Hecke-compatible form; 1-based indices."""
    if (i <= n and j <= n) or (i > n and j > n):
        return ZERO
    if i == j - n or i - 1 - n == j:
        return q
    if i + 1 == j - n or i == j + 1 - n:
        return -(1 + q)
    if abs(i - j - n) >= 2 and i > n:
        return -ONE
    return ONE


def build_B(n: int, q=None) -> BilinearForm:
    """The bilinear form on 2n generators under which e_i ^ e_{i+n} realise H(n, q).

    ``q`` defaults to the symbolic variable; pass a number to specialise.
    """
    if n < 1:
        raise CliffordError("n must be positive")
    q = symbols("q") if q is None else as_scalar(q)
    return BilinearForm(n, [[b_entry(i, j, n, q) for j in range(1, 2 * n + 1)]
                            for i in range(1, 2 * n + 1)])


# -- multivectors ------------------------------------------------------------


def _bits(mask: int):
    i = 1
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


class Multivector:
    """Immutable sparse map blade-mask -> coefficient over 2n generators."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[int, object] = ()):
        self.dim = dim
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mask, c in items:
            if mask >> dim:
                raise DimensionMismatch(f"blade {mask:b} outside a {dim}-generator algebra")
            c = as_scalar(c)
            if not c.is_zero():
                clean[mask] = c
        self.terms: Dict[int, RationalFunction] = dict(sorted(clean.items()))

    @classmethod
    def _raw(cls, dim, terms):
        out = cls.__new__(cls)
        out.dim = dim
        out.terms = dict(sorted((m, c) for m, c in terms.items() if not c.is_zero()))
        return out

    @classmethod
    def scalar(cls, dim: int, c=1) -> "Multivector":
        return cls(dim, {0: c})

    @classmethod
    def generator(cls, dim: int, i: int) -> "Multivector":
        if not 1 <= i <= dim:
            raise CliffordError(f"e{i} not in a {dim}-generator algebra")
        return cls(dim, {1 << (i - 1): 1})

    @classmethod
    def blade(cls, dim: int, indices: Sequence[int], c=1) -> "Multivector":
        """The blade e_{i1} ^ ... ^ e_{ik}; indices in any order, sign applied."""
        out = cls.scalar(dim, c)
        for i in indices:
            out = wedge(out, cls.generator(dim, i))
        return out

    def _check(self, other: "Multivector"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} vs {other.dim} generators")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.dim, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return Multivector._raw(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Multivector._raw(self.dim, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, c):
        """Scalar multiplication only; use :func:`cmul` for the Clifford product."""
        if isinstance(c, Multivector):
            raise TypeError("use cmul(x, y, B) for the Clifford product")
        c = as_scalar(c)
        return Multivector._raw(self.dim, {m: x * c for m, x in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_scalar(c)
        return self * c.inverse()

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.dim == other.dim and self.terms == other.terms
        try:
            return self == Multivector.scalar(self.dim, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.dim, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def scalar_part(self) -> RationalFunction:
        return self.terms.get(0, ZERO)

    def grades(self) -> set:
        return {_popcount(m) for m in self.terms}

    def is_even(self) -> bool:
        return all(_popcount(m) % 2 == 0 for m in self.terms)

    def coefficient(self, indices: Sequence[int]) -> RationalFunction:
        return self.terms.get(_mask(indices), ZERO)

    def map_coefficients(self, fn) -> "Multivector":
        return Multivector._raw(self.dim, {m: fn(c) for m, c in self.terms.items()})

    def substitute(self, bindings) -> "Multivector":
        return self.map_coefficients(lambda c: c.substitute(bindings))

    def __str__(self):
        return format_multivector(self)

    def __repr__(self):
        return f"Multivector({self.dim}, '{self}')"


def blade_name(mask: int) -> str:
    if mask == 0:
        return "Id"
    return "^".join(f"e{i}" for i in _bits(mask))


def format_multivector(x: Multivector) -> str:
    from .parser import format_linear_combination

    return format_linear_combination([(blade_name(m), c) for m, c in x.terms.items()])


# -- products ----------------------------------------------------------------


def _wedge_sign(a: int, b: int) -> int:
    """Sign of reordering blade a followed by blade b into ascending order."""
    swaps = 0
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def wedge(x: Multivector, y: Multivector) -> Multivector:
    x._check(y)
    out: Dict[int, RationalFunction] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            if a & b:
                continue
            c = ca * cb if _wedge_sign(a, b) > 0 else -(ca * cb)
            m = a | b
            out[m] = out[m] + c if m in out else c
    return Multivector._raw(x.dim, out)


def _contract_blade(i: int, mask: int, B: BilinearForm) -> Dict[int, RationalFunction]:
    out = {}
    sign = 1
    for j in _bits(mask):
        c = B(i, j)
        if not c.is_zero():
            out[mask & ~(1 << (j - 1))] = c if sign > 0 else -c
        sign = -sign
    return out


def contract_left(v: Multivector, y: Multivector, B: BilinearForm) -> Multivector:
    """Left contraction v _| y for a 1-vector v, weighted by B(i, j)."""
    v._check(y)
    if y.dim != B.dim:
        raise DimensionMismatch("multivector and bilinear form dimensions differ")
    if any(_popcount(m) != 1 for m in v.terms):
        raise CliffordError("contract_left needs a 1-vector on the left")
    out: Dict[int, RationalFunction] = {}
    for a, ca in v.terms.items():
        i = a.bit_length()
        for b, cb in y.terms.items():
            for m, c in _contract_blade(i, b, B).items():
                t = ca * cb * c
                out[m] = out[m] + t if m in out else t
    return Multivector._raw(y.dim, out)


@lru_cache(maxsize=None)
def _blade_product(B: BilinearForm, a: int, b: int) -> tuple:
    """Clifford product of blades a and b as a tuple of (mask, coeff)."""
    if a == 0:
        return ((b, ONE),)
    low = a & -a
    i = low.bit_length()
    rest = a ^ low
    acc: Dict[int, RationalFunction] = {}

    def add(mask, c):
        acc[mask] = acc[mask] + c if mask in acc else c

    # e_i * (e_rest * e_b)
    for m, c in _blade_product(B, rest, b):
        if not m & low:
            add(m | low, c if _wedge_sign(low, m) > 0 else -c)
        for m2, c2 in _contract_blade(i, m, B).items():
            add(m2, c * c2)
    # - (e_i _| e_rest) * e_b
    for m, c in _contract_blade(i, rest, B).items():
        for m2, c2 in _blade_product(B, m, b):
            add(m2, -(c * c2))
    return tuple((m, c) for m, c in sorted(acc.items()) if not c.is_zero())


def cmul(x: Multivector, y: Multivector, B: BilinearForm) -> Multivector:
    """Clifford product in Cl(B, V)."""
    x._check(y)
    if x.dim != B.dim:
        raise DimensionMismatch("multivector and bilinear form dimensions differ")
    out: Dict[int, RationalFunction] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            cc = ca * cb
            for m, c in _blade_product(B, a, b):
                t = cc * c
                out[m] = out[m] + t if m in out else t
    return Multivector._raw(x.dim, out)


def cmul_all(factors: Sequence[Multivector], B: BilinearForm) -> Multivector:
    out = Multivector.scalar(B.dim, 1)
    for f in factors:
        out = cmul(out, f, B)
    return out


@lru_cache(maxsize=None)
def _blade_reverse(B: BilinearForm, a: int) -> tuple:
    if _popcount(a) <= 1:
        return ((a, ONE),)
    low = a & -a
    i = low.bit_length()
    rest = a ^ low
    acc: Dict[int, RationalFunction] = {}
    # rev(e_rest) * e_i
    for m, c in _blade_reverse(B, rest):
        for m2, c2 in _blade_product(B, m, low):
            acc[m2] = acc.get(m2, ZERO) + c * c2
    # - rev(e_i _| e_rest)
    for m, c in _contract_blade(i, rest, B).items():
        for m2, c2 in _blade_reverse(B, m):
            acc[m2] = acc.get(m2, ZERO) - c * c2
    return tuple((m, c) for m, c in sorted(acc.items()) if not c.is_zero())


def reverse(x: Multivector, B: BilinearForm) -> Multivector:
    """The anti-automorphism of the Clifford product fixing every 1-vector."""
    if x.dim != B.dim:
        raise DimensionMismatch("multivector and bilinear form dimensions differ")
    out: Dict[int, RationalFunction] = {}
    for a, ca in x.terms.items():
        for m, c in _blade_reverse(B, a):
            t = ca * c
            out[m] = out[m] + t if m in out else t
    return Multivector._raw(x.dim, out)


def grade_involute(x: Multivector) -> Multivector:
    return Multivector._raw(x.dim, {m: (-c if _popcount(m) % 2 else c) for m, c in x.terms.items()})


def grade_project(x: Multivector, k: int) -> Multivector:
    return Multivector._raw(x.dim, {m: c for m, c in x.terms.items() if _popcount(m) == k})


class CliffordAlgebra:
    """Convenience bundle of a bilinear form with constructors and products."""

    def __init__(self, B: BilinearForm):
        self.B = B
        self.dim = B.dim

    @classmethod
    def hecke(cls, n: int, q=None) -> "CliffordAlgebra":
        return cls(build_B(n, q))

    def e(self, i: int) -> Multivector:
        return Multivector.generator(self.dim, i)

    def scalar(self, c=1) -> Multivector:
        return Multivector.scalar(self.dim, c)

    def blade(self, *indices: int) -> Multivector:
        return Multivector.blade(self.dim, indices)

    def mul(self, *factors: Multivector) -> Multivector:
        return cmul_all(factors, self.B)

    def reverse(self, x: Multivector) -> Multivector:
        return reverse(x, self.B)

    def contract(self, v: Multivector, y: Multivector) -> Multivector:
        return contract_left(v, y, self.B)
