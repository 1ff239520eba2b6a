"""The Hecke algebra H(n, q) realised inside Cl(B, V) by t_i -> b_i = e_i ^ e_{i+n}.

Elements are stored as coordinates in the fixed word basis

    n = 2:  [Id, b1]
    n = 3:  [Id, b1, b2, b12, b21, b121]

Multiplication, reversion and the map alpha_q are tabulated once per
algebra by computing the Clifford images of basis words and reading off
their coordinates.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .clifford import BilinearForm, Multivector, build_B, cmul, cmul_all, reverse, wedge
from .field import ONE, ZERO, NotInvertibleError, RationalFunction, as_scalar, symbols
from .linalg import FieldMatrix, LinearAlgebraError, NoSolutionError, echelon, solve, solve_unique

WORDS = {
    2: ("", "1"),
    3: ("", "1", "2", "12", "21", "121"),
}

# Grassmann expansions of the length >= 2 words as displayed (n = 4 embedding)
GRASSMANN_DISPLAYED = {
    "12": "-(1+q)*Id + e1^e6 - e1^e2^e5^e6 + (1+q)*e2^e5",
    "21": "-q*(1+q)*Id + (1+q)*e1^e6 - e1^e2^e5^e6 + q*e2^e5",
    "121": "q*e1^e5 - (1+2*q)*Id + q*e2^e6 + e1^e6 + (-1+q)*e1^e2^e5^e6 - (-q-1+q^2)*e2^e5",
}


class HeckeError(ValueError):
    pass


class NotInSubalgebraError(HeckeError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


def word_name(word: str) -> str:
    return "Id" if not word else "b" + word


def generator(i: int, n: int, q=None) -> Multivector:
    """b_i = e_i ^ e_{i+n} in the 2n-generator algebra (1 <= i <= n-1)."""
    if not 1 <= i <= n - 1:
        raise HeckeError(f"generator index {i} out of range for n={n}")
    dim = 2 * n
    return wedge(Multivector.generator(dim, i), Multivector.generator(dim, i + n))


@dataclass
class RelationResult:
    name: str
    residual: Multivector

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()


@dataclass
class RelationReport:
    n: int
    results: List[RelationResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> List[RelationResult]:
        return [r for r in self.results if not r.ok]

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for r in self.results:
            kind = r.name.split("(")[0]
            out[kind] = out.get(kind, 0) + 1
        return out


def check_relations(n: int, q=None) -> RelationReport:
    """Check the quadratic, commutation and braid relations of b_1..b_{n-1}."""
    if not 2 <= n <= 4:
        raise HeckeError("relations are checked for 2 <= n <= 4")
    B = build_B(n, q)
    qv = B(1, n + 1)
    b = {i: generator(i, n) for i in range(1, n)}
    one = Multivector.scalar(2 * n)
    report = RelationReport(n)
    for i in range(1, n):
        lhs = cmul(b[i], b[i], B)
        rhs = b[i] * (1 - qv) + one * qv
        report.results.append(RelationResult(f"quadratic(b{i})", lhs - rhs))
    for i in range(1, n):
        for j in range(i + 2, n):
            res = cmul(b[i], b[j], B) - cmul(b[j], b[i], B)
            report.results.append(RelationResult(f"commutation(b{i},b{j})", res))
    for i in range(1, n - 1):
        j = i + 1
        res = cmul_all([b[i], b[j], b[i]], B) - cmul_all([b[j], b[i], b[j]], B)
        report.results.append(RelationResult(f"braid(b{i},b{j})", res))
    return report


class HeckeAlgebra:
    """H(n, q) for n in {2, 3}, embedded in the Clifford algebra of ``build_B(clifford_n, q)``.

    ``q`` may be the symbolic variable (default) or a number; the latter is
    used for sampled verification and for the q -> 1 limit.
    """

    def __init__(self, n: int = 3, q=None, clifford_n: int = 4):
        if n not in WORDS:
            raise HeckeError("only H(2, q) and H(3, q) are supported")
        if clifford_n < n:
            raise HeckeError("Clifford algebra too small for the requested generators")
        self.n = n
        self.clifford_n = clifford_n
        self.q = symbols("q") if q is None else as_scalar(q)
        self.B: BilinearForm = build_B(clifford_n, self.q)
        self.words = WORDS[n]
        self.names = tuple(word_name(w) for w in self.words)
        self.size = len(self.words)
        gens = {str(i): generator(i, clifford_n) for i in range(1, n)}
        self.basis: Tuple[Multivector, ...] = tuple(
            cmul_all([gens[ch] for ch in w], self.B) if w else Multivector.scalar(self.B.dim)
            for w in self.words
        )
        self._blades = sorted({m for mv in self.basis for m in mv.terms})
        self._expansion = FieldMatrix([[mv.terms.get(m, ZERO) for mv in self.basis]
                                       for m in self._blades])
        if len(echelon(self._expansion)[1]) != self.size:
            raise HeckeError("Hecke basis words are linearly dependent")
        self._table = [[self._coords_list(cmul(x, y, self.B)) for y in self.basis]
                       for x in self.basis]
        self._rev = [self._coords_list(reverse(x, self.B)) for x in self.basis]
        self._alpha = []
        for w, rev in zip(self.words, self._rev):
            scale = (-1 / self.q) ** len(w)
            self._alpha.append([c * scale for c in rev])

    # -- construction ------------------------------------------------------

    def element(self, coords: Sequence) -> "HeckeElement":
        return HeckeElement(self, coords)

    def zero(self) -> "HeckeElement":
        return HeckeElement(self, [ZERO] * self.size)

    def one(self) -> "HeckeElement":
        return self.word("")

    def word(self, w: str) -> "HeckeElement":
        w = w[1:] if w.startswith("b") else ("" if w == "Id" else w)
        if w not in self.words:
            raise HeckeError(f"no basis word {w!r} in H({self.n}, q)")
        return HeckeElement(self, [ONE if v == w else ZERO for v in self.words])

    def b(self, i: int) -> "HeckeElement":
        return self.word(str(i))

    def from_dict(self, coords: Dict[str, object]) -> "HeckeElement":
        unknown = set(coords) - set(self.names)
        if unknown:
            raise HeckeError(f"unknown basis names {sorted(unknown)}")
        return HeckeElement(self, [coords.get(name, ZERO) for name in self.names])

    def general(self, names: Sequence[str] = ("K1", "K2", "K3", "K4", "K5", "K6")) -> "HeckeElement":
        """K1*Id + K2*b1 + ... with symbolic coordinates."""
        return HeckeElement(self, [symbols(nm) for nm in names[: self.size]])

    # -- Clifford bridge --------------------------------------------------

    def to_multivector(self, x: "HeckeElement") -> Multivector:
        out = Multivector.scalar(self.B.dim, 0)
        for c, mv in zip(x.coords, self.basis):
            if not c.is_zero():
                out = out + mv * c
        return out

    def _coords_list(self, x: Multivector) -> list:
        if x.dim != self.B.dim:
            raise HeckeError("multivector from a different Clifford algebra")
        stray = [m for m in x.terms if m not in set(self._blades)]
        if stray:
            raise NotInSubalgebraError("element has blades outside the Hecke span", x)
        rhs = [x.terms.get(m, ZERO) for m in self._blades]
        try:
            return solve_unique(self._expansion, rhs)
        except NoSolutionError:
            raise NotInSubalgebraError("element is not in the Hecke span", x) from None

    def to_hecke_coords(self, x: Multivector) -> "HeckeElement":
        return HeckeElement(self, self._coords_list(x))

    # -- tabulated operations ---------------------------------------------

    def mul(self, x: "HeckeElement", y: "HeckeElement") -> "HeckeElement":
        out = [ZERO] * self.size
        for i, a in enumerate(x.coords):
            if a.is_zero():
                continue
            for j, b in enumerate(y.coords):
                if b.is_zero():
                    continue
                ab = a * b
                for k, c in enumerate(self._table[i][j]):
                    if not c.is_zero():
                        out[k] = out[k] + ab * c
        return HeckeElement(self, out)

    def reverse(self, x: "HeckeElement") -> "HeckeElement":
        return self._linear(x, self._rev)

    def alpha_q(self, x: "HeckeElement") -> "HeckeElement":
        return self._linear(x, self._alpha)

    def _linear(self, x, images):
        out = [ZERO] * self.size
        for a, img in zip(x.coords, images):
            if a.is_zero():
                continue
            for k, c in enumerate(img):
                if not c.is_zero():
                    out[k] = out[k] + a * c
        return HeckeElement(self, out)

    def structure_constants(self) -> List[List[list]]:
        return [[list(c) for c in row] for row in self._table]

    def left_matrix(self, x: "HeckeElement") -> FieldMatrix:
        """Matrix of y -> x*y in the word basis (column j = x * w_j)."""
        return FieldMatrix.from_columns([self.mul(x, w).coords for w in self.basis_elements()])

    def right_matrix(self, x: "HeckeElement") -> FieldMatrix:
        """Matrix of y -> y*x in the word basis."""
        return FieldMatrix.from_columns([self.mul(w, x).coords for w in self.basis_elements()])

    def basis_elements(self) -> List["HeckeElement"]:
        return [self.word(w) for w in self.words]

    def specialize(self, q) -> "HeckeAlgebra":
        return hecke_algebra(self.n, str(as_scalar(q)), self.clifford_n)

    def __eq__(self, other):
        if not isinstance(other, HeckeAlgebra):
            return NotImplemented
        return (self.n, self.clifford_n, self.q) == (other.n, other.clifford_n, other.q)

    def __hash__(self):
        return hash((self.n, self.clifford_n, str(self.q)))

    def __repr__(self):
        return f"HeckeAlgebra(n={self.n}, q={self.q}, clifford_n={self.clifford_n})"


_CACHE_LOCK = threading.Lock()


def hecke_algebra(n: int = 3, q: str = "q", clifford_n: int = 4) -> HeckeAlgebra:
    """Cached algebra; ``q`` is given in text form so it can be a cache key."""
    with _CACHE_LOCK:
        return _hecke_algebra(n, str(q), clifford_n)


@lru_cache(maxsize=64)
def _hecke_algebra(n: int, q: str, clifford_n: int) -> HeckeAlgebra:
    return HeckeAlgebra(n, RationalFunction.parse(q), clifford_n)


class HeckeElement:
    """Coordinates of an element of H(n, q) in the word basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: HeckeAlgebra, coords: Sequence):
        if len(coords) != algebra.size:
            raise HeckeError(f"expected {algebra.size} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = tuple(c if hasattr(c, "is_zero") else as_scalar(c) for c in coords)

    def _lift(self, other):
        if isinstance(other, HeckeElement):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                raise HeckeError("elements of different Hecke algebras")
            return other
        try:
            c = other if hasattr(other, "is_zero") else as_scalar(other)
        except TypeError:
            return None
        return HeckeElement(self.algebra, [c] + [ZERO] * (self.algebra.size - 1))

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return HeckeElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.algebra, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return HeckeElement(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.algebra.mul(self, self._lift(other))
        try:
            c = other if hasattr(other, "is_zero") else as_scalar(other)
        except TypeError:
            return NotImplemented
        return HeckeElement(self.algebra, [a * c for a in self.coords])

    def __rmul__(self, other):
        try:
            c = other if hasattr(other, "is_zero") else as_scalar(other)
        except TypeError:
            return NotImplemented
        return HeckeElement(self.algebra, [c * a for a in self.coords])

    def __truediv__(self, other):
        c = other if hasattr(other, "is_zero") else as_scalar(other)
        inv = c.inverse()
        return HeckeElement(self.algebra, [a * inv for a in self.coords])

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return all((a - b).is_zero() for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __getitem__(self, name: str):
        return self.coords[self.algebra.names.index(name)]

    def reverse(self) -> "HeckeElement":
        return self.algebra.reverse(self)

    def alpha_q(self) -> "HeckeElement":
        return self.algebra.alpha_q(self)

    def to_multivector(self) -> Multivector:
        return self.algebra.to_multivector(self)

    def substitute(self, bindings) -> "HeckeElement":
        return HeckeElement(self.algebra, [c.substitute(bindings) for c in self.coords])

    def specialize(self, bindings) -> "HeckeElement":
        """Substitute into the coordinates; a binding for q also moves the
        element into the algebra built at that q."""
        coords = [c.substitute(bindings) for c in self.coords]
        H = self.algebra
        if "q" in bindings:
            H = hecke_algebra(H.n, str(as_scalar(bindings["q"])), H.clifford_n)
        return HeckeElement(H, coords)

    def map(self, fn) -> "HeckeElement":
        return HeckeElement(self.algebra, [fn(c) for c in self.coords])

    def variables(self) -> frozenset:
        out = frozenset()
        for c in self.coords:
            if hasattr(c, "variables"):
                out |= c.variables()
        return out

    def as_dict(self) -> Dict[str, str]:
        return {name: str(c) for name, c in zip(self.algebra.names, self.coords)}

    def __str__(self):
        from .parser import format_linear_combination

        return format_linear_combination(list(zip(self.algebra.names, self.coords)))

    def __repr__(self):
        return f"HeckeElement('{self}')"


# -- operations on elements ----------------------------------------------------


def to_hecke_coords(x: Multivector, algebra: HeckeAlgebra) -> HeckeElement:
    return algebra.to_hecke_coords(x)


def alpha_q(x: HeckeElement) -> HeckeElement:
    """Linear extension of b_{i1}..b_{is} -> (-1/q)^s reverse(b_{i1}..b_{is})."""
    return x.alpha_q()


def hecke_inverse(x: HeckeElement) -> HeckeElement:
    H = x.algebra
    if x.is_zero():
        raise NotInvertibleError("zero has no inverse")
    try:
        y = H.element(solve_unique(H.left_matrix(x), H.one().coords))
    except (NoSolutionError, LinearAlgebraError):
        raise NotInvertibleError(f"{x} is not invertible in H({H.n}, q)") from None
    if y * x != H.one():
        raise NotInvertibleError(f"{x} has a one-sided inverse only")
    return y


def gamma_q_member(x: HeckeElement) -> bool:
    """True iff alpha_q(x) * x == 1."""
    return x.alpha_q() * x == x.algebra.one()


def kw_transform(x: HeckeElement) -> HeckeElement:
    """Algebra map b_i -> -b_i (the g_i = -t_i generators)."""
    H = x.algebra
    return H.element([c if len(w) % 2 == 0 else -c for c, w in zip(x.coords, H.words)])


def limit_q1(x: HeckeElement) -> HeckeElement:
    """Substitute q := 1, landing in the group algebra of S_n."""
    H = x.algebra
    H1 = hecke_algebra(H.n, "1", H.clifford_n)
    return H1.element([c.substitute({"q": 1}) for c in x.coords])
