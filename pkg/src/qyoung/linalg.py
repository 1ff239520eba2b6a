"""Dense matrices over the coefficient field.

Elimination is fraction-free (Bareiss) on rows cleared of denominators, so
intermediate entries stay polynomial and every division is exact.  The
characteristic polynomial uses Berkowitz's division-free recurrence; the
minimal polynomial is found from the first linear dependence among powers.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .field import ONE, ZERO, RationalFunction, as_scalar


class LinearAlgebraError(ArithmeticError):
    pass


class NoSolutionError(LinearAlgebraError):
    pass


class FieldMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [list(r) for r in entries]
        if not rows:
            raise LinearAlgebraError("empty matrix")
        ncols = len(rows[0])
        if ncols == 0 or any(len(r) != ncols for r in rows):
            raise LinearAlgebraError("matrix must be rectangular and non-empty")
        self.rows, self.cols = len(rows), ncols
        self.entries = tuple(tuple(_scalar(x) for x in r) for r in rows)

    @classmethod
    def identity(cls, n: int) -> "FieldMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "FieldMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "FieldMatrix":
        return cls([list(r) for r in zip(*columns)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(list(zip(*self.entries)))

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_shape(other)
        return FieldMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_shape(other)
        return FieldMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def scale(self, c) -> "FieldMatrix":
        return FieldMatrix([[x * c for x in r] for r in self.entries])

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows:
            raise LinearAlgebraError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        return FieldMatrix([[_dot(r, c) for c in cols] for r in self.entries])

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise LinearAlgebraError("vector length mismatch")
        return [_dot(r, v) for r in self.entries]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise LinearAlgebraError(f"shape mismatch {self.shape} vs {other.shape}")

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def __eq__(self, other):
        return isinstance(other, FieldMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def trace(self) -> RationalFunction:
        self._square()
        return _sum(self.entries[i][i] for i in range(self.rows))

    def _square(self):
        if self.rows != self.cols:
            raise LinearAlgebraError("square matrix required")

    def substitute(self, bindings) -> "FieldMatrix":
        return FieldMatrix([[x.substitute(bindings) for x in r] for r in self.entries])

    def to_lists(self) -> List[List[str]]:
        return [[str(x) for x in r] for r in self.entries]

    def __str__(self):
        cells = self.to_lists()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    __repr__ = __str__


def _scalar(x):
    # field elements (including quadratic-extension elements) pass through
    if hasattr(x, "is_zero"):
        return x
    return as_scalar(x)


def _sum(items):
    out = ZERO
    for x in items:
        out = out + x
    return out


def _dot(a, b):
    out = ZERO
    for x, y in zip(a, b):
        if not x.is_zero() and not y.is_zero():
            out = out + x * y
    return out


# -- elimination -----------------------------------------------------------------


def _clear_row(row):
    """Multiply a row by the lcm of its denominators (entries stay in the field)."""
    from .field import RationalFunction as RF

    den = None
    for x in row:
        if isinstance(x, RF) and not x.is_zero() and not x.is_polynomial():
            d = RF(x.denominator)
            den = d if den is None else den * d / _poly_gcd(den, d)
    if den is None:
        return row
    return [x * den for x in row]


def _poly_gcd(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return RationalFunction._make(a._num.gcd(b._num), ONE._num, False)


def _pivot_key(x):
    if isinstance(x, RationalFunction):
        return (len(x._num) + len(x._den), str(x))
    return (0, "")


def echelon(M: FieldMatrix, *, fraction_free: bool = True):
    """Row echelon form by Bareiss elimination.

    Returns ``(rows, pivots)`` where ``rows`` is the echelon matrix as a list
    of lists and ``pivots`` the pivot column indices.  Entries are field
    elements; when every entry is a rational function the rows are first
    cleared of denominators so Bareiss divisions are exact.
    """
    A = [list(r) for r in M.entries]
    if fraction_free and all(isinstance(x, RationalFunction) for r in A for x in r):
        A = [_clear_row(r) for r in A]
    nrows, ncols = M.rows, M.cols
    pivots = []
    prev = ONE
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        candidates = [i for i in range(r, nrows) if not A[i][c].is_zero()]
        if not candidates:
            continue
        p = min(candidates, key=lambda i: _pivot_key(A[i][c]))
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, nrows):
            f = A[i][c]
            if fraction_free:
                row = []
                for j in range(ncols):
                    if j < c:
                        row.append(ZERO)
                    else:
                        row.append((piv * A[i][j] - f * A[r][j]) / prev)
                A[i] = row
            elif not f.is_zero():
                ratio = f / piv
                A[i] = [ZERO if j < c else A[i][j] - ratio * A[r][j] for j in range(ncols)]
        if fraction_free:
            prev = piv
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: FieldMatrix) -> int:
    return len(echelon(M)[1])


def determinant(M: FieldMatrix):
    M._square()
    n = M.rows
    A = [list(r) for r in M.entries]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def rref(M: FieldMatrix):
    """Reduced row echelon form; returns (rows, pivots)."""
    A, pivots = echelon(M)
    A = A[: len(pivots)]
    for r, c in enumerate(pivots):
        inv = A[r][c].inverse() if hasattr(A[r][c], "inverse") else ONE / A[r][c]
        A[r] = [x * inv for x in A[r]]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        for i in range(r):
            f = A[i][c]
            if not f.is_zero():
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
    return A, pivots


def nullspace(M: FieldMatrix) -> List[list]:
    """Basis of {x : M x = 0}, one vector per free column (that entry set to 1)."""
    A, pivots = rref(M)
    free = [j for j in range(M.cols) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * M.cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -A[r][f]
        basis.append(v)
    return basis


def solve(M: FieldMatrix, b: Sequence) -> Tuple[list, List[list]]:
    """All solutions of M x = b as (particular, nullspace basis).

    Raises :class:`NoSolutionError` if the system is inconsistent.
    """
    if len(b) != M.rows:
        raise LinearAlgebraError("right-hand side length mismatch")
    aug = FieldMatrix([list(r) + [_scalar(x)] for r, x in zip(M.entries, b)])
    A, pivots = rref(aug)
    if M.cols in pivots:
        raise NoSolutionError("inconsistent linear system")
    x = [ZERO] * M.cols
    for r, c in enumerate(pivots):
        x[c] = A[r][M.cols]
    return x, nullspace(M)


def solve_unique(M: FieldMatrix, b: Sequence) -> list:
    x, kernel = solve(M, b)
    if kernel:
        raise LinearAlgebraError(f"solution not unique ({len(kernel)} free directions)")
    return x


def inverse(M: FieldMatrix) -> FieldMatrix:
    M._square()
    n = M.rows
    aug = FieldMatrix([list(r) + [ONE if i == j else ZERO for j in range(n)]
                       for i, r in enumerate(M.entries)])
    A, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise LinearAlgebraError("matrix is singular")
    return FieldMatrix([r[n:] for r in A])


# -- polynomials of a matrix ---------------------------------------------------


class FieldPolynomial:
    """Univariate polynomial in ``x`` with field coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Sequence) -> "FieldPolynomial":
        out = cls([ONE])
        for r in roots:
            out = out * cls([-_scalar(r), ONE])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "FieldPolynomial") -> "FieldPolynomial":
        if not self.coeffs or not other.coeffs:
            return FieldPolynomial([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return FieldPolynomial(out)

    def __pow__(self, k: int) -> "FieldPolynomial":
        out = FieldPolynomial([ONE])
        for _ in range(k):
            out = out * self
        return out

    def monic(self) -> "FieldPolynomial":
        lead = self.coeffs[-1]
        return FieldPolynomial([c / lead for c in self.coeffs])

    def divmod(self, other: "FieldPolynomial"):
        rem = list(self.coeffs)
        quot = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 1)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs) and rem:
            shift = len(rem) - len(other.coeffs)
            f = rem[-1] / lead
            quot[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - f * c
            rem.pop()
            while rem and rem[-1].is_zero():
                rem.pop()
        return FieldPolynomial(quot), FieldPolynomial(rem)

    def __eq__(self, other):
        return isinstance(other, FieldPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate_matrix(self, M: FieldMatrix) -> FieldMatrix:
        out = FieldMatrix.zeros(M.rows, M.cols)
        power = FieldMatrix.identity(M.rows)
        for k, c in enumerate(self.coeffs):
            if k:
                power = power @ M
            if not c.is_zero():
                out = out + power.scale(c)
        return out

    def __str__(self):
        from .parser import format_linear_combination

        names = ["Id" if k == 0 else ("x" if k == 1 else f"x^{k}") for k in range(len(self.coeffs))]
        terms = list(zip(names, self.coeffs))[::-1]
        text = format_linear_combination(terms)
        return text.replace("*Id", "").replace("Id", "1")

    __repr__ = __str__


def charpoly(M: FieldMatrix) -> FieldPolynomial:
    """det(x I - M) by Berkowitz's algorithm (no divisions)."""
    M._square()
    n = M.rows
    A = M.entries
    # Berkowitz: build the Toeplitz vectors for each leading principal block.
    vect = [ONE, -A[0][0]]
    for r in range(1, n):
        R = [A[r][j] for j in range(r)]  # row r, columns < r
        C = [A[i][r] for i in range(r)]  # column r, rows < r
        Asub = [[A[i][j] for j in range(r)] for i in range(r)]
        a = A[r][r]
        # t = [1, -a, -R C, -R A C, -R A^2 C, ...] of length r + 2
        t = [ONE, -a]
        v = C
        for _ in range(r):
            t.append(-_dot(R, v))
            v = [_dot(row, v) for row in Asub]
        new = []
        for i in range(r + 2):
            s = ZERO
            for j in range(min(i, r) + 1):
                if i - j < len(t):
                    s = s + t[i - j] * vect[j]
            new.append(s)
        vect = new
    # vect holds coefficients from x^n downward
    return FieldPolynomial(list(reversed(vect)))


def minpoly(M: FieldMatrix) -> FieldPolynomial:
    """Monic minimal polynomial from the first dependency among I, M, M^2, ..."""
    M._square()
    n = M.rows
    powers = [FieldMatrix.identity(n)]
    flat = lambda P: [x for r in P.entries for x in r]  # noqa: E731
    for k in range(1, n + 1):
        powers.append(powers[-1] @ M)
        cols = FieldMatrix.from_columns([flat(P) for P in powers])
        kernel = nullspace(cols)
        if kernel:
            v = kernel[0]
            return FieldPolynomial(v).monic()
    raise LinearAlgebraError("no dependency found among matrix powers")
