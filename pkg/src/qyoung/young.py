"""q-Young operators for H(2,q) and H(3,q).

Coordinates are always in the word basis ``Id, b1, b2, b12, b21, b121``.
Operators built from closed formulas are kept separate from those obtained by
solving linear conditions, so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from .field import ONE, ZERO, QuadraticExtension, RationalFunction, as_scalar
from .hecke import HeckeElement, hecke_algebra
from .linalg import FieldMatrix, rank, solve
from .parser import parse_scalar

q = RationalFunction.var("q")
K1, K2, K3, K4, K5, K6, P3 = (RationalFunction.var(v) for v in ("K1", "K2", "K3", "K4", "K5", "K6", "P3"))


class YoungError(ValueError):
    pass


class ExcludedParameterError(YoungError):
    """A binding makes one of an operator's denominators vanish."""


@dataclass(frozen=True)
class YoungOperator:
    name: str
    partition: Tuple[int, ...]
    numbering: Tuple[int, ...]
    element: HeckeElement
    parameters: FrozenSet[str] = frozenset()
    exclusions: Tuple[RationalFunction, ...] = ()

    def __post_init__(self):
        if sum(self.partition) != len(self.numbering):
            raise YoungError(f"partition {self.partition} does not match numbering {self.numbering}")

    def is_idempotent(self) -> bool:
        e = self.element
        return (e * e - e).is_zero()

    def specialize(self, bindings: Mapping[str, object]) -> "YoungOperator":
        for ex in self.exclusions:
            try:
                value = ex.substitute(bindings)
            except ZeroDivisionError:
                continue
            if value.is_zero():
                raise ExcludedParameterError(f"{self.name}: {ex} vanishes at {dict(bindings)}")
        return YoungOperator(
            self.name, self.partition, self.numbering, self.element.specialize(bindings),
            frozenset(self.parameters - set(bindings)), self.exclusions,
        )

    def __str__(self):
        return str(self.element)


def H2():
    return hecke_algebra(2)


def H3():
    return hecke_algebra(3)


def from_coordinates(coords: Mapping[str, str], algebra=None) -> HeckeElement:
    """Build a Hecke element from per-word scalar formulas in text form."""
    H = algebra or H3()
    unknown = set(coords) - set(H.names)
    if unknown:
        raise YoungError(f"unknown basis words {sorted(unknown)}")
    return H.from_dict({k: parse_scalar(v) for k, v in coords.items()})


# -- n = 2 -------------------------------------------------------------------------


def R12() -> HeckeElement:
    H = H2()
    return q * H.one() + H.b(1)


def C12() -> HeckeElement:
    H = H2()
    return H.one() - H.b(1)


def young_n2() -> Tuple[YoungOperator, YoungOperator]:
    Y2 = R12() / (1 + q)
    Y11 = C12() / (1 + q)
    excl = (1 + q,)
    return (YoungOperator("Y2", (2,), (1, 2), Y2, exclusions=excl),
            YoungOperator("Y11", (1, 1), (1, 2), Y11, exclusions=excl))


# -- n = 3: full symmetrizer / antisymmetrizer --------------------------------------

_D3 = (1 + q + q * q) * (1 + q)


def young_full3() -> Tuple[YoungOperator, YoungOperator]:
    H = H3()
    Y3 = H.element([q ** 3, q ** 2, q ** 2, q, q, ONE]) / _D3
    Y111 = Y3.reverse()
    excl = (1 + q, 1 + q + q * q)
    return (YoungOperator("Y3", (3,), (1, 2, 3), Y3, exclusions=excl),
            YoungOperator("Y111", (1, 1, 1), (1, 2, 3), Y111, exclusions=excl))


def Y111_formula() -> HeckeElement:
    """Closed form with alternating signs, independent of reversion."""
    return H3().element([1, -1, -1, 1, 1, -1]) / _D3


def kw_R13() -> HeckeElement:
    H = H3()
    return q ** 3 * H.one() + H.word("121")


def kw_C13() -> HeckeElement:
    H = H3()
    return H.one() - H.word("121")


def kw_discrepancy() -> HeckeElement:
    """``C(13) - rev(R(13))`` for the King-Wybourne row/column pair."""
    return kw_C13() - kw_R13().reverse()


KW_DISCREPANCY_DISPLAYED = {
    "Id": "2*(q^2 - q)", "b1": "-1 - q^2 + 2*q", "b2": "-1 - q^2 + 2*q",
    "b12": "1 - q", "b21": "1 - q",
}


# -- reversion split ------------------------------------------------------------------


@dataclass(frozen=True)
class SplitFamily:
    element: HeckeElement
    free: Tuple[str, ...]
    eliminated: Tuple[str, ...]


def linear_solve_hecke(condition, size: int, free_last: Sequence[int] = ()):
    """Solve an affine condition on the coordinates of an unknown Hecke element.

    ``condition(x)`` must return a list of field elements that depends affinely
    on the coordinates of ``x``.  Coordinates listed in ``free_last`` are placed
    last so that elimination prefers them as free parameters.
    Returns ``(particular, kernel)`` in the original coordinate order.
    """
    H = H3() if size == 6 else H2()
    base = condition(H.zero())
    columns = []
    for k in range(size):
        col = condition(H.element([ONE if i == k else ZERO for i in range(size)]))
        columns.append([c - b for c, b in zip(col, base)])
    order = [k for k in range(size) if k not in free_last] + list(free_last)
    M = FieldMatrix([[columns[k][r] for k in order] for r in range(len(base))])
    part, kernel = solve(M, [-b for b in base])
    inv = {k: i for i, k in enumerate(order)}
    unperm = lambda v: [v[inv[k]] for k in range(size)]
    return unperm(part), [unperm(v) for v in kernel]


def general_element(names=("K1", "K2", "K3", "K4", "K5", "K6")) -> HeckeElement:
    return H3().general(names)


def solve_reversion_split() -> SplitFamily:
    """General solution of ``X + rev(X) = 1`` with K2, K3, K4, K6 free."""
    H = H3()
    one = H.one()
    part, kernel = linear_solve_hecke(lambda x: list((x + x.reverse() - one).coords), 6,
                                      free_last=(1, 2, 3, 5))
    params = {1: K2, 2: K3, 3: K4, 5: K6}
    coords = list(part)
    for v in kernel:
        k = next(i for i in params if v[i] == ONE)
        coords = [c + params[k] * x for c, x in zip(coords, v)]
    return SplitFamily(H.element(coords), ("K2", "K3", "K4", "K6"), ("K1", "K5"))


SPLIT_DISPLAYED = {
    "Id": "1/2*q*K2 - 1/2*q*K6 + 1/2 + 1/2*q*K3 - 1/2*K2 + 1/2*q^2*K6 - 1/2*K3",
    "b1": "K2", "b2": "K3", "b12": "K4", "b21": "-K4 + q*K6 - K6", "b121": "K6",
}


# -- representatives r1..r6 ----------------------------------------------------------

_R_DISPLAYED = {
    1: {"Id": "1/(1+q)", "b1": "-K4", "b2": "q*K4", "b12": "K4",
        "b21": "-(q^3*K4 + q + K4 - 1)/(q*(1+q))", "b121": "-(-K4 + q^2*K4 + 1)/(q*(1+q))"},
    2: {"Id": "q/(1+q)", "b1": "-K4", "b2": "q*K4", "b12": "K4",
        "b21": "-(q^3*K4 - q + K4 + 1)/(q*(1+q))", "b121": "-(-K4 + q^2*K4 - 1)/(q*(1+q))"},
    3: {"Id": "1/(1+q)", "b1": "q*K4", "b2": "-K4", "b12": "K4",
        "b21": "-(q^3*K4 + q + K4 - 1)/(q*(1+q))", "b121": "-(-K4 + q^2*K4 + 1)/(q*(1+q))"},
    4: {"Id": "q/(1+q)", "b1": "q*K4", "b2": "-K4", "b12": "K4",
        "b21": "-(q^3*K4 - q + K4 + 1)/(q*(1+q))", "b121": "-(-K4 + q^2*K4 - 1)/(q*(1+q))"},
}

# z^2 coefficient, z coefficient, constant term of the two root-defining quadratics
_KAPPA_TEXT = ("1 + q", "-q^2*K4 + K4 + q*K2 + 1 + K2",
               "K4*K2 + K2^2 + K4 + K2 - q*K4 - q^2*K4^2 - q*K4^2 - q^2*K2*K4 + q*K2^2")
_ALPHA_TEXT = ("1 + q", "-q^2*K4 + K4 + q*K2 - 1 + K2",
               "K4*K2 + K2^2 - K4 - K2 + q*K4 - q^2*K4^2 - q*K4^2 - q^2*K2*K4 + q*K2^2")


def kappa_extension() -> QuadraticExtension:
    return QuadraticExtension(*(parse_scalar(t) for t in _KAPPA_TEXT), name="kappa")


def alpha_extension() -> QuadraticExtension:
    return QuadraticExtension(*(parse_scalar(t) for t in _ALPHA_TEXT), name="alpha")


def _r5(z) -> HeckeElement:
    """r5 with kappa := z (an extension element or a plain field element)."""
    den = K2 + K4 - q * K4 + z
    b2_num = (z + K2 - q * K4 + K4 - q ** 2 * K4 ** 2 + q * K2 ** 2 - q ** 2 * K2 * K4
              - q * K4 ** 2 + K2 ** 2 + K4 * K2)
    return H3().element([
        1 / (1 + q) + 0 * z,
        K2 + 0 * z,
        -b2_num / (den * (1 + q)),
        K4 + 0 * z,
        -(q * z * K4 + q * K2 * K4 + q * z * K2 - z * K2) / (q * den),
        (z * K2 + q * K4 ** 2) / (q * (-den)),
    ])


def _r6(z) -> HeckeElement:
    """r6 with alpha := z."""
    den = -K2 - K4 + q * K4 - z
    b2_num = (q ** 2 * K4 ** 2 - q * K2 ** 2 + q ** 2 * K2 * K4 + q * K4 ** 2 + z - q * K4
              + K2 + K4 - K2 ** 2 - K4 * K2)
    return H3().element([
        q / (1 + q) + 0 * z,
        K2 + 0 * z,
        -b2_num / (den * (1 + q)),
        K4 + 0 * z,
        (q * K2 * K4 + q * z * K4 + q * z * K2 - z * K2) / (den * q),
        (z * K2 + q * K4 ** 2) / (q * den),
    ])


def representative(i: int, root=None) -> HeckeElement:
    """The solution representatives r1..r6.

    r5 and r6 depend on a root of their quadratic; by default the adjoined root
    of :func:`kappa_extension` / :func:`alpha_extension` is used.  Any field
    element (e.g. a rational root at a splitting specialization) may be passed.
    """
    if i in _R_DISPLAYED:
        return from_coordinates(_R_DISPLAYED[i])
    if i == 5:
        return _r5(kappa_extension().root if root is None else root)
    if i == 6:
        return _r6(alpha_extension().root if root is None else root)
    raise YoungError(f"no representative r{i}")


def split_conditions(x: HeckeElement) -> Dict[str, HeckeElement]:
    """Residuals of X + rev(X) = 1, X^2 = X and X rev(X) = 0."""
    xr = x.reverse()
    one = x.algebra.one()
    return {"sum": x + xr - one, "idempotent": x * x - x, "orthogonal": x * xr}


def representatives_rank(indices=(1, 2, 3, 5)) -> int:
    rows = [list(representative(i).coords) for i in indices]
    return rank(FieldMatrix(rows))


def f(i: int) -> HeckeElement:
    """f1..f4 are r1, r2, r3, r5."""
    return representative({1: 1, 2: 2, 3: 3, 4: 5}[i])


# -- mixed symmetry -------------------------------------------------------------------

Y132_DISPLAYED = {
    "Id": "q/(q + 1 + q^2)",
    "b1": "-(q^3*K4 + 2*q^2*K4 + 2*q*K4 - 1 + K4)/(q^3 + 2*q^2 + 2*q + 1)",
    "b2": "(K4*q^4 + 2*q^3*K4 + 2*q^2*K4 + q*K4 + 1)/(q^3 + 2*q^2 + 2*q + 1)",
    "b12": "(q^3*K4 + 2*q^2*K4 + 2*q*K4 - 1 + K4)/(q^3 + 2*q^2 + 2*q + 1)",
    "b21": "-(K4*q^5 + K4*q^4 + q^3*K4 + q^3 + q^2*K4 + q*K4 + q + K4 - 1)/((q^3 + 2*q^2 + 2*q + 1)*q)",
    "b121": "-(K4*q^4 + q^3*K4 + q^2 - q*K4 + 1 - K4)/((q + 1 + q^2)*q*(1 + q))",
}

Y123_DISPLAYED = {
    "Id": "q/(q + 1 + q^2)",
    "b1": "(q^3*K4 - q^2 + 2*q^2*K4 + 2*q*K4 + K4)/((1 + q)*(q + 1 + q^2))",
    "b2": "-q*(q^3*K4 + 2*q^2*K4 + 2*q*K4 + q + K4)/((1 + q)*(q + 1 + q^2))",
    "b12": "-(q^3*K4 + 2*q^2*K4 + 2*q*K4 + q + K4)/(q^3 + 2*q^2 + 2*q + 1)",
    "b21": "(K4*q^5 + K4*q^4 + q^3*K4 + q^3 - q^2 + q^2*K4 + q*K4 - 1 + K4)/(q*(q^3 + 2*q^2 + 2*q + 1))",
    "b121": "(K4*q^4 + q^3*K4 + q^2 - q*K4 + 1 - K4)/((q + 1 + q^2)*q*(1 + q))",
}

R1_ALTERNATING = {
    "Id": "1/(1+q)", "b1": "-1/(1+q)", "b2": "q/(1+q)", "b12": "1/(1+q)",
    "b21": "-q/(1+q)", "b121": "-1/(1+q)",
}


def mixed_young(numbering: Sequence[int]) -> YoungOperator:
    numbering = tuple(numbering)
    excl = (q, 1 + q, 1 + q + q * q)
    if numbering == (1, 3, 2):
        Y = f(1) - young_full3()[1].element
    elif numbering == (1, 2, 3):
        Y = mixed_young((1, 3, 2)).element.reverse()
    else:
        raise YoungError(f"no mixed Young operator for numbering {numbering}")
    name = "Y21_" + "".join(map(str, numbering))
    return YoungOperator(name, (2, 1), numbering, Y, frozenset({"K4"}), excl)


def young_operators3() -> Dict[str, YoungOperator]:
    Y3, Y111 = young_full3()
    return {"Y3": Y3, "Y21_123": mixed_young((1, 2, 3)),
            "Y21_132": mixed_young((1, 3, 2)), "Y111": Y111}


# -- row symmetrizer R(13) -----------------------------------------------------------

R13_DISPLAYED = {
    "Id": "q/(1 + q)",
    "b1": "-(-q^2 + q^2*P3 + P3*q - 1 + P3)/((q + 1 + q^2)*q)",
    "b2": "P3",
    "b12": "(q^2*P3 + P3*q + P3 - 1)/(q*(1 + q + q^2))",
    "b21": "-(q^5*P3 + q^4*P3 + q^3*P3 + q^2*P3 - q^2 + P3*q - 1 + P3)/((1 + q)*q^2*(1 + q + q^2))",
    "b121": "-(q^4*P3 + q^3*P3 - P3*q + 1 - P3)/((1 + q)*q^2*(1 + q + q^2))",
}


def row_symmetrizer_R13() -> SplitFamily:
    """Solve ``R f1 = Y21_132`` together with ``R + rev(R) = 1``.

    The b2 coordinate is kept as the free parameter P3.
    """
    f1 = f(1)
    Y = mixed_young((1, 3, 2)).element
    one = f1.algebra.one()

    def cond(x):
        return list((x * f1 - Y).coords) + list((x + x.reverse() - one).coords)

    part, kernel = linear_solve_hecke(cond, 6, free_last=(2,))
    coords = list(part)
    for v in kernel:
        if v[2] != ONE:
            raise YoungError("unexpected kernel direction for R(13)")
        coords = [c + P3 * x for c, x in zip(coords, v)]
    return SplitFamily(f1.algebra.element(coords), ("P3",), ())


def R13() -> HeckeElement:
    return from_coordinates(R13_DISPLAYED)


def C13() -> HeckeElement:
    return R13().reverse()


# -- named operators (parser / CLI) ---------------------------------------------------

NAMED_OPERATORS = ("Y3", "Y111", "Y21_132", "Y21_123", "R12", "C12", "R13", "C13",
                   "f1", "f2", "f3", "f4", "r1", "r2", "r3", "r4", "r5", "r6")


def named_operator(name: str, algebra=None) -> HeckeElement:
    """Named operators as elements of H(3,q); R12/C12 use b1 inside H(3,q)."""
    H = algebra or H3()
    if name in ("Y3", "Y111", "Y21_132", "Y21_123"):
        el = young_operators3()[name].element
    elif name == "R12":
        el = q * H3().one() + H3().b(1)
    elif name == "C12":
        el = H3().one() - H3().b(1)
    elif name == "R13":
        el = R13()
    elif name == "C13":
        el = C13()
    elif name[0] in "fr" and name[1:].isdigit():
        i = int(name[1:])
        if name[0] == "f":
            if not 1 <= i <= 4:
                raise YoungError(f"unknown operator {name}")
            el = f(i)
        else:
            if i in (5, 6):
                raise YoungError(f"{name} needs an algebraic root; not available as a named operator")
            el = representative(i)
    else:
        raise YoungError(f"unknown operator {name}")
    if H is not el.algebra:
        el = H.element(el.coords)
    return el
