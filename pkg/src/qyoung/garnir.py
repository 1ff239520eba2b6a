"""Garnir elements and intertwiners as linear systems over the coefficient field.

Conditions are assembled in the Grassmann blade basis: every product is
expanded as a multivector and each blade coefficient gives one equation in
the six unknown Hecke coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .clifford import Multivector, cmul
from .field import ZERO, RationalFunction
from .hecke import HeckeElement
from .linalg import FieldMatrix, nullspace, rank
from .young import YoungError, YoungOperator, from_coordinates, q

__all__ = [
    "SolutionFamily", "DegenerateChoiceError", "grassmann_system", "solve_right_annihilator",
    "solve_intertwiner", "check_no_intertwiner", "garnir_element", "alpha_q_garnir",
    "alpha_q_garnir_displayed", "XX1", "XX2", "XX3", "T_displayed", "T_EXCLUDED_K4",
]


class DegenerateChoiceError(YoungError):
    pass


@dataclass(frozen=True)
class SolutionFamily:
    particular: HeckeElement
    directions: Tuple[HeckeElement, ...]
    names: Tuple[str, ...]

    @property
    def dimension(self) -> int:
        return len(self.directions)

    def member(self, values: Sequence) -> HeckeElement:
        out = self.particular
        for c, d in zip(values, self.directions):
            out = out + c * d
        return out

    def general(self) -> HeckeElement:
        return self.member([RationalFunction.var(n) if n in _VARS else ZERO for n in self.names])

    def contains(self, x: HeckeElement) -> bool:
        """Membership test: x - particular lies in the span of the directions."""
        diff = x - self.particular
        if not self.directions:
            return diff.is_zero()
        M = FieldMatrix([list(d.coords) for d in self.directions])
        return rank(M) == rank(FieldMatrix([list(d.coords) for d in self.directions] + [list(diff.coords)]))


_VARS = ("q", "K1", "K2", "K3", "K4", "K5", "K6", "P3")


def grassmann_system(columns: Sequence[Multivector]) -> FieldMatrix:
    """Matrix whose column k holds the blade coefficients of ``columns[k]``."""
    masks = sorted({m for c in columns for m in c.terms})
    if not masks:
        return FieldMatrix([[ZERO] * len(columns)])
    return FieldMatrix([[c.terms.get(m, ZERO) for c in columns] for m in masks])


def _homogeneous_family(H, columns: Sequence[Multivector]) -> SolutionFamily:
    kernel = nullspace(grassmann_system(columns))
    directions = tuple(H.element(v) for v in kernel)
    names = tuple(f"c{i + 1}" for i in range(len(directions)))
    return SolutionFamily(H.zero(), directions, names)


def _element(Y):
    return Y.element if isinstance(Y, YoungOperator) else Y


def solve_right_annihilator(Y) -> SolutionFamily:
    """All G with ``Y G = 0``."""
    Y = _element(Y)
    H = Y.algebra
    y = Y.to_multivector()
    cols = [cmul(y, w.to_multivector(), H.B) for w in H.basis_elements()]
    return _homogeneous_family(H, cols)


def solve_intertwiner(Y_a, Y_b) -> SolutionFamily:
    """All T with ``T Y_a = Y_b T``."""
    Y_a, Y_b = _element(Y_a), _element(Y_b)
    H = Y_a.algebra
    ya, yb = Y_a.to_multivector(), Y_b.to_multivector()
    cols = []
    for w in H.basis_elements():
        t = w.to_multivector()
        cols.append(cmul(t, ya, H.B) - cmul(yb, t, H.B))
    return _homogeneous_family(H, cols)


def check_no_intertwiner(Y_a, Y_b) -> bool:
    """True iff every intertwiner T (T Y_a = Y_b T) satisfies T Y_a = 0."""
    fam = solve_intertwiner(Y_a, Y_b)
    Y_a = _element(Y_a)
    return all((d * Y_a).is_zero() for d in fam.directions)


# -- displayed Garnir solutions ------------------------------------------------------

T_TEXT = {
    "t1": "K6*q^2 + K4*q^2 - K5*q - K4*q - K6*q + K2 + K4",
    "t2": "K6*q^3 + K6*q^2 + q^2*K1 + q*K1 + 1",
    "t3": "q^5*K6 - q^4*K5 - q^3 - q^3*K5 + q^2*K1 + K6*q^2 + q^2 + q*K1 - q + 1",
    "t4": "q - 1 + K6*q + 2*K6*q^2 + 2*K6*q^3 + 2*q*K1 + 2*q^2*K1 + K1 + q^3*K1 + q^4*K6",
    "t5": ("q^6*K6 + q^5*K6 - q^5*K5 + q^4*K6 - q^4 - 2*q^4*K5 + K6*q^3 + q^3*K1 + 2*q^3"
           " - 2*q^3*K5 - K5*q^2 + K6*q^2 + 2*q^2*K1 - 2*q^2 + 2*q*K1 + K6*q + 2*q + K1 - 1"),
}


def XX1() -> HeckeElement:
    t1 = T_TEXT["t1"]
    return from_coordinates({"Id": "-K6*q + K2*q + K4", "b1": "K2", "b2": f"({t1})/q",
                             "b12": "K4", "b21": "K5", "b121": "K6"})


def XX2() -> HeckeElement:
    return from_coordinates({"Id": "K1", "b1": f"({T_TEXT['t2']})/(q^2*(1 + q))",
                             "b2": f"({T_TEXT['t3']})/(q^3*(1 + q))", "b12": "-1/(q*(1 + q))",
                             "b21": "K5", "b121": "K6"})


def XX3() -> HeckeElement:
    d = "(q^3 + 2*q^2 + 2*q + 1)"
    return from_coordinates({"Id": "K1", "b1": f"({T_TEXT['t4']})/(q*{d})",
                             "b2": f"({T_TEXT['t5']})/(q^2*{d})", "b12": f"-(q - 1)/{d}",
                             "b21": "K5", "b121": "K6"})


def garnir_element(K2=None, K4=None, K5=None, K6=None, *,
                   check_against: Optional[HeckeElement] = None) -> HeckeElement:
    """XX1 with the given parameter values; omitted parameters stay symbolic.

    With ``check_against`` (a mixed Young operator) the choice is rejected if
    ``G Y`` vanishes.
    """
    bindings = {n: v for n, v in (("K2", K2), ("K4", K4), ("K5", K5), ("K6", K6)) if v is not None}
    G = XX1().substitute(bindings) if bindings else XX1()
    if check_against is not None and (G * check_against).is_zero():
        raise DegenerateChoiceError("G Y vanishes for this parameter choice")
    return G


ALPHA_G_TEXT = {
    "t6": ("K2*q - 2*K6*q + K6*q^3 + K6*q^2 + K5*q^2 + K6 - q^3*K2 - q^4*K2 - K5*q - q^4*K4"),
    "t7": "K6 + q^2*K2 - K5*q + K5*q^2 - 2*K6*q + K4*q^2 - K4*q + K6*q^2",
    "t8": "-K2*q + 2*K6*q - K6 + K5*q - K6*q^3 - K4*q^3",
}


def alpha_q_garnir_displayed() -> HeckeElement:
    t = ALPHA_G_TEXT
    return from_coordinates({
        "Id": f"-({t['t6']})/q^3", "b1": f"({t['t7']})/q^3", "b2": f"-({t['t8']})/q^3",
        "b12": "(-K6 + K6*q + K5*q)/q^3", "b21": "(-K6 + K4*q + K6*q)/q^3", "b121": "K6/q^3",
    })


def alpha_q_garnir(G: Optional[HeckeElement] = None) -> HeckeElement:
    return (G if G is not None else garnir_element()).alpha_q()


# -- displayed intertwiner -----------------------------------------------------------

_T_DEN = "q*(2*K4 - q^2 - q - q^3 + 2*q^4*K4 + 8*K4*q^2 + 6*K4*q + 6*K4*q^3 - 1)"


def T_displayed() -> HeckeElement:
    return from_coordinates({
        "Id": f"(1 - K4 - q^3 - K4*q + K4*q^3 + q^4*K4)/({_T_DEN})",
        "b1": f"2*(-1 - q - q^2 + K4 + 2*K4*q + K4*q^3 + 2*K4*q^2)/({_T_DEN})",
        "b2": "-1/(1 + q)", "b12": "-1/(q*(1 + q))", "b21": "1/(1 + q)", "b121": "1/(q*(1 + q))",
    })


def T_EXCLUDED_K4() -> RationalFunction:
    return (q * q + 1) / (2 * (q ** 3 + 2 * q * q + 2 * q + 1))
