"""Left-regular representation of H(3,q) in the Young basis S.

S = [Y3, Y21_123, G Y21_123, alpha_q(G) Y21_132, Y21_132, Y111] with G the
Garnir element XX1.  Column j of M_x holds the S-coordinates of x S_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .field import ONE, ZERO, RationalFunction
from .garnir import garnir_element
from .hecke import HeckeElement
from .linalg import FieldMatrix, FieldPolynomial, LinearAlgebraError, charpoly, inverse, minpoly, rank
from .parser import parse_scalar
from .young import mixed_young, q, young_full3


class DependentBasisError(LinearAlgebraError):
    pass


S_NAMES = ("Y3", "Y21_123", "G*Y21_123", "alphaq(G)*Y21_132", "Y21_132", "Y111")


@dataclass(frozen=True)
class YoungBasis:
    elements: Tuple[HeckeElement, ...]
    bindings: Tuple[Tuple[str, object], ...]
    to_hecke: FieldMatrix  # columns: Hecke coordinates of S_j
    from_hecke: FieldMatrix  # inverse change of basis

    def coordinates(self, x: HeckeElement) -> List[RationalFunction]:
        return self.from_hecke.apply(list(x.coords))

    def element(self, coords: Sequence) -> HeckeElement:
        H = self.elements[0].algebra
        return H.element(self.to_hecke.apply(list(coords)))


def young_basis(bindings: Optional[Mapping[str, object]] = None) -> YoungBasis:
    """Build S, with parameters optionally specialized."""
    key = tuple(sorted((k, str(v)) for k, v in (bindings or {}).items()))
    return _young_basis_cached(key)


@lru_cache(maxsize=64)
def _young_basis_cached(key) -> YoungBasis:
    bindings = {k: parse_scalar(v) for k, v in key}
    Y3, Y111 = young_full3()
    Y123 = mixed_young((1, 2, 3)).element
    Y132 = mixed_young((1, 3, 2)).element
    G = garnir_element()
    elems = [Y3.element, Y123, G * Y123, G.alpha_q() * Y132, Y132, Y111.element]
    if bindings:
        elems = [e.specialize(bindings) for e in elems]
    P = FieldMatrix.from_columns([list(e.coords) for e in elems])
    if rank(P) < 6:
        raise DependentBasisError("Young basis elements are linearly dependent for these parameters")
    return YoungBasis(tuple(elems), key, P, inverse(P))


def left_regular_matrix(x: HeckeElement, basis: Optional[YoungBasis] = None) -> FieldMatrix:
    basis = basis or young_basis()
    return FieldMatrix.from_columns([basis.coordinates(x * s) for s in basis.elements])


def hecke_matrix(x: HeckeElement) -> FieldMatrix:
    """Left-regular matrix of x in the word basis."""
    return x.algebra.left_matrix(x)


# -- displayed data ----------------------------------------------------------------

EXPANSIONS_DISPLAYED: Dict[str, Tuple[str, ...]] = {
    "Id": ("1", "1", "0", "0", "1", "1"),
    "b1": ("1", "(K4*q^3 + 2*K4*q^2 - q^2 + 2*K4*q + K4)/(1 + q)", "p1*q/(p2*(1 + q))",
           "q^2/p3", "q*(-K4*q - K2*q + K6 + K5)/p4", "-q"),
    "b2": ("1", "-q*p5/(1 + q)", "-p6*q/(p2*(1 + q))", "-q^3/p3", "-p7/p4", "-q"),
    "b12": ("1", "p8/(1 + q)", "p9*q/(p2*(1 + q))", "(1 - q + q^2)*q^2/p3", "-q*p10/p4", "q^2"),
    "b21": ("1", "-q*p5/(1 + q)", "-p11*q^2/(p2*(1 + q))", "-q^3/p3",
            "-q^2*(-K4*q - K2*q + K6 + K5)/p4", "q^2"),
    "b121": ("1", "p13*q/(1 + q)", "p12*q^2/(p2*(1 + q))", "(q - 1)*q^3/p3", "-q^2*p14/p4", "-q^3"),
}

_Z = "0"

MATRICES_DISPLAYED: Dict[str, Tuple[Tuple[str, ...], ...]] = {
    "b1": (
        ("1", _Z, _Z, _Z, _Z, _Z),
        (_Z, "p15/(1 + q)", "-p16/(q*(1 + q))", _Z, _Z, _Z),
        (_Z, "q*p1/p17", "-p18/(1 + q)", _Z, _Z, _Z),
        (_Z, _Z, _Z, "-p19/p4", "q^2/p3", _Z),
        (_Z, _Z, _Z, "-p20/(q*p4)", "q*p21/p4", _Z),
        (_Z, _Z, _Z, _Z, _Z, "-q"),
    ),
    "b2": (
        ("1", _Z, _Z, _Z, _Z, _Z),
        (_Z, "-q*p5/(1 + q)", "p16/(1 + q)", _Z, _Z, _Z),
        (_Z, "-q*p6/p17", "p21/(1 + q)", _Z, _Z, _Z),
        (_Z, _Z, _Z, "q*p22/p4", "-q^3/p3", _Z),
        (_Z, _Z, _Z, "-p23/(q*p4)", "-p7/p4", _Z),
        (_Z, _Z, _Z, _Z, _Z, "-q"),
    ),
}


def _unit_matrix(entries: Mapping[Tuple[int, int], str]) -> Tuple[Tuple[str, ...], ...]:
    return tuple(tuple(entries.get((i, j), _Z) for j in range(1, 7)) for i in range(1, 7))


S_MATRICES_DISPLAYED: Dict[str, Tuple[Tuple[str, ...], ...]] = {
    "S1": _unit_matrix({(1, 1): "1"}),
    "S2": _unit_matrix({(2, 2): "1", (4, 4): "1", (5, 4): "p24/q^2"}),
    "S3": _unit_matrix({(3, 2): "1", (5, 4): "-p25/q^3"}),
    "S4": _unit_matrix({(2, 3): "-p25/q^3", (3, 3): "-p24/q^2", (4, 4): "-p24/q^2", (4, 5): "1"}),
    "S5": _unit_matrix({(3, 3): "1", (5, 4): "-p24/q^2", (5, 5): "1"}),
    "S6": _unit_matrix({(6, 6): "1"}),
}


def displayed_matrix(table: Sequence[Sequence[str]]) -> FieldMatrix:
    from .appendix import p_bindings

    b = p_bindings()
    return FieldMatrix([[parse_scalar(t, b) for t in row] for row in table])


def displayed_expansion(word: str) -> List[RationalFunction]:
    from .appendix import p_bindings

    b = p_bindings()
    return [parse_scalar(t, b) for t in EXPANSIONS_DISPLAYED[word]]


@dataclass(frozen=True)
class EntryMismatch:
    row: int
    col: int
    displayed: str
    computed: str


def compare_matrices(displayed: FieldMatrix, computed: FieldMatrix) -> List[EntryMismatch]:
    out = []
    for i in range(displayed.rows):
        for j in range(displayed.cols):
            if not (displayed[i, j] - computed[i, j]).is_zero():
                out.append(EntryMismatch(i + 1, j + 1, str(displayed[i, j]), str(computed[i, j])))
    return out


def S_matrix(i: int, basis: Optional[YoungBasis] = None) -> FieldMatrix:
    basis = basis or young_basis()
    return left_regular_matrix(basis.elements[i - 1], basis)


def word_matrix(word: str, basis: Optional[YoungBasis] = None) -> FieldMatrix:
    basis = basis or young_basis()
    H = basis.elements[0].algebra
    return left_regular_matrix(H.word(word), basis)


# -- recomputation of the cited polynomials ---------------------------------------------


def p_recomputations() -> Dict[str, Tuple[str, Callable[[], RationalFunction]]]:
    """For each p_i: where it is first cited and how to solve that entry for it.

    Other stored polynomials appearing in the same entry are taken as given.
    """
    from .appendix import polynomial as P

    def coord(word, k):
        return lambda: young_basis().coordinates(young_basis().elements[0].algebra.word(word))[k - 1]

    def entry(word, i, j):
        return lambda: word_matrix(word)[i - 1, j - 1]

    def smat(n, i, j):
        return lambda: S_matrix(n)[i - 1, j - 1]

    one_q = 1 + q
    sites = {
        "p1": ("b1 in S, S3-coefficient", lambda: coord("1", 3)() * P("p2") * one_q / q),
        "p2": ("b1 in S, S3-coefficient", lambda: P("p1") * q / (coord("1", 3)() * one_q)),
        "p3": ("b1 in S, S4-coefficient", lambda: q ** 2 / coord("1", 4)()),
        "p4": ("b1 in S, S5-coefficient",
               lambda: q * parse_scalar("-K4*q - K2*q + K6 + K5") / coord("1", 5)()),
        "p5": ("b2 in S, S2-coefficient", lambda: -coord("2", 2)() * one_q / q),
        "p6": ("b2 in S, S3-coefficient", lambda: -coord("2", 3)() * P("p2") * one_q / q),
        "p7": ("b2 in S, S5-coefficient", lambda: -coord("2", 5)() * P("p4")),
        "p8": ("b12 in S, S2-coefficient", lambda: coord("12", 2)() * one_q),
        "p9": ("b12 in S, S3-coefficient", lambda: coord("12", 3)() * P("p2") * one_q / q),
        "p10": ("b12 in S, S5-coefficient", lambda: -coord("12", 5)() * P("p4") / q),
        "p11": ("b21 in S, S3-coefficient", lambda: -coord("21", 3)() * P("p2") * one_q / q ** 2),
        "p12": ("b121 in S, S3-coefficient", lambda: coord("121", 3)() * P("p2") * one_q / q ** 2),
        "p13": ("b121 in S, S2-coefficient", lambda: coord("121", 2)() * one_q / q),
        "p14": ("b121 in S, S5-coefficient", lambda: -coord("121", 5)() * P("p4") / q ** 2),
        "p15": ("M_b1 entry (2,2)", lambda: entry("1", 2, 2)() * one_q),
        "p16": ("M_b1 entry (2,3)", lambda: -entry("1", 2, 3)() * q * one_q),
        "p17": ("M_b1 entry (3,2)", lambda: q * P("p1") / entry("1", 3, 2)()),
        "p18": ("M_b1 entry (3,3)", lambda: -entry("1", 3, 3)() * one_q),
        "p19": ("M_b1 entry (4,4)", lambda: -entry("1", 4, 4)() * P("p4")),
        "p20": ("M_b1 entry (5,4)", lambda: -entry("1", 5, 4)() * q * P("p4")),
        "p21": ("M_b1 entry (5,5)", lambda: entry("1", 5, 5)() * P("p4") / q),
        "p22": ("M_b2 entry (4,4)", lambda: entry("2", 4, 4)() * P("p4") / q),
        "p23": ("M_b2 entry (5,4)", lambda: -entry("2", 5, 4)() * q * P("p4")),
        "p24": ("M_S2 entry (5,4)", lambda: smat(2, 5, 4)() * q ** 2),
        "p25": ("M_S3 entry (5,4)", lambda: -smat(3, 5, 4)() * q ** 3),
    }
    return sites


def trace_det(M: FieldMatrix) -> Tuple[RationalFunction, RationalFunction]:
    from .linalg import determinant

    return M.trace(), determinant(M)


__all__ = [
    "DependentBasisError", "EXPANSIONS_DISPLAYED", "MATRICES_DISPLAYED", "S_MATRICES_DISPLAYED",
    "S_NAMES", "YoungBasis", "charpoly", "compare_matrices", "displayed_expansion", "displayed_matrix",
    "hecke_matrix", "left_regular_matrix", "minpoly", "p_recomputations", "S_matrix", "trace_det",
    "word_matrix", "young_basis", "FieldPolynomial",
]
