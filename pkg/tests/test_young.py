import math
from fractions import Fraction

import pytest
import sympy as sp

from qyoung import young as Yg
from qyoung.field import RationalFunction
from qyoung.hecke import hecke_algebra, limit_q1
from qyoung.young import (ExcludedParameterError, YoungError, from_coordinates, kw_discrepancy,
                          mixed_young, representative, split_conditions, young_full3, young_n2)

from oracles import Qs, assert_matches, mul, rev

q = RationalFunction.var("q")
H = hecke_algebra(3)
S = sp.Symbol


def test_named_symbols():
    assert Yg.q == q


# -- n = 2 --------------------------------------------------------------------------


def test_r12_square():
    R = Yg.R12()
    assert R * R == (1 + q) * R


def test_young_n2_identities():
    Y2, Y11 = young_n2()
    a, b = Y2.element, Y11.element
    assert Y2.is_idempotent() and Y11.is_idempotent()
    assert (a * b).is_zero() and (b * a).is_zero()
    assert a + b == a.algebra.one()
    assert a.reverse() == b and b.reverse() == a
    assert Yg.R12().reverse() == Yg.C12()


def test_young_n2_limits():
    Y2, Y11 = young_n2()
    H1 = hecke_algebra(2, "1")
    s1 = H1.b(1)
    assert limit_q1(Y2.element) == (H1.one() + s1) / 2
    assert limit_q1(Y11.element) == (H1.one() - s1) / 2


def test_exclusions_rejected():
    Y2, _ = young_n2()
    with pytest.raises(ExcludedParameterError):
        Y2.specialize({"q": -1})


def test_partition_must_match_numbering():
    with pytest.raises(YoungError):
        Yg.YoungOperator("bad", (2,), (1, 2, 3), H.one())


# -- n = 3 full (anti)symmetrizers -----------------------------------------------------


def test_full_symmetrizers():
    Y3, Y111 = young_full3()
    assert Y3.is_idempotent() and Y111.is_idempotent()
    assert (Y3.element * Y111.element).is_zero() and (Y111.element * Y3.element).is_zero()
    assert Y3.element.reverse() == Y111.element
    assert Y111.element == Yg.Y111_formula()


def test_y3_against_oracle():
    den = (1 + Qs + Qs ** 2) * (1 + Qs)
    y3 = {"": Qs ** 3 / den, "1": Qs ** 2 / den, "2": Qs ** 2 / den, "12": Qs / den, "21": Qs / den,
          "121": 1 / den}
    assert mul(y3, y3) == {w: sp.cancel(c) for w, c in y3.items()}
    assert_matches(young_full3()[1].element, rev(y3))


def test_y3_limit_is_classical_symmetrizer():
    H1 = hecke_algebra(3, "1")
    s1, s2, one = H1.b(1), H1.b(2), H1.one()
    classical = (one + s1) * (one + s2 + s2 * s1) / 6  # coset factorization of sum over S3
    assert limit_q1(young_full3()[0].element) == classical
    assert classical.coords == tuple(RationalFunction(1, 6) for _ in range(6))


# -- KW discrepancy ----------------------------------------------------------------------


def test_kw_discrepancy_against_oracle():
    expected = {"": sp.Integer(1), "121": sp.Integer(-1)}
    r13 = {"": Qs ** 3, "121": sp.Integer(1)}
    for w, c in rev(r13).items():
        expected[w] = expected.get(w, 0) - c
    assert_matches(kw_discrepancy(), expected)


def test_kw_discrepancy_relation_to_display():
    displayed = from_coordinates(Yg.KW_DISCREPANCY_DISPLAYED)
    assert kw_discrepancy() == -displayed  # computed value is the negated display


def test_kw_discrepancy_displayed_at_q2():
    displayed = from_coordinates(Yg.KW_DISCREPANCY_DISPLAYED)
    assert [c.substitute({"q": 2}) for c in displayed.coords] == [4, -1, -1, -1, -1, 0]


def test_kw_discrepancy_vanishes_at_q1():
    assert limit_q1(kw_discrepancy()).is_zero()


# -- reversion split ------------------------------------------------------------------------


def test_split_family_matches_display():
    fam = Yg.solve_reversion_split()
    assert fam.element == from_coordinates(Yg.SPLIT_DISPLAYED)
    assert fam.free == ("K2", "K3", "K4", "K6")


def test_split_family_against_oracle():
    K = sp.symbols("K1:7")
    X = dict(zip(("", "1", "2", "12", "21", "121"), K))
    Xr = rev(X)
    eqs = [sp.together(X.get(w, 0) + Xr.get(w, 0) - (1 if w == "" else 0))
           for w in ("", "1", "2", "12", "21", "121")]
    sol = sp.solve(eqs, [K[0], K[4]], dict=True)[0]
    fam = Yg.solve_reversion_split().element
    assert_matches(fam, {w: v.subs(sol) for w, v in X.items()})


def test_split_family_identity_and_point():
    X = Yg.solve_reversion_split().element
    assert X + X.reverse() == H.one()
    base = X.substitute({"K2": 0, "K3": 0, "K4": 0, "K6": 0})
    assert base == H.one() / 2


# -- representatives -------------------------------------------------------------------------


@pytest.mark.parametrize("i", range(1, 7))
def test_representative_conditions(i):
    for name, res in split_conditions(representative(i)).items():
        assert res.is_zero(), (i, name)


def test_r1_alternating():
    r1 = representative(1).substitute({"K4": 1 / (q + 1)})
    assert r1 == from_coordinates(Yg.R1_ALTERNATING)


def test_r1_idempotent_against_oracle():
    r1 = {w: sp.sympify(str(c).replace("^", "**"), locals={"q": Qs, "K4": S("K4")})
          for w, c in zip(H.words, representative(1).coords)}
    assert mul(r1, r1) == {w: sp.cancel(c) for w, c in r1.items() if c != 0}


def test_representatives_rank():
    assert Yg.representatives_rank() == 4


def test_f_naming():
    assert Yg.f(1) == representative(1)
    assert Yg.f(3) == representative(3)
    assert Yg.f(4).coords == representative(5).coords


def _rational_roots(ext, b):
    c2, c1, c0 = (c.evaluate(b) for c in (ext.c2, ext.c1, ext.c0))
    d = c1 * c1 - 4 * c2 * c0
    r = Fraction(math.isqrt(d.numerator), math.isqrt(d.denominator))
    assert r * r == d
    return [(-c1 + s * r) / (2 * c2) for s in (1, -1)]


@pytest.mark.parametrize("i,ext", [(5, Yg.kappa_extension), (6, Yg.alpha_extension)])
def test_r5_r6_at_splitting_specialization(i, ext):
    """Extension-free cross-check at parameters where the quadratic splits over Q."""
    b = {"q": 2, "K2": -2, "K4": -2}
    for root in _rational_roots(ext(), b):
        x = representative(i, root=root).specialize(b)
        for name, res in split_conditions(x).items():
            assert res.is_zero(), (i, root, name)


def test_r5_r6_not_named_operators():
    with pytest.raises(YoungError):
        Yg.named_operator("r5")


# -- mixed symmetry --------------------------------------------------------------------------


def test_mixed_young_displayed():
    Y132, Y123 = mixed_young((1, 3, 2)), mixed_young((1, 2, 3))
    assert Y132.element == from_coordinates(Yg.Y132_DISPLAYED)
    assert Y123.element == from_coordinates(Yg.Y123_DISPLAYED)
    assert Y132.element["Id"] == q / (q + 1 + q * q)
    assert Y132.parameters == frozenset({"K4"})


def test_mixed_young_unknown_numbering():
    with pytest.raises(YoungError):
        mixed_young((2, 1, 3))


def test_young_decomposition():
    ops = Yg.young_operators3()
    els = {k: v.element for k, v in ops.items()}
    for name, op in ops.items():
        assert op.is_idempotent(), name
    for a in els:
        for b in els:
            if a != b:
                assert (els[a] * els[b]).is_zero(), (a, b)
    assert sum(els.values(), H.zero()) == H.one()
    assert els["Y21_123"].reverse() == els["Y21_132"]


def test_mixed_young_specialize():
    Y = mixed_young((1, 3, 2)).specialize({"K4": 3})
    assert Y.is_idempotent() and "K4" not in Y.parameters


# -- R(13) ------------------------------------------------------------------------------------


def test_R13_solved_matches_display():
    fam = Yg.row_symmetrizer_R13()
    assert fam.element == Yg.R13()
    assert fam.free == ("P3",)


def test_R13_properties():
    R, f1 = Yg.R13(), Yg.f(1)
    assert R * R == R
    product = R * f1
    assert product == mixed_young((1, 3, 2)).element
    assert "P3" not in product.variables()
    assert R + Yg.C13() == H.one()
    assert f1.reverse() * Yg.C13() == mixed_young((1, 2, 3)).element


def test_named_operators_available():
    for name in Yg.NAMED_OPERATORS:
        if name in ("r5", "r6"):
            continue
        assert Yg.named_operator(name).algebra == H
