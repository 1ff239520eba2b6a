import pytest
import sympy as sp

from qyoung import garnir as Gn
from qyoung.field import PoleError, RationalFunction
from qyoung.hecke import hecke_algebra
from qyoung.linalg import FieldMatrix, rank
from qyoung.young import from_coordinates, mixed_young, young_n2, young_operators3

from oracles import BASIS, mul
from conftest import to_sympy

q = RationalFunction.var("q")
H = hecke_algebra(3)
OPS = {k: v.element for k, v in young_operators3().items()}
Y123, Y132 = OPS["Y21_123"], OPS["Y21_132"]


def as_sympy(x):
    return {w: to_sympy(c) for w, c in zip(x.algebra.words, x.coords) if not c.is_zero()}


def oracle_dimension(condition):
    """Nullity of the linear map G -> condition(G) on the word basis (sympy)."""
    unknown = sp.symbols("u0:6")
    G = dict(zip(BASIS, unknown))
    res = condition(G)
    M = sp.Matrix([[sp.diff(res.get(w, 0), u) for u in unknown] for w in BASIS])
    return 6 - M.rank(simplify=True)


def sub(x, y):
    out = dict(x)
    for w, c in y.items():
        out[w] = out.get(w, 0) - c
    return {w: sp.cancel(c) for w, c in out.items() if sp.cancel(c) != 0}


# -- Garnir elements -------------------------------------------------------------------


def test_xx1_scalar_coordinate():
    assert Gn.XX1()["Id"] == RationalFunction.parse("-K6*q + K2*q + K4")


@pytest.mark.parametrize("fn", [Gn.XX1, Gn.XX2, Gn.XX3])
def test_xx_annihilated(fn):
    assert (Y123 * fn()).is_zero()


def test_xx_independent():
    assert rank(FieldMatrix([list(fn().coords) for fn in (Gn.XX1, Gn.XX2, Gn.XX3)])) == 3


def test_annihilator_dimension_against_oracle():
    y = as_sympy(Y123)
    assert oracle_dimension(lambda G: mul(y, G)) == 4
    fam = Gn.solve_right_annihilator(mixed_young((1, 2, 3)))
    assert fam.dimension == 4
    for d in fam.directions:
        assert (Y123 * d).is_zero()


@pytest.mark.parametrize("k4", [0, 1, -3, RationalFunction.parse("q^2")])
def test_annihilator_dimension_stable_in_k4(k4):
    Y = mixed_young((1, 2, 3)).specialize({"K4": k4}).element
    assert Gn.solve_right_annihilator(Y).dimension == 4


def test_annihilator_contains_displayed():
    fam = Gn.solve_right_annihilator(Y123)
    for fn in (Gn.XX1, Gn.XX2, Gn.XX3):
        assert fam.contains(fn())
    assert fam.contains(H.zero())


def test_left_product_rank_on_annihilator():
    # G -> G Y has rank 1 on the 4-dimensional space {G : Y G = 0}
    fam = Gn.solve_right_annihilator(Y123)
    images = FieldMatrix([list((d * Y123).coords) for d in fam.directions])
    assert rank(images) == 1


def test_garnir_element_example():
    G = Gn.garnir_element(K2=1, K4=0, K5=0, K6=0)
    assert G == from_coordinates({"Id": "q", "b1": "1", "b2": "1/q"})
    assert (Y123 * G).is_zero()
    assert not (G * Y123).is_zero()


def test_garnir_element_generic():
    G = Gn.garnir_element()
    assert (Y123 * G).is_zero()
    assert not (G * Y123).is_zero()
    witness = {"K2": 1, "K4": 2, "K5": 3, "K6": 5}
    assert not (G.substitute(witness) * Y123.substitute(witness)).is_zero()


def test_garnir_degenerate_choice():
    with pytest.raises(Gn.DegenerateChoiceError):
        Gn.garnir_element(K2=0, K4=0, K5=0, K6=0, check_against=Y123)


def test_alpha_q_garnir_display():
    aG = Gn.alpha_q_garnir()
    assert aG == Gn.alpha_q_garnir_displayed()
    assert aG["b121"] == RationalFunction.parse("K6/q^3")
    assert aG["b12"] == RationalFunction.parse("(-K6 + K6*q + K5*q)/q^3")


def test_alpha_q_twice_recorded():
    G = Gn.garnir_element()
    twice = G.alpha_q().alpha_q()
    assert twice != G  # not an involution
    assert twice.substitute({"q": 1}) == G.substitute({"q": 1})


# -- intertwiners ---------------------------------------------------------------------------


def test_mixed_pair_family():
    fam = Gn.solve_intertwiner(Y123, Y132)
    assert fam.dimension == 4
    assert "K4" in set().union(*(d.variables() for d in fam.directions))
    # four linear directions over Q(q, K4) plus K4 itself
    from qyoung.suites import intertwiner_parameter_count

    assert intertwiner_parameter_count(fam) == 5
    for d in fam.directions:
        assert d * Y123 == Y132 * d


def test_mixed_pair_dimension_against_oracle():
    a, b = as_sympy(Y123), as_sympy(Y132)
    assert oracle_dimension(lambda T: sub(mul(T, a), mul(b, T))) == 4


def test_displayed_T():
    T = Gn.T_displayed()
    assert T * Y123 == Y132 * T
    assert not (T * Y123).is_zero()
    assert Gn.solve_intertwiner(Y123, Y132).contains(T)
    assert T["b2"] == -1 / (1 + q)
    assert T["b121"] == 1 / (q * (1 + q))


def test_displayed_T_excluded_value():
    with pytest.raises(PoleError):
        Gn.T_displayed().substitute({"K4": Gn.T_EXCLUDED_K4()})


@pytest.mark.parametrize("a,b", [("Y3", "Y111"), ("Y3", "Y21_123"), ("Y111", "Y21_132"),
                                 ("Y111", "Y3"), ("Y21_123", "Y3"), ("Y21_132", "Y111")])
def test_trivial_pairs_annihilate(a, b):
    assert Gn.check_no_intertwiner(OPS[a], OPS[b])


@pytest.mark.parametrize("a,b,dim", [("Y3", "Y111", 4), ("Y3", "Y21_123", 3), ("Y111", "Y21_132", 3)])
def test_trivial_pair_dimensions_against_oracle(a, b, dim):
    x, y = as_sympy(OPS[a]), as_sympy(OPS[b])
    assert oracle_dimension(lambda T: sub(mul(T, x), mul(y, T))) == dim
    assert Gn.solve_intertwiner(OPS[a], OPS[b]).dimension == dim


def test_mixed_pair_not_annihilating():
    assert not Gn.check_no_intertwiner(Y123, Y132)


def test_no_intertwiner_n2():
    Y2, Y11 = young_n2()
    assert Gn.solve_intertwiner(Y2, Y11).dimension == 0
