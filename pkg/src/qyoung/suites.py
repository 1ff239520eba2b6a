"""Verification suites: named groups of exact identity checks and their reports.

A check computes a *residual*; it passes iff the residual is exactly zero
(or, for predicate checks, iff the predicate holds).  In ``sampled`` mode the
inputs are specialized at random integer bindings before the computation and
a check passes iff it passes at every sample.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from .clifford import build_B
from .field import VARIABLES, FieldError, RationalFunction, as_scalar
from .hecke import HeckeElement, hecke_algebra
from .linalg import FieldMatrix, FieldPolynomial, LinearAlgebraError

SUITES = ("hecke", "n2", "n3", "garnir", "intertwine", "repmat", "appendix")
MODES = ("exact", "sampled")
SAMPLES = 20
SAMPLE_RANGE = (2, 10 ** 6)
_MAX_REDRAWS = 16


class UnknownSuiteError(KeyError):
    def __str__(self):
        return f"unknown suite {self.args[0]!r}; choose from {', '.join(SUITES + ('all',))}"


@dataclass(frozen=True)
class Outcome:
    ok: bool
    residual: str


class Predicate:
    """Residual stand-in for checks that test a property rather than an identity."""

    def __init__(self, holds: bool, detail: str = ""):
        self.holds = bool(holds)
        self.detail = detail or ("holds" if holds else "violated")


@dataclass(frozen=True)
class Check:
    id: str
    identity: str
    run: Callable[["Env"], object]


class Env:
    """Evaluation environment of one check run: exact (no bindings) or a sample."""

    def __init__(self, bindings: Optional[Mapping[str, int]] = None):
        self.bindings = dict(bindings) if bindings else None

    @property
    def sampled(self) -> bool:
        return self.bindings is not None

    @property
    def q(self) -> RationalFunction:
        return as_scalar(self.bindings["q"]) if self.sampled else RationalFunction.var("q")

    def H(self, n: int = 3):
        return hecke_algebra(n, str(self.q) if self.sampled else "q")

    def B(self, n: int = 4):
        return build_B(n, self.q if self.sampled else None)

    def s(self, x):
        """Specialize ``x`` at the sample bindings (identity in exact mode)."""
        if not self.sampled:
            return x
        b = self.bindings
        if isinstance(x, HeckeElement):
            return x.specialize(b)
        if isinstance(x, (list, tuple)):
            return type(x)(self.s(v) for v in x)
        if isinstance(x, dict):
            return {k: self.s(v) for k, v in x.items()}
        if isinstance(x, FieldPolynomial):
            return FieldPolynomial([c.substitute(b) for c in x.coeffs])
        if hasattr(x, "substitute"):
            return x.substitute(b)
        return x


# -- residual classification -------------------------------------------------------


def _is_zero(res) -> bool:
    if isinstance(res, Predicate):
        return res.holds
    if isinstance(res, (list, tuple)):
        return all(_is_zero(r) for r in res)
    if isinstance(res, dict):
        return all(_is_zero(r) for r in res.values())
    if isinstance(res, FieldPolynomial):
        return not res.coeffs
    return res.is_zero()


def _text(res) -> str:
    if isinstance(res, Predicate):
        return res.detail
    if isinstance(res, dict):
        bad = {k: v for k, v in res.items() if not _is_zero(v)}
        return "0" if not bad else "; ".join(f"{k}: {_text(v)}" for k, v in bad.items())
    if isinstance(res, (list, tuple)):
        bad = [(i, r) for i, r in enumerate(res) if not _is_zero(r)]
        return "0" if not bad else "; ".join(f"[{i}] {_text(r)}" for i, r in bad)
    if isinstance(res, FieldMatrix):
        bad = [f"({i + 1},{j + 1}) {res[i, j]}" for i in range(res.rows) for j in range(res.cols)
               if not res[i, j].is_zero()]
        return "0" if not bad else "; ".join(bad)
    return "0" if _is_zero(res) else str(res)


def _poly_diff(a: FieldPolynomial, b: FieldPolynomial) -> FieldPolynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    pad = lambda p: list(p.coeffs) + [as_scalar(0)] * (n - len(p.coeffs))  # noqa: E731
    return FieldPolynomial([x - y for x, y in zip(pad(a), pad(b))])


def _diff(computed: HeckeElement, displayed: HeckeElement, env: Env) -> HeckeElement:
    """``computed - displayed`` where the display is built symbolically."""
    return computed - env.s(displayed)


# -- suite: hecke ------------------------------------------------------------------


def _hecke_checks() -> List[Check]:
    from .hecke import (GRASSMANN_DISPLAYED, check_relations, gamma_q_member, hecke_inverse,
                        kw_transform, limit_q1)
    from .parser import evaluate_text
    from .young import from_coordinates

    checks = []
    for n in (2, 3, 4):
        checks.append(Check(
            f"relations_n{n}", f"quadratic, commutation and braid relations of b_i hold for n={n}",
            lambda env, n=n: [r.residual for r in check_relations(n, env.q if env.sampled else None).results]))
    for w, text in GRASSMANN_DISPLAYED.items():
        checks.append(Check(
            f"grassmann_b{w}", f"b{w} = {text}",
            lambda env, w=w, text=text: env.H().word(w).to_multivector() - env.s(evaluate_text(text))))

    def rev_generators(env):
        H = env.H()
        return [H.b(i).reverse() - ((1 - env.q) * H.one() - H.b(i)) for i in (1, 2)]

    checks.append(Check("reversion_generators", "rev(b_i) = (1-q) Id - b_i", rev_generators))
    checks.append(Check(
        "alpha_q_b1", "alpha_q(b1) = (q-1)/q Id + b1/q",
        lambda env: _diff(env.H().b(1).alpha_q(),
                          from_coordinates({"Id": "(q-1)/q", "b1": "1/q"}), env)))
    checks.append(Check(
        "alpha_q_b12", "alpha_q(b1 b2) = (1-2q+q^2)/q^2 Id + (q-1)/q^2 (b1 + b2) + b21/q^2",
        lambda env: _diff(env.H().word("12").alpha_q(), from_coordinates(
            {"Id": "(1 - 2*q + q^2)/q^2", "b1": "(q-1)/q^2", "b2": "(q-1)/q^2", "b21": "1/q^2"}), env)))

    def alpha_order(env):
        H = env.H()
        a1, a2 = H.b(1).alpha_q(), H.b(2).alpha_q()
        return [H.word("12").alpha_q() - a2 * a1, H.word("21").alpha_q() - a1 * a2,
                H.word("121").alpha_q() - a1 * a2 * a1]

    checks.append(Check("alpha_q_word_order", "alpha_q(b_i1...b_is) = alpha_q(b_is)...alpha_q(b_i1)",
                        alpha_order))

    def versors(env):
        H = env.H()
        return [H.word(w).alpha_q() * H.word(w) - H.one() for w in ("1", "2", "12", "21", "121")]

    checks.append(Check("alpha_q_versor_inverse", "alpha_q(v) v = Id for every basis word v", versors))

    def gamma(env):
        H = env.H()
        got = (gamma_q_member(H.b(1)), gamma_q_member(H.word("12")), gamma_q_member(H.one() + H.b(1)))
        return Predicate(got == (True, True, False), f"b1, b12, Id+b1 membership = {got}")

    checks.append(Check("gamma_q_membership", "b1, b1 b2 in Gamma_q; Id + b1 not in Gamma_q", gamma))
    inv_disp = from_coordinates({"Id": "(-2+q)/(2*(q-1))", "b1": "1/(2*(q-1))"})
    checks.append(Check(
        "inverse_id_plus_b1", "(Id + b1)^-1 = (q-2)/(2(q-1)) Id + b1/(2(q-1))",
        lambda env: _diff(hecke_inverse(env.H().one() + env.H().b(1)), inv_disp, env)))
    checks.append(Check(
        "inverse_differs_from_alpha_q", "alpha_q(Id + b1) != (Id + b1)^-1",
        lambda env: Predicate((env.H().one() + env.H().b(1)).alpha_q() != env.s(inv_disp))))
    checks.append(Check(
        "inverse_b1", "b1^-1 = alpha_q(b1)",
        lambda env: hecke_inverse(env.H().b(1)) - env.H().b(1).alpha_q()))

    def kw(env):
        H = env.H()
        g = [kw_transform(H.b(i)) for i in (1, 2)]
        return [x * x - (env.q - 1) * x - env.q * H.one() for x in g] + [
            kw_transform(H.word("12")) - g[0] * g[1], kw_transform(H.word("121")) - g[0] * g[1] * g[0]]

    checks.append(Check("kw_generators", "g_i = -b_i satisfy g_i^2 = (q-1) g_i + q", kw))

    def coxeter(env):
        H = hecke_algebra(3)
        s1, s2 = limit_q1(H.b(1)), limit_q1(H.b(2))
        one = s1.algebra.one()
        return [s1 * s1 - one, s2 * s2 - one, s1 * s2 * s1 - s2 * s1 * s2, (s1 * s2) ** 3 - one]

    checks.append(Check("coxeter_q1", "at q=1: s_i^2 = 1, braid, (s1 s2)^3 = 1", coxeter))
    return checks


# -- suite: n2 ---------------------------------------------------------------------


def _n2_checks() -> List[Check]:
    from .young import young_n2

    def ops(env):
        Y2, Y11 = young_n2()
        return env.s(Y2.element), env.s(Y11.element)

    def run(fn):
        return lambda env: fn(*ops(env))

    return [
        Check("idempotent_Y2", "Y(2)^2 = Y(2)", run(lambda a, b: a * a - a)),
        Check("idempotent_Y11", "Y(11)^2 = Y(11)", run(lambda a, b: b * b - b)),
        Check("annihilate_Y2_Y11", "Y(2) Y(11) = 0", run(lambda a, b: a * b)),
        Check("annihilate_Y11_Y2", "Y(11) Y(2) = 0", run(lambda a, b: b * a)),
        Check("unity", "Y(2) + Y(11) = Id", run(lambda a, b: a + b - a.algebra.one())),
        Check("reversion_swap", "rev(Y(2)) = Y(11)", run(lambda a, b: a.reverse() - b)),
    ]


# -- suite: n3 ---------------------------------------------------------------------


def _n3_checks() -> List[Check]:
    from . import young as Yg

    names = ("Y3", "Y21_123", "Y21_132", "Y111")

    def op(env, name):
        return env.s(Yg.young_operators3()[name].element)

    checks = [Check(f"idempotent_{n}", f"{n}^2 = {n}", lambda env, n=n: op(env, n) * op(env, n) - op(env, n))
              for n in names]

    def products(env):
        ys = {n: op(env, n) for n in names}
        return {f"{a}*{b}": ys[a] * ys[b] for a in names for b in names if a != b}

    checks.append(Check("pairwise_annihilation", "Y_a Y_b = 0 for all ordered pairs a != b", products))
    checks.append(Check("unity", "Y3 + Y21_123 + Y21_132 + Y111 = Id",
                        lambda env: sum((op(env, n) for n in names[1:]), op(env, "Y3")) - env.H().one()))
    checks.append(Check("reversion_pairs", "rev(Y3) = Y111 and rev(Y21_123) = Y21_132",
                        lambda env: [op(env, "Y3").reverse() - op(env, "Y111"),
                                     op(env, "Y21_123").reverse() - op(env, "Y21_132")]))
    checks.append(Check("Y111_alternating", "Y111 = (1 - b1 - b2 + b12 + b21 - b121)/((1+q+q^2)(1+q))",
                        lambda env: _diff(op(env, "Y111"), Yg.Y111_formula(), env)))
    checks.append(Check("Y21_132_displayed", "Y21_132 = f1 - Y111 matches its closed form",
                        lambda env: _diff(op(env, "Y21_132"), Yg.from_coordinates(Yg.Y132_DISPLAYED), env)))
    checks.append(Check("Y21_123_displayed", "Y21_123 = rev(Y21_132) matches its closed form",
                        lambda env: _diff(op(env, "Y21_123"), Yg.from_coordinates(Yg.Y123_DISPLAYED), env)))
    checks.append(Check(
        "kw_discrepancy_displayed",
        "C(13) - rev(R(13)) = 2(q^2-q) Id + (-1-q^2+2q)(b1+b2) + (1-q)(b12+b21)",
        lambda env: _diff(env.s(Yg.kw_discrepancy()), Yg.from_coordinates(Yg.KW_DISCREPANCY_DISPLAYED), env)))
    checks.append(Check("kw_discrepancy_q1", "C(13) - rev(R(13)) vanishes at q = 1",
                        lambda env: [c.substitute({"q": 1}) for c in Yg.kw_discrepancy().coords]))
    checks.append(Check("split_family_displayed", "general solution of X + rev(X) = Id",
                        lambda env: _diff(env.s(Yg.solve_reversion_split().element),
                                          Yg.from_coordinates(Yg.SPLIT_DISPLAYED), env)))
    for i in range(1, 7):
        checks.append(Check(f"split_conditions_r{i}", f"r{i}: X + rev(X) = Id, X^2 = X, X rev(X) = 0",
                            lambda env, i=i: Yg.split_conditions(env.s(Yg.representative(i)))))

    def rank4(env):
        from .linalg import rank

        rows = [list(env.s(Yg.representative(i)).coords) for i in (1, 2, 3, 5)]
        r = rank(FieldMatrix(rows))
        return Predicate(r == 4, f"rank = {r}")

    checks.append(Check("representatives_rank", "rank {r1, r2, r3, r5} = 4", rank4))
    checks.append(Check(
        "r1_alternating", "r1 at K4 = 1/(q+1) has alternating signs",
        lambda env: _diff(env.s(Yg.representative(1).substitute({"K4": 1 / (1 + Yg.q)})),
                          Yg.from_coordinates(Yg.R1_ALTERNATING), env)))
    checks.append(Check("R13_solved", "R(13) solved from R f1 = Y21_132 and R + rev(R) = Id",
                        lambda env: _diff(env.s(Yg.row_symmetrizer_R13().element), Yg.R13(), env)))

    def r13(env):
        return env.s(Yg.R13())

    checks.append(Check("R13_idempotent", "R(13)^2 = R(13)", lambda env: r13(env) * r13(env) - r13(env)))
    checks.append(Check("R13_f1", "R(13) f1 = Y21_132 (P3 disappears)",
                        lambda env: r13(env) * env.s(Yg.f(1)) - op(env, "Y21_132")))
    checks.append(Check("R13_C13_unity", "R(13) + C(13) = Id",
                        lambda env: r13(env) + r13(env).reverse() - env.H().one()))
    checks.append(Check("f1_C13", "rev(f1) C(13) = Y21_123",
                        lambda env: env.s(Yg.f(1)).reverse() * r13(env).reverse() - op(env, "Y21_123")))
    return checks


# -- suite: garnir -----------------------------------------------------------------


_WITNESS = {"K1": 1, "K2": 1, "K4": 2, "K5": 3, "K6": 5}


def _garnir_checks() -> List[Check]:
    from . import garnir as Gn
    from .linalg import rank
    from .young import mixed_young

    def y123(env):
        return env.s(mixed_young((1, 2, 3)).element)

    xx = {"XX1": Gn.XX1, "XX2": Gn.XX2, "XX3": Gn.XX3}
    checks = [Check(f"annihilate_{n}", f"Y21_123 {n} = 0", lambda env, fn=fn: y123(env) * env.s(fn()))
              for n, fn in xx.items()]

    def witness(env):
        Y = y123(env)
        if env.sampled:
            vals = [(env.s(fn()) * Y).is_zero() for fn in xx.values()]
        else:
            vals = [(fn().substitute(_WITNESS) * Y.substitute(_WITNESS)).is_zero() for fn in xx.values()]
        return Predicate(not any(vals), "G Y = 0 for " + ", ".join(n for n, v in zip(xx, vals) if v)
                         if any(vals) else "G Y != 0 at the witness")

    checks.append(Check("not_left_annihilated", "G Y21_123 != 0 at a witness specialization", witness))
    checks.append(Check("XX_independent", "XX1, XX2, XX3 are linearly independent",
                        lambda env: Predicate(rank(FieldMatrix([list(env.s(fn()).coords)
                                                                for fn in xx.values()])) == 3)))

    def family(env):
        fam = Gn.solve_right_annihilator(y123(env))
        Y = y123(env)
        images = FieldMatrix([list((d * Y).coords) for d in fam.directions])
        r = rank(images)
        return Predicate(fam.dimension == 4 and r == 1, f"dimension {fam.dimension}, rank of G -> G Y {r}")

    checks.append(Check("annihilator_space", "Y G = 0 has a 4-dimensional solution space; G -> G Y has rank 1 on it",
                        family))
    checks.append(Check("annihilator_contains_XX", "XX1, XX2, XX3 lie in the computed solution space",
                        lambda env: Predicate(all(Gn.solve_right_annihilator(y123(env)).contains(env.s(fn()))
                                                  for fn in xx.values()))))
    checks.append(Check("alpha_q_garnir_displayed", "alpha_q(G) matches its closed form (t6, t7, t8)",
                        lambda env: _diff(Gn.alpha_q_garnir(env.s(Gn.garnir_element())),
                                          Gn.alpha_q_garnir_displayed(), env)))
    return checks


# -- suite: intertwine -------------------------------------------------------------


def intertwiner_parameter_count(fam) -> int:
    """Linear directions plus the operator parameters the directions depend on."""
    params = set()
    for d in fam.directions:
        params |= d.variables()
    return fam.dimension + len(params - {"q"})


def _intertwine_checks() -> List[Check]:
    from . import garnir as Gn
    from .young import mixed_young, young_n2, young_operators3

    def ops(env):
        return {k: env.s(v.element) for k, v in young_operators3().items()}

    def mixed_count(env):
        if env.sampled:
            # K4 is bound here, so only the linear directions remain.
            fam = Gn.solve_intertwiner(*(ops(env)[k] for k in ("Y21_123", "Y21_132")))
            return Predicate(fam.dimension == 4, f"{fam.dimension} linear directions at fixed K4")
        fam = Gn.solve_intertwiner(*(ops(env)[k] for k in ("Y21_123", "Y21_132")))
        n = intertwiner_parameter_count(fam)
        return Predicate(n == 5, f"{fam.dimension} linear directions + K4 = {n} free parameters")

    checks = [Check("mixed_pair_parameters", "T Y21_123 = Y21_132 T has a 5-parameter solution family",
                    mixed_count)]

    def t_member(env):
        o = ops(env)
        fam = Gn.solve_intertwiner(o["Y21_123"], o["Y21_132"])
        T = env.s(Gn.T_displayed())
        ok = fam.contains(T) and not (T * o["Y21_123"]).is_zero()
        return Predicate(ok, "T in family and T Y21_123 != 0" if ok else "T not a nonzero intertwiner")

    checks.append(Check("T_member", "the displayed T is an intertwiner with T Y21_123 != 0", t_member))

    def t_excluded(env):
        try:
            Gn.T_displayed().substitute({"K4": Gn.T_EXCLUDED_K4()})
        except (FieldError, ZeroDivisionError):
            return Predicate(True, "T has a pole at the excluded K4")
        return Predicate(False, "T is defined at the excluded K4")

    checks.append(Check("T_excluded_K4", "T is undefined at K4 = (q^2+1)/(2(q^3+2q^2+2q+1))", t_excluded))
    for a, b in (("Y3", "Y111"), ("Y3", "Y21_123"), ("Y111", "Y21_132"),
                 ("Y111", "Y3"), ("Y21_123", "Y3"), ("Y21_132", "Y111")):
        checks.append(Check(
            f"annihilating_{a}_{b}", f"every T with T {a} = {b} T satisfies T {a} = 0",
            lambda env, a=a, b=b: Predicate(Gn.check_no_intertwiner(ops(env)[a], ops(env)[b]))))
    checks.append(Check(
        "mixed_pair_nontrivial", "some T with T Y21_123 = Y21_132 T has T Y21_123 != 0",
        lambda env: Predicate(not Gn.check_no_intertwiner(ops(env)["Y21_123"], ops(env)["Y21_132"]))))

    def n2_zero(env):
        Y2, Y11 = young_n2()
        fam = Gn.solve_intertwiner(env.s(Y2.element), env.s(Y11.element))
        return Predicate(fam.dimension == 0, f"dimension {fam.dimension}")

    checks.append(Check("n2_none", "T Y(2) = Y(11) T only for T = 0", n2_zero))
    return checks


# -- suite: repmat -----------------------------------------------------------------

_BLOCKS = ({0}, {1, 2}, {3, 4}, {5})


def _repmat_checks() -> List[Check]:
    from . import repmat as R
    from .linalg import charpoly, determinant, minpoly

    def basis(env):
        return R.young_basis(env.bindings)

    def word_m(env, w):
        return R.word_matrix(w, basis(env))

    checks = [Check("basis_independent", "the six Young basis elements are linearly independent",
                    lambda env: Predicate(basis(env) is not None))]
    for w in R.EXPANSIONS_DISPLAYED:
        word = "" if w == "Id" else w[1:]
        checks.append(Check(
            f"expansion_{w}", f"{w} in the Young basis matches its closed form",
            lambda env, w=w, word=word: [a - b for a, b in zip(
                basis(env).coordinates(basis(env).elements[0].algebra.word(word)),
                env.s(R.displayed_expansion(w)))]))
    for w in ("b1", "b2"):
        checks.append(Check(f"M_{w}_displayed", f"M_{w} matches the displayed block matrix",
                            lambda env, w=w: word_m(env, w[1:]) - env.s(R.displayed_matrix(R.MATRICES_DISPLAYED[w]))))

        def blocks(env, w=w):
            M = word_m(env, w[1:])
            stray = [M[i, j] for i in range(6) for j in range(6)
                     if not any(i in b and j in b for b in _BLOCKS)]
            return stray

        checks.append(Check(f"M_{w}_blocks", f"M_{w} vanishes outside the 1+2+2+1 blocks", blocks))
        checks.append(Check(f"M_{w}_trace", f"trace M_{w} = 3(q-1)",
                            lambda env, w=w: word_m(env, w[1:]).trace() - 3 * (env.q - 1)))
        checks.append(Check(f"M_{w}_det", f"det M_{w} = -q^3",
                            lambda env, w=w: determinant(word_m(env, w[1:])) + env.q ** 3))
        checks.append(Check(f"M_{w}_minpoly", f"minpoly M_{w} = (x-1)(x+q)",
                            lambda env, w=w: _poly_diff(minpoly(word_m(env, w[1:])),
                                                        FieldPolynomial.from_roots([1, -env.q]))))
        checks.append(Check(f"M_{w}_charpoly", f"charpoly M_{w} = (x-1)^3 (x+q)^3",
                            lambda env, w=w: _poly_diff(charpoly(word_m(env, w[1:])),
                                                        FieldPolynomial.from_roots([1] * 3 + [-env.q] * 3))))
        checks.append(Check(f"M_{w}_hecke_quadratic", f"M_{w}^2 = (1-q) M_{w} + q I",
                            lambda env, w=w: (lambda M: M @ M - M.scale(1 - env.q)
                                              - FieldMatrix.identity(6).scale(env.q))(word_m(env, w[1:]))))
    for i in range(1, 7):
        checks.append(Check(f"M_S{i}_displayed", f"M_S{i} matches the displayed matrix",
                            lambda env, i=i: R.S_matrix(i, basis(env))
                            - env.s(R.displayed_matrix(R.S_MATRICES_DISPLAYED[f"S{i}"]))))

    def multiplicative(env):
        b = basis(env)
        H = b.elements[0].algebra
        words = [H.word(w) for w in H.words]
        mats = [R.left_regular_matrix(x, b) for x in words]
        return [R.left_regular_matrix(x * y, b) - mx @ my
                for x, mx in zip(words, mats) for y, my in zip(words, mats)]

    checks.append(Check("multiplicative", "M_(xy) = M_x M_y for all 36 pairs of basis words", multiplicative))
    return checks


# -- suite: appendix ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _appendix_recomputed() -> Dict[str, Tuple[str, object]]:
    from .appendix import _recomputation_sites

    out = {}
    for name, loc, fn in _recomputation_sites():
        try:
            out[name] = (loc, fn())
        except Exception as exc:  # reported as a failing check
            out[name] = (loc, exc)
    return out


def _appendix_checks() -> List[Check]:
    from .appendix import appendix_table

    checks = []
    for entry in appendix_table():
        def run(env, entry=entry):
            rec = _appendix_recomputed().get(entry.name)
            if rec is None:
                return Predicate(False, "no recomputation site")
            if isinstance(rec[1], Exception):
                return Predicate(False, f"recomputation error: {rec[1]}")
            return env.s(entry.value - rec[1])

        checks.append(Check(entry.name, f"stored {entry.name} equals its recomputation", run))
    return checks


_BUILDERS = {
    "hecke": _hecke_checks, "n2": _n2_checks, "n3": _n3_checks, "garnir": _garnir_checks,
    "intertwine": _intertwine_checks, "repmat": _repmat_checks, "appendix": _appendix_checks,
}


def suite_checks(name: str) -> List[Check]:
    if name == "all":
        return [Check(f"{s}.{c.id}", c.identity, c.run) for s in SUITES for c in _BUILDERS[s]()]
    if name not in _BUILDERS:
        raise UnknownSuiteError(name)
    return [Check(f"{name}.{c.id}", c.identity, c.run) for c in _BUILDERS[name]()]


# -- running -----------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    id: str
    identity: str
    status: str
    residual: str

    def as_dict(self) -> Dict[str, str]:
        return {"id": self.id, "identity": self.identity, "status": self.status, "residual": self.residual}


@dataclass
class VerificationReport:
    suite: str
    mode: str
    seed: Optional[int]
    samples: int
    results: List[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.status == "PASS" for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def counts(self) -> Dict[str, int]:
        passed = sum(r.status == "PASS" for r in self.results)
        return {"pass": passed, "fail": len(self.results) - passed}

    def as_dict(self) -> dict:
        return {"suite": self.suite, "mode": self.mode, "seed": self.seed, "samples": self.samples,
                "summary": self.counts(), "checks": [r.as_dict() for r in self.results]}

    def to_json(self) -> str:
        # wall-clock time is left out so identical runs give identical bytes
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite} ({self.mode}" + (f", seed {self.seed}, {self.samples} samples"
                                                       if self.mode == "sampled" else "") + ")"]
        for r in self.results:
            line = f"{r.status}  {r.id}  {r.identity}"
            if r.status != "PASS":
                line += f"\n      residual: {r.residual}"
            lines.append(line)
        c = self.counts()
        lines.append(f"{c['pass']} passed, {c['fail']} failed in {self.elapsed:.2f}s")
        return "\n".join(lines) + "\n"


def _draw(seed: int, k: int, attempt: int) -> Dict[str, int]:
    # shared by all checks of a run, so per-q algebras are built once per sample
    rng = random.Random(f"{seed}:{k}:{attempt}")
    return {v: rng.randint(*SAMPLE_RANGE) for v in VARIABLES}


def _run_exact(check: Check) -> Outcome:
    res = check.run(Env())
    return Outcome(_is_zero(res), _text(res))


def _run_sampled(check: Check, seed: int, samples: int) -> Outcome:
    from .young import YoungError

    for k in range(samples):
        for attempt in range(_MAX_REDRAWS):
            env = Env(_draw(seed, k, attempt))
            try:
                res = env.s(check.run(env))
                break
            except (FieldError, ZeroDivisionError, YoungError, LinearAlgebraError):
                continue  # the draw hit an excluded value; redraw
        else:
            return Outcome(False, f"no admissible sample after {_MAX_REDRAWS} draws")
        if not _is_zero(res):
            return Outcome(False, f"{_text(res)} at {env.bindings}")
    return Outcome(True, "0")


def _evaluate(check: Check, mode: str, seed: int, samples: int) -> CheckResult:
    try:
        out = _run_exact(check) if mode == "exact" else _run_sampled(check, seed, samples)
    except Exception as exc:  # an error is a failure, never a crash of the suite
        out = Outcome(False, f"error: {type(exc).__name__}: {exc}")
    return CheckResult(check.id, check.identity, "PASS" if out.ok else "FAIL", out.residual)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("QYOUNG_THREADS", "1")))
    except ValueError:
        return 1


def run_suite(name: str, mode: str = "exact", seed: int = 0, samples: int = SAMPLES,
              threads: Optional[int] = None) -> VerificationReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose exact or sampled")
    checks = suite_checks(name)
    threads = threads or thread_count()
    start = time.perf_counter()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: _evaluate(c, mode, seed, samples), checks))
    else:
        results = [_evaluate(c, mode, seed, samples) for c in checks]
    report = VerificationReport(name, mode, seed if mode == "sampled" else None,
                                samples if mode == "sampled" else 0, results)
    report.elapsed = time.perf_counter() - start
    return report


__all__ = ["Check", "CheckResult", "Env", "Outcome", "Predicate", "SUITES", "UnknownSuiteError",
           "VerificationReport", "run_suite", "suite_checks", "intertwiner_parameter_count"]
