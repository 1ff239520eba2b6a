"""Stored abbreviation polynomials p1..p25, t1..t8 and their reconciliation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Dict, List, Optional, Tuple

from .field import RationalFunction
from .parser import parse_scalar


@dataclass(frozen=True)
class NamedPolynomial:
    name: str
    text: str
    value: RationalFunction
    source: str  # "abbreviation" for p*, "auxiliary" for t*


def _load_lines() -> List[Tuple[str, str]]:
    raw = resources.files("qyoung").joinpath("data/appendix.txt").read_text()
    out = []
    for line in raw.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, text = line.partition(":=")
        out.append((name.strip(), text.strip()))
    return out


@lru_cache(maxsize=None)
def appendix_table() -> Tuple[NamedPolynomial, ...]:
    return tuple(
        NamedPolynomial(name, text, parse_scalar(text), "abbreviation" if name.startswith("p") else "auxiliary")
        for name, text in _load_lines()
    )


def polynomial(name: str) -> RationalFunction:
    for entry in appendix_table():
        if entry.name == name:
            return entry.value
    raise KeyError(name)


def p_bindings() -> Dict[str, RationalFunction]:
    return {e.name: e.value for e in appendix_table()}


# -- reconciliation --------------------------------------------------------------


@dataclass(frozen=True)
class AppendixCheck:
    name: str
    location: str
    status: str  # PASS / FAIL
    stored: str
    recomputed: str
    residual: str

    def as_dict(self) -> Dict[str, str]:
        return {"name": self.name, "location": self.location, "status": self.status,
                "stored": self.stored, "recomputed": self.recomputed, "residual": self.residual}


def _recomputation_sites() -> List[Tuple[str, str, Callable[[], RationalFunction]]]:
    """(name, location, recompute) for each polynomial cited by a displayed formula.

    ``recompute`` solves the cited displayed entry for the polynomial, using
    the independently computed coefficient and the other (stored) factors.
    """
    from . import garnir, repmat
    from .young import q

    sites: List[Tuple[str, str, Callable[[], RationalFunction]]] = []
    for name, (loc, solver) in repmat.p_recomputations().items():
        sites.append((name, loc, solver))

    G = garnir.XX1
    sites.append(("t1", "XX1 b2-coordinate times q", lambda: G()["b2"] * q))
    sites.append(("t2", "XX2 b1-coordinate times q^2(1+q)",
                  lambda: _annihilator_fit("b1", "K1", "K5", "K6") * q ** 2 * (1 + q)))
    sites.append(("t3", "XX2 b2-coordinate times q^3(1+q)",
                  lambda: _annihilator_fit("b2", "K1", "K5", "K6") * q ** 3 * (1 + q)))
    D = q ** 3 + 2 * q ** 2 + 2 * q + 1
    sites.append(("t4", "XX3 b1-coordinate times q(q^3+2q^2+2q+1)",
                  lambda: _annihilator_fit("b1", "K1", "K5", "K6", b12=-(q - 1) / D) * q * D))
    sites.append(("t5", "XX3 b2-coordinate times q^2(q^3+2q^2+2q+1)",
                  lambda: _annihilator_fit("b2", "K1", "K5", "K6", b12=-(q - 1) / D) * q ** 2 * D))
    aG = lambda: garnir.alpha_q_garnir()
    sites.append(("t6", "alpha_q(G) Id-coordinate times -q^3", lambda: -aG()["Id"] * q ** 3))
    sites.append(("t7", "alpha_q(G) b1-coordinate times q^3", lambda: aG()["b1"] * q ** 3))
    sites.append(("t8", "alpha_q(G) b2-coordinate times -q^3", lambda: -aG()["b2"] * q ** 3))
    return sites


def _annihilator_fit(coord: str, *free: str, b12=None) -> RationalFunction:
    """Coordinate of the annihilator member with Id, b21, b121 coordinates set
    to the named symbols and (for XX2) b12 = -1/(q(1+q)) or the given value."""
    from .garnir import solve_right_annihilator
    from .linalg import FieldMatrix, solve_unique
    from .young import mixed_young, q

    fam = solve_right_annihilator(mixed_young((1, 2, 3)))
    H = fam.particular.algebra
    if b12 is None:
        b12 = -1 / (q * (1 + q))
    fixed = {"Id": RationalFunction.var(free[0]), "b12": b12,
             "b21": RationalFunction.var(free[1]), "b121": RationalFunction.var(free[2])}
    names = list(fixed)
    rows = [[d[n] for d in fam.directions] for n in names]
    c = solve_unique(FieldMatrix(rows), [fixed[n] for n in names])
    return fam.member(c)[coord]


def verify_appendix(perturb: Optional[Dict[str, RationalFunction]] = None) -> List[AppendixCheck]:
    """Compare every stored polynomial with its recomputation.

    ``perturb`` adds offsets to stored values (used as a negative control).
    """
    stored = p_bindings()
    if perturb:
        stored = {k: (v + perturb[k] if k in perturb else v) for k, v in stored.items()}
    recomputed = {}
    locations = {}
    for name, loc, fn in _recomputation_sites():
        try:
            recomputed[name] = fn()
        except Exception as exc:  # report, never crash the reconciliation
            recomputed[name] = exc
        locations[name] = loc
    out = []
    for entry in appendix_table():
        name = entry.name
        s = stored[name]
        if name not in recomputed:
            out.append(AppendixCheck(name, "not cited by a recomputable display", "FAIL",
                                     str(s), "-", "no recomputation"))
            continue
        r = recomputed[name]
        if isinstance(r, Exception):
            out.append(AppendixCheck(name, locations[name], "FAIL", str(s), "-", f"error: {r}"))
            continue
        residual = s - r
        out.append(AppendixCheck(name, locations[name], "PASS" if residual.is_zero() else "FAIL",
                                 str(s), str(r), str(residual)))
    return out
