"""Text forms for scalars, multivectors and Hecke elements.

Grammar (loosest to tightest)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | wedge
    wedge  := atom ("^" atom)*
    atom   := INT | NAME | NAME "(" expr ")" | "(" expr ")"

``x ^ n`` with an integer literal ``n`` is a power; any other ``^`` is the
wedge product.  ``*`` between multivectors is the Clifford product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from .field import ONE, RationalFunction, VARIABLES, as_scalar


class ParseError(SyntaxError):
    def __init__(self, message: str, offset: int, text: str = ""):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.text = text


class EvaluationError(ValueError):
    pass


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expression"


Expression = Union[Num, Name, Neg, BinOp, Call]

FUNCTIONS = ("rev", "alphaq", "lim1")

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.peek()
        if val != value or kind != "op":
            what = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {what}", pos, self.text)
        self.take()

    def parse(self) -> Expression:
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos, self.text)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return Neg(self.unary())
        return self.wedge()

    def wedge(self):
        node = self.atom()
        while self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            node = BinOp("^", node, self.atom())
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return Num(int(val))
        if kind == "name":
            if val in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(val, arg)
            return Name(val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos, self.text)


def parse(text: str) -> Expression:
    return _Parser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 3
    return 5


def to_text(node: Expression) -> str:
    """Print an expression so that ``parse(to_text(e)) == e``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    if isinstance(node, Neg):
        inner = to_text(node.operand)
        if _prec(node.operand) <= 2:
            inner = f"({inner})"
        return f"-{inner}"
    op = node.op
    left, right = to_text(node.left), to_text(node.right)
    if op in "+-":
        if _prec(node.right) <= 1:
            right = f"({right})"
        return f"{left} {op} {right}"
    if op in "*/":
        if _prec(node.left) < 2:
            left = f"({left})"
        if _prec(node.right) <= 2:
            right = f"({right})"
        return f"{left}{op}{right}"
    # wedge / power: right operand must be an atom
    if _prec(node.left) < 4:
        left = f"({left})"
    if _prec(node.right) < 5:
        right = f"({right})"
    return f"{left}^{right}"


# -- printing values -----------------------------------------------------------


def format_linear_combination(terms) -> str:
    """``[("Id", c0), ("b1", c1)]`` -> ``c0*Id + c1*b1`` in parseable form."""
    parts = []
    for name, c in terms:
        if c.is_zero():
            continue
        negative = _leading_negative(c)
        mag = -c if negative else c
        if mag == ONE:
            body = name
        else:
            text = str(mag)
            if _needs_parens(mag, text):
                text = f"({text})"
            body = f"{text}*{name}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts) if parts else "0"


def _leading_negative(c) -> bool:
    if isinstance(c, RationalFunction):
        terms = c.numerator.terms()
        return bool(terms) and terms[0][1] < 0
    return False


def _needs_parens(c, text: str) -> bool:
    if isinstance(c, RationalFunction):
        return len(c.numerator.terms()) > 1 and c.is_polynomial()
    return True


# -- evaluation -------------------------------------------------------------------


class Context:
    """Evaluation environment: Clifford algebra size and named Hecke elements."""

    def __init__(self, n: int = 4, bindings: Optional[Dict[str, object]] = None):
        from .clifford import build_B

        self.n = n
        self.B = build_B(n)
        self.bindings = dict(bindings or {})
        self._hecke = None

    @property
    def hecke(self):
        if self._hecke is None:
            from .hecke import hecke_algebra

            if self.n < 3:
                raise EvaluationError("Hecke words need a Clifford algebra with n >= 3")
            self._hecke = hecke_algebra(3, "q", self.n)
        return self._hecke

    def lookup(self, name: str):
        from .clifford import Multivector

        if name in self.bindings:
            return self.bindings[name]
        if name in VARIABLES:
            return RationalFunction.var(name)
        if name == "Id":
            return Multivector.scalar(2 * self.n)
        m = re.fullmatch(r"e(\d+)", name)
        if m:
            i = int(m.group(1))
            if not 1 <= i <= 2 * self.n:
                raise EvaluationError(f"{name} is not a generator when n={self.n}")
            return Multivector.generator(2 * self.n, i)
        m = re.fullmatch(r"b([123]+)", name)
        if m:
            word = m.group(1)
            if len(word) == 1 and int(word) < self.n:
                from .hecke import generator

                return generator(int(word), self.n)
            if word in ("12", "21", "121"):
                return self.hecke.word(word).to_multivector()
            raise EvaluationError(f"unknown Hecke word {name}")
        from .young import NAMED_OPERATORS, named_operator

        if name in NAMED_OPERATORS:
            return named_operator(name, self.hecke).to_multivector()
        raise EvaluationError(f"unknown name {name!r}")


def evaluate(node: Expression, ctx: Optional[Context] = None):
    """Evaluate to a RationalFunction or a Multivector."""
    from .clifford import Multivector, cmul, reverse, wedge

    ctx = ctx or Context()
    dim = 2 * ctx.n

    def mv(x):
        return x if isinstance(x, Multivector) else Multivector.scalar(dim, x)

    def scalar_of(x):
        if isinstance(x, Multivector):
            if any(m for m in x.terms):
                raise EvaluationError("division by a non-scalar multivector")
            return x.scalar_part()
        return x

    def ev(node):
        if isinstance(node, Num):
            return as_scalar(node.value)
        if isinstance(node, Name):
            return ctx.lookup(node.id)
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, Call):
            arg = ev(node.arg)
            if node.func == "rev":
                return reverse(mv(arg), ctx.B) if isinstance(arg, Multivector) else arg
            if node.func == "lim1":
                return arg.substitute({"q": 1})
            if node.func == "alphaq":
                H = ctx.hecke
                return H.alpha_q(H.to_hecke_coords(mv(arg))).to_multivector()
            raise EvaluationError(f"unknown function {node.func}")
        op = node.op
        if op == "^" and isinstance(node.right, Num):
            base, k = ev(node.left), node.right.value
            if isinstance(base, Multivector):
                out = Multivector.scalar(dim)
                for _ in range(k):
                    out = cmul(out, base, ctx.B)
                return out
            return base ** k
        left, right = ev(node.left), ev(node.right)
        if op == "^":
            return wedge(mv(left), mv(right))
        if op == "+":
            return mv(left) + mv(right) if _any_mv(left, right) else left + right
        if op == "-":
            return mv(left) - mv(right) if _any_mv(left, right) else left - right
        if op == "*":
            if isinstance(left, Multivector) and isinstance(right, Multivector):
                return cmul(left, right, ctx.B)
            return left * right if not isinstance(right, Multivector) else right * left
        if op == "/":
            d = scalar_of(right)
            if d.is_zero():
                raise EvaluationError("division by zero")
            return left / d
        raise EvaluationError(f"unknown operator {op}")

    return ev(node)


def _any_mv(a, b) -> bool:
    from .clifford import Multivector

    return isinstance(a, Multivector) or isinstance(b, Multivector)


def evaluate_text(text: str, ctx: Optional[Context] = None):
    return evaluate(parse(text), ctx)


def parse_scalar(text: str, bindings: Optional[Dict[str, RationalFunction]] = None) -> RationalFunction:
    """Parse a rational function in q, K1..K6, P3 (plus any bound names)."""
    node = parse(text)
    bindings = bindings or {}
    _check_scalar_names(node, text, bindings)
    ctx = _SCALAR_CTX
    if bindings:
        ctx = _ScalarContext()
        ctx.bindings = dict(bindings)
    value = evaluate(node, ctx)
    if not isinstance(value, RationalFunction):
        raise EvaluationError(f"not a scalar expression: {text!r}")
    return value


def _check_scalar_names(node, text, bound=()):
    if isinstance(node, Name) and node.id not in VARIABLES and node.id not in bound:
        raise EvaluationError(f"{node.id!r} is not a field variable (in {text!r})")
    if isinstance(node, Call):
        _check_scalar_names(node.arg, text, bound)
    elif isinstance(node, Neg):
        _check_scalar_names(node.operand, text, bound)
    elif isinstance(node, BinOp):
        _check_scalar_names(node.left, text, bound)
        _check_scalar_names(node.right, text, bound)


class _ScalarContext(Context):
    def __init__(self):
        self.n = 1
        self.B = None
        self.bindings = {}
        self._hecke = None


_SCALAR_CTX = _ScalarContext()


def parse_hecke(text: str, algebra=None):
    """Parse a Hecke-basis expression such as ``(1-q)/q*Id + 1/q*b1``."""
    from .hecke import hecke_algebra

    H = algebra or hecke_algebra(3)
    ctx = Context(H.clifford_n)
    ctx._hecke = H
    value = evaluate(parse(text), ctx)
    from .clifford import Multivector

    if not isinstance(value, Multivector):
        value = Multivector.scalar(2 * H.clifford_n, value)
    return H.to_hecke_coords(value)
