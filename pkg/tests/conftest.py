import sympy as sp
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SYMS = {name: sp.Symbol(name) for name in ("q", "K1", "K2", "K3", "K4", "K5", "K6", "P3")}


def to_sympy(x):
    """Independent reading of a canonical text form."""
    return sp.sympify(str(x).replace("^", "**"), locals=SYMS)


def sympy_equal(a, b) -> bool:
    return sp.cancel(sp.together(a - b)) == 0


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
