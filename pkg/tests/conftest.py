"""Shared fixtures and the sympy bridge used by oracle tests."""

import sys
from fractions import Fraction

import pytest
import sympy

from cyclicgm.arith import MultiPoly, PolyInX, RatFunc, VarTable
from cyclicgm.cover import make_cover


def to_sympy(e):
    """Independent re-expression of an in-house object as a sympy expression."""
    if isinstance(e, MultiPoly):
        syms = sympy.symbols(e.vars.names)
        out = sympy.Integer(0)
        for exps, c in e.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, k in zip(syms, exps):
                term *= s**k
            out += term
        return out
    if isinstance(e, RatFunc):
        return to_sympy(e.num) / to_sympy(e.den)
    if isinstance(e, PolyInX):
        return to_sympy(e.to_ratfunc())
    if isinstance(e, (int, Fraction)):
        return sympy.Rational(Fraction(e).numerator, Fraction(e).denominator)
    raise TypeError(type(e))


def sympy_equal(a, b) -> bool:
    return sympy.simplify(sympy.together(a - b)) == 0


@pytest.fixture(scope="session")
def curve():
    return make_cover(6, 4, [0, 1, -1, "u"])


@pytest.fixture(scope="session")
def surface():
    return make_cover(6, 5, [0, 1, "a", "b", "c"])


@pytest.fixture(scope="session")
def decic():
    return make_cover(10, 3, [0, 1, "v"])


@pytest.fixture(scope="session")
def uvars():
    return VarTable.of("u")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
