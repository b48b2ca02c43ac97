"""Canonical text form of polynomials and rational functions.

Terms appear in descending graded-lexicographic order, coefficients as
integers or ``p/q``, variables joined by ``*``.  The output is accepted
verbatim by :func:`cyclicgm.cli.expr.parse_poly`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(names, e) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (e, c) in enumerate(p.sorted_terms()):
        mono = _format_monomial(p.vars.names, e)
        mag = abs(c)
        if not mono:
            body = _format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_rational(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def integral_pair(f):
    """Scale ``(num, den)`` of a RatFunc to coprime integer coefficient polynomials."""
    num, den = f.num, f.den
    scale = 1
    for c in num.terms.values():
        scale = lcm(scale, c.denominator)
    for c in den.terms.values():
        scale = lcm(scale, c.denominator)
    g = 0
    for c in list(num.terms.values()) + list(den.terms.values()):
        g = gcd(g, (c * scale).numerator)
    k = Fraction(scale, g or 1)
    return num.scale(k), den.scale(k)


def format_ratfunc(f) -> str:
    if f.den.is_constant():
        return format_poly(f.num.scale(1 / f.den.constant_value()))
    num, den = integral_pair(f)
    return f"({format_poly(num)})/({format_poly(den)})"
