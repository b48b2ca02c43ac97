from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly
from .polyx import PolyInX
from .ratfunc import RatFunc, ratfunc_reduce
from .vartable import MAIN_VARIABLE, VarTable


class DegenerateSubstitution(ZeroDivisionError):
    """A substitution sent a denominator to the zero polynomial."""


def _as_ratfunc(value, target: VarTable) -> RatFunc:
    if isinstance(value, RatFunc):
        if value.vars != target:
            raise ValueError(f"binding {value} is not over {target}")
        return value
    if isinstance(value, MultiPoly):
        return _as_ratfunc(RatFunc.poly(value), target)
    if isinstance(value, (int, Fraction)):
        return RatFunc.constant(target, value)
    if isinstance(value, str):
        return RatFunc.var(target, value)
    raise TypeError(f"cannot bind to {value!r}")


def _images(vars: VarTable, bindings: dict, target: VarTable) -> list:
    if MAIN_VARIABLE in bindings:
        raise ValueError("the main variable x cannot be substituted")
    for name in bindings:
        vars.index(name)
    images = []
    for name in vars.names:
        if name in bindings:
            images.append(_as_ratfunc(bindings[name], target))
        elif name in target:
            images.append(RatFunc.var(target, name))
        else:
            images.append(None)
    return images


def _split(poly: MultiPoly, images: list, target: VarTable):
    """Return ``(numerator, denominator)`` polynomials over ``target``."""
    if poly.is_zero():
        return MultiPoly.zero(target), MultiPoly.constant(target, 1)
    n = len(poly.vars)
    maxdeg = [0] * n
    for e in poly.terms:
        for i, k in enumerate(e):
            if k > maxdeg[i]:
                maxdeg[i] = k
    one = MultiPoly.constant(target, 1)
    num_pows, den_pows = [], []
    for i in range(n):
        if maxdeg[i] == 0:
            num_pows.append(None)
            den_pows.append(None)
            continue
        img = images[i]
        if img is None:
            raise ValueError(f"variable {poly.vars.names[i]!r} has no image in {target}")
        np_, dp = [one], [one]
        for _ in range(maxdeg[i]):
            np_.append(np_[-1] * img.num)
            dp.append(dp[-1] * img.den if not img.den.is_constant() else one)
        num_pows.append(np_)
        den_pows.append(dp)
    total = MultiPoly.zero(target)
    for e, c in poly.terms.items():
        term = MultiPoly.constant(target, c)
        for i, k in enumerate(e):
            if maxdeg[i]:
                term = term * num_pows[i][k]
                if not images[i].den.is_constant():
                    term = term * den_pows[i][maxdeg[i] - k]
        total = total + term
    den = one
    for i in range(n):
        if maxdeg[i] and not images[i].den.is_constant():
            den = den * den_pows[i][maxdeg[i]]
    return total, den


def substitute(e, bindings: dict, target: VarTable | None = None):
    """Substitute parameters by rational functions and reduce.

    ``bindings`` maps parameter names to values over ``target`` (a RatFunc,
    MultiPoly, rational constant, or a variable name).  Variables that are
    not bound keep their name and must exist in ``target``, which defaults
    to the variable table of ``e``.

    A MultiPoly stays a MultiPoly when every binding is polynomial and
    becomes a RatFunc otherwise; RatFunc and PolyInX keep their kind.
    """
    target = target or e.vars
    images = _images(e.vars, bindings, target)
    if isinstance(e, MultiPoly):
        num, den = _split(e, images, target)
        if den.is_constant():
            return num.scale(1 / den.constant_value())
        return ratfunc_reduce(num, den)
    if isinstance(e, RatFunc):
        return _substitute_ratfunc(e, images, target)
    if isinstance(e, PolyInX):
        return PolyInX._raw(target, [_substitute_ratfunc(c, images, target) for c in e.coeffs])
    raise TypeError(f"cannot substitute into {type(e).__name__}")


def _substitute_ratfunc(f: RatFunc, images, target) -> RatFunc:
    nn, nd = _split(f.num, images, target)
    dn, dd = _split(f.den, images, target)
    if dn.is_zero():
        raise DegenerateSubstitution(f"denominator of {f} vanishes identically")
    return ratfunc_reduce(nn * dd, nd * dn)
