"""Reduced quotients of multivariate polynomials."""

from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly, poly_gcd
from .vartable import VarTable, check_same

_Scalar = (int, Fraction)


class RatFunc:
    """An element ``num / den`` of ``Q(vars)`` in lowest terms.

    Normal form: ``gcd(num, den) = 1`` and ``den`` has coprime integer
    coefficients with a positive grlex-leading coefficient.  With this
    normalization two rational functions are equal iff their ``num`` and
    ``den`` are identical, so equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.constant(num.vars, 1)
        r = ratfunc_reduce(num, den)
        self.num, self.den = r.num, r.den

    @classmethod
    def _raw(cls, num: MultiPoly, den: MultiPoly) -> "RatFunc":
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def poly(cls, p: MultiPoly) -> "RatFunc":
        return cls._raw(p, MultiPoly.constant(p.vars, 1))

    @classmethod
    def constant(cls, vars: VarTable, c) -> "RatFunc":
        return cls.poly(MultiPoly.constant(vars, c))

    @classmethod
    def var(cls, vars: VarTable, name: str) -> "RatFunc":
        return cls.poly(MultiPoly.var(vars, name))

    @property
    def vars(self) -> VarTable:
        return self.num.vars

    # --- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def variables(self) -> tuple:
        used = set(self.num.variables()) | set(self.den.variables())
        return tuple(n for n in self.vars.names if n in used)

    # --- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            check_same(self.vars, other.vars)
            return other
        if isinstance(other, MultiPoly):
            check_same(self.vars, other.vars)
            return RatFunc.poly(other)
        if isinstance(other, _Scalar):
            return RatFunc.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_constant() and d.is_constant():
            return RatFunc._raw(a + c, b)
        if b == d:
            return ratfunc_reduce(a + c, b)
        if b.is_constant():
            return RatFunc._raw(a * d + c, d)
        if d.is_constant():
            return RatFunc._raw(a + c * b, b)
        g = poly_gcd(b, d)
        if g.is_constant():
            return ratfunc_reduce(a * d + c * b, b * d)
        bg, dg = b.divexact(g), d.divexact(g)
        return ratfunc_reduce(a * dg + c * bg, b * dg)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k) -> "RatFunc":
        k = Fraction(k)
        if not k:
            return RatFunc.constant(self.vars, 0)
        return RatFunc._raw(self.num.scale(k), self.den)

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RatFunc.constant(self.vars, 0)
        if b.is_constant() and d.is_constant():
            return RatFunc._raw(a * c, b)
        # cross-cancel: a/b * c/d with gcd(a,b) = gcd(c,d) = 1
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_constant():
            a, d = a.divexact(g1), d.divexact(g1)
        if not g2.is_constant():
            c, b = c.divexact(g2), b.divexact(g2)
        return _normalized(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return _normalized(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("exponent must be an integer")
        if k < 0:
            return self.inverse() ** (-k)
        return _normalized(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, MultiPoly):
            return self.den.is_constant() and self.num == other
        if isinstance(other, _Scalar):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def diff(self, name: str) -> "RatFunc":
        """Partial derivative with respect to ``name``."""
        n, d = self.num, self.den
        dn = n.diff(name)
        if d.is_constant():
            return RatFunc._raw(dn, d)
        dd = d.diff(name)
        if dd.is_zero():
            return RatFunc._raw(dn, d)
        g = poly_gcd(d, dd)
        dg, ddg = d.divexact(g), dd.divexact(g)
        return ratfunc_reduce(dn * dg - n * ddg, d * dg)

    def __repr__(self) -> str:
        from .printing import format_ratfunc

        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self) -> str:
        from .printing import format_ratfunc

        return format_ratfunc(self)


def _normalized(num: MultiPoly, den: MultiPoly) -> RatFunc:
    """Normalize the denominator's content and sign; assumes coprime inputs."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return RatFunc._raw(num, MultiPoly.constant(num.vars, 1))
    k = den.content()
    if den.leading_coefficient() < 0:
        k = -k
    if k == 1:
        return RatFunc._raw(num, den)
    inv = 1 / k
    return RatFunc._raw(num.scale(inv), den.scale(inv))


def ratfunc_reduce(num: MultiPoly, den: MultiPoly) -> RatFunc:
    """Bring ``num / den`` to normal form; ``ZeroDivisionError`` if ``den == 0``."""
    check_same(num.vars, den.vars)
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return RatFunc._raw(num, MultiPoly.constant(num.vars, 1))
    if not den.is_constant():
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num.divexact(g), den.divexact(g)
    return _normalized(num, den)
