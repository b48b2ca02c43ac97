from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly
from .ratfunc import RatFunc
from .vartable import MAIN_VARIABLE, VarTable, check_same

_Scalar = (int, Fraction)


class InexactDivision(ArithmeticError):
    """A division that was required to be exact left a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class PolyInX:
    """Dense polynomial in ``x`` whose coefficients lie in ``Q(parameters)``.

    ``coeffs[i]`` is the coefficient of ``x**i``; the top coefficient is
    nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("vars", "coeffs")

    def __init__(self, vars: VarTable, coeffs=()):
        out = []
        for c in coeffs:
            if isinstance(c, _Scalar):
                c = RatFunc.constant(vars, c)
            elif isinstance(c, MultiPoly):
                c = RatFunc.poly(c)
            check_same(vars, c.vars)
            if c.num.degree(MAIN_VARIABLE) > 0 or c.den.degree(MAIN_VARIABLE) > 0:
                raise ValueError(f"coefficient {c} depends on x")
            out.append(c)
        while out and out[-1].is_zero():
            out.pop()
        self.vars = vars
        self.coeffs = tuple(out)

    @classmethod
    def _raw(cls, vars, coeffs) -> "PolyInX":
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        p = object.__new__(cls)
        p.vars = vars
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def from_multipoly(cls, p: MultiPoly) -> "PolyInX":
        return cls._raw(p.vars, [RatFunc.poly(c) for c in p.coefficients_in(MAIN_VARIABLE)])

    @classmethod
    def monomial(cls, vars: VarTable, k: int, coeff=1) -> "PolyInX":
        zero = RatFunc.constant(vars, 0)
        c = coeff if isinstance(coeff, RatFunc) else RatFunc.constant(vars, coeff)
        return cls._raw(vars, [zero] * k + [c])

    @classmethod
    def linear(cls, vars: VarTable, root: RatFunc) -> "PolyInX":
        """The monic polynomial ``x - root``."""
        return cls._raw(vars, [-root, RatFunc.constant(vars, 1)])

    def to_ratfunc(self) -> RatFunc:
        """The polynomial as an element of ``Q(x, parameters)``."""
        x = RatFunc.var(self.vars, MAIN_VARIABLE)
        acc = RatFunc.constant(self.vars, 0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> RatFunc:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFunc.constant(self.vars, 0)

    def coordinates(self, size: int) -> list:
        """Coefficient vector of length ``size`` (padding with zeros)."""
        if self.degree >= size:
            raise ValueError(f"degree {self.degree} does not fit in {size} coordinates")
        return [self.coeff(i) for i in range(size)]

    def __add__(self, other):
        if not isinstance(other, PolyInX):
            return NotImplemented
        check_same(self.vars, other.vars)
        m = max(len(self.coeffs), len(other.coeffs))
        return PolyInX._raw(self.vars, [self.coeff(i) + other.coeff(i) for i in range(m)])

    def __neg__(self):
        return PolyInX._raw(self.vars, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, PolyInX):
            return NotImplemented
        return self + (-other)

    def scale(self, k) -> "PolyInX":
        """Multiply by a scalar from ``Q(parameters)``."""
        if isinstance(k, RatFunc):
            check_same(self.vars, k.vars)
            if k.is_zero():
                return PolyInX._raw(self.vars, [])
        return PolyInX._raw(self.vars, [c * k for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PolyInX):
            check_same(self.vars, other.vars)
            if not self.coeffs or not other.coeffs:
                return PolyInX._raw(self.vars, [])
            zero = RatFunc.constant(self.vars, 0)
            out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return PolyInX._raw(self.vars, out)
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyInX):
            return self.vars == other.vars and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, r) -> RatFunc:
        """Evaluate at ``x = r`` (Horner)."""
        if isinstance(r, _Scalar):
            r = RatFunc.constant(self.vars, r)
        acc = RatFunc.constant(self.vars, 0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def derivative(self) -> "PolyInX":
        """Derivative in ``x``."""
        return PolyInX._raw(self.vars, [c * i for i, c in enumerate(self.coeffs) if i])

    def diff_param(self, name: str) -> "PolyInX":
        """Coefficient-wise partial derivative with respect to a parameter."""
        if name == MAIN_VARIABLE:
            raise ValueError("use derivative() for x")
        return PolyInX._raw(self.vars, [c.diff(name) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"PolyInX({str(self)!r})"

    def __str__(self) -> str:
        from .printing import format_ratfunc

        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            s = format_ratfunc(c)
            if not mono:
                parts.append(f"({s})")
            else:
                parts.append(f"({s})*{mono}")
        return " + ".join(parts)


def synthetic_division(p: PolyInX, r: RatFunc):
    """Return ``(q, rem)`` with ``p = (x - r) * q + rem``."""
    check_same(p.vars, r.vars)
    if p.is_zero():
        return p, RatFunc.constant(p.vars, 0)
    n = len(p.coeffs)
    q = [None] * (n - 1)
    acc = p.coeffs[-1]
    for i in range(n - 2, -1, -1):
        q[i] = acc
        acc = p.coeffs[i] + acc * r
    return PolyInX._raw(p.vars, q), acc


def poly_divexact_linear(p: PolyInX, r) -> PolyInX:
    """Exact quotient of ``p`` by ``x - r``; :class:`InexactDivision` otherwise."""
    if isinstance(r, _Scalar):
        r = RatFunc.constant(p.vars, r)
    q, rem = synthetic_division(p, r)
    if not rem.is_zero():
        raise InexactDivision(f"x - ({r}) does not divide {p}: remainder {rem}", rem)
    return q
