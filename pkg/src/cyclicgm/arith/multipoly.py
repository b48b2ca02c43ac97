"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import _intpoly
from .vartable import VarTable, check_same

#: Exact scalars are plain :class:`fractions.Fraction` values; they are always
#: kept reduced with a positive denominator.
BigRational = Fraction

_Scalar = (int, Fraction)


def grlex_key(e):
    return (sum(e), e)


class MultiPoly:
    """Immutable sparse polynomial over ``Q`` in the variables of a VarTable.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    ``Fraction`` coefficients.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: VarTable, terms=None):
        self.vars = vars
        clean = {}
        if terms:
            n = len(vars)
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n or min(e) < 0:
                    raise ValueError(f"bad exponent vector {e} for {vars}")
                c = Fraction(c)
                if c:
                    clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms) -> "MultiPoly":
        # trusted constructor: exponents valid, coefficients nonzero Fractions
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # --- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: VarTable) -> "MultiPoly":
        return cls._raw(vars, {})

    @classmethod
    def constant(cls, vars: VarTable, c) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, vars: VarTable, name: str) -> "MultiPoly":
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls._raw(vars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, vars: VarTable, powers: dict, coeff=1) -> "MultiPoly":
        e = [0] * len(vars)
        for name, k in powers.items():
            e[vars.index(name)] = k
        return cls(vars, {tuple(e): coeff})

    @classmethod
    def _from_int(cls, vars, p: dict) -> "MultiPoly":
        return cls._raw(vars, {e: Fraction(c) for e, c in p.items()})

    def _to_int(self):
        """Return ``(L, q)`` with ``q`` an integer dict and ``self == q / L``."""
        den = 1
        for c in self.terms.values():
            if c.denominator != 1:
                den = lcm(den, c.denominator)
        return den, {e: c.numerator * (den // c.denominator) for e, c in self.terms.items()}

    # --- predicates and accessors -----------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def variables(self) -> tuple:
        used = _intpoly.used_vars(self.terms)
        return tuple(n for i, n in enumerate(self.vars.names) if i in used)

    def leading_term(self):
        """``(exponents, coefficient)`` of the grlex-largest term."""
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    # --- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            check_same(self.vars, other.vars)
            return other
        if isinstance(other, _Scalar):
            return MultiPoly.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        r = dict(a)
        for e, c in b.items():
            s = r.get(e, 0) + c
            if s:
                r[e] = s
            else:
                r.pop(e, None)
        return MultiPoly._raw(self.vars, r)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k) -> "MultiPoly":
        k = Fraction(k)
        if not k:
            return MultiPoly.zero(self.vars)
        return MultiPoly._raw(self.vars, {e: c * k for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.vars)
        if len(b) == 1:
            ((eb, cb),) = b.items()
            return MultiPoly._raw(
                self.vars, {tuple(x + y for x, y in zip(e, eb)): c * cb for e, c in a.items()}
            )
        if len(a) == 1:
            return other * self
        r: dict = {}
        get = r.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                r[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(self.vars, {e: c for e, c in r.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, _Scalar):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # --- division, gcd, content ------------------------------------------

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient; ``ArithmeticError`` when ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            return self.scale(1 / other.constant_value())
        la, a = self._to_int()
        lb, b = other._to_int()
        # a/la = (b/lb) * q  =>  q = (a / b) * (lb / la); divide out integer content first
        ca, cb = _intpoly.content(a), _intpoly.content(b)
        a = {e: c // ca for e, c in a.items()} if a else a
        b = {e: c // cb for e, c in b.items()}
        q = _intpoly.divexact(a, b)
        k = Fraction(ca * lb, la * cb)
        return MultiPoly._raw(self.vars, {e: c * k for e, c in q.items()})

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        den, p = self._to_int()
        return Fraction(_intpoly.content(p), den)

    def primitive(self) -> "MultiPoly":
        """Primitive integer associate with positive leading coefficient."""
        if not self.terms:
            return self
        _, p = self._to_int()
        return MultiPoly._from_int(self.vars, _intpoly.normalize(p))

    def gcd(self, other: "MultiPoly") -> "MultiPoly":
        return poly_gcd(self, other)

    # --- calculus / evaluation ---------------------------------------------

    def diff(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        r = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                r[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return MultiPoly._raw(self.vars, r)

    def coefficients_in(self, name: str) -> list:
        """Dense list of coefficients (MultiPoly free of ``name``) by powers of ``name``."""
        if not self.terms:
            return []
        i = self.vars.index(name)
        out = [dict() for _ in range(self.degree(name) + 1)]
        for e, c in self.terms.items():
            out[e[i]][e[:i] + (0,) + e[i + 1:]] = c
        return [MultiPoly._raw(self.vars, t) for t in out]

    def __repr__(self) -> str:
        from .printing import format_poly

        return f"MultiPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        from .printing import format_poly

        return format_poly(self)


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    check_same(p.vars, q.vars)
    return p * q


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """GCD over ``Q``: primitive integer coefficients, positive grlex-leading coefficient.

    ``gcd(p, 0)`` is the normalized ``p`` and ``gcd(0, 0)`` is ``0``.
    """
    check_same(p.vars, q.vars)
    if p.is_zero():
        return q.primitive()
    if q.is_zero():
        return p.primitive()
    if p.is_constant() or q.is_constant():
        return MultiPoly.constant(p.vars, 1)
    _, a = p._to_int()
    _, b = q._to_int()
    return MultiPoly._from_int(p.vars, _intpoly.gcd(a, b))
