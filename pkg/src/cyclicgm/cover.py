"""Families of cyclic covers ``y^d = (x - t_1)...(x - t_n)`` of the projective line.

Eigenvalues of the deck transformation ``(x, y) -> (x, zeta*y)`` with
``zeta = exp(2*pi*i/d)`` are handled through their exponent ``j`` modulo
``d`` only; no root of unity is ever materialized.  A form
``U(x) dx / y^l`` lies in the ``zeta^j`` eigenspace with ``j = -l mod d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Union

from .arith import MultiPoly, PolyInX, RatFunc, VarTable


class CoverError(ValueError):
    pass


#: A branch value is an explicit rational or the name of a symbolic parameter.
BranchValue = Union[Fraction, str]


def _parse_branch(value):
    if isinstance(value, str):
        value = value.strip()
        try:
            return Fraction(value)
        except ValueError:
            if not value.isidentifier() or value == "x":
                raise CoverError(f"bad branch value {value!r}") from None
            return value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise CoverError(f"bad branch value {value!r}")


def genus(d: int, n: int) -> int:
    """Riemann-Hurwitz genus of ``y^d = P(x)`` with ``P`` squarefree of degree ``n``."""
    if d < 2 or n < 2:
        raise CoverError(f"need d >= 2 and n >= 2, got d={d}, n={n}")
    twice = (n - 1) * (d - 1) - (gcd(d, n) - 1)
    assert twice >= 0 and twice % 2 == 0, (d, n)
    return twice // 2


@dataclass(frozen=True)
class CoverFamily:
    d: int
    n: int
    branch: tuple
    a: int
    b: int
    c: int
    genus: int
    vars: VarTable = field(repr=False, compare=False)

    @property
    def params(self) -> tuple:
        """Symbolic branch values, in branch order."""
        return tuple(t for t in self.branch if isinstance(t, str))

    def branch_index(self, key) -> int:
        """Index of a branch point given by position or parameter name."""
        if isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < self.n:
                raise CoverError(f"branch index {key} out of range 0..{self.n - 1}")
            return key
        if isinstance(key, str) and key in self.branch:
            return self.branch.index(key)
        raise CoverError(f"{key!r} is not a branch point of {self.describe()}")

    def branch_value(self, i: int) -> RatFunc:
        t = self.branch[i]
        if isinstance(t, str):
            return RatFunc.var(self.vars, t)
        return RatFunc.constant(self.vars, t)

    def polynomial(self) -> PolyInX:
        """``P(x) = (x - t_1)...(x - t_n)``."""
        p = MultiPoly.constant(self.vars, 1)
        x = MultiPoly.var(self.vars, "x")
        for t in self.branch:
            tv = MultiPoly.var(self.vars, t) if isinstance(t, str) else t
            p = p * (x - tv)
        return PolyInX.from_multipoly(p)

    def describe(self) -> str:
        branch = ",".join(str(t) for t in self.branch)
        return f"y^{self.d} = P(x), branch ({branch})"


def make_cover(d: int, n: int | None, branch, extra_params=()) -> CoverFamily:
    """Build a cover family; ``n`` may be ``None`` to take ``len(branch)``.

    Symbolic branch values are generic: pairwise distinct and distinct from
    every explicit value.  ``extra_params`` adds parameters to the variable
    table that are not branch values.
    """
    branch = tuple(_parse_branch(t) for t in branch)
    if n is None:
        n = len(branch)
    if len(branch) != n:
        raise CoverError(f"expected {n} branch values, got {len(branch)}")
    seen = set()
    for t in branch:
        if t in seen:
            raise CoverError(f"duplicate branch value {t}")
        seen.add(t)
    g = genus(d, n)
    a = gcd(d, n)
    names = [t for t in branch if isinstance(t, str)]
    names += [p for p in extra_params if p not in names]
    return CoverFamily(d=d, n=n, branch=branch, a=a, b=n // a, c=d // a, genus=g, vars=VarTable.of(*names))


def _check_exponent(cover: CoverFamily, j: int) -> None:
    if not 1 <= j <= cover.d - 1:
        raise CoverError(f"eigenvalue exponent must be in 1..{cover.d - 1}, got {j}")


def y_power(cover: CoverFamily, j: int) -> int:
    """The power ``l`` of ``y`` in the denominator for eigenvalue exponent ``j``."""
    return (-j) % cover.d


def h10_dim(cover: CoverFamily, j: int) -> int:
    """Dimension of the holomorphic part of the ``zeta^j`` eigenspace.

    Counts monomials ``x^m dx / y^l`` (``l = -j mod d``) holomorphic at the
    ``a`` points at infinity, where the order is ``-c*m - c - 1 + b*l``.
    They are always holomorphic over the branch points.
    """
    _check_exponent(cover, j)
    l = y_power(cover, j)
    if l == 0:
        return 0
    top = (cover.b * l - cover.c - 1) // cover.c
    return max(0, top + 1)


def in_proved_regime(cover: CoverFamily, j: int) -> bool:
    """Whether the count is the classical one (``l = d - 1`` and ``n < d``)."""
    return y_power(cover, j) == cover.d - 1 and cover.n < cover.d


@dataclass(frozen=True)
class EigenspaceReport:
    j: int
    h10: int
    h01: int
    outside_proved_regime: bool = False

    @property
    def pure(self) -> bool:
        return self.h10 == 0 or self.h01 == 0


def eigenspace_report(cover: CoverFamily, j: int) -> EigenspaceReport:
    _check_exponent(cover, j)
    return EigenspaceReport(
        j=j,
        h10=h10_dim(cover, j),
        h01=h10_dim(cover, cover.d - j),
        outside_proved_regime=not (in_proved_regime(cover, j) or in_proved_regime(cover, cover.d - j)),
    )


def galois_orbit(d: int, j: int) -> list:
    return sorted({(j * m) % d for m in range(1, d) if gcd(m, d) == 1})


@dataclass(frozen=True)
class MonodromyReport:
    """Result of the purity criterion on a Galois orbit of eigenvalues.

    ``finite`` is a certificate: every eigenspace in the orbit is pure, so
    monodromy is unitary and defined over ``Q``, hence finite.  ``False``
    only means the criterion is inconclusive.
    """

    j: int
    finite: bool
    orbit: tuple

    @property
    def verdict(self) -> str:
        return "finite" if self.finite else "inconclusive"


def finite_monodromy_check(cover: CoverFamily, j: int) -> MonodromyReport:
    _check_exponent(cover, j)
    orbit = tuple(eigenspace_report(cover, k) for k in galois_orbit(cover.d, j))
    return MonodromyReport(j=j, finite=all(r.pure for r in orbit), orbit=orbit)
