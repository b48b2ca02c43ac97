"""Eigenforms ``U(x) dx / y^l`` on cyclic covers and their zero divisors.

Local models used throughout:

* over a branch point ``t_i`` the coordinate is ``y`` with ``x - t_i ~ y^d``,
  so ``U dx / y^l`` has order ``d*k_i + (d - 1) - l`` where ``k_i`` is the
  multiplicity of ``t_i`` as a root of ``U``;
* at each of the ``a`` points at infinity, ``x ~ z^-c`` and ``y ~ z^-b``,
  giving order ``-c*deg(U) - c - 1 + b*l``;
* any other zero ``q`` of ``U`` is unramified and contributes ``d`` points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .arith import PolyInX, RatFunc, synthetic_division
from .cover import CoverError, CoverFamily, h10_dim, y_power


class UnresolvedZeros(ArithmeticError):
    """``U`` has zeros off the branch points that are not rational."""


class ParameterDependentVanishing(ArithmeticError):
    """``U(t_i)`` is nonzero generically but vanishes for special parameters."""


class DivisorDegreeMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class Eigenform:
    cover: CoverFamily
    l: int
    U: PolyInX

    def __post_init__(self):
        if not 1 <= self.l <= self.cover.d - 1:
            raise CoverError(f"power of y must be in 1..{self.cover.d - 1}, got {self.l}")
        if self.U.is_zero():
            raise CoverError("eigenform with U = 0")
        if self.U.vars != self.cover.vars:
            raise CoverError("U is not over the cover's variable table")

    @classmethod
    def monomial(cls, cover: CoverFamily, m: int, l: int | None = None) -> "Eigenform":
        """``x^m dx / y^l``; ``l`` defaults to ``d - 1``."""
        return cls(cover, cover.d - 1 if l is None else l, PolyInX.monomial(cover.vars, m))

    @property
    def j(self) -> int:
        return (-self.l) % self.cover.d

    def __str__(self) -> str:
        return f"({self.U}) dx/y^{self.l}"


@dataclass(frozen=True)
class BranchPoint:
    index: int


@dataclass(frozen=True)
class InfinityPoint:
    index: int


@dataclass(frozen=True)
class ExtraRationalPoint:
    value: RatFunc
    sheets: int


@dataclass(frozen=True)
class Divisor:
    entries: tuple  # of (point, order)

    @property
    def degree(self) -> int:
        total = 0
        for point, order in self.entries:
            total += order * (point.sheets if isinstance(point, ExtraRationalPoint) else 1)
        return total

    def orders(self) -> dict:
        return {point: order for point, order in self.entries}


def _multiplicity(U: PolyInX, r: RatFunc, strict: bool):
    """``(k, cofactor)`` with ``U = (x - r)^k * cofactor`` and ``cofactor(r) != 0``."""
    k = 0
    while True:
        q, rem = synthetic_division(U, r)
        if not rem.is_zero():
            if strict and not rem.is_constant():
                raise ParameterDependentVanishing(
                    f"U({r}) = {rem} vanishes on a proper subvariety of parameter space"
                )
            return k, U
        k += 1
        U = q


def ord_at_branch(f: Eigenform, i, *, strict: bool = False) -> int:
    """Order of ``f`` at the ramification point over branch value ``t_i``.

    The multiplicity of ``t_i`` as a root of ``U`` is decided generically:
    a nonzero rational function counts as nonzero.  With ``strict=True`` a
    value that is nonzero but parameter dependent raises
    :class:`ParameterDependentVanishing` instead.
    """
    cover = f.cover
    i = cover.branch_index(i)
    k, _ = _multiplicity(f.U, cover.branch_value(i), strict)
    return cover.d * k + (cover.d - 1) - f.l


def ord_at_infinity(f: Eigenform) -> int:
    """Order of ``f`` at each of the ``a`` points at infinity."""
    cover = f.cover
    return -cover.c * f.U.degree - cover.c - 1 + cover.b * f.l


def _rational_roots(p: PolyInX) -> list:
    """Distinct rational roots of a polynomial with constant coefficients."""
    coeffs = [c.constant_value() for c in p.coeffs]
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    numers = [k for k in range(1, a0 + 1) if a0 % k == 0]
    denoms = [k for k in range(1, an + 1) if an % k == 0]
    for pn in numers:
        for qd in denoms:
            for cand in (Fraction(pn, qd), Fraction(-pn, qd)):
                if cand in roots:
                    continue
                if sum(c * cand**i for i, c in enumerate(ints)) == 0:
                    roots.append(cand)
    return roots


def _extra_zeros(cof: PolyInX, vars) -> list:
    """Split ``cof`` into linear factors over ``Q(parameters)`` when possible."""
    found = []
    while cof.degree >= 1:
        if cof.degree == 1:
            root = -cof.coeffs[0] / cof.coeffs[1]
            found.append((root, 1))
            break
        if not all(c.is_constant() for c in cof.coeffs):
            raise UnresolvedZeros(f"cannot locate the zeros of {cof}")
        roots = _rational_roots(cof)
        if not roots:
            raise UnresolvedZeros(f"{cof} has no rational root")
        for q in roots:
            k, cof = _multiplicity(cof, RatFunc.constant(vars, q), False)
            found.append((RatFunc.constant(vars, q), k))
    return found


def divisor(f: Eigenform) -> Divisor:
    """Full divisor of ``f``: branch points, points at infinity, and extra zeros.

    Raises :class:`UnresolvedZeros` when ``U``, stripped of its branch-point
    factors, does not split into linear factors found by rational-root search.
    """
    cover = f.cover
    entries = []
    cof = f.U
    for i in range(cover.n):
        k, cof = _multiplicity(cof, cover.branch_value(i), False)
        entries.append((BranchPoint(i), cover.d * k + (cover.d - 1) - f.l))
    inf = ord_at_infinity(f)
    entries.extend((InfinityPoint(s), inf) for s in range(1, cover.a + 1))
    for q, k in _extra_zeros(cof, cover.vars):
        entries.append((ExtraRationalPoint(q, cover.d), k))
    div = Divisor(tuple(entries))
    if div.degree != 2 * cover.genus - 2:
        raise DivisorDegreeMismatch(f"divisor degree {div.degree} != 2g - 2 = {2 * cover.genus - 2}")
    return div


def stratum_signature(f: Eigenform) -> tuple:
    """Zero orders of ``f`` (with multiplicity), sorted descending: the ``kappa`` of ``H(kappa)``."""
    orders = []
    for point, order in divisor(f).entries:
        if order > 0:
            reps = point.sheets if isinstance(point, ExtraRationalPoint) else 1
            orders.extend([order] * reps)
    return tuple(sorted(orders, reverse=True))


def is_holomorphic(f: Eigenform) -> bool:
    if ord_at_infinity(f) < 0:
        return False
    return all(ord_at_branch(f, i) >= 0 for i in range(f.cover.n))


def holomorphic_basis(cover: CoverFamily, j: int) -> list:
    """Monomial basis ``x^m dx / y^l`` of the holomorphic ``zeta^j`` eigenforms."""
    dim = h10_dim(cover, j)
    l = y_power(cover, j)
    basis = [Eigenform.monomial(cover, m, l) for m in range(dim)]
    for form in basis:
        assert is_holomorphic(form), form
    return basis
