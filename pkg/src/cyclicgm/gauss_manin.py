"""Gauss-Manin connection on the ``zeta`` eigenspace in the holomorphic trivialization.

Sections of the eigenbundle are polynomials ``U`` of degree at most
``n - 2``, standing for ``U(x) dx / y^(d-1)``.  For a constant ``U`` the
covariant derivative along ``t_k`` is

    -U(t_k)/P'(t_k) * Q2 + (1/d) * U(t_k)/P'(t_k) * Q1 + (d-1)/d * (U - U(t_k))/(x - t_k)

with difference quotients ``Q1 = (P'(x) - P'(t_k))/(x - t_k)`` and
``Q2 = (P(x) - P(t_k) - P'(t_k)(x - t_k))/(x - t_k)^2``.

Matrix convention: column ``i`` of a connection matrix ``B_k`` holds the
coordinates of ``nabla_k p_i`` in the basis ``p_0, ..., p_{n-2}``
(``p_i = x^i dx/y^(d-1)``), so a coordinate vector ``v`` has
``nabla_k v = d v/d t_k + B_k v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import InexactDivision, PolyInX, RatFunc, linalg, poly_divexact_linear
from .cover import CoverError, CoverFamily


class DegenerateBranch(ArithmeticError):
    """``P'(t_k)`` vanishes identically: branch values are not distinct."""


def _direction(cover: CoverFamily, k):
    """Resolve ``k`` (index or parameter name) to ``(index, parameter name)``."""
    i = cover.branch_index(k)
    name = cover.branch[i]
    if not isinstance(name, str):
        raise CoverError(f"cannot differentiate along the explicit branch value t_{i} = {name}")
    return i, name


def first_dq(P: PolyInX, t: RatFunc) -> PolyInX:
    """``(P'(x) - P'(t)) / (x - t)``."""
    dP = P.derivative()
    return poly_divexact_linear(dP - PolyInX._raw(P.vars, [dP(t)]), t)


def second_dq(P: PolyInX, t: RatFunc) -> PolyInX:
    """``(P(x) - P(t) - P'(t) (x - t)) / (x - t)^2``."""
    tangent = PolyInX.linear(P.vars, t).scale(P.derivative()(t)) + PolyInX._raw(P.vars, [P(t)])
    num = P - tangent
    return poly_divexact_linear(poly_divexact_linear(num, t), t)


def _residue_factor(cover: CoverFamily, U: PolyInX, t: RatFunc, P: PolyInX) -> RatFunc:
    dPt = P.derivative()(t)
    if dPt.is_zero():
        raise DegenerateBranch(f"P'({t}) = 0: branch values collide")
    return U(t) / dPt


def _second_term(cover, U, t, P) -> PolyInX:
    return second_dq(P, t).scale(-_residue_factor(cover, U, t, P))


def _first_term(cover, U, t, P) -> PolyInX:
    return first_dq(P, t).scale(_residue_factor(cover, U, t, P).scale(Fraction(1, cover.d)))


def _shift_term(cover, U, t, P) -> PolyInX:
    q = poly_divexact_linear(U - PolyInX._raw(U.vars, [U(t)]), t)
    return q.scale(Fraction(cover.d - 1, cover.d))


def connection_action(cover: CoverFamily, k, U: PolyInX) -> PolyInX:
    """The connection form applied to ``U``, coefficients held constant (``B_k U``)."""
    i, _ = _direction(cover, k)
    if U.is_zero():
        return U
    if U.degree > cover.n - 2:
        raise ValueError(f"deg U = {U.degree} exceeds n - 2 = {cover.n - 2}")
    t = cover.branch_value(i)
    P = cover.polynomial()
    if U(t).is_zero():
        return _shift_term(cover, U, t, P)
    return _second_term(cover, U, t, P) + _first_term(cover, U, t, P) + _shift_term(cover, U, t, P)


def gm_derivative(cover: CoverFamily, k, U: PolyInX) -> PolyInX:
    """Covariant derivative ``nabla_{d/dt_k} U`` of the section ``U dx/y^(d-1)``.

    Parameter-dependent coefficients of ``U`` are differentiated as well,
    so the Leibniz rule ``nabla(f U) = (df/dt_k) U + f nabla U`` holds.
    """
    _, name = _direction(cover, k)
    return U.diff_param(name) + connection_action(cover, k, U)


def _basis_poly(cover: CoverFamily, m: int) -> PolyInX:
    return PolyInX.monomial(cover.vars, m)


@dataclass(frozen=True)
class ConnectionMatrix:
    cover: CoverFamily
    wrt: str
    entries: tuple  # rows of RatFunc

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> list:
        return [list(r) for r in self.entries]

    def column(self, i: int) -> list:
        return [r[i] for r in self.entries]


def connection_matrix(cover: CoverFamily, k) -> ConnectionMatrix:
    """Matrix of ``nabla_{d/dt_k}`` in the basis ``1, x, ..., x^(n-2)``."""
    _, name = _direction(cover, k)
    size = cover.n - 1
    cols = [connection_action(cover, k, _basis_poly(cover, m)).coordinates(size) for m in range(size)]
    rows = tuple(tuple(cols[m][r] for m in range(size)) for r in range(size))
    return ConnectionMatrix(cover=cover, wrt=name, entries=rows)


def covariant_derivative(B: ConnectionMatrix, v: list) -> list:
    """``d v/d t + B v`` for a coordinate vector ``v``."""
    Bv = linalg.matvec(B.rows(), v)
    return [vi.diff(B.wrt) + w for vi, w in zip(v, Bv)]


def curvature(cover: CoverFamily, k1, k2) -> list:
    """``d_1 B_2 - d_2 B_1 + B_1 B_2 - B_2 B_1``; flatness means this is zero."""
    _, n1 = _direction(cover, k1)
    _, n2 = _direction(cover, k2)
    B1 = connection_matrix(cover, k1).rows()
    if n1 == n2:
        size = len(B1)
        return [[RatFunc.constant(cover.vars, 0)] * size for _ in range(size)]
    B2 = connection_matrix(cover, k2).rows()
    out = linalg.matsub(linalg.matdiff(B2, n1), linalg.matdiff(B1, n2))
    out = linalg.matadd(out, linalg.matmul(B1, B2))
    return linalg.matsub(out, linalg.matmul(B2, B1))


__all__ = [
    "ConnectionMatrix",
    "DegenerateBranch",
    "InexactDivision",
    "connection_action",
    "connection_matrix",
    "covariant_derivative",
    "curvature",
    "first_dq",
    "gm_derivative",
    "second_dq",
]
