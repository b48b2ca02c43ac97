"""Derived flags of sections and non-linearity certificates.

Ranks are generic ranks over the parameter fraction field: a minor counts
as nonzero iff it is a nonzero rational function.  The report lists the
squarefree numerator and denominator factors of the witness so the
excluded parameter values are visible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .arith import MultiPoly, RatFunc, VarTable, linalg, poly_gcd, substitute
from .cover import CoverError, CoverFamily
from .forms import Eigenform
from .gauss_manin import ConnectionMatrix, _direction, connection_matrix, covariant_derivative, gm_derivative

FULL_RANK = "full-rank"
RANK_DEFICIENT = "rank-deficient"


@dataclass(frozen=True)
class FlagReport:
    section: Eigenform
    directions: tuple
    vectors: tuple
    ranks: tuple
    determinant: RatFunc | None
    verdict: str
    witness: RatFunc | None = None
    excluded: tuple = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0


@dataclass(frozen=True)
class Certificate:
    """``certified`` means the vectors form a basis of the eigenspace fiber.

    A negative answer makes no claim of linearity.
    """

    certified: bool
    witness: RatFunc | None


def squarefree_part(p: MultiPoly) -> MultiPoly:
    g = p
    for name in p.variables():
        g = poly_gcd(g, p.diff(name))
        if g.is_constant():
            break
    return p.primitive() if g.is_constant() else p.divexact(g).primitive()


def _vanishing_locus(f: RatFunc | None) -> tuple:
    if f is None or f.is_zero():
        return ()
    out = []
    for part in (f.num, f.den):
        if not part.is_constant():
            out.append(squarefree_part(part))
    return tuple(out)


def _maximal_minor(vectors: list):
    """First nonzero maximal minor (columns = vectors), or ``None``."""
    m = linalg.columns_to_matrix(vectors)
    nrows, ncols = len(m), len(vectors)
    k = min(nrows, ncols)
    for rows in combinations(range(nrows), k):
        for cols in combinations(range(ncols), k):
            sub = [[m[r][c] for c in cols] for r in rows]
            minor = linalg.det(sub)
            if not minor.is_zero():
                return minor
    return None


def _report(section, directions, vectors) -> FlagReport:
    ranks = tuple(linalg.rank(linalg.columns_to_matrix(vectors[: i + 1])) for i in range(len(vectors)))
    dim = len(vectors[0])
    square = len(vectors) == dim
    determinant = linalg.det(linalg.columns_to_matrix(vectors)) if square else None
    witness = determinant if square else _maximal_minor(vectors)
    full = ranks[-1] == min(len(vectors), dim) and witness is not None and not witness.is_zero()
    return FlagReport(
        section=section,
        directions=tuple(directions),
        vectors=tuple(tuple(v) for v in vectors),
        ranks=ranks,
        determinant=determinant,
        verdict=FULL_RANK if full else RANK_DEFICIENT,
        witness=witness if full else None,
        excluded=_vanishing_locus(witness if full else None),
    )


def _check_section(cover: CoverFamily, section: Eigenform) -> None:
    if section.cover is not cover and section.cover != cover:
        raise CoverError("section lives on a different cover")
    if section.l != cover.d - 1:
        raise CoverError(f"the connection acts on forms U dx/y^{cover.d - 1}, got l = {section.l}")
    if section.U.degree > cover.n - 2:
        raise CoverError(f"deg U = {section.U.degree} exceeds n - 2 = {cover.n - 2}")


def derived_flag(cover: CoverFamily, section: Eigenform, direction, max_order: int) -> FlagReport:
    """``[s, nabla s, ..., nabla^max_order s]`` along one parameter, with prefix ranks."""
    _check_section(cover, section)
    _, name = _direction(cover, direction)
    size = cover.n - 1
    U = section.U
    vectors = [U.coordinates(size)]
    for _ in range(max_order):
        U = gm_derivative(cover, name, U)
        vectors.append(U.coordinates(size))
    return _report(section, [name] * max_order, vectors)


def multi_direction_span(cover: CoverFamily, section: Eigenform, directions, scale_by_Pprime: bool = False) -> FlagReport:
    """``[s, nabla_1 s, ..., nabla_m s]`` for distinct parameter directions.

    With ``scale_by_Pprime`` each derivative is multiplied by ``P'(t_k)``
    for its own branch value ``t_k``.
    """
    _check_section(cover, section)
    names = [_direction(cover, k)[1] for k in directions]
    if len(set(names)) != len(names):
        raise CoverError(f"directions must be distinct, got {names}")
    size = cover.n - 1
    vectors = [section.U.coordinates(size)]
    dP = cover.polynomial().derivative()
    for name in names:
        V = gm_derivative(cover, name, section.U)
        if scale_by_Pprime:
            V = V.scale(dP(RatFunc.var(cover.vars, name)))
        vectors.append(V.coordinates(size))
    return _report(section, names, vectors)


def nonlinearity_certificate(report: FlagReport) -> Certificate:
    dim = report.dimension
    ok = (
        report.verdict == FULL_RANK
        and len(report.vectors) == dim
        and report.ranks[-1] == dim
        and report.determinant is not None
        and not report.determinant.is_zero()
    )
    return Certificate(certified=ok, witness=report.determinant if ok else None)


def _curve_value(value, target: VarTable) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, MultiPoly):
        return RatFunc.poly(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc.constant(target, value)
    if isinstance(value, str):
        from .expr import parse_ratfunc

        return parse_ratfunc(value, target)
    raise TypeError(f"bad curve coordinate {value!r}")


def curve_derived_flag(cover: CoverFamily, section: Eigenform, curve: dict, param: str = "s", max_order: int | None = None) -> FlagReport:
    """Derived flag of ``section`` pulled back along a rational curve in parameter space.

    ``curve`` maps branch parameters to rational functions of ``param``
    (strings are parsed); unmapped branch parameters stay symbolic and are
    constant along the curve.  The pulled-back connection is
    ``sum_k (dt_k/ds) B_k`` evaluated on the curve.
    """
    _check_section(cover, section)
    for name in curve:
        _direction(cover, name)
    if param in cover.vars:
        raise CoverError(f"curve parameter {param!r} clashes with a cover variable")
    target = VarTable.of(param, *[p for p in cover.vars.params if p not in curve])
    images = {name: _curve_value(v, target) for name, v in curve.items()}
    size = cover.n - 1
    zero = RatFunc.constant(target, 0)
    B = [[zero] * size for _ in range(size)]
    for name, img in images.items():
        speed = img.diff(param)
        if speed.is_zero():
            continue
        Bk = [[substitute(e, images, target) for e in row] for row in connection_matrix(cover, name).rows()]
        B = linalg.matadd(B, [[speed * e for e in row] for row in Bk])
    pulled = ConnectionMatrix(cover=cover, wrt=param, entries=tuple(tuple(r) for r in B))
    v = [substitute(c, images, target) for c in section.U.coordinates(size)]
    vectors = [v]
    for _ in range(size - 1 if max_order is None else max_order):
        v = covariant_derivative(pulled, v)
        vectors.append(v)
    return _report(section, [param] * (len(vectors) - 1), vectors)


__all__ = [
    "Certificate",
    "FULL_RANK",
    "FlagReport",
    "RANK_DEFICIENT",
    "curve_derived_flag",
    "derived_flag",
    "multi_direction_span",
    "nonlinearity_certificate",
    "squarefree_part",
]
