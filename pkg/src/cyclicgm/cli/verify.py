"""Replays of the printed computations for the two non-linear families.

Each check recomputes a quantity from scratch and compares it with the
published value by exact symbolic equality.  Expected values are written
as strings and parsed, so a failure reports both sides canonically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..arith import MultiPoly, PolyInX, RatFunc, VarTable, linalg, substitute
from ..cover import finite_monodromy_check, genus, h10_dim, make_cover
from ..expr import parse_polyx, parse_ratfunc, print_canonical
from ..flags import derived_flag, multi_direction_span
from ..forms import Eigenform, divisor, holomorphic_basis, stratum_signature
from ..gauss_manin import connection_matrix, curvature, first_dq, gm_derivative, second_dq

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    expected: str = ""
    actual: str = ""

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if not self.ok:
            out["expected"] = self.expected
            out["actual"] = self.actual
        return out


class Mismatch(Exception):
    def __init__(self, expected, actual):
        super().__init__(f"expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


def _canon(value) -> str:
    if isinstance(value, (MultiPoly, RatFunc, PolyInX)):
        return print_canonical(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_canon(v) for v in value) + "]"
    return str(value)


def _expect(expected, actual) -> None:
    if expected != actual:
        raise Mismatch(_canon(expected), _canon(actual))


# --- the families --------------------------------------------------------------


def curve_family():
    return make_cover(6, 4, [0, 1, -1, "u"])


def surface_family():
    return make_cover(6, 5, [0, 1, "a", "b", "c"])


def decic_family():
    return make_cover(10, 3, [0, 1, "v"])


GM_MATRIX_64 = [
    ["(5*u^2 - 4)/(6*u*(1 - u^2))", "u/(6*u*(1 - u^2))", "u^2/(6*u*(1 - u^2))"],
    ["5*u/(6*u*(1 - u^2))", "5*u^2/(6*u*(1 - u^2))", "5*u/(6*u*(1 - u^2))"],
    ["2/(6*u*(1 - u^2))", "2*u/(6*u*(1 - u^2))", "2*u^2/(6*u*(1 - u^2))"],
]
NABLA_P2 = ["u^2/(6*u*(1 - u^2))", "5*u/(6*u*(1 - u^2))", "2*u^2/(6*u*(1 - u^2))"]
SECOND_VECTOR = ["(7 + u^2)/(6*(1 - u^2))", "40*u/(6*(1 - u^2))", "(24 - 8*u^2)/(6*(1 - u^2))"]

# difference quotients at a branch value u, the two others being v and w
FIRST_DQ_UVW = (
    "(u^3 - u^2 + u*v - u^2*v + u*w - u^2*w - 2*v*w + u*v*w)"
    " + (u^2 - u + 3*v - u*v + 3*w - u*w + 3*v*w)*x + (u - 4 - 4*v - 4*w)*x^2 + 5*x^3"
)
SECOND_DQ_UVW = (
    "(u^3 - u^2 + u*v - u^2*v + u*w - u^2*w - v*w + u*v*w)"
    " + (u^2 - u + v - u*v + w - u*w + v*w)*x + (u - 1 - v - w)*x^2 + x^3"
)
COMBINED_UVW = (
    "1/6*(5*u^2 - 5*u^3 - 5*u*v + 5*u^2*v - 5*u*w + 5*u^2*w + 4*v*w - 5*u*v*w)"
    " + 1/6*(5*u - 5*u^2 - 3*v + 5*u*v - 3*w + 5*u*w - 3*v*w)*x"
    " + 1/6*(2 - 5*u + 2*v + 2*w)*x^2 - x^3/6"
)
DET_M = "-91/216*(a - b)*(a - c)*(b - c)"
DET_M_UNSCALED = "91/216/(a*b*c*(a - 1)*(b - 1)*(c - 1)*(a - b)*(a - c)*(b - c))"


def _uvw_instances(src: str, cover):
    """Yield ``(u, expected PolyInX)`` for each choice ``u`` in ``{a, b, c}``."""
    uvw = VarTable.of("u", "v", "w")
    template = parse_polyx(src, uvw)
    names = cover.params
    for u in names:
        v, w = [p for p in names if p != u]
        yield u, substitute(template, {"u": u, "v": v, "w": w}, cover.vars)


def _matrix(rows, vars):
    return [[parse_ratfunc(s, vars) for s in row] for row in rows]


def _vector(entries, vars):
    return [parse_ratfunc(s, vars) for s in entries]


# --- checks ----------------------------------------------------------------------


def check_genus_64():
    _expect(7, genus(6, 4))


def check_genus_65():
    _expect(10, genus(6, 5))


def _basis_monomials(cover, j):
    return [print_canonical(f.U) for f in holomorphic_basis(cover, j)]


def check_lemma_basis_64():
    cover = curve_family()
    _expect(["1", "x", "x^2"], _basis_monomials(cover, 1))
    _expect([], _basis_monomials(cover, 5))


def check_lemma_basis_65():
    _expect(["1", "x", "x^2", "x^3"], _basis_monomials(surface_family(), 1))


def _check_stratum(cover, form, signature):
    div = divisor(form)
    _expect(2 * cover.genus - 2, div.degree)
    _expect(signature, stratum_signature(form))


def check_stratum_h12():
    cover = curve_family()
    _check_stratum(cover, Eigenform.monomial(cover, 2), (12,))


def check_stratum_h18():
    cover = surface_family()
    _check_stratum(cover, Eigenform.monomial(cover, 0), (18,))


def check_stratum_h16():
    cover = decic_family()
    _check_stratum(cover, Eigenform.monomial(cover, 0), (16,))


def check_gm_matrix_64():
    cover = curve_family()
    _expect(_matrix(GM_MATRIX_64, cover.vars), connection_matrix(cover, "u").rows())


def check_gm_vec_nabla_p2():
    cover = curve_family()
    report = derived_flag(cover, Eigenform.monomial(cover, 2), "u", 1)
    _expect(_vector(NABLA_P2, cover.vars), list(report.vectors[1]))


def check_gm_vec_second():
    cover = curve_family()
    nabla_p2 = gm_derivative(cover, "u", PolyInX.monomial(cover.vars, 2))
    weight = parse_ratfunc("6*(1 - u^2)", cover.vars)
    second = gm_derivative(cover, "u", nabla_p2.scale(weight))
    _expect(_vector(SECOND_VECTOR, cover.vars), second.coordinates(3))


def check_dq_first_65():
    cover = surface_family()
    P = cover.polynomial()
    for u, expected in _uvw_instances(FIRST_DQ_UVW, cover):
        _expect(expected, first_dq(P, RatFunc.var(cover.vars, u)))


def check_dq_second_65():
    cover = surface_family()
    P = cover.polynomial()
    for u, expected in _uvw_instances(SECOND_DQ_UVW, cover):
        _expect(expected, second_dq(P, RatFunc.var(cover.vars, u)))


def check_gm_combined_65():
    cover = surface_family()
    dP = cover.polynomial().derivative()
    one = PolyInX.monomial(cover.vars, 0)
    for u, expected in _uvw_instances(COMBINED_UVW, cover):
        actual = gm_derivative(cover, u, one).scale(dP(RatFunc.var(cover.vars, u)))
        _expect(expected, actual)


def check_det_m():
    cover = surface_family()
    report = multi_direction_span(cover, Eigenform.monomial(cover, 0), ["a", "b", "c"], scale_by_Pprime=True)
    _expect(parse_ratfunc(DET_M, cover.vars), report.determinant)


def check_det_m_unscaled():
    cover = surface_family()
    report = multi_direction_span(cover, Eigenform.monomial(cover, 0), ["a", "b", "c"])
    _expect(parse_ratfunc(DET_M_UNSCALED, cover.vars), report.determinant)


def _check_monodromy(cover, orbit_h10=None):
    report = finite_monodromy_check(cover, 1)
    _expect("finite", report.verdict)
    if orbit_h10 is not None:
        _expect(orbit_h10, [r.h10 for r in report.orbit])


def check_monodromy_64():
    _check_monodromy(curve_family(), [3, 0])


def check_monodromy_65():
    _check_monodromy(surface_family(), [4, 0])


def check_monodromy_103():
    cover = decic_family()
    _check_monodromy(cover, [2, 2, 0, 0])
    _expect(4, sum(r.h10 for r in finite_monodromy_check(cover, 1).orbit))


def check_flatness_65():
    cover = surface_family()
    for k1, k2 in combinations(cover.params, 2):
        K = curvature(cover, k1, k2)
        if not linalg.is_zero_matrix(K):
            raise Mismatch(f"zero curvature for ({k1}, {k2})", _canon(K))


def _check_genus_sum(d, n):
    cover = make_cover(d, n, [f"t{i}" for i in range(1, n + 1)])
    _expect(genus(d, n), sum(h10_dim(cover, j) for j in range(1, d)))


CHECKS = {
    "GENUS-64": check_genus_64,
    "GENUS-65": check_genus_65,
    "LEMMA-BASIS-64": check_lemma_basis_64,
    "LEMMA-BASIS-65": check_lemma_basis_65,
    "STRATUM-H12": check_stratum_h12,
    "STRATUM-H18": check_stratum_h18,
    "STRATUM-H16": check_stratum_h16,
    "GM-MATRIX-64": check_gm_matrix_64,
    "GM-VEC-NABLA-P2": check_gm_vec_nabla_p2,
    "GM-VEC-SECOND": check_gm_vec_second,
    "DQ-FIRST-65": check_dq_first_65,
    "DQ-SECOND-65": check_dq_second_65,
    "GM-COMBINED-65": check_gm_combined_65,
    "DET-M": check_det_m,
    "DET-M-UNSCALED": check_det_m_unscaled,
    "MONODROMY-64": check_monodromy_64,
    "MONODROMY-65": check_monodromy_65,
    "MONODROMY-103": check_monodromy_103,
    "FLATNESS-65": check_flatness_65,
    "GENUS-SUM-64": lambda: _check_genus_sum(6, 4),
    "GENUS-SUM-65": lambda: _check_genus_sum(6, 5),
    "GENUS-SUM-103": lambda: _check_genus_sum(10, 3),
}


def run_check(name: str) -> CheckResult:
    try:
        CHECKS[name]()
    except Mismatch as exc:
        return CheckResult(name, FAIL, exc.expected, exc.actual)
    except Exception as exc:  # a crashing check is reported, not propagated
        return CheckResult(name, ERROR, "", f"{type(exc).__name__}: {exc}")
    return CheckResult(name, PASS)


def verify_paper(only=None, fail_fast: bool = False) -> list:
    """Run the named checks (all by default) in registry order."""
    names = list(CHECKS)
    if only:
        unknown = [n for n in only if n not in CHECKS]
        if unknown:
            raise KeyError(f"unknown check(s): {', '.join(unknown)}")
        names = [n for n in names if n in set(only)]
    results = []
    for name in names:
        result = run_check(name)
        results.append(result)
        if fail_fast and not result.ok:
            break
    return results
