import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from cyclicgm.arith import PolyInX, RatFunc, VarTable, linalg, substitute
from cyclicgm.cover import CoverError, make_cover
from cyclicgm.expr import parse_polyx
from cyclicgm.gauss_manin import (
    DegenerateBranch,
    _residue_factor,
    connection_action,
    connection_matrix,
    curvature,
    first_dq,
    gm_derivative,
    second_dq,
)

from conftest import sympy_equal, to_sympy


def X(src, vars):
    return parse_polyx(src, vars)


# --- difference quotients ------------------------------------------------------------


def test_dq_curve_family(curve):
    P, u = curve.polynomial(), RatFunc.var(curve.vars, "u")
    assert first_dq(P, u) == X("4*x^2 + u*x + u^2 - 2", curve.vars)
    assert second_dq(P, u) == X("x^2 + u*x + u^2 - 1", curve.vars)


def test_dq_of_a_square():
    v = VarTable.of()
    P, zero = X("x^2", v), RatFunc.constant(v, 0)
    assert first_dq(P, zero) == X("2", v)
    assert second_dq(P, zero) == X("1", v)


def _sympy_dq(P, t):
    x = sympy.Symbol("x")
    p = to_sympy(P)
    tt = to_sympy(t)
    dp = sympy.diff(p, x)
    q1 = sympy.cancel((dp - dp.subs(x, tt)) / (x - tt))
    q2 = sympy.cancel((p - p.subs(x, tt) - dp.subs(x, tt) * (x - tt)) / (x - tt) ** 2)
    return q1, q2


@pytest.mark.parametrize("k", ["a", "b", "c"])
def test_dq_against_sympy(surface, k):
    P, t = surface.polynomial(), RatFunc.var(surface.vars, k)
    q1, q2 = _sympy_dq(P, t)
    assert sympy_equal(to_sympy(first_dq(P, t)), q1)
    assert sympy_equal(to_sympy(second_dq(P, t)), q2)


# --- the connection on the named families --------------------------------------------------


GM_COLUMNS = {
    "1": "(5*u^2 - 4 + 5*u*x + 2*x^2)/(6*u*(1 - u^2))",
    "x": "(u + 5*u^2*x + 2*u*x^2)/(6*u*(1 - u^2))",
    "x^2": "(u^2 + 5*u*x + 2*u^2*x^2)/(6*u*(1 - u^2))",
}


@pytest.mark.parametrize("U", list(GM_COLUMNS))
def test_gm_columns_curve(curve, U):
    assert gm_derivative(curve, "u", X(U, curve.vars)) == X(GM_COLUMNS[U], curve.vars)


def test_gm_combined_surface_display(surface):
    P = surface.polynomial()
    dPa = P.derivative()(RatFunc.var(surface.vars, "a"))
    expected = X(
        "1/6*(5*a^2 - 5*a^3 - 5*a*b + 5*a^2*b - 5*a*c + 5*a^2*c + 4*b*c - 5*a*b*c)"
        " + 1/6*(5*a - 5*a^2 - 3*b + 5*a*b - 3*c + 5*a*c - 3*b*c)*x"
        " + 1/6*(2 - 5*a + 2*b + 2*c)*x^2 - x^3/6",
        surface.vars,
    )
    assert gm_derivative(surface, "a", X("1", surface.vars)).scale(dPa) == expected


def test_generic_matrix_specializes(curve):
    generic = make_cover(6, 4, ["t1", "t2", "t3", "t4"])
    B = connection_matrix(generic, "t4").rows()
    bind = {"t1": 0, "t2": 1, "t3": -1, "t4": "u"}
    special = [[substitute(e, bind, curve.vars) for e in row] for row in B]
    assert special == connection_matrix(curve, "u").rows()


def test_column_zero_is_derivative_of_one(surface):
    B = connection_matrix(surface, "b")
    col = gm_derivative(surface, "b", X("1", surface.vars)).coordinates(4)
    assert B.column(0) == col


def _sympy_connection(cover, k):
    """The connection formula re-implemented on top of sympy."""
    x = sympy.Symbol("x")
    p = to_sympy(cover.polynomial())
    t = sympy.Symbol(k)
    dp = sympy.diff(p, x)
    q1, q2 = _sympy_dq(cover.polynomial(), RatFunc.var(cover.vars, k))
    d = cover.d
    cols = []
    for m in range(cover.n - 1):
        U = x**m
        r = U.subs(x, t) / dp.subs(x, t)
        V = -r * q2 + sympy.Rational(1, d) * r * q1 + sympy.Rational(d - 1, d) * sympy.cancel((U - U.subs(x, t)) / (x - t))
        V = sympy.Poly(sympy.cancel(V), x)
        cols.append([V.coeff_monomial(x**i) for i in range(cover.n - 1)])
    return sympy.Matrix(cover.n - 1, cover.n - 1, lambda r, c: cols[c][r])


def test_connection_against_sympy(surface):
    mine = connection_matrix(surface, "c").rows()
    ref = _sympy_connection(surface, "c")
    for r in range(4):
        for c in range(4):
            assert sympy_equal(to_sympy(mine[r][c]), ref[r, c])


# --- invariants ----------------------------------------------------------------------


def _random_scalar(rng, vars, name):
    t = RatFunc.var(vars, name)
    num = sum((t ** i).scale(Fraction(rng.randint(-4, 4), rng.randint(1, 3))) for i in range(3))
    den = t ** rng.randint(0, 2) + RatFunc.constant(vars, rng.choice([1, 2, 5]))
    f = num / den
    return f if not f.is_zero() else RatFunc.constant(vars, 1)


def test_leibniz_rule(curve, surface):
    rng = random.Random(7)
    cases = 0
    for _ in range(100):
        fam = curve if rng.random() < 0.5 else surface
        k = rng.choice(fam.params)
        f = _random_scalar(rng, fam.vars, rng.choice(fam.params))
        U = PolyInX.monomial(fam.vars, rng.randrange(fam.n - 1))
        lhs = gm_derivative(fam, k, U.scale(f))
        rhs = U.scale(f.diff(k)) + gm_derivative(fam, k, U).scale(f)
        assert lhs == rhs
        cases += 1
    assert cases == 100


@pytest.mark.parametrize("fam", ["curve", "surface", "decic"])
def test_degree_bound(fam, request):
    cover = request.getfixturevalue(fam)
    for k in cover.params:
        for i in range(cover.n - 1):
            assert gm_derivative(cover, k, PolyInX.monomial(cover.vars, i)).degree <= cover.n - 2


def test_flat_surface(surface):
    for k1, k2 in combinations(surface.params, 2):
        assert linalg.is_zero_matrix(curvature(surface, k1, k2))


def test_flat_generic_curve():
    fam = make_cover(6, 4, ["t1", "t2", "t3", "u"])
    for k1, k2 in combinations(fam.params, 2):
        assert linalg.is_zero_matrix(curvature(fam, k1, k2))


def test_flatness_at_random_rational_points():
    # independent route: sympy matrices, derivatives, then evaluation at rational points
    fam = make_cover(5, 4, ["p", "q", 0, 1])
    Bp, Bq = _sympy_connection(fam, "p"), _sympy_connection(fam, "q")
    p, q = sympy.symbols("p q")
    K = Bq.diff(p) - Bp.diff(q) + Bp * Bq - Bq * Bp
    rng = random.Random(3)
    for _ in range(3):
        point = {p: sympy.Rational(rng.randint(2, 9), 11), q: sympy.Rational(-rng.randint(2, 9), 13)}
        assert all(e.subs(point) == 0 for e in K)
    assert linalg.is_zero_matrix(curvature(fam, "p", "q"))


def test_curvature_same_direction_is_zero(curve):
    assert linalg.is_zero_matrix(curvature(curve, "u", "u"))


def test_non_flat_perturbation_is_detected(surface, monkeypatch):
    import cyclicgm.gauss_manin as gm

    original = gm._shift_term
    monkeypatch.setattr(gm, "_shift_term", lambda *a: original(*a).scale(Fraction(1, 2)))
    assert not linalg.is_zero_matrix(curvature(make_cover(4, 4, ["s", "t", 0, 1]), "s", "t"))


def test_explicit_branch_values_are_not_directions(curve):
    with pytest.raises(CoverError):
        connection_matrix(curve, 0)


def test_degree_above_n_minus_2_is_refused(curve):
    with pytest.raises(ValueError):
        connection_action(curve, "u", PolyInX.monomial(curve.vars, 3))


def test_vanishing_derivative_is_degenerate():
    v = VarTable.of("u")
    P = X("x^2*(x - u)", v)
    with pytest.raises(DegenerateBranch):
        _residue_factor(None, X("1", v), RatFunc.constant(v, 0), P)
