import pytest
import sympy

from cyclicgm.arith import RatFunc, substitute
from cyclicgm.cover import CoverError
from cyclicgm.expr import parse_polyx, parse_ratfunc
from cyclicgm.flags import (
    FULL_RANK,
    curve_derived_flag,
    derived_flag,
    multi_direction_span,
    nonlinearity_certificate,
    squarefree_part,
)
from cyclicgm.forms import Eigenform

from conftest import sympy_equal, to_sympy


@pytest.fixture(scope="module")
def curve_flag(curve):
    return derived_flag(curve, Eigenform.monomial(curve, 2), "u", 2)


@pytest.fixture(scope="module")
def surface_span(surface):
    return multi_direction_span(surface, Eigenform.monomial(surface, 0), ["a", "b", "c"], scale_by_Pprime=True)


@pytest.fixture(scope="module")
def surface_span_unscaled(surface):
    return multi_direction_span(surface, Eigenform.monomial(surface, 0), ["a", "b", "c"])


def test_curve_flag_report(curve_flag, curve):
    assert curve_flag.ranks == (1, 2, 3) and curve_flag.verdict == FULL_RANK
    assert curve_flag.determinant == parse_ratfunc("-35/(216*(1 - u^2)^2)", curve.vars)
    cert = nonlinearity_certificate(curve_flag)
    assert cert.certified and cert.witness == curve_flag.determinant


def test_curve_flag_determinant_against_sympy(curve_flag):
    m = sympy.Matrix([[to_sympy(v[r]) for v in curve_flag.vectors] for r in range(3)])
    assert sympy_equal(m.det(), to_sympy(curve_flag.determinant))


def test_curve_flag_excludes_the_punctures(curve_flag, curve):
    assert [str(p) for p in curve_flag.excluded] == ["u^2 - 1"]


def test_printed_second_vector_is_the_leibniz_transform(curve_flag, curve):
    # nabla(6(1-u^2) nabla p2) = -12u nabla p2 + 6(1-u^2) nabla^2 p2
    w = parse_ratfunc("6*(1 - u^2)", curve.vars)
    got = [w.diff("u") * a + w * b for a, b in zip(curve_flag.vectors[1], curve_flag.vectors[2])]
    printed = ["(7 + u^2)/(6*(1 - u^2))", "40*u/(6*(1 - u^2))", "(24 - 8*u^2)/(6*(1 - u^2))"]
    assert got == [parse_ratfunc(s, curve.vars) for s in printed]


def test_surface_span(surface_span, surface):
    assert surface_span.ranks == (1, 2, 3, 4)
    assert surface_span.determinant == parse_ratfunc("(-91/216)*(a-b)*(a-c)*(b-c)", surface.vars)
    assert nonlinearity_certificate(surface_span).certified


def test_surface_span_unscaled(surface_span_unscaled, surface):
    expected = parse_ratfunc("91/216/(a*b*c*(a-1)*(b-1)*(c-1)*(a-b)*(a-c)*(b-c))", surface.vars)
    assert surface_span_unscaled.determinant == expected


def test_column_scaling_consistency(surface_span, surface_span_unscaled, surface):
    dP = surface.polynomial().derivative()
    factor = RatFunc.constant(surface.vars, 1)
    for k in "abc":
        factor = factor * dP(RatFunc.var(surface.vars, k))
    assert factor * surface_span_unscaled.determinant == surface_span.determinant


def test_decic_family_is_capped(decic):
    report = derived_flag(decic, Eigenform.monomial(decic, 0), "v", 2)
    assert report.ranks == (1, 2, 2)
    assert report.determinant is None
    assert not nonlinearity_certificate(report).certified


def test_order_zero(curve):
    report = derived_flag(curve, Eigenform.monomial(curve, 1), "u", 0)
    assert report.ranks == (1,)
    assert report.verdict == FULL_RANK


def test_empty_direction_list(surface):
    report = multi_direction_span(surface, Eigenform.monomial(surface, 0), [])
    assert report.ranks == (1,)


def test_ranks_monotone_and_bounded(curve, decic):
    for cover, name in ((curve, "u"), (decic, "v")):
        for m in range(cover.n - 1):
            r = derived_flag(cover, Eigenform.monomial(cover, m), name, 3).ranks
            assert list(r) == sorted(r) and r[-1] <= cover.n - 1


def test_scaling_the_section_keeps_the_verdict(curve, curve_flag):
    f = parse_ratfunc("(u^2 + 3)/(u - 5)", curve.vars)
    section = Eigenform(curve, 5, parse_polyx("x^2", curve.vars).scale(f))
    report = derived_flag(curve, section, "u", 2)
    assert nonlinearity_certificate(report).certified
    ratio = report.determinant / curve_flag.determinant
    assert ratio == f ** 3


def test_section_validation(curve):
    with pytest.raises(CoverError):
        derived_flag(curve, Eigenform.monomial(curve, 0, 1), "u", 1)
    with pytest.raises(CoverError):
        multi_direction_span(curve, Eigenform.monomial(curve, 0), ["u", "u"])


def test_curve_pullback_on_the_surface(surface):
    report = curve_derived_flag(surface, Eigenform.monomial(surface, 0), {"a": "s", "b": "2*s", "c": "s^2"})
    assert report.ranks == (1, 2, 3, 4)
    assert nonlinearity_certificate(report).certified


def test_pullback_along_a_coordinate_line_matches_derived_flag(curve, curve_flag):
    report = curve_derived_flag(curve, Eigenform.monomial(curve, 2), {"u": "s"}, max_order=2)
    assert report.ranks == curve_flag.ranks
    assert substitute(report.determinant, {"s": "u"}, curve.vars) == curve_flag.determinant


def test_squarefree_part(curve):
    p = parse_ratfunc("(u^2 - 1)^3*u", curve.vars).num
    assert str(squarefree_part(p)) == "u^3 - u"
