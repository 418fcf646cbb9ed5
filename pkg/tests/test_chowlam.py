import warnings

import pytest
from hypothesis import given, settings, strategies as st

from clrecover.checks import load_example
from clrecover.chowlam import (Parametrization, VarietyIdeal, chow_lam_ideal, chow_lam_parametric,
                               dual_variety, forms_equivalent, membership_oracle, normalize_form,
                               recovery_ideal, residual_analysis, same_radical, sweep_ideal)
from clrecover.grassmann import GrassmannContext, SubspaceMatrix, plucker_name, primal_plucker_vector
from clrecover.chowlam import DimensionMismatch
from clrecover.groebner import Ideal, contains, hilbert_dim_degree, ideal_equal, saturation
from clrecover.poly import PolyRing, RationalMatrix

CUBIC = ["q1*q3-q2^2", "q2*q4-q3^2", "q1*q4-q2*q3"]


def twisted_cubic():
    return VarietyIdeal.from_strings(GrassmannContext(1, 4, 3), CUBIC)


def test_point_in_plane_gives_its_linear_form():
    # lines through [1:2:3] are those whose kernel vector p satisfies p.x = 0
    V = VarietyIdeal.from_strings(GrassmannContext(1, 3, 2), ["2*q1-q2", "3*q1-q3"])
    R = chow_lam_ideal(V)
    assert R.is_hypersurface
    assert forms_equivalent(R.form, R.form.ring.parse("p1 + 2*p2 + 3*p3"))


def test_plane_curve_is_its_own_form():
    # Q is a point, so the locus is the curve itself, read in primal coordinates
    ctx = GrassmannContext(1, 3, 3)
    V = VarietyIdeal.from_strings(ctx, ["q1^3 + q2^3 - q3^3 + q1*q2*q3"])
    R = chow_lam_ideal(V)
    assert R.form.total_degree() == 3


def test_twisted_cubic_chow_form_degree_and_parametric_agreement():
    R = chow_lam_ideal(twisted_cubic())
    assert R.form.total_degree() == 3
    P = Parametrization(["s", "t"], [["s^3", "s^2*t", "s*t^2", "t^3"]])
    assert forms_equivalent(R.form, chow_lam_parametric(P, GrassmannContext(1, 4, 3)).form)


def _line_value(form, rows):
    p = primal_plucker_vector(SubspaceMatrix(rows))
    return form.evaluate({plucker_name("p", J, 4): v for J, v in p.items()})


@settings(max_examples=25, deadline=None)
@given(st.integers(-6, 6), st.integers(1, 6), st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_twisted_cubic_form_vanishes_on_secant_lines(s, t, other):
    form = chow_lam_ideal(twisted_cubic()).form
    c = [s ** 3, s * s * t, s * t * t, t ** 3]
    if RationalMatrix([c, other]).rank() < 2:
        return
    assert _line_value(form, [c, other]) == 0


def test_twisted_cubic_form_nonzero_on_a_skew_line():
    form = chow_lam_ideal(twisted_cubic()).form
    # e1+e4, e2-e3 span a line missing the curve
    assert _line_value(form, [[1, 0, 0, 1], [0, 1, -1, 0]]) != 0


def test_recovery_of_twisted_cubic():
    W = recovery_ideal(chow_lam_ideal(twisted_cubic()))
    assert hilbert_dim_degree(W) == (2, 3)
    assert same_radical(W, twisted_cubic().ideal) == (True, True)


def test_recovery_needs_a_hypersurface():
    V = VarietyIdeal.from_strings(GrassmannContext(1, 3, 2), ["q1", "q2", "q3"])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        R = chow_lam_ideal(V)
    assert not R.is_hypersurface and str(R.form) == "1"
    with pytest.raises(ValueError):
        recovery_ideal(R)


def test_membership_oracle_on_twisted_cubic():
    V = twisted_cubic()
    assert membership_oracle(SubspaceMatrix([[1, 2, 4, 8]]), V) == "in"
    assert membership_oracle(SubspaceMatrix([[1, 2, 4, 9]]), V) == "out"
    with pytest.raises(ValueError):
        membership_oracle(SubspaceMatrix([[1, 2, 4, 8]]), V, trials=0)


def test_oracle_seed_determinism():
    V = twisted_cubic()
    P = SubspaceMatrix([[1, 3, 9, 27]])
    assert membership_oracle(P, V, seed=7) == membership_oracle(P, V, seed=7) == "in"


def test_sweep_of_twisted_cubic_is_itself():
    S = sweep_ideal(twisted_cubic())
    x = S.ring
    T = Ideal(x, [x.parse(g.replace("q", "x")) for g in CUBIC])
    assert same_radical(S, T) == (True, True)


def test_sweep_of_a_ruling_is_the_quadric():
    doc = load_example("quadric-rulings")
    V = VarietyIdeal.from_strings(GrassmannContext(2, 4, 3), doc["rulings"]["A"])
    S = sweep_ideal(V)
    assert len(S.generators) == 1
    x = S.ring
    assert forms_equivalent(S.generators[0], x.parse("x1*x4 - x2*x3"))


def test_dual_of_diagonal_conic():
    ring = PolyRing(["x0", "x1", "x2"])
    D = dual_variety(ring.parse("x0^2 + 2*x1^2 + 3*x2^2"))
    assert forms_equivalent(D.generators[0], D.ring.parse("6*y0^2 + 3*y1^2 + 2*y2^2"))


def test_dual_rejects_inhomogeneous():
    ring = PolyRing(["x0", "x1"])
    with pytest.raises(ValueError):
        dual_variety(ring.parse("x0^2 + x1"))


def test_normalize_form():
    ring = PolyRing(["a", "b"])
    assert normalize_form(ring.parse("-4*a + 6*b")) == normalize_form(ring.parse("2*a - 3*b"))
    assert forms_equivalent(ring.parse("-4*a + 6*b"), ring.parse("2*a - 3*b"))
    assert not forms_equivalent(ring.parse("a + b"), ring.parse("a - b"))


def test_variety_must_be_homogeneous():
    with pytest.raises(ValueError):
        VarietyIdeal.from_strings(GrassmannContext(1, 3, 2), ["q1 - 1"])


# the three scheme structures on the Hirzebruch residual fat point
@pytest.mark.parametrize("kw,length", [({}, 25), ({"include_plucker": True}, 22), ({"reduce_kernel": True}, 27)])
def test_hirzebruch_recovery_conventions(kw, length):
    doc = load_example("hirzebruch")
    ctx = GrassmannContext(doc["k"], doc["n"], doc["r"])
    R = chow_lam_parametric(Parametrization.from_json(doc["parametrization"]), ctx)
    V = VarietyIdeal.from_strings(ctx, doc["variety"]["generators"])
    d, deg = hilbert_dim_degree(saturation(recovery_ideal(R, **kw), V.ideal))
    assert (d - 1, deg) == (0, length)


@pytest.mark.slow
def test_gr24_curve_residual_without_plucker():
    # the default scheme structure gives the same invariants and support (about a minute)
    from clrecover.chowlam import point_ideal, residual_analysis
    from clrecover.groebner import intersect, irrelevant_ideal

    doc = load_example("gr24-tangent-curve")
    V = VarietyIdeal.from_strings(GrassmannContext(doc["k"], doc["n"], doc["r"]), doc["variety"]["generators"])
    q = V.ring
    pts = [point_ideal(q, p) for p in doc["singular_points"]]
    S = intersect(pts[0], pts[1])
    W = recovery_ideal(chow_lam_ideal(V))
    assert hilbert_dim_degree(W) == (2, 14)
    rep = residual_analysis(saturation(W, irrelevant_ideal(q)), V, {"pts": S}, singular=S)
    assert rep.top_dim_degree == (1, 14) and rep.embedded_dim_degree == (0, 21)
    assert rep.supports[0].equal and rep.same_set_as_v


def test_parametric_tangent_lines_agree_with_ideal():
    doc = load_example("gr24-tangent-curve")
    ctx = GrassmannContext(2, 4, 3)
    # tangent lines of t -> (1, t, t^3, t^5)
    P = Parametrization(["t"], [["1", "t", "t^3", "t^5"], ["0", "1", "3*t^2", "5*t^4"]])
    R = chow_lam_parametric(P, ctx)
    assert forms_equivalent(R.form, R.form.ring.parse(doc["chow_lam_form"]))
    V = VarietyIdeal.from_strings(ctx, doc["variety"]["generators"])
    assert forms_equivalent(R.form, chow_lam_ideal(V).form)


def test_single_line_is_degenerate():
    V = VarietyIdeal.from_strings(GrassmannContext(2, 4, 3), ["q13", "q14", "q23", "q24", "q34"])
    with pytest.warns(DimensionMismatch):
        R = chow_lam_ideal(V)
    assert str(R.form) == "1" and not R.is_hypersurface


def test_conic_recovery_is_exact():
    V = VarietyIdeal.from_strings(GrassmannContext(1, 3, 3), ["q1*q3 - q2^2"])
    R = chow_lam_ideal(V)
    assert ideal_equal(recovery_ideal(R), V.ideal)


def _instances():
    doc = load_example("hirzebruch")
    hctx = GrassmannContext(2, 5, 3)
    yield chow_lam_parametric(Parametrization.from_json(doc["parametrization"]), hctx), \
        VarietyIdeal.from_strings(hctx, doc["variety"]["generators"])
    V = twisted_cubic()
    yield chow_lam_ideal(V), V
    rul = load_example("quadric-rulings")["rulings"]["A"]
    V = VarietyIdeal.from_strings(GrassmannContext(2, 4, 3), rul)
    yield chow_lam_ideal(V), V


def test_recovery_contains_source():
    for R, V in _instances():
        full = V.with_plucker()
        assert all(contains(full, g) for g in recovery_ideal(R).generators)


def test_residual_of_exact_recovery_is_empty():
    V = twisted_cubic()
    rep = residual_analysis(V.with_plucker(), V)
    assert str(rep.saturation.generators[0]) == "1"
    assert rep.same_set_as_v


def test_hirzebruch_oracle_examples():
    doc = load_example("hirzebruch")
    V = VarietyIdeal.from_strings(GrassmannContext(2, 5, 3), doc["variety"]["generators"])
    assert membership_oracle(SubspaceMatrix(doc["directrix"]), V) == "in"
    assert membership_oracle(SubspaceMatrix([[1, 1, 1, 0, 0], [1, 1, 1, 1, 1]]), V) == "in"
    assert membership_oracle(SubspaceMatrix([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]]), V) == "out"


def test_sweep_of_hirzebruch_is_cubic_scroll():
    doc = load_example("hirzebruch")
    V = VarietyIdeal.from_strings(GrassmannContext(2, 5, 3), doc["variety"]["generators"])
    S = sweep_ideal(V)
    assert hilbert_dim_degree(S) == (3, 3)
    for s in range(-3, 4):
        for t in range(-3, 4):
            pt = dict(zip(S.ring.variables, (1, s, s * s, s * t, s * s * t)))
            assert all(g.evaluate(pt) == 0 for g in S.generators)


def test_sweep_of_a_point_is_its_plane():
    V = VarietyIdeal.from_strings(GrassmannContext(2, 4, 3), ["q13", "q14", "q23", "q24", "q34"])
    S = sweep_ideal(V)
    x = S.ring
    assert ideal_equal(S, Ideal(x, [x.var("x3"), x.var("x4")]))


def test_duals_of_quadrics():
    ring = PolyRing(["x0", "x1", "x2"])
    D = dual_variety(ring.parse("x0*x2 - x1^2"))
    assert forms_equivalent(D.generators[0], D.ring.parse("y1^2 - 4*y0*y2"))
    ring = PolyRing(["x0", "x1", "x2", "x3"])
    D = dual_variety(ring.parse("x0*x3 - x1*x2"))
    assert forms_equivalent(D.generators[0], D.ring.parse("y0*y3 - y1*y2"))


def test_rows_method_agrees_with_incidence():
    doc = load_example("hirzebruch")
    ctx = GrassmannContext(doc["k"], doc["n"], doc["r"])
    P = Parametrization.from_json(doc["parametrization"])
    assert forms_equivalent(chow_lam_parametric(P, ctx).form, chow_lam_parametric(P, ctx, method="rows").form)
    with pytest.raises(ValueError):
        chow_lam_parametric(P, ctx, method="guess")
