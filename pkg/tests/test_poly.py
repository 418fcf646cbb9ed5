from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from clrecover.poly import (MissingAssignment, PolyRing, PolySyntaxError, RationalMatrix, RingMismatch,
                            SizeTooLarge, UndeclaredVariable, matrix_minors, maximal_minors)

R = PolyRing(["x", "y", "z"])


def test_parse_and_print_roundtrip():
    f = R.parse("(x+2*y)^2 - 3/2*z")
    assert str(f) == "x^2 + 4*x*y + 4*y^2 - 3/2*z"
    assert R.parse(str(f)) == f
    assert f.total_degree() == 2
    assert not f.is_homogeneous()


@pytest.mark.parametrize("text", ["x+", "x**2", "2x", "x^-1", "", "(x+y"])
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError):
        R.parse(text)


def test_undeclared_variable():
    with pytest.raises(UndeclaredVariable):
        R.parse("x + w")


def test_duplicate_variables_rejected():
    with pytest.raises(ValueError):
        PolyRing(["x", "x"])


def test_evaluate_and_missing_assignment():
    f = R.parse("x^2 + 4*x*y + 4*y^2 - 3/2*z")
    assert f.evaluate({"x": 1, "y": 1, "z": 2}) == 6
    assert f.evaluate({"x": Fraction(1, 2), "y": 0, "z": 0}) == Fraction(1, 4)
    with pytest.raises(MissingAssignment):
        f.evaluate({"x": 1})


def test_derivative_and_substitute():
    f = R.parse("x^2*y + z")
    assert f.derivative("x") == R.parse("2*x*y")
    assert f.substitute({"x": R.parse("y+1")}) == R.parse("y^3 + 2*y^2 + y + z")


def test_ring_mismatch():
    S = PolyRing(["x", "y"])
    with pytest.raises(RingMismatch):
        R.parse("x") + S.parse("x")


def test_primitive_and_monic():
    assert R.parse("-4*x+6*y").primitive() == R.parse("2*x - 3*y")
    assert R.parse("3*x - 6*z").monic() == R.parse("x - 2*z")


def test_rational_matrix():
    M = RationalMatrix([[1, 2], [3, 4]])
    assert M.det() == -2
    inv = M.inverse()
    assert inv.rows == [[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]]
    N = RationalMatrix([[1, 2], [2, 4]])
    assert N.rank() == 1
    assert N.nullspace() == [[-2, 1]]


def test_maximal_minors_one_based():
    m = maximal_minors([[1, 0, 2], [0, 1, 3]])
    assert m == {(1, 2): 1, (1, 3): 3, (2, 3): -2}


def test_minor_size_too_large():
    with pytest.raises(SizeTooLarge):
        matrix_minors(RationalMatrix([[1, 2]]), 2)


small = st.integers(-5, 5)
coeffs = st.lists(st.tuples(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), small),
                  max_size=5)


def _poly(terms):
    f = R.zero()
    for e, c in terms:
        f = f + R.monomial(e, c)
    return f


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, coeffs, st.tuples(small, small, small))
def test_ring_axioms_and_evaluation_homomorphism(a, b, c, pt):
    f, g, h = _poly(a), _poly(b), _poly(c)
    point = dict(zip("xyz", pt))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()
    assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
    assert R.parse(str(f)) == f


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_multiplicative(rows):
    A = RationalMatrix(rows)
    B = RationalMatrix([[1, 2, 0], [0, 1, 3], [1, 0, 1]])
    AB = RationalMatrix([[sum(A.rows[i][t] * B.rows[t][j] for t in range(3)) for j in range(3)]
                         for i in range(3)])
    assert AB.det() == A.det() * B.det()


def test_listed_parse_examples():
    ring = PolyRing(["q12", "q13", "q14", "q23", "q24", "q34", "p1", "p2", "p3", "p4"])
    f = ring.parse("q12*p1 - q23*p3 - q24*p4")
    assert len(f.terms) == 3 and f.total_degree() == 2
    assert ring.parse("0").is_zero() and ring.parse("0").terms == {}
    x = PolyRing(["x"])
    assert x.parse("(x+1)^3 - x^3 - 3*x^2 - 3*x - 1").is_zero()


def test_listed_evaluations():
    assert R.parse("x*y - z").evaluate({"x": 2, "y": 3, "z": 6}) == 0
    p = PolyRing(["p14"])
    assert p.parse("p14^5").evaluate({"p14": 2}) == 32


def test_listed_minors_and_jacobian():
    from clrecover.poly import jacobian

    assert matrix_minors(RationalMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 3) == [1]
    xs = PolyRing(["x0", "x1", "x2", "x3"])
    J = jacobian([xs.parse("x0*x3 - x1*x2")], ["x0", "x1", "x2", "x3"])
    assert [str(e) for e in J.rows[0]] == ["x3", "-x2", "-x1", "x0"]
    x = PolyRing(["x"])
    assert str(jacobian([x.parse("x^2")], ["x"]).rows[0][0]) == "2*x"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=2, max_size=2))
def test_two_by_two_minors_against_cofactors(rows):
    m = maximal_minors(rows)
    for (i, j), v in m.items():
        a, b = rows[0][i - 1], rows[0][j - 1]
        c, d = rows[1][i - 1], rows[1][j - 1]
        assert v == a * d - b * c


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs)
def test_commutativity_and_leibniz(a, b):
    f, g = _poly(a), _poly(b)
    assert f * g == g * f
    for v in "xyz":
        assert (f * g).derivative(v) == f * g.derivative(v) + g * f.derivative(v)


def test_quintic_form_gradient_leading_term():
    from clrecover.checks import load_example

    doc = load_example("quintic")
    ring = PolyRing(["p12", "p13", "p14", "p23", "p24", "p34"])
    form = ring.parse(doc["chow_form"])
    d = form.derivative("p14")
    top = [c for e, c in d.terms.items() if e[ring.index["p14"]] == 4 and sum(e) == 4]
    assert top == [5]
