import copy
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from clrecover.checks import random_homogeneous_ideal
from clrecover.groebner import (GREVLEX, LEX, Ideal, MonomialOrder, ResourceLimit, buchberger_certificate,
                                contains, eliminate, groebner_basis, hilbert_dim_degree, ideal_equal,
                                ideal_quotient, intersect, irrelevant_ideal, is_unit_ideal, normal_form,
                                projective_dimension, radical_membership, recording_bases, saturation)
from clrecover.poly import PolyRing

R = PolyRing(["x", "y", "z", "w"])


def I(*gens, ring=R):
    return Ideal(ring, [ring.parse(g) for g in gens])


def twisted_cubic():
    return I("x*z - y^2", "y*w - z^2", "x*w - y*z")


def _sympy_basis(ideal, order):
    syms = sympy.symbols(list(ideal.ring.variables))
    loc = dict(zip(ideal.ring.variables, syms))
    gens = [sympy.sympify(str(g).replace("^", "**"), locals=loc) for g in ideal.generators]
    G = sympy.groebner(gens, *syms, order=order)
    return {sympy.Poly(g, *syms).monic().as_expr() for g in G.exprs}


def _our_basis(ideal, order):
    syms = sympy.symbols(list(ideal.ring.variables))
    loc = dict(zip(ideal.ring.variables, syms))
    gb = groebner_basis(ideal, order)
    return {sympy.Poly(sympy.sympify(str(g.monic()).replace("^", "**"), locals=loc), *syms).as_expr()
            for g in gb.basis}


@pytest.mark.parametrize("order,name", [(GREVLEX, "grevlex"), (LEX, "lex")])
def test_matches_sympy_on_twisted_cubic(order, name):
    assert _our_basis(twisted_cubic(), order) == _sympy_basis(twisted_cubic(), name)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_matches_sympy_on_random_ideals(seed):
    rng = random.Random(seed)
    ideal = random_homogeneous_ideal(rng)
    for order, name in ((GREVLEX, "grevlex"), (LEX, "lex")):
        assert _our_basis(ideal, order) == _sympy_basis(ideal, name)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_buchberger_certificate_on_random_ideals(seed):
    ideal = random_homogeneous_ideal(random.Random(seed))
    for order in (GREVLEX, LEX, MonomialOrder("block", split=1)):
        assert buchberger_certificate(groebner_basis(ideal, order))


def test_certificate_rejects_non_basis():
    gb = copy.copy(groebner_basis(twisted_cubic()))
    gb.basis = gb.basis[:-1]
    assert not buchberger_certificate(gb)


def test_hilbert_twisted_cubic():
    # affine cone: Krull dimension 2, degree 3
    assert hilbert_dim_degree(twisted_cubic()) == (2, 3)
    assert projective_dimension(twisted_cubic()) == 1


def test_hilbert_complete_intersection():
    assert hilbert_dim_degree(I("x^2 + y*z", "z^3 - w^3")) == (2, 6)
    assert projective_dimension(I("x", "y", "z", "w")) == -1


def test_membership_and_normal_form():
    T = twisted_cubic()
    f = R.parse("x*z - y^2") * R.parse("x + w") + R.parse("y*w - z^2") * R.parse("z")
    assert contains(T, f)
    assert not contains(T, R.parse("x*y"))
    assert normal_form(f, groebner_basis(T)).is_zero()


def test_eliminate_parametrization():
    S = PolyRing(["s", "t", "a", "b", "c"])
    E = eliminate(I("a - s^2", "b - s*t", "c - t^2", ring=S), ["s", "t"])
    assert ideal_equal(E, I("a*c - b^2", ring=E.ring))


def test_intersect_and_quotient():
    A, B = I("x", "y"), I("z", "w")
    C = intersect(A, B)
    assert ideal_equal(C, I("x*z", "x*w", "y*z", "y*w"))
    assert ideal_equal(ideal_quotient(C, A), B)


def test_saturation_removes_irrelevant_component():
    J = Ideal(R, [g * v for g in twisted_cubic().generators for v in R.gens()])
    assert not ideal_equal(J, twisted_cubic())
    assert ideal_equal(saturation(J, irrelevant_ideal(R)), twisted_cubic())


def test_unit_and_radical():
    assert is_unit_ideal(I("x", "x - 1"))
    assert not is_unit_ideal(twisted_cubic())
    assert radical_membership(R.parse("x"), I("x^3", "y"))
    assert not radical_membership(R.parse("z"), I("x^3", "y"))


def test_budget_raises_resource_limit():
    with pytest.raises(ResourceLimit):
        groebner_basis(I("x^3 + y^3 + z^3 + w^3", "x*y*z - w^3", "x^2*w + y^2*z + 2*z^3"), budget=5)


def test_recording_bases_sees_new_work():
    with recording_bases() as rec:
        groebner_basis(I("x^2 - y*z", "x*y - w^2", "z^3 - x*w^2"), LEX)
    assert len(rec) >= 1
    assert all(buchberger_certificate(gb) for gb in rec)


def test_block_order_validation():
    with pytest.raises(ValueError):
        MonomialOrder("block")
    with pytest.raises(ValueError):
        MonomialOrder("deglex")


def _strs(gb):
    return sorted(str(g) for g in gb.basis)


def test_listed_bases():
    x = PolyRing(["x"])
    assert _strs(groebner_basis(I("x^2 - 1", "x - 1", ring=x), LEX)) == ["x - 1"]
    assert _strs(groebner_basis(I("1"))) == ["1"]
    q = PolyRing(["q12", "q13", "q14", "q23", "q24", "q34"])
    rel = q.parse("q12*q34 - q13*q24 + q14*q23")
    assert [g.monic() for g in groebner_basis(Ideal(q, [rel])).basis] == [rel.monic()]


def test_listed_normal_forms():
    gb = groebner_basis(twisted_cubic())
    assert all(normal_form(g, gb).is_zero() for g in twisted_cubic().generators)
    assert normal_form(R.one(), gb) == R.one()


def test_listed_eliminations():
    xy = PolyRing(["x", "y"])
    assert eliminate(I("x - y", ring=xy), ["x"]).is_zero()
    E = eliminate(I("x - y", "x - 1", ring=xy), ["x"])
    assert [str(g.monic()) for g in E.generators] == ["y - 1"]


def test_listed_saturations():
    xyz = PolyRing(["x", "y", "z"])
    assert ideal_equal(saturation(I("x^2*y", ring=xyz), I("x", ring=xyz)), I("y", ring=xyz))
    assert ideal_equal(saturation(I("x*y", "x*z", ring=xyz), I("x", ring=xyz)), I("y", "z", ring=xyz))


def test_listed_hilbert():
    assert hilbert_dim_degree(Ideal(R, [])) == (4, 1)
    # the quintic curve [s^5 : s^4 t : s^3 t^2 : t^5]
    S = PolyRing(["s", "t", "x", "y", "z", "w"])
    E = eliminate(I("x - s^5", "y - s^4*t", "z - s^3*t^2", "w - t^5", ring=S), ["s", "t"])
    assert hilbert_dim_degree(E) == (2, 5)


def test_listed_radical_and_equality():
    xy = PolyRing(["x", "y"])
    assert radical_membership(xy.parse("x"), I("x^2", ring=xy))
    assert not radical_membership(xy.parse("y"), I("x", ring=xy))
    assert ideal_equal(I("x", "y", ring=xy), I("y", "x + y", ring=xy))
    assert not ideal_equal(I("x", ring=xy), I("x^2", ring=xy))


small_ideal_seeds = st.integers(0, 10**6)


def _small_ideal(rng):
    xyz = PolyRing(["x", "y", "z"])
    mons = [(a, b, c) for a in range(4) for b in range(4) for c in range(4) if a + b + c <= 3]

    def rand_poly(terms):
        f = xyz.zero()
        for _ in range(terms):
            f = f + xyz.monomial(rng.choice(mons), rng.randint(-5, 5))
        return f
    gens = [rand_poly(3) for _ in range(rng.randint(1, 3))]
    return Ideal(xyz, gens), rand_poly


@settings(max_examples=30, deadline=None)
@given(small_ideal_seeds)
def test_normal_form_ignores_ideal_multiples(seed):
    rng = random.Random(seed)
    ideal, rand_poly = _small_ideal(rng)
    gb = groebner_basis(ideal, GREVLEX)
    f = rng.choice(ideal.generators) if ideal.generators else ideal.ring.zero()
    g, h = rand_poly(2), rand_poly(3)
    assert normal_form(f * g + h, gb) == normal_form(h, gb)


@settings(max_examples=15, deadline=None)
@given(small_ideal_seeds)
def test_elimination_vanishes_on_parametrized_points(seed):
    rng = random.Random(seed)
    ring = PolyRing(["s", "t", "a", "b", "c"])
    param = {v: ring.monomial((rng.randint(0, 2), rng.randint(0, 2), 0, 0, 0), rng.randint(1, 3))
             + ring.monomial((rng.randint(0, 1), rng.randint(0, 1), 0, 0, 0), rng.randint(-3, 3))
             for v in "abc"}
    E = eliminate(Ideal(ring, [ring.var(v) - f for v, f in param.items()]), ["s", "t"])
    for _ in range(100):
        pt = {"s": rng.randint(-9, 9), "t": rng.randint(-9, 9)}
        img = {v: f.evaluate(dict(pt, a=0, b=0, c=0)) for v, f in param.items()}
        assert all(g.evaluate(img) == 0 for g in E.generators)


@settings(max_examples=25, deadline=None)
@given(small_ideal_seeds)
def test_saturation_contains_ideal_and_hilbert_invariance(seed):
    rng = random.Random(seed)
    ideal = random_homogeneous_ideal(rng)
    x = ideal.ring.var(ideal.ring.variables[0])
    sat = saturation(ideal, Ideal(ideal.ring, [x]))
    assert all(contains(sat, g) for g in ideal.generators)
    gens = list(ideal.generators)
    rng.shuffle(gens)
    scaled = Ideal(ideal.ring, [g.scale(rng.choice([-3, 2, 7])) for g in gens])
    assert hilbert_dim_degree(scaled) == hilbert_dim_degree(ideal)
