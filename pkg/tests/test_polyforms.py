from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from algd.polyforms import (
    FORM_ZERO,
    Poly,
    PolyForm,
    form_d,
    form_mul,
    poly_eval,
    poly_integrate0,
)

t = Poly.t()

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
polys = st.lists(rationals, max_size=6).map(Poly)


def test_canonical_form_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]).is_zero
    assert Poly().degree is None
    assert Poly([0, 0, F(1, 3)]).degree == 2


def test_poly_eval_examples():
    assert poly_eval(t * t, 1) == 1
    assert poly_eval(Poly([1, -1]), 0) == 1  # 1 - t at 0
    # 3t^2 - t + 1/2 at t=2: 12 - 2 + 1/2 = 21/2 (hand oracle)
    p = Poly([F(1, 2), -1, 3])
    assert poly_eval(p, 2) == F(21, 2)


def test_poly_integrate0_examples():
    assert poly_integrate0(Poly([1])) == t
    assert poly_integrate0(Poly.monomial(3)) == Poly.monomial(4, F(1, 4))
    assert poly_integrate0(Poly([1, 2])) == Poly([0, 1, 1])  # 2t+1 -> t^2+t


def test_form_d_examples():
    assert form_d(PolyForm.function(t)) == PolyForm.dt()
    assert form_d(PolyForm.const(5)) == FORM_ZERO
    # d(t^2 + t dt) = 2t dt
    w = PolyForm(t * t, t)
    assert form_d(w) == PolyForm.dt(Poly([0, 2]))


def test_form_mul_examples():
    assert form_mul(PolyForm.function(t), PolyForm.dt()) == PolyForm.dt(t)
    assert form_mul(PolyForm.dt(), PolyForm.dt()) == FORM_ZERO
    # (1 + t dt) * t = t + t^2 dt
    assert form_mul(PolyForm(Poly([1]), t), PolyForm.function(t)) == PolyForm(t, t * t)


def test_poly_arithmetic_sanity():
    p = Poly([1, 2, 3])
    q = Poly([0, 1])
    assert (p + q) - q == p
    assert p * q == q * p
    assert (p * q).degree == 3
    assert 2 * p == p + p


@given(polys)
def test_integral_vanishes_at_zero(p):
    assert poly_eval(poly_integrate0(p), 0) == 0


@given(polys, polys)
def test_d_squared_zero(f, g):
    w = PolyForm(f, g)
    assert form_d(form_d(w)) == FORM_ZERO


@given(polys)
def test_fundamental_theorem(g):
    # dt-part of d(integral of g, as a function form) recovers g
    assert form_d(PolyForm.function(poly_integrate0(g))).g == g


@given(polys, polys)
def test_derivative_of_integral(p, q):
    # product rule route: integrate then differentiate is the identity on polys
    assert poly_integrate0(p).derivative() == p
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@pytest.mark.parametrize("ka", range(0, 4))
@pytest.mark.parametrize("kb", range(0, 4))
@pytest.mark.parametrize("pa", [0, 1])
@pytest.mark.parametrize("pb", [0, 1])
def test_d_is_degree_one_derivation_on_monomials(ka, kb, pa, pb):
    # a = t^ka (dt if pa), similarly b; d(ab) = d(a)b + (-1)^|a| a d(b)
    a = PolyForm.dt(Poly.monomial(ka)) if pa else PolyForm.function(Poly.monomial(ka))
    b = PolyForm.dt(Poly.monomial(kb)) if pb else PolyForm.function(Poly.monomial(kb))
    lhs = form_d(form_mul(a, b))
    rhs = form_mul(form_d(a), b) + form_mul(a, form_d(b)).scale((-1) ** pa)
    assert lhs == rhs


@given(polys, polys, polys, polys)
def test_form_ring_laws(f1, g1, f2, g2):
    a = PolyForm(f1, g1)
    b = PolyForm(f2, g2)
    assert a * b == b * a  # graded signs never bite in degrees {0,1} with dt^2=0
    c = PolyForm(f1 + f2, g2)
    assert (a * b) * c == a * (b * c)


def test_rat_rejects_floats():
    from algd.scalars import rat

    with pytest.raises(TypeError):
        rat(0.5)
