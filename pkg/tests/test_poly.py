from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpoly.poly import (
    BiPoly,
    FVector,
    NotAnFFunction,
    RatPoly,
    UniPoly,
    antiderivative,
    bipoly_eval,
    binomial_poly,
    derivative,
    f_vector_to_poly,
    poly_add,
    poly_eval,
    poly_mul,
    poly_to_f_vector,
)

ints = st.integers(-10**30, 10**30)
unipolys = st.lists(ints, max_size=7).map(UniPoly)
bipolys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), ints, max_size=8).map(BiPoly)


def test_canonical_form():
    assert UniPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert UniPoly([0, 0]).coeffs == ()
    assert UniPoly().degree == -1
    assert BiPoly({(0, 0): 0, (1, 2): 3}).terms == {(1, 2): 3}


def test_integer_coefficients_enforced():
    with pytest.raises(TypeError):
        UniPoly([Fraction(1, 2)])
    assert UniPoly([Fraction(4, 2)]).coeffs == (2,)


def test_add_mul_examples():
    one_t = UniPoly([1, 1])
    assert poly_mul(one_t, one_t) == UniPoly([1, 2, 1])
    p = UniPoly([3, -1, 5])
    assert poly_add(p, UniPoly()) == p
    assert poly_mul(one_t, UniPoly([1, 4, 4])) == UniPoly([1, 5, 8, 4])


def test_antiderivative_examples():
    assert antiderivative(UniPoly([1, 2])) == RatPoly([0, 1, 1])
    assert antiderivative(UniPoly([1, 4, 4])) == RatPoly([0, 1, 2, Fraction(4, 3)])
    assert antiderivative(UniPoly()) == RatPoly()


def test_eval_examples():
    assert poly_eval(UniPoly([1, 4, 4]), -1) == 1
    assert poly_eval(UniPoly(), Fraction(7, 3)) == 0
    assert poly_eval(RatPoly([0, 1, Fraction(1, 2)]), Fraction(1, 3)) == Fraction(7, 18)
    k2 = BiPoly({(0, 0): 2, (1, 0): 2, (0, 1): 2, (1, 1): 1})
    assert bipoly_eval(k2, -1, -1) == -1


def test_f_vector_conversion_examples():
    assert f_vector_to_poly(FVector((16, 48, 32))) == UniPoly([1, 16, 48, 32])
    assert f_vector_to_poly(FVector()) == UniPoly([1])
    assert poly_to_f_vector(UniPoly([1, 3, 3, 1])) == (3, 3, 1)
    assert poly_to_f_vector(binomial_poly(3)) == FVector((3, 3, 1))


def test_poly_to_f_vector_rejects():
    with pytest.raises(NotAnFFunction):
        poly_to_f_vector(UniPoly([2, 1]))
    with pytest.raises(NotAnFFunction):
        poly_to_f_vector(UniPoly([1, -1]))
    with pytest.raises(ValueError):
        FVector((3, 0, 1))


def test_binomial_poly():
    for m in range(12):
        assert binomial_poly(m) == UniPoly([1, 1]) ** m


def test_mixed_arithmetic_promotes_to_rational():
    r = UniPoly([1, 1]) + RatPoly([Fraction(1, 2)])
    assert isinstance(r, RatPoly) and r == RatPoly([Fraction(3, 2), 1])
    assert RatPoly([2, 1]).to_unipoly() == UniPoly([2, 1])
    with pytest.raises(ValueError):
        RatPoly([Fraction(1, 2)]).to_unipoly()


def test_rendering():
    assert str(UniPoly([1, 16, 48, 32])) == "1 + 16*t + 48*t^2 + 32*t^3"
    assert UniPoly([1, 16, 48, 32]).render(mul=" ") == "1 + 16 t + 48 t^2 + 32 t^3"
    assert str(UniPoly([0, -1, 1])) == "-t + t^2"
    assert str(UniPoly()) == "0"
    assert str(RatPoly([1, Fraction(1, 2)])) == "1 + 1/2*t"
    assert str(BiPoly({(0, 0): 2, (1, 0): 2, (0, 1): 2, (1, 1): 1})) == "2 + 2*s + 2*t + t*s"


def test_json_forms():
    p = UniPoly([1, 4, 4])
    assert UniPoly.from_json(p.to_json()) == p
    r = RatPoly([1, Fraction(1, 2)])
    assert r.to_json() == ["1", "1/2"] and RatPoly.from_json(r.to_json()) == r
    b = BiPoly({(0, 0): 2, (1, 0): 2, (0, 1): 2, (1, 1): 1})
    assert b.to_json() == [[2, 2], [2, 1]]
    assert BiPoly.from_json(b.to_json()) == b


@settings(max_examples=80)
@given(unipolys, unipolys, unipolys)
def test_unipoly_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == UniPoly()


@settings(max_examples=60)
@given(bipolys, bipolys, bipolys)
def test_bipoly_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p * q).swap() == p.swap() * q.swap()


@settings(max_examples=80)
@given(unipolys, st.fractions(max_denominator=50))
def test_antiderivative_inverts_derivative(p, t):
    F = antiderivative(p)
    assert derivative(F) == p
    assert F(0) == 0
    assert (p * p)(t) == p(t) ** 2


@given(st.lists(st.integers(1, 10**12), max_size=8))
def test_f_vector_bijection(counts):
    fv = FVector(counts)
    assert poly_to_f_vector(f_vector_to_poly(fv)) == fv
