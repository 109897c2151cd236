# This file is part of the lie-contractions package.
#
# Copyright (c) 2026 The lie-contractions developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.


from fractions import Fraction

import pytest
from hypothesis import given, settings

from lie_contractions.scalars import (GaussianRational, I, ONE, ZERO, Polynomial, ZERO_POLY,
                                      format_scalar, gq, parse_scalar, poly_conj, poly_eval,
                                      rational_sqrt)

from conftest import gaussian_rationals, polynomials


@settings(max_examples=1000)
@given(gaussian_rationals, gaussian_rationals, gaussian_rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if a:
        assert a * (ONE / a) == ONE


@given(gaussian_rationals)
def test_format_parse_identity(x):
    assert parse_scalar(format_scalar(x)) == x


@given(gaussian_rationals)
def test_conjugation_and_norm(x):
    assert x.conj().conj() == x
    assert x * x.conj() == x.norm()
    assert (x + x.conj()).is_real


@pytest.mark.parametrize('text, value', [
    ('0', GaussianRational(0)),
    ('-3/4', GaussianRational(Fraction(-3, 4))),
    ('i', I),
    ('-i', -I),
    ('1-i', GaussianRational(1, -1)),
    ('2i', GaussianRational(0, 2)),
    ('-1/2+3i', GaussianRational(Fraction(-1, 2), 3)),
    ('1/2i', GaussianRational(0, Fraction(1, 2))),
    (' 5 ', GaussianRational(5)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize('text', ['', '1.5', 'abc', '1+', '2i3', 'i i', '1//2', '1/0', '2-1/0i', '0/0i'])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_format_scalar():
    assert format_scalar(GaussianRational(Fraction(1, 2), -1)) == '1/2-i'
    assert format_scalar(-I) == '-i'
    assert format_scalar(GaussianRational(0, 3)) == '3i'
    assert format_scalar(7) == '7'


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        GaussianRational(0.5)
    with pytest.raises(TypeError):
        gq(0.5)


def test_i_squared():
    assert I * I == -1
    assert I ** -1 == -I
    assert gq(2) ** 3 == 8


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_immutable():
    with pytest.raises(AttributeError):
        ONE._re = Fraction(2)


@pytest.mark.parametrize('a, root', [(4, 2), (Fraction(1, 4), Fraction(1, 2)), (0, 0),
                                     (2, None), (-4, None), (Fraction(9, 2), None)])
def test_rational_sqrt(a, root):
    assert rational_sqrt(a) == root


def test_rational_sqrt_of_non_real():
    assert rational_sqrt(I) is None


@given(polynomials, polynomials, gaussian_rationals)
def test_polynomial_evaluation_is_a_ring_map(f, g, alpha):
    assert (f + g)(alpha) == f(alpha) + g(alpha)
    assert (f * g)(alpha) == f(alpha) * g(alpha)
    assert poly_eval(f - g, alpha) == f(alpha) - g(alpha)


@given(polynomials, polynomials)
def test_polynomial_degree(f, g):
    if f and g:
        assert (f * g).degree == f.degree + g.degree
    else:
        assert (f * g) == ZERO_POLY


@given(polynomials, gaussian_rationals)
def test_polynomial_conjugation(f, alpha):
    assert poly_conj(f)(alpha.conj()) == f(alpha).conj()


def test_polynomial_basics():
    z = Polynomial.z()
    f = z * z - 1
    assert f.degree == 2
    assert f(1) == 0
    assert f(I) == -2
    assert f.coeffs == (gq(-1), gq(0), gq(1))
    assert Polynomial([1, 0, 0]) == Polynomial.constant(1)
    assert ZERO_POLY.degree == -1
    assert not ZERO_POLY
    assert (z * I).is_real is False
    assert str(2 * z - 1) == '2*z + -1'
    assert Polynomial.constant(3) == 3
