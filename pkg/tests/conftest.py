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


import pytest
from hypothesis import strategies as st

from lie_contractions import linalg
from lie_contractions.lie_core import Field, LieAlgebra
from lie_contractions.scalars import GaussianRational, Polynomial
from lie_contractions.so_catalog import build_so, heisenberg, symmetric_pair


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussian_rationals = st.builds(GaussianRational, small_fractions, small_fractions)
real_rationals = st.builds(GaussianRational, small_fractions)
polynomials = st.lists(gaussian_rationals, max_size=4).map(Polynomial)


@st.composite
def invertible_matrices(draw, n=3):
    """Unit lower times upper triangular with nonzero rational diagonal."""
    lower = linalg.identity(n)
    upper = linalg.identity(n)
    for i in range(n):
        upper[i, i] = draw(real_rationals.filter(bool))
        for j in range(i + 1, n):
            upper[i, j] = draw(real_rationals)
            lower[j, i] = draw(real_rationals)
    return linalg.matmul(lower, upper)


def cross_product_so3() -> LieAlgebra:
    """so(3) as [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2."""
    return LieAlgebra(['e1', 'e2', 'e3'], {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1}, Field.REAL, 'so(3)')


@pytest.fixture
def so3_cross():
    return cross_product_so3()


@pytest.fixture(scope='session')
def so3():
    return build_so(3, 0)


@pytest.fixture(scope='session')
def so21():
    return build_so(2, 1)


@pytest.fixture(scope='session')
def so4():
    return build_so(4, 0)


@pytest.fixture
def heis3():
    return heisenberg(3)


@pytest.fixture(scope='session')
def pair_210():
    return symmetric_pair((2, 1, 0))


def so4_vector(**coords):
    """Coordinates on so(4) = span(L12, L13, L14, L23, L24, L34) from keyword names."""
    order = ['L12', 'L13', 'L14', 'L23', 'L24', 'L34']
    return [coords.get(name, 0) for name in order]


@pytest.fixture
def so4_ideals():
    """The two so(3) ideals of so(4)."""
    k1 = [so4_vector(L23=1, L14=1), so4_vector(L24=1, L13=-1), so4_vector(L12=1, L34=1)]
    k2 = [so4_vector(L23=1, L14=-1), so4_vector(L13=-1, L24=-1), so4_vector(L12=1, L34=-1)]
    return k1, k2


@pytest.fixture
def so4_diagonal():
    """so(3) on the first three coordinates and its complement."""
    k = [so4_vector(L12=1), so4_vector(L13=1), so4_vector(L23=1)]
    p = [so4_vector(L14=1), so4_vector(L24=1), so4_vector(L34=1)]
    return k, p
