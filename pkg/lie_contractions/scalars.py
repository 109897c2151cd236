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

"""Exact scalars: Gaussian rationals and univariate polynomials over them.

Rationals are :class:`fractions.Fraction` (always reduced, positive denominator).
A :class:`GaussianRational` is a pair of rationals ``re + im*i``; a
:class:`Polynomial` is a dense tuple of Gaussian rationals indexed by degree.
All values are immutable.
"""

import math
import re
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Tuple, Union

Rational = Fraction
ScalarLike = Union['GaussianRational', Fraction, int, str]


class GaussianRational(object):
    """Exact element of Q(i).
    """
    __slots__ = ('_re', '_im')

    def __init__(self, re: Any=0, im: Any=0) -> None:
        """
        Args:
            re: Real part (int, Fraction, or a string Fraction accepts).
            im: Imaginary part (int, Fraction, or a string Fraction accepts).
        """
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError('GaussianRational does not accept floats.')
        object.__setattr__(self, '_re', Fraction(re))
        object.__setattr__(self, '_im', Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError('GaussianRational is immutable.')

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @property
    def is_real(self) -> bool:
        return self._im == 0

    def conj(self) -> 'GaussianRational':
        """Complex conjugate.
        """
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Field norm re^2 + im^2.
        """
        return self._re * self._re + self._im * self._im

    @staticmethod
    def _coerce(other: Any) -> Optional['GaussianRational']:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re * other._re - self._im * other._im,
                                self._re * other._im + self._im * other._re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError('division by zero in Q(i).')
        num = self * other.conj()
        return GaussianRational(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int) -> 'GaussianRational':
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else ONE / self
        result = ONE
        for _ in range(abs(n)):
            result = result * base
        return result

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __bool__(self):
        return self._re != 0 or self._im != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self):
        return "GaussianRational('{}')".format(format_scalar(self))

    def __str__(self):
        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gq(value: ScalarLike) -> GaussianRational:
    """Coerces an int, Fraction, string or GaussianRational into a GaussianRational.
    """
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError('Cannot interpret {!r} as an exact scalar.'.format(value))


_RATIONAL = r'\d+(?:/\d+)?'
_SCALAR_RE = re.compile(
    r'^(?P<re>[+-]?' + _RATIONAL + r')?'
    r'(?:(?P<imsign>[+-])?(?P<im>' + _RATIONAL + r')?(?P<i>i))?$')


def parse_scalar(text: str) -> GaussianRational:
    """Parses the string form of a Gaussian rational.

    Accepted forms are ``"a/b"``, ``"a/b+c/di"``, ``"c/di"``, ``"i"``, ``"-i"``
    and ``"1-i"``, with optional signs and without spaces (surrounding spaces
    are ignored).

    Args:
        text: String to parse.

    Returns:
        GaussianRational: value

    Raises:
        ValueError: on malformed text, including zero denominators.
    """
    s = text.strip()
    m = _SCALAR_RE.match(s)
    if not s or m is None or (m.group('re') is None and m.group('i') is None):
        raise ValueError('Malformed scalar string: {!r}.'.format(text))
    try:
        real = Fraction(m.group('re')) if m.group('re') is not None else Fraction(0)
        imag = Fraction(0)
        if m.group('i') is not None:
            if m.group('re') is not None and m.group('imsign') is None:
                # '2i' is matched with re='2' and no sign; it is purely imaginary.
                imag, real = real, Fraction(0)
                if m.group('im') is not None:
                    raise ValueError('Malformed scalar string: {!r}.'.format(text))
            else:
                imag = Fraction(m.group('im')) if m.group('im') is not None else Fraction(1)
                if m.group('imsign') == '-':
                    imag = -imag
    except ZeroDivisionError:
        raise ValueError('Malformed scalar string: {!r} has a zero denominator.'.format(text))
    return GaussianRational(real, imag)


def format_scalar(value: ScalarLike) -> str:
    """Canonical string form; ``parse_scalar(format_scalar(x)) == x``.
    """
    x = gq(value)
    if x.im == 0:
        return str(x.re)
    if abs(x.im) == 1:
        imag = 'i'
    else:
        imag = '{}i'.format(abs(x.im))
    if x.re == 0:
        return imag if x.im > 0 else '-' + imag
    return '{}{}{}'.format(x.re, '+' if x.im > 0 else '-', imag)


def rational_sqrt(a: ScalarLike) -> Optional[Fraction]:
    """Exact square root of a non-negative rational square, else None.
    """
    x = gq(a)
    if not x.is_real or x.re < 0:
        return None
    n, d = x.re.numerator, x.re.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class Polynomial(object):
    """Univariate polynomial in z with Gaussian-rational coefficients.

    Coefficients are stored densely by ascending degree with trailing zeros
    removed, so the zero polynomial has an empty coefficient tuple.
    """
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[ScalarLike]=()) -> None:
        """
        Args:
            coeffs: Coefficients, index j is the coefficient of z^j.
        """
        cs = [gq(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, '_coeffs', tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError('Polynomial is immutable.')

    @classmethod
    def constant(cls, c: ScalarLike) -> 'Polynomial':
        return cls([c])

    @classmethod
    def z(cls) -> 'Polynomial':
        return cls([0, 1])

    @property
    def coeffs(self) -> Tuple[GaussianRational, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial.
        """
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self._coeffs)

    def coeff(self, j: int) -> GaussianRational:
        return self._coeffs[j] if 0 <= j < len(self._coeffs) else ZERO

    def conj(self) -> 'Polynomial':
        return Polynomial(c.conj() for c in self._coeffs)

    def __call__(self, alpha: ScalarLike) -> GaussianRational:
        a = gq(alpha)
        result = ZERO
        for c in reversed(self._coeffs):
            result = result * a + c
        return result

    @staticmethod
    def _coerce(other: Any) -> Optional['Polynomial']:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (GaussianRational, int, Fraction)):
            return Polynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coeff(j) + other.coeff(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO_POLY
        out = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for a, x in enumerate(self._coeffs):
            if not x:
                continue
            for b, y in enumerate(other._coeffs):
                out[a + b] = out[a + b] + x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self._coeffs)

    def __repr__(self):
        return 'Polynomial({})'.format([format_scalar(c) for c in self._coeffs])

    def __str__(self):
        if self.is_zero():
            return '0'
        terms = []
        for j, c in reversed(list(enumerate(self._coeffs))):
            if not c:
                continue
            cs = format_scalar(c)
            if j == 0:
                terms.append(cs)
            else:
                mono = 'z' if j == 1 else 'z^{}'.format(j)
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append('-' + mono)
                else:
                    terms.append('({})*{}'.format(cs, mono) if not c.is_real else '{}*{}'.format(cs, mono))
        return ' + '.join(terms)


ZERO_POLY = Polynomial()


def poly_conj(f: Polynomial) -> Polynomial:
    """Coefficient-wise conjugation, f -> sum conj(a_j) z^j.
    """
    return f.conj()


def poly_eval(f: Polynomial, alpha: ScalarLike) -> GaussianRational:
    """Evaluates f at alpha exactly.
    """
    return f(alpha)
