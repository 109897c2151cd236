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

"""Exact linear algebra on numpy object arrays of Gaussian rationals.

Matrices follow the column convention: column j is the image of e_j.
Subspaces are represented by matrices whose columns form a basis.
"""

import math
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from lie_contractions.scalars import GaussianRational, ONE, ZERO, gq


class SingularMatrixError(ValueError):
    """Raised when an inverse is requested for a singular matrix.
    """


def zeros(rows: int, cols: int) -> np.ndarray:
    """rows x cols object array filled with exact zeros.
    """
    m = np.empty((rows, cols), dtype=object)
    m.fill(ZERO)
    return m


def zero_vector(n: int) -> np.ndarray:
    v = np.empty((n,), dtype=object)
    v.fill(ZERO)
    return v


def identity(n: int) -> np.ndarray:
    m = zeros(n, n)
    for i in range(n):
        m[i, i] = ONE
    return m


def unit_vector(n: int, j: int) -> np.ndarray:
    v = zero_vector(n)
    v[j] = ONE
    return v


def as_matrix(rows: Any, cols: Optional[int]=None) -> np.ndarray:
    """Converts nested sequences (or an array) into an exact 2D object array.

    Args:
        rows: Nested sequence of scalars or an ndarray.
        cols: Column count, only needed when ``rows`` is empty.
    """
    arr = np.array(rows, dtype=object)
    if arr.size == 0:
        return zeros(arr.shape[0] if arr.ndim > 0 else 0, cols or 0)
    if arr.ndim != 2:
        raise ValueError('Expected a 2D matrix, got shape {}.'.format(arr.shape))
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = gq(x)
    return out


def as_vector(values: Any) -> np.ndarray:
    """Converts a sequence of scalars into an exact 1D object array.
    """
    vals = list(values)
    out = np.empty((len(vals),), dtype=object)
    for i, x in enumerate(vals):
        out[i] = gq(x)
    return out


def columns(vectors: Sequence[Any], n: int) -> np.ndarray:
    """Stacks vectors of length n as the columns of an n x len(vectors) matrix.
    """
    m = zeros(n, len(vectors))
    for j, v in enumerate(vectors):
        vv = as_vector(v)
        if len(vv) != n:
            raise ValueError('Vector of length {} does not fit dimension {}.'.format(len(vv), n))
        m[:, j] = vv
    return m


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product a @ b (b may be a matrix or a vector).
    """
    if b.ndim == 1:
        out = zero_vector(a.shape[0])
        for i in range(a.shape[0]):
            acc = ZERO
            for k in range(a.shape[1]):
                if a[i, k] and b[k]:
                    acc = acc + a[i, k] * b[k]
            out[i] = acc
        return out
    out = zeros(a.shape[0], b.shape[1])
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = ZERO
            for k in range(a.shape[1]):
                if a[i, k] and b[k, j]:
                    acc = acc + a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def scale(m: np.ndarray, c: Any) -> np.ndarray:
    c = gq(c)
    out = np.empty(m.shape, dtype=object)
    for idx, x in np.ndenumerate(m):
        out[idx] = x * c
    return out


def conj_matrix(m: np.ndarray) -> np.ndarray:
    """Entrywise complex conjugate.
    """
    out = np.empty(m.shape, dtype=object)
    for idx, x in np.ndenumerate(m):
        out[idx] = x.conj()
    return out


def is_real(m: np.ndarray) -> bool:
    return all(x.is_real for x in m.flat)


def is_zero(m: np.ndarray) -> bool:
    return not any(bool(x) for x in m.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    """Exact equality of shape and entries.
    """
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def block_matrix(blocks: Sequence[Sequence[np.ndarray]]) -> np.ndarray:
    return np.block([[np.asarray(b, dtype=object) for b in row] for row in blocks])


def rref(m: np.ndarray) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    The pivot in each column is the first nonzero entry at or below the
    current row, which keeps the result deterministic.

    Args:
        m: Matrix to reduce.

    Returns:
        Tuple[np.ndarray, Tuple[int]]: r, pivots
            Reduced matrix and the pivot column indices.
    """
    rows, cols = m.shape
    a = [list(m[i, :]) for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            f = a[i][c]
            if i != r and f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    out = zeros(rows, cols)
    for i in range(rows):
        out[i, :] = a[i]
    return out, tuple(pivots)


def rank(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(rref(m)[1])


def nullspace(m: np.ndarray) -> np.ndarray:
    """Basis of {x : m x = 0}, as columns.
    """
    rows, cols = m.shape
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(cols, len(free))
    for j, f in enumerate(free):
        basis[f, j] = ONE
        for row, pc in enumerate(pivots):
            basis[pc, j] = -r[row, f]
    return basis


def column_space(m: np.ndarray) -> np.ndarray:
    """Canonical basis (reduced) of the column span of m, as columns.
    """
    n = m.shape[0]
    if m.shape[1] == 0:
        return zeros(n, 0)
    r, pivots = rref(m.T)
    return r[:len(pivots), :].T.copy()


def inverse(m: np.ndarray) -> np.ndarray:
    """Exact inverse of a square matrix.

    Raises:
        SingularMatrixError: if m is not invertible.
    """
    n, cols = m.shape
    if n != cols:
        raise SingularMatrixError('Matrix of shape {} is not square.'.format(m.shape))
    r, pivots = rref(np.hstack([m, identity(n)]))
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrixError('Matrix is singular (rank {} < {}).'.format(
            len([p for p in pivots if p < n]), n))
    return r[:, n:].copy()


def solve_in_span(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """Coordinates x with a x = b, or None when b is not in the column span.

    Free variables (dependent columns) are set to zero.
    """
    rows, cols = a.shape
    aug = np.hstack([a, as_vector(b).reshape(rows, 1)])
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = zero_vector(cols)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, cols]
    return x


def span_contains(a: np.ndarray, b: np.ndarray) -> bool:
    if a.shape[1] == 0:
        return is_zero(as_vector(b))
    return solve_in_span(a, b) is not None


def congruence_signature(k: np.ndarray) -> Tuple[int, int]:
    """Signature (n_plus, n_minus) of a real symmetric matrix.

    Fraction-free symmetric Gaussian elimination over the integers: k is
    scaled by the common denominator of its entries, and each step replaces
    the remaining block by pivot * (Schur complement), divided by the content
    of the block. The sign of every pivot multiplier is tracked so that the
    signs read off are those of the true pivots. The pivot is the first
    nonzero diagonal entry; when every remaining diagonal entry vanishes, a
    basis vector is replaced by its sum with a partner of nonzero off-diagonal
    entry, which turns the hyperbolic 2x2 block into a nonzero pivot.

    Raises:
        ValueError: if k has non-real entries.
    """
    if not is_real(k):
        raise ValueError('Signature is only defined for real symmetric matrices.')
    n = k.shape[0]
    entries = [[Fraction(k[i, j].re) for j in range(n)] for i in range(n)]
    denominator = 1
    for row in entries:
        for v in row:
            denominator = denominator * v.denominator // math.gcd(denominator, v.denominator)
    a = [[int(v * denominator) for v in row] for row in entries]
    active = list(range(n))
    sign = 1
    n_plus = n_minus = 0
    while active:
        i = next((x for x in active if a[x][x] != 0), None)
        if i is None:
            pair = next(((x, y) for x in active for y in active if x != y and a[x][y] != 0), None)
            if pair is None:
                break
            x, y = pair
            for c in range(n):
                a[x][c] += a[y][c]
            for c in range(n):
                a[c][x] += a[c][y]
            continue
        d = a[i][i]
        if d * sign > 0:
            n_plus += 1
        else:
            n_minus += 1
        active.remove(i)
        for x in active:
            for y in active:
                a[x][y] = d * a[x][y] - a[x][i] * a[i][y]
        if d < 0:
            sign = -sign
        content = 0
        for x in active:
            for y in active:
                content = math.gcd(content, a[x][y])
        if content > 1:
            for x in active:
                for y in active:
                    a[x][y] //= content
    return n_plus, n_minus


class MatrixSpan(object):
    """Coordinates of matrices with respect to independent basis matrices.

    A set of entries on which the flattened basis is independent is picked
    once; coordinates are solved on those entries and then checked against
    every entry.
    """
    def __init__(self, matrices: Sequence[np.ndarray]) -> None:
        self.matrices = [as_matrix(m) for m in matrices]
        n = len(self.matrices)
        self.shape = self.matrices[0].shape
        self._flat = columns([m.flatten() for m in self.matrices], self.matrices[0].size)
        _, rows = rref(self._flat.T.copy())
        if len(rows) != n:
            raise ValueError('Matrices are linearly dependent (rank {} < {}).'.format(len(rows), n))
        self._rows = list(rows)
        self._sub_inv = inverse(self._flat[self._rows, :])

    def coordinates(self, m: np.ndarray) -> Optional[np.ndarray]:
        """Coordinates of m in the basis, or None if m is outside the span.
        """
        target = as_matrix(m).flatten()
        x = matmul(self._sub_inv, target[self._rows])
        if not equal(matmul(self._flat, x), target):
            return None
        return x


def real_rank(vectors: Sequence[np.ndarray]) -> int:
    """Rank over R of complex vectors, each read as (re, im) in R^2n.
    """
    if not vectors:
        return 0
    rows = [[x.re for x in v] + [x.im for x in v] for v in vectors]
    return rank(as_matrix(rows))
