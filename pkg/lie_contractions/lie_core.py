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

"""Structure-constant Lie algebras over Q(i), their axioms and invariants.

A :class:`LieAlgebra` is a named basis e_1..e_n together with sparse structure
constants ``[e_i, e_j] = sum_k C_ij^k e_k``. Indices are 0-based in Python and
1-based in every serialized form.
"""

import logging
from enum import Enum
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from lie_contractions import linalg
from lie_contractions.scalars import GaussianRational, ZERO, format_scalar, gq

log = logging.getLogger(__name__)

Index3 = Tuple[int, int, int]


class Field(Enum):
    """Scalar field of an algebra. Real algebras keep every constant real.
    """
    REAL = 'real'
    COMPLEX = 'complex'


class DimensionError(ValueError):
    """Raised on vector/algebra size mismatches.
    """


class LieAlgebra(object):
    """Finite-dimensional Lie algebra given by structure constants.

    Constants are stored sparsely as given. Any entry (i, j, k) implies the
    antisymmetric partner (j, i, k) unless that partner is stored explicitly,
    so a table that stores both with inconsistent values is representable and
    is reported by :func:`validate`. Every constructor in this package emits
    canonical tables (i < j only).
    """
    def __init__(self, basis: Sequence[str], sc: Mapping[Index3, Any],
                 field: Any=Field.REAL, name: Optional[str]=None) -> None:
        """
        Args:
            basis: Basis vector names; the dimension is their count.
            sc: Mapping (i, j, k) -> scalar with 0-based indices.
            field: Field.REAL or Field.COMPLEX (or their string values).
            name: Optional human-readable label, e.g. 'so(2,1)'.
        """
        self._basis = tuple(str(b) for b in basis)
        n = len(self._basis)
        if n == 0:
            raise DimensionError('A Lie algebra needs a non-empty basis.')
        self._field = Field(field)
        raw = {}
        for key, c in dict(sc).items():
            i, j, k = (int(x) for x in key)
            if not all(0 <= x < n for x in (i, j, k)):
                raise DimensionError('Structure constant index {} out of range for dim {}.'.format(key, n))
            c = gq(c)
            if c:
                raw[(i, j, k)] = c
        self._sc = MappingProxyType(raw)
        self._name = name
        self._tensor = None
        self._nonzero = None
        self._constants = None

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> Tuple[str, ...]:
        return self._basis

    @property
    def field(self) -> Field:
        return self._field

    @property
    def sc(self) -> Mapping[Index3, GaussianRational]:
        """Structure constants as stored."""
        return self._sc

    @property
    def name(self) -> Optional[str]:
        return self._name

    @property
    def tensor(self) -> np.ndarray:
        """Dense n x n x n array of constants with implied antisymmetric partners.
        """
        if self._tensor is None:
            n = self.dim
            t = np.empty((n, n, n), dtype=object)
            t.fill(ZERO)
            for (i, j, k), c in self._sc.items():
                t[i, j, k] = c
            for (i, j, k), c in self._sc.items():
                if i != j and (j, i, k) not in self._sc:
                    t[j, i, k] = -c
            self._tensor = t
        return self._tensor

    def nonzero(self) -> List[Tuple[int, int, int, GaussianRational]]:
        """All nonzero (i, j, k, C_ij^k) of the dense tensor, both orders of (i, j).
        """
        if self._nonzero is None:
            t = self.tensor
            self._nonzero = [(i, j, k, c) for (i, j, k), c in np.ndenumerate(t) if c]
        return self._nonzero

    def constants(self) -> Dict[Index3, GaussianRational]:
        """Canonical constants: (i, j, k) with i < j, sorted, zeros dropped.
        """
        if self._constants is None:
            t = self.tensor
            n = self.dim
            self._constants = {(i, j, k): t[i, j, k]
                               for i in range(n) for j in range(i + 1, n) for k in range(n)
                               if t[i, j, k]}
        return dict(self._constants)

    def with_name(self, name: Optional[str]) -> 'LieAlgebra':
        return LieAlgebra(self._basis, self._sc, self._field, name)

    def with_basis(self, basis: Sequence[str]) -> 'LieAlgebra':
        return LieAlgebra(basis, self._sc, self._field, self._name)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self._basis == other._basis and self._field == other._field
                and self.constants() == other.constants())

    def __hash__(self):
        return hash((self._basis, self._field, frozenset(self.constants().items())))

    def __repr__(self):
        return 'LieAlgebra({!r}, dim={}, field={})'.format(
            self._name or '', self.dim, self._field.value)


class MatrixLieAlgebra(LieAlgebra):
    """LieAlgebra carrying a faithful matrix realization, one matrix per basis vector.
    """
    def __init__(self, basis: Sequence[str], sc: Mapping[Index3, Any],
                 matrices: Sequence[np.ndarray], field: Any=Field.REAL,
                 name: Optional[str]=None) -> None:
        super().__init__(basis, sc, field, name)
        if len(matrices) != self.dim:
            raise DimensionError('Need one matrix per basis vector.')
        self._matrices = tuple(linalg.as_matrix(m) for m in matrices)
        self._span = None

    @property
    def matrices(self) -> Tuple[np.ndarray, ...]:
        return self._matrices

    def matrix_of(self, x: Sequence[Any]) -> np.ndarray:
        """Matrix of the vector with coordinates x.
        """
        x = linalg.as_vector(x)
        size = self._matrices[0].shape[0]
        out = linalg.zeros(size, size)
        for c, m in zip(x, self._matrices):
            if c:
                out = out + linalg.scale(m, c)
        return out

    def coordinates(self, m: np.ndarray) -> Optional[np.ndarray]:
        """Coordinates of a matrix in the realization, or None outside its span.
        """
        if self._span is None:
            self._span = linalg.MatrixSpan(self._matrices)
        return self._span.coordinates(m)

    def with_name(self, name: Optional[str]) -> 'MatrixLieAlgebra':
        return MatrixLieAlgebra(self.basis, self.sc, self._matrices, self.field, name)


class ValidationReport(NamedTuple):
    """Outcome of :func:`validate`. Indices are 0-based.

    kind is None on pass, otherwise 'field', 'antisymmetry' or 'jacobi'.
    """
    passed: bool
    kind: Optional[str] = None
    indices: Tuple[int, ...] = ()
    residue: Optional[GaussianRational] = None

    def describe(self) -> str:
        if self.passed:
            return 'pass'
        idx = ','.join(str(i + 1) for i in self.indices)
        return '{} violation at ({}): residue {}'.format(self.kind, idx, format_scalar(self.residue))


class Fingerprint(NamedTuple):
    """Isomorphism invariants of a Lie algebra.

    Equal fingerprints are a necessary condition for isomorphism, never a
    sufficient one. killing_signature is None for complex algebras.
    """
    dim: int
    center_dim: int
    derived_dims: Tuple[int, ...]
    lcs_dims: Tuple[int, ...]
    killing_rank: int
    killing_signature: Optional[Tuple[int, int]]
    radical_dim: int


def _check_vector(g: LieAlgebra, x: Any) -> np.ndarray:
    v = linalg.as_vector(x)
    if len(v) != g.dim:
        raise DimensionError('Vector of length {} does not match dim {}.'.format(len(v), g.dim))
    return v


def basis_vector(g: LieAlgebra, j: int) -> np.ndarray:
    return linalg.unit_vector(g.dim, j)


def bracket(g: LieAlgebra, x: Sequence[Any], y: Sequence[Any]) -> np.ndarray:
    """Bilinear extension of the structure constants.

    Args:
        g: Ambient algebra.
        x: Coordinates of the first argument (length g.dim).
        y: Coordinates of the second argument (length g.dim).

    Returns:
        np.ndarray: [x, y]
    """
    x = _check_vector(g, x)
    y = _check_vector(g, y)
    out = linalg.zero_vector(g.dim)
    for i, j, k, c in g.nonzero():
        if x[i] and y[j]:
            out[k] = out[k] + c * x[i] * y[j]
    return out


def ad_matrix(g: LieAlgebra, x: Sequence[Any]) -> np.ndarray:
    """Matrix of ad x; column j is [x, e_j].
    """
    x = _check_vector(g, x)
    m = linalg.zeros(g.dim, g.dim)
    for i, j, k, c in g.nonzero():
        if x[i]:
            m[k, j] = m[k, j] + c * x[i]
    return m


def validate(g: LieAlgebra) -> ValidationReport:
    """Checks the field, antisymmetry and Jacobi identity exactly.

    Returns:
        ValidationReport: report
            Pass, or the first violation found. Antisymmetry is scanned over
            (i <= j, k); Jacobi over (i < j < k, l) with residue
            [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] at e_l.
    """
    t = g.tensor
    n = g.dim
    if g.field is Field.REAL:
        for (i, j, k), c in sorted(g.sc.items()):
            if not c.is_real:
                return ValidationReport(False, 'field', (i, j, k), c)
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                s = t[i, j, k] + t[j, i, k]
                if s:
                    return ValidationReport(False, 'antisymmetry', (i, j, k), s)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                residue = linalg.zero_vector(n)
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    for m in range(n):
                        cab = t[a, b, m]
                        if not cab:
                            continue
                        for l in range(n):
                            if t[m, c, l]:
                                residue[l] = residue[l] + cab * t[m, c, l]
                for l in range(n):
                    if residue[l]:
                        return ValidationReport(False, 'jacobi', (i, j, k, l), residue[l])
    return ValidationReport(True)


def transport_bracket(g: LieAlgebra, t: np.ndarray, field: Optional[Field]=None,
                      basis: Optional[Sequence[str]]=None) -> LieAlgebra:
    """Bracket transported by an invertible map, [x, y]_T = T^-1 [T x, T y].

    Args:
        g: Algebra to transport.
        t: Invertible dim x dim matrix (column j = T e_j).
        field: Field of the result, default g.field.
        basis: Basis names of the result, default g.basis.

    Returns:
        LieAlgebra: g_T
            Isomorphic to g via t.

    Raises:
        linalg.SingularMatrixError: if t is singular.
    """
    t = linalg.as_matrix(t)
    if t.shape != (g.dim, g.dim):
        raise DimensionError('Map of shape {} does not act on dim {}.'.format(t.shape, g.dim))
    tinv = linalg.inverse(t)
    n = g.dim
    cols = [t[:, j] for j in range(n)]
    sc = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = linalg.matmul(tinv, bracket(g, cols[i], cols[j]))
            for k in range(n):
                if v[k]:
                    sc[(i, j, k)] = v[k]
    return LieAlgebra(basis if basis is not None else g.basis, sc,
                      field if field is not None else g.field, g.name)


def structurally_equal(g: LieAlgebra, h: LieAlgebra) -> bool:
    """Identical structure constants in the same basis order (names ignored).
    """
    return g.dim == h.dim and g.constants() == h.constants()


def killing_form(g: LieAlgebra) -> np.ndarray:
    """Matrix of K(x, y) = trace(ad x ad y) in the given basis.
    """
    n = g.dim
    t = g.tensor
    per_i = [[] for _ in range(n)]
    for i, l, k, c in g.nonzero():
        # ad(e_i)[k, l] = C_il^k
        per_i[i].append((k, l, c))
    km = linalg.zeros(n, n)
    for i in range(n):
        for j in range(i, n):
            acc = ZERO
            for k, l, c in per_i[i]:
                d = t[j, k, l]
                if d:
                    acc = acc + c * d
            km[i, j] = acc
            km[j, i] = acc
    return km


def killing_rank(g: LieAlgebra) -> int:
    return linalg.rank(killing_form(g))


def killing_signature(g: LieAlgebra) -> Tuple[int, int]:
    """Counts of positive and negative eigenvalues of the Killing form.

    Computed by exact congruence diagonalization, never by eigenvalues.

    Raises:
        ValueError: for complex algebras.
    """
    if g.field is not Field.REAL:
        raise ValueError('Killing signature requires a real algebra.')
    return linalg.congruence_signature(killing_form(g))


def bracket_span(g: LieAlgebra, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Basis of span{[x, y] : x column of a, y column of b}.
    """
    vecs = []
    same = a is b
    for i in range(a.shape[1]):
        for j in range(i + 1 if same else 0, b.shape[1]):
            v = bracket(g, a[:, i], b[:, j])
            if not linalg.is_zero(v):
                vecs.append(v)
    if not vecs:
        return linalg.zeros(g.dim, 0)
    return linalg.column_space(linalg.columns(vecs, g.dim))


def _series(g: LieAlgebra, lower_central: bool) -> Tuple[int, ...]:
    full = linalg.identity(g.dim)
    current = full
    dims = [g.dim]
    while True:
        nxt = bracket_span(g, full, current) if lower_central else bracket_span(g, current, current)
        d = nxt.shape[1]
        dims.append(d)
        if d == dims[-2] or d == 0:
            return tuple(dims)
        current = nxt


def derived_series(g: LieAlgebra) -> Tuple[int, ...]:
    """Dimensions of g, [g,g], [[g,g],[g,g]], ... up to the first repeat or 0.
    """
    return _series(g, lower_central=False)


def lower_central_series(g: LieAlgebra) -> Tuple[int, ...]:
    """Dimensions of g, [g,g], [g,[g,g]], ... up to the first repeat or 0.
    """
    return _series(g, lower_central=True)


def derived_algebra(g: LieAlgebra) -> np.ndarray:
    full = linalg.identity(g.dim)
    return bracket_span(g, full, full)


def center(g: LieAlgebra) -> np.ndarray:
    """Basis of the center, as columns.
    """
    stacked = np.vstack([ad_matrix(g, basis_vector(g, i)) for i in range(g.dim)])
    return linalg.nullspace(stacked)


def radical(g: LieAlgebra) -> np.ndarray:
    """Basis of the solvable radical, the Killing-orthogonal complement of [g, g].
    """
    d = derived_algebra(g)
    m = linalg.matmul(d.T.copy(), killing_form(g))
    if m.shape[0] == 0:
        return linalg.identity(g.dim)
    return linalg.nullspace(m)


def is_subalgebra(g: LieAlgebra, s: np.ndarray) -> bool:
    """True if the column span of s is closed under the bracket.
    """
    for i in range(s.shape[1]):
        for j in range(i + 1, s.shape[1]):
            if not linalg.span_contains(s, bracket(g, s[:, i], s[:, j])):
                return False
    return True


def is_ideal(g: LieAlgebra, s: np.ndarray) -> bool:
    """True if [g, span(s)] is contained in span(s).
    """
    for i in range(g.dim):
        e = basis_vector(g, i)
        for j in range(s.shape[1]):
            if not linalg.span_contains(s, bracket(g, e, s[:, j])):
                return False
    return True


def fingerprint(g: LieAlgebra) -> Fingerprint:
    """Collects the isomorphism invariants of g.
    """
    km = killing_form(g)
    signature = linalg.congruence_signature(km) if g.field is Field.REAL else None
    fp = Fingerprint(dim=g.dim,
                     center_dim=center(g).shape[1],
                     derived_dims=derived_series(g),
                     lcs_dims=lower_central_series(g),
                     killing_rank=linalg.rank(km),
                     killing_signature=signature,
                     radical_dim=radical(g).shape[1])
    log.debug('Fingerprint of {}: {}.'.format(g.name or 'algebra', fp))
    return fp


def conjugate_algebra(g: LieAlgebra) -> LieAlgebra:
    """Algebra whose constants are the complex conjugates of g's.
    """
    return LieAlgebra(g.basis, {key: c.conj() for key, c in g.sc.items()}, g.field, g.name)


def direct_sum(g: LieAlgebra, h: LieAlgebra, name: Optional[str]=None) -> LieAlgebra:
    n = g.dim
    sc = dict(g.constants())
    for (i, j, k), c in h.constants().items():
        sc[(i + n, j + n, k + n)] = c
    field = Field.REAL if g.field is Field.REAL and h.field is Field.REAL else Field.COMPLEX
    return LieAlgebra(g.basis + h.basis, sc, field, name)


def algebra_from_matrices(basis: Sequence[str], matrices: Sequence[Any],
                          field: Any=Field.REAL, name: Optional[str]=None) -> MatrixLieAlgebra:
    """Structure constants of the span of matrices under the commutator.

    Raises:
        ValueError: if the matrices are dependent or their span is not closed.
    """
    span = linalg.MatrixSpan(matrices)
    mats = span.matrices
    n = len(mats)
    sc = {}
    for i in range(n):
        for j in range(i + 1, n):
            comm = linalg.matmul(mats[i], mats[j]) - linalg.matmul(mats[j], mats[i])
            x = span.coordinates(comm)
            if x is None:
                raise ValueError('Commutator of {} and {} leaves the span.'.format(basis[i], basis[j]))
            for k in range(n):
                if x[k]:
                    sc[(i, j, k)] = x[k]
    return MatrixLieAlgebra(basis, sc, mats, field, name)


def vector_label(names: Sequence[str], x: Sequence[Any]) -> str:
    """Readable label of a vector, e.g. 'L12+L34' or '1/2*L23-L14'.
    """
    parts = []
    for name, c in zip(names, linalg.as_vector(x)):
        if not c:
            continue
        if c == 1:
            term = '+' + name
        elif c == -1:
            term = '-' + name
        elif c.is_real:
            s = format_scalar(c)
            term = ('' if s.startswith('-') else '+') + s + '*' + name
        else:
            term = '+({})*{}'.format(format_scalar(c), name)
        parts.append(term)
    if not parts:
        return '0'
    label = ''.join(parts)
    return label[1:] if label.startswith('+') else label
