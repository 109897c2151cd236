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

"""Catalog of pseudo-orthogonal algebras, their involutions and reference algebras.

so(p,q) is realized on R^(p+q) with J = diag(1 (p times), -1 (q times)) and
the basis L_ab = E_ba - J_a J_b E_ab for a < b in lexicographic order. For
q = 0 this gives [L12, L13] = L23, [L12, L23] = -L13, [L13, L23] = L12.
"""

import itertools
import logging
import re
from typing import Any, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from lie_contractions import linalg
from lie_contractions.lie_core import (Field, LieAlgebra, MatrixLieAlgebra, algebra_from_matrices,
                                       direct_sum, structurally_equal, transport_bracket)
from lie_contractions.scalars import I, ONE, gq
from lie_contractions.symmetric import Involution, SymmetricPair, dual_form, split

log = logging.getLogger(__name__)


class SOParams(NamedTuple):
    """Block sizes (p, d, q) of J_{p,d,q} = diag(1 (p), -1 (d), 1 (q)) acting on so(p+d, q).
    """
    p: int
    d: int
    q: int

    def check(self) -> 'SOParams':
        if min(self) < 0 or self.d <= 0:
            raise ValueError('Need p, q >= 0 and d > 0, got {}.'.format(tuple(self)))
        if sum(self) < 2:
            raise ValueError('Need p + d + q >= 2, got {}.'.format(tuple(self)))
        return self

    @property
    def size(self) -> int:
        return self.p + self.d + self.q

    def j_diagonal(self) -> List[int]:
        return [1] * self.p + [-1] * self.d + [1] * self.q

    def k_dim(self) -> int:
        p, d, q = self
        return p * (p - 1) // 2 + d * (d - 1) // 2 + q * (q - 1) // 2 + p * q

    def p_dim(self) -> int:
        return self.p * self.d + self.d * self.q

    def __str__(self):
        return '{},{},{}'.format(*self)


def catalog_params(max_size: int=5) -> Iterator[SOParams]:
    """Every valid (p, d, q) with p + d + q <= max_size."""
    for n in range(2, max_size + 1):
        for d in range(1, n + 1):
            for p in range(0, n - d + 1):
                yield SOParams(p, d, n - d - p)


def _unit(n: int, a: int, b: int) -> np.ndarray:
    m = linalg.zeros(n, n)
    m[a, b] = ONE
    return m


def _label(a: int, b: int, n: int) -> str:
    return 'L{}{}'.format(a + 1, b + 1) if n < 10 else 'L{}_{}'.format(a + 1, b + 1)


def so_matrices(p: int, q: int) -> Tuple[List[str], List[np.ndarray]]:
    """Names and defining matrices of the L_ab basis of so(p, q).
    """
    n = p + q
    j = [1] * p + [-1] * q
    names, mats = [], []
    for a, b in itertools.combinations(range(n), 2):
        names.append(_label(a, b, n))
        mats.append(_unit(n, b, a) - linalg.scale(_unit(n, a, b), j[a] * j[b]))
    return names, mats


def build_so(p: int, q: int=0) -> MatrixLieAlgebra:
    """so(p, q) with its defining representation.

    Args:
        p: Number of +1 entries of J.
        q: Number of -1 entries of J.

    Returns:
        MatrixLieAlgebra: so(p,q)
            Dimension (p+q)(p+q-1)/2.
    """
    if p < 0 or q < 0 or p + q < 2:
        raise ValueError('so(p,q) needs p, q >= 0 and p + q >= 2.')
    names, mats = so_matrices(p, q)
    return algebra_from_matrices(names, mats, Field.REAL, 'so({},{})'.format(p, q))


def conjugation_map(g: MatrixLieAlgebra, a: Any) -> np.ndarray:
    """Matrix of Ad(A): X -> A X A^-1 on the basis of g.

    Raises:
        ValueError: if A does not normalize the realization.
    """
    a = linalg.as_matrix(a)
    a_inv = linalg.inverse(a)
    cols = []
    for j, m in enumerate(g.matrices):
        c = g.coordinates(linalg.matmul(linalg.matmul(a, m), a_inv))
        if c is None:
            raise ValueError('Conjugate of {} leaves the algebra.'.format(g.basis[j]))
        cols.append(c)
    return linalg.columns(cols, g.dim)


def _diag(values: Sequence[Any]) -> np.ndarray:
    m = linalg.zeros(len(values), len(values))
    for i, v in enumerate(values):
        m[i, i] = gq(v)
    return m


def build_theta(params: SOParams) -> Involution:
    """theta_{p,d,q} = Ad(J_{p,d,q}) on so(p+d, q)."""
    params = SOParams(*params).check()
    g = build_so(params.p + params.d, params.q)
    return Involution(g, conjugation_map(g, _diag(params.j_diagonal())))


def symmetric_pair(params: SOParams) -> SymmetricPair:
    return split(build_theta(params))


class DualIsomorphism(NamedTuple):
    """Ad(J^1/2) as a map from the dual of (so(p+d,q), theta) onto so(p, d+q)."""
    matrix: Optional[np.ndarray]
    real: bool
    passed: bool


def dual_iso_via_Jhalf(params: SOParams) -> DualIsomorphism:
    """Certifies so(p+d,q)* = so(p, d+q) through conjugation by J^1/2.

    J^1/2 = diag(1 (p), i (d), 1 (q)). The dual basis vectors k_a and i*p_b are
    realized as complex matrices, conjugated by J^1/2 and expressed in the
    basis of so(p, d+q); the resulting map must be real and transport the
    table of so(p, d+q) exactly onto the dual table.
    """
    params = SOParams(*params).check()
    sp = symmetric_pair(params)
    dual, _ = dual_form(sp)
    g = sp.algebra
    target = build_so(params.p, params.d + params.q)
    half = _diag([1] * params.p + [I] * params.d + [1] * params.q)
    half_inv = _diag([1] * params.p + [-I] * params.d + [1] * params.q)
    vectors = [sp.k[:, a] for a in range(sp.dim_k)] + [linalg.scale(sp.p[:, b], I) for b in range(sp.dim_p)]
    cols = []
    for v in vectors:
        image = linalg.matmul(linalg.matmul(half, g.matrix_of(v)), half_inv)
        c = target.coordinates(image)
        if c is None:
            log.warning('Ad(J^1/2) image leaves so({},{}).'.format(params.p, params.d + params.q))
            return DualIsomorphism(None, False, False)
        cols.append(c)
    m = linalg.columns(cols, g.dim)
    real = linalg.is_real(m)
    passed = False
    if real:
        try:
            passed = structurally_equal(transport_bracket(target, m), dual)
        except linalg.SingularMatrixError:
            passed = False
    log.debug('Dual isomorphism for ({}): {}.'.format(params, 'certified' if passed else 'failed'))
    return DualIsomorphism(m, real, passed)


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise ValueError('abelian algebra needs n >= 1.')
    return LieAlgebra(['a{}'.format(i + 1) for i in range(n)], {}, Field.REAL, 'abelian({})'.format(n))


def heisenberg(n: int) -> LieAlgebra:
    """Heisenberg algebra of odd dimension n = 2k+1 with [x_i, y_i] = z."""
    if n < 3 or n % 2 == 0:
        raise ValueError('heisenberg algebra needs odd dimension >= 3.')
    k = (n - 1) // 2
    names = ['x{}'.format(i + 1) for i in range(k)] + ['y{}'.format(i + 1) for i in range(k)] + ['z']
    sc = {(i, k + i, n - 1): 1 for i in range(k)}
    return LieAlgebra(names, sc, Field.REAL, 'heisenberg({})'.format(n))


def _affine(action: Sequence[np.ndarray], names: Sequence[str], module_names: Sequence[str],
            name: str) -> MatrixLieAlgebra:
    """Semidirect product with an abelian module, realized by affine matrices.

    Generator X acts by the block [[rho(X), 0], [0, 0]]; module vector v is the
    block [[0, v], [0, 0]].
    """
    m = len(module_names)
    mats = []
    for rho in action:
        x = linalg.zeros(m + 1, m + 1)
        x[:m, :m] = rho
        mats.append(x)
    for i in range(m):
        mats.append(_unit(m + 1, i, m))
    return algebra_from_matrices(list(names) + list(module_names), mats, Field.REAL, name)


def iso(n: int) -> MatrixLieAlgebra:
    """Euclidean algebra so(n) x| R^n."""
    if n < 1:
        raise ValueError('iso(n) needs n >= 1.')
    names, mats = so_matrices(n, 0) if n >= 2 else ([], [])
    return _affine(mats, names, ['T{}'.format(i + 1) for i in range(n)], 'iso({})'.format(n))


def so_plus_abelian(n: int) -> LieAlgebra:
    """so(n) + R^n with R^n central."""
    return direct_sum(build_so(n, 0), abelian(n), 'so({})+abelian({})'.format(n, n))


def contracted(params: SOParams) -> MatrixLieAlgebra:
    """(so(p,q) + so(d)) x| (M_{p x d} + M_{d x q}) from the explicit matrix action.

    Generators are the L_ab of so(p+d, q) with both indices inside the d-block
    or both outside it; the module is spanned by the remaining L_ab, on which
    the generators act by matrix commutators in the defining representation.
    """
    params = SOParams(*params).check()
    n = params.size
    names, mats = so_matrices(params.p + params.d, params.q)
    in_d = [params.p <= a < params.p + params.d for a in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    gen = [i for i, (a, b) in enumerate(pairs) if in_d[a] == in_d[b]]
    mod = [i for i, (a, b) in enumerate(pairs) if in_d[a] != in_d[b]]
    module_span = linalg.MatrixSpan([mats[i] for i in mod]) if mod else None
    action = []
    for i in gen:
        rho = linalg.zeros(len(mod), len(mod))
        for col, j in enumerate(mod):
            comm = linalg.matmul(mats[i], mats[j]) - linalg.matmul(mats[j], mats[i])
            c = module_span.coordinates(comm)
            if c is None:
                raise RuntimeError('Block action of {} leaves the module.'.format(names[i]))
            rho[:, col] = c
        action.append(rho)
    if not mod:
        return algebra_from_matrices([names[i] for i in gen], [mats[i] for i in gen], Field.REAL,
                                     'contracted({})'.format(params))
    return _affine(action, [names[i] for i in gen], [names[i] for i in mod], 'contracted({})'.format(params))


def hydrogen_params(n: int) -> SOParams:
    """theta_{n,1,0} on so(n+1); its contraction is iso(n) and its dual so(n,1)."""
    return SOParams(n, 1, 0).check()


def _ints(text: str, count: int, name: str) -> List[int]:
    parts = [s for s in re.split(r'[,\s]+', text.strip()) if s]
    if len(parts) != count or not all(re.fullmatch(r'\d+', s) for s in parts):
        raise ValueError('{} expects {} non-negative integers, got {!r}.'.format(name, count, text))
    return [int(s) for s in parts]


def build_reference(kind: str, size: Any) -> LieAlgebra:
    """Reference algebra by kind and size.

    Args:
        kind: One of 'iso', 'so_plus_abelian', 'heisenberg', 'abelian', 'contracted'.
        size: n for the first four kinds, (p, d, q) for 'contracted'.

    Raises:
        ValueError: for unknown kinds.
    """
    if kind == 'iso':
        return iso(int(size))
    if kind == 'so_plus_abelian':
        return so_plus_abelian(int(size))
    if kind == 'heisenberg':
        return heisenberg(int(size))
    if kind == 'abelian':
        return abelian(int(size))
    if kind == 'contracted':
        return contracted(SOParams(*size))
    raise ValueError('Unknown reference algebra {!r}.'.format(kind))


def from_name(text: str) -> Union[LieAlgebra, SymmetricPair]:
    """Resolves a catalog name.

    Recognized names are ``so:p,q``, ``theta:p,d,q`` (a symmetric pair),
    ``iso:n``, ``so_plus_abelian:n``, ``heisenberg:n``, ``abelian:n`` and
    ``contracted:p,d,q``.
    """
    kind, sep, args = text.partition(':')
    kind = kind.strip().lower()
    if not sep:
        raise ValueError('Catalog names look like "kind:args", got {!r}.'.format(text))
    if kind == 'so':
        p, q = _ints(args, 2, 'so')
        return build_so(p, q)
    if kind == 'theta':
        return symmetric_pair(SOParams(*_ints(args, 3, 'theta')))
    if kind == 'contracted':
        return contracted(SOParams(*_ints(args, 3, 'contracted')))
    if kind in ('iso', 'so_plus_abelian', 'heisenberg', 'abelian'):
        return build_reference(kind, _ints(args, 1, kind)[0])
    raise ValueError('Unknown catalog name {!r}.'.format(text))


def untwisted_embedding(sp: SymmetricPair) -> List[np.ndarray]:
    """Embedding of g(C) in which sigma* becomes entrywise conjugation.

    With rho the defining representation, tau(X) = diag(rho X, conj rho(sigma* X))
    and phi = P tau P^-1 for P = [[1, 1], [i, -i]]. On the basis of g (real
    vectors) sigma* X = theta X, so tau(e_j) = diag(rho e_j, rho theta e_j).

    Returns:
        List[np.ndarray]: phi(e_j) for every basis vector of g.
    """
    g = sp.algebra
    if not isinstance(g, MatrixLieAlgebra):
        raise ValueError('Untwisting needs a matrix realization of the algebra.')
    n = g.matrices[0].shape[0]
    ident = linalg.identity(n)
    zero = linalg.zeros(n, n)
    p = linalg.block_matrix([[ident, ident], [linalg.scale(ident, I), linalg.scale(ident, -I)]])
    p_inv = linalg.scale(linalg.block_matrix([[ident, linalg.scale(ident, -I)],
                                              [ident, linalg.scale(ident, I)]]), gq(1) / 2)
    out = []
    for j in range(g.dim):
        top = g.matrices[j]
        bottom = g.matrix_of(sp.involution.matrix[:, j])
        tau = linalg.block_matrix([[top, zero], [zero, bottom]])
        out.append(linalg.matmul(linalg.matmul(p, tau), p_inv))
    return out


def phi_of(embedding: Sequence[np.ndarray], x: Sequence[Any]) -> np.ndarray:
    """C-linear extension of an embedding given on basis vectors."""
    x = linalg.as_vector(x)
    size = embedding[0].shape[0]
    out = linalg.zeros(size, size)
    for c, m in zip(x, embedding):
        if c:
            out = out + linalg.scale(m, c)
    return out


class UntwistReport(NamedTuple):
    homomorphism: bool
    intertwines: bool
    dual_real: bool

    @property
    def passed(self) -> bool:
        return self.homomorphism and self.intertwines and self.dual_real


def check_untwisted_embedding(sp: SymmetricPair) -> UntwistReport:
    """Checks phi against g's table and phi(sigma* X) = conj(phi(X)).

    sigma* X = theta conj(X) on coordinates. The intertwining identity is
    tested on e_j and (1+i) e_j; g* (spanned by k_a and i p_b) must land in
    real matrices.
    """
    g = sp.algebra
    phi = untwisted_embedding(sp)
    try:
        image = algebra_from_matrices(g.basis, phi, Field.COMPLEX)
        homomorphism = structurally_equal(image, g)
    except ValueError:
        homomorphism = False
    theta = sp.involution.matrix
    intertwines = True
    for j in range(g.dim):
        for c in (gq(1), gq(1) + I):
            x = linalg.scale(linalg.unit_vector(g.dim, j), c)
            star = linalg.matmul(theta, linalg.conj_matrix(x))
            if not linalg.equal(phi_of(phi, star), linalg.conj_matrix(phi_of(phi, x))):
                intertwines = False
    dual_vectors = [sp.k[:, a] for a in range(sp.dim_k)] + [linalg.scale(sp.p[:, b], I) for b in range(sp.dim_p)]
    dual_real = all(linalg.is_real(phi_of(phi, v)) for v in dual_vectors)
    return UntwistReport(homomorphism, intertwines, dual_real)
