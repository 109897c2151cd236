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

"""Involutions, symmetric pairs, complexification and the dual real form.

For a symmetric pair (g, theta) with g = k + p the dual algebra g* lives on
the basis k_a, i*p_b with the p x p -> k constants negated. The same algebra
is also obtained as the fixed points of sigma* = sigma theta~ inside the
complexification; :func:`dual_form_by_fixed_points` computes it that way.
"""

import logging
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from lie_contractions import linalg
from lie_contractions.contraction import Decomposition, iw_contract
from lie_contractions.lie_core import (Field, LieAlgebra, bracket, basis_vector,
                                       structurally_equal, transport_bracket, vector_label)
from lie_contractions.scalars import I, gq

log = logging.getLogger(__name__)

#: Prefix marking basis vectors i*p of a dual form.
DUAL_PREFIX = 'i*'


class InvolutionError(ValueError):
    """Raised when a matrix is not an involutive automorphism.
    """


class GradingError(ValueError):
    """Raised when the eigenspaces of an involution violate the Z/2 grading.
    """


class Involution(object):
    """Involutive automorphism theta of a real Lie algebra, as an exact matrix.
    """
    def __init__(self, algebra: LieAlgebra, matrix: Any, check: bool=True) -> None:
        self.algebra = algebra
        self.matrix = linalg.as_matrix(matrix)
        if check:
            self.check()

    @classmethod
    def identity(cls, algebra: LieAlgebra) -> 'Involution':
        return cls(algebra, linalg.identity(algebra.dim), check=False)

    def check(self) -> None:
        """Verifies theta^2 = 1 and theta [x, y] = [theta x, theta y] on basis pairs.

        Raises:
            InvolutionError: on the first failed condition.
        """
        g, t = self.algebra, self.matrix
        if t.shape != (g.dim, g.dim):
            raise InvolutionError('Involution matrix of shape {} does not act on dim {}.'.format(t.shape, g.dim))
        if not linalg.is_real(t):
            raise InvolutionError('Involution matrix must have rational entries.')
        if not linalg.equal(linalg.matmul(t, t), linalg.identity(g.dim)):
            raise InvolutionError('Matrix does not square to the identity.')
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = linalg.matmul(t, bracket(g, basis_vector(g, i), basis_vector(g, j)))
                rhs = bracket(g, t[:, i], t[:, j])
                if not linalg.equal(lhs, rhs):
                    raise InvolutionError('Not an automorphism: fails on ({}, {}).'.format(
                        g.basis[i], g.basis[j]))

    def __call__(self, x: Sequence[Any]) -> np.ndarray:
        return linalg.matmul(self.matrix, linalg.as_vector(x))


class SymmetricPair(object):
    """Symmetric Lie algebra (g, theta) with its eigenspaces k (+1) and p (-1).
    """
    def __init__(self, algebra: LieAlgebra, involution: Involution,
                 k: np.ndarray, p: np.ndarray) -> None:
        self.algebra = algebra
        self.involution = involution
        self.k = k
        self.p = p

    @property
    def dim_k(self) -> int:
        return self.k.shape[1]

    @property
    def dim_p(self) -> int:
        return self.p.shape[1]

    @property
    def adapted_basis(self) -> np.ndarray:
        return np.hstack([self.k, self.p])

    def decomposition(self) -> Decomposition:
        return Decomposition(self.algebra, self.k, self.p)

    def k_names(self) -> List[str]:
        return [vector_label(self.algebra.basis, self.k[:, a]) for a in range(self.dim_k)]

    def p_names(self) -> List[str]:
        return [vector_label(self.algebra.basis, self.p[:, b]) for b in range(self.dim_p)]

    def check_grading(self) -> None:
        """Verifies [k,k] in k, [k,p] in p and [p,p] in k exactly.

        Raises:
            GradingError: naming the first offending pair.
        """
        g = self.algebra
        blocks = ((self.k, self.k, self.k, 'k', 'k'), (self.k, self.p, self.p, 'k', 'p'),
                  (self.p, self.p, self.k, 'p', 'p'))
        for left, right, target, ln, rn in blocks:
            for a in range(left.shape[1]):
                for b in range(right.shape[1]):
                    v = bracket(g, left[:, a], right[:, b])
                    if not linalg.span_contains(target, v):
                        raise GradingError('[{0}_{2}, {1}_{3}] leaves its graded component.'.format(
                            ln, rn, a + 1, b + 1))

    def __repr__(self):
        return 'SymmetricPair({!r}, dim k={}, dim p={})'.format(self.algebra.name or '', self.dim_k, self.dim_p)


def split(theta: Involution) -> SymmetricPair:
    """Eigenspace decomposition g = g^theta + g^-theta.

    Raises:
        InvolutionError: if theta is not an involutive automorphism.
        GradingError: if the eigenspaces are not graded.
    """
    theta.check()
    g = theta.algebra
    ident = linalg.identity(g.dim)
    k = linalg.nullspace(theta.matrix - ident)
    p = linalg.nullspace(theta.matrix + ident)
    sp = SymmetricPair(g, theta, k, p)
    if sp.dim_k + sp.dim_p != g.dim:
        raise InvolutionError('Eigenspaces do not span the algebra.')
    sp.check_grading()
    log.debug('Split {}: dim k = {}, dim p = {}.'.format(g.name or 'algebra', sp.dim_k, sp.dim_p))
    return sp


class SemilinearMap(object):
    """x -> A x or x -> A conj(x) on coordinate vectors.

    Composition follows (A, a) o (B, b) = (A conj^a(B), a xor b).
    """
    def __init__(self, matrix: Any, antilinear: bool=False) -> None:
        self.matrix = linalg.as_matrix(matrix)
        self.antilinear = bool(antilinear)

    def __call__(self, x: Sequence[Any]) -> np.ndarray:
        x = linalg.as_vector(x)
        if self.antilinear:
            x = linalg.conj_matrix(x)
        return linalg.matmul(self.matrix, x)

    def compose(self, other: 'SemilinearMap') -> 'SemilinearMap':
        inner = linalg.conj_matrix(other.matrix) if self.antilinear else other.matrix
        return SemilinearMap(linalg.matmul(self.matrix, inner), self.antilinear != other.antilinear)

    def __mul__(self, other: 'SemilinearMap') -> 'SemilinearMap':
        return self.compose(other)

    def __eq__(self, other):
        if not isinstance(other, SemilinearMap):
            return NotImplemented
        return self.antilinear == other.antilinear and linalg.equal(self.matrix, other.matrix)

    def is_identity(self) -> bool:
        return not self.antilinear and linalg.equal(self.matrix, linalg.identity(self.matrix.shape[0]))


class RealStructure(object):
    """Conjugate-linear involution sigma(x) = S conj(x) of a complex Lie algebra.
    """
    def __init__(self, complex_algebra: LieAlgebra, matrix: Any, check: bool=True) -> None:
        self.complex_algebra = complex_algebra
        self.sigma = SemilinearMap(matrix, antilinear=True)
        if check:
            self.check()

    @property
    def matrix(self) -> np.ndarray:
        return self.sigma.matrix

    def check(self) -> None:
        """Verifies sigma^2 = 1 and that sigma preserves brackets of basis vectors.

        Raises:
            InvolutionError: on the first failed condition.
        """
        g = self.complex_algebra
        if not (self.sigma * self.sigma).is_identity():
            raise InvolutionError('Conjugation does not square to the identity.')
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = self.sigma(bracket(g, basis_vector(g, i), basis_vector(g, j)))
                rhs = bracket(g, self.sigma(basis_vector(g, i)), self.sigma(basis_vector(g, j)))
                if not linalg.equal(lhs, rhs):
                    raise InvolutionError('Conjugation is not an automorphism on ({}, {}).'.format(
                        g.basis[i], g.basis[j]))

    def is_fixed(self, x: Sequence[Any]) -> bool:
        x = linalg.as_vector(x)
        return linalg.equal(self.sigma(x), x)

    def fixed_point_candidates(self) -> List[np.ndarray]:
        """(e_j + sigma e_j)/2 and i(e_j - sigma e_j)/2 for every basis vector."""
        out = []
        g = self.complex_algebra
        for j in range(g.dim):
            e = basis_vector(g, j)
            s = self.sigma(e)
            out.append(linalg.scale(e + s, gq(1) / 2))
            out.append(linalg.scale(e - s, I / 2))
        return out

    def real_form(self, candidates: Optional[Sequence[Any]]=None,
                  names: Optional[Sequence[str]]=None, name: Optional[str]=None) -> LieAlgebra:
        """Real Lie algebra of sigma-fixed points.

        Args:
            candidates: Fixed vectors to draw the real basis from, in order.
                Defaults to :meth:`fixed_point_candidates`.
            names: Basis names of the result; defaults to vector labels.
            name: Name of the result.

        Returns:
            LieAlgebra: real form
                Structure constants in the chosen basis; they are real.

        Raises:
            InvolutionError: if a candidate is not fixed, too few candidates are
                independent, or a constant comes out non-real.
        """
        g = self.complex_algebra
        if candidates is None:
            candidates = self.fixed_point_candidates()
        chosen = []
        for x in candidates:
            x = linalg.as_vector(x)
            if not self.is_fixed(x):
                raise InvolutionError('Candidate {} is not fixed by the conjugation.'.format(
                    vector_label(g.basis, x)))
            if linalg.real_rank(chosen + [x]) == len(chosen) + 1:
                chosen.append(x)
            if len(chosen) == g.dim:
                break
        if len(chosen) != g.dim:
            raise InvolutionError('Only {} of {} fixed vectors are independent.'.format(len(chosen), g.dim))
        b = linalg.columns(chosen, g.dim)
        b_inv = linalg.inverse(b)
        sc = {}
        for a in range(g.dim):
            for c in range(a + 1, g.dim):
                v = linalg.matmul(b_inv, bracket(g, b[:, a], b[:, c]))
                for t in range(g.dim):
                    if v[t]:
                        if not v[t].is_real:
                            raise InvolutionError('Real form has non-real constant at ({}, {}).'.format(a + 1, c + 1))
                        sc[(a, c, t)] = v[t]
        if names is None:
            names = [vector_label(g.basis, x) for x in chosen]
        return LieAlgebra(names, sc, Field.REAL, name)


def complexify(g: LieAlgebra) -> Tuple[LieAlgebra, RealStructure]:
    """g(C) with the same table and sigma = coefficient conjugation.
    """
    gc = LieAlgebra(g.basis, g.sc, Field.COMPLEX, '{}(C)'.format(g.name) if g.name else None)
    return gc, RealStructure(gc, linalg.identity(g.dim), check=False)


def _dual_names(names: Sequence[str]) -> List[str]:
    return [n[len(DUAL_PREFIX):] if n.startswith(DUAL_PREFIX) else DUAL_PREFIX + n for n in names]


def dual_form(sp: SymmetricPair, name: Optional[str]=None) -> Tuple[LieAlgebra, SymmetricPair]:
    """Dual symmetric Lie algebra g* = k + i p.

    The basis is k_a followed by i*p_b. Relative to g in the adapted basis the
    (p, p -> k) constants are negated and all others kept. Dualizing a dual
    strips the ``i*`` prefix again.

    Args:
        sp: Symmetric pair (g, theta).
        name: Name of the dual; defaults to g's name with a trailing '*'.

    Returns:
        Tuple[LieAlgebra, SymmetricPair]: dual, dual_pair
            g* and its pair with theta* = diag(1, ..., -1, ...).
    """
    sp.check_grading()
    g = sp.algebra
    nk = sp.dim_k
    names = sp.k_names() + _dual_names(sp.p_names())
    adapted = transport_bracket(g, sp.adapted_basis)
    sc = {}
    for (i, j, k), c in adapted.constants().items():
        sc[(i, j, k)] = -c if i >= nk else c
    if name is None and g.name:
        name = g.name[:-1] if g.name.endswith('*') else g.name + '*'
    dual = LieAlgebra(names, sc, Field.REAL, name)
    theta = linalg.identity(g.dim)
    for b in range(nk, g.dim):
        theta[b, b] = -theta[b, b]
    ident = linalg.identity(g.dim)
    pair = SymmetricPair(dual, Involution(dual, theta, check=False), ident[:, :nk], ident[:, nk:])
    pair.check_grading()
    return dual, pair


def dual_form_by_fixed_points(sp: SymmetricPair) -> LieAlgebra:
    """g* computed as the sigma*-fixed points of g(C) on the basis k_a, i p_b.
    """
    g = sp.algebra
    gc, _ = complexify(g)
    sigma_star = RealStructure(gc, sp.involution.matrix)
    candidates = [sp.k[:, a] for a in range(sp.dim_k)] + [linalg.scale(sp.p[:, b], I) for b in range(sp.dim_p)]
    return sigma_star.real_form(candidates, names=sp.k_names() + _dual_names(sp.p_names()))


def double_dual_check(sp: SymmetricPair) -> bool:
    """True if dualizing twice returns g in the adapted basis, names included.
    """
    _, pair = dual_form(sp)
    twice, _ = dual_form(pair)
    original = transport_bracket(sp.algebra, sp.adapted_basis, basis=sp.k_names() + sp.p_names())
    return twice.basis == original.basis and structurally_equal(twice, original)


class DualityReport(NamedTuple):
    """Exact identities between sigma, theta~ and sigma* = sigma theta~ on g(C).
    """
    sigma_theta_commute: bool
    sigma_star_theta_commute: bool
    sigma_star_sigma_commute: bool
    sigma_star_involutive: bool
    dual_theta_stable: bool
    dual_dims: Tuple[int, int]
    expected_dims: Tuple[int, int]

    @property
    def passed(self) -> bool:
        return (self.sigma_theta_commute and self.sigma_star_theta_commute
                and self.sigma_star_sigma_commute and self.sigma_star_involutive
                and self.dual_theta_stable and self.dual_dims == self.expected_dims)


def duality_checks(sp: SymmetricPair) -> DualityReport:
    """Checks the identities relating g, its dual and the complexification.

    The dual basis vectors k_a and i p_b must be sigma*-fixed and mapped by
    theta~ to real multiples of themselves (theta~-stability of g*).
    """
    g = sp.algebra
    n = g.dim
    sigma = SemilinearMap(linalg.identity(n), antilinear=True)
    theta = SemilinearMap(sp.involution.matrix)
    sigma_star = sigma * theta
    dual_vectors = [sp.k[:, a] for a in range(sp.dim_k)] + [linalg.scale(sp.p[:, b], I) for b in range(sp.dim_p)]
    basis = linalg.columns(dual_vectors, n)
    stable = True
    for x in dual_vectors:
        if not linalg.equal(sigma_star(x), x):
            stable = False
            break
        coords = linalg.solve_in_span(basis, theta(x))
        if coords is None or not all(c.is_real for c in coords):
            stable = False
            break
    _, pair = dual_form(sp)
    return DualityReport(sigma_theta_commute=(sigma * theta) == (theta * sigma),
                         sigma_star_theta_commute=(sigma_star * theta) == (theta * sigma_star),
                         sigma_star_sigma_commute=(sigma_star * sigma) == (sigma * sigma_star),
                         sigma_star_involutive=(sigma_star * sigma_star).is_identity(),
                         dual_theta_stable=stable,
                         dual_dims=(pair.dim_k, pair.dim_p),
                         expected_dims=(sp.dim_k, sp.dim_p))


def dual_contraction(sp: SymmetricPair, name: Optional[str]=None) -> LieAlgebra:
    """Contraction of g* along the shared subalgebra k.

    Structurally equal to the contraction of g itself, since both limits drop
    the p x p constants where the two tables differ.
    """
    _, pair = dual_form(sp)
    return iw_contract(pair.decomposition(), name)
