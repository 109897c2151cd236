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

"""Inonu-Wigner contractions, the semidirect quotient and equivalence witnesses.

A simple contraction is taken with respect to a :class:`Decomposition`
g = k + p with k a subalgebra. Results are expressed in the adapted basis
(k-part then p-part) with basis names prefixed ``k:`` and ``p:``.
"""

import logging
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from lie_contractions import linalg
from lie_contractions.lie_core import (LieAlgebra, DimensionError, bracket, basis_vector,
                                       is_ideal, is_subalgebra, structurally_equal,
                                       transport_bracket, vector_label)
from lie_contractions.scalars import GaussianRational, gq

log = logging.getLogger(__name__)


class ContractionError(ValueError):
    """Raised when a decomposition or exponent assignment is unusable.
    """


class LimitError(ContractionError):
    """The contraction limit does not exist.

    Attributes:
        failures: Tuples (i, j, k, exponent) with negative exponent, 0-based.
    """
    def __init__(self, failures: Sequence[Tuple[int, int, int, int]]) -> None:
        self.failures = tuple(failures)
        listed = ', '.join('({},{},{}):{}'.format(i + 1, j + 1, k + 1, e) for i, j, k, e in self.failures)
        super().__init__('Limit does not exist; negative exponents at {}.'.format(listed))


class Decomposition(object):
    """Vector space splitting g = k + p with k a subalgebra.
    """
    def __init__(self, algebra: LieAlgebra, k_basis: Any, p_basis: Any) -> None:
        """
        Args:
            algebra: Ambient Lie algebra g.
            k_basis: Matrix whose columns span k, or a list of vectors.
            p_basis: Matrix whose columns span p, or a list of vectors.

        Raises:
            ContractionError: if k + p is not a basis of g or k is not a subalgebra.
        """
        self.algebra = algebra
        self.k = _as_columns(k_basis, algebra.dim)
        self.p = _as_columns(p_basis, algebra.dim)
        adapted = np.hstack([self.k, self.p])
        if adapted.shape[1] != algebra.dim or linalg.rank(adapted) != algebra.dim:
            raise ContractionError('k and p bases do not form a basis of {}.'.format(algebra.name or 'g'))
        if not is_subalgebra(algebra, self.k):
            raise ContractionError('k is not a subalgebra.')
        self._adapted = adapted
        self._adapted_inv = linalg.inverse(adapted)

    @classmethod
    def from_indices(cls, algebra: LieAlgebra, k_indices: Sequence[int],
                     p_indices: Optional[Sequence[int]]=None) -> 'Decomposition':
        """Decomposition spanned by basis vectors; p defaults to the remaining ones.
        """
        if p_indices is None:
            p_indices = [j for j in range(algebra.dim) if j not in k_indices]
        k = [basis_vector(algebra, j) for j in k_indices]
        p = [basis_vector(algebra, j) for j in p_indices]
        return cls(algebra, k, p)

    @property
    def dim_k(self) -> int:
        return self.k.shape[1]

    @property
    def dim_p(self) -> int:
        return self.p.shape[1]

    @property
    def adapted_basis(self) -> np.ndarray:
        return self._adapted

    def coords(self, x: Sequence[Any]) -> np.ndarray:
        """Coordinates of x in the adapted basis."""
        return linalg.matmul(self._adapted_inv, linalg.as_vector(x))

    def pr_k(self, x: Sequence[Any]) -> np.ndarray:
        c = self.coords(x)
        return linalg.matmul(self.k, c[:self.dim_k]) if self.dim_k else linalg.zero_vector(self.algebra.dim)

    def pr_p(self, x: Sequence[Any]) -> np.ndarray:
        c = self.coords(x)
        return linalg.matmul(self.p, c[self.dim_k:]) if self.dim_p else linalg.zero_vector(self.algebra.dim)

    def names(self) -> List[str]:
        names = self.algebra.basis
        return (['k:' + vector_label(names, self.k[:, a]) for a in range(self.dim_k)]
                + ['p:' + vector_label(names, self.p[:, b]) for b in range(self.dim_p)])


def _as_columns(vectors: Any, n: int) -> np.ndarray:
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        if vectors.shape[0] != n:
            raise DimensionError('Subspace basis has {} rows, expected {}.'.format(vectors.shape[0], n))
        return linalg.as_matrix(vectors, vectors.shape[1]) if vectors.size else linalg.zeros(n, vectors.shape[1])
    vectors = list(vectors)
    return linalg.columns(vectors, n)


def iw_contract(d: Decomposition, name: Optional[str]=None) -> LieAlgebra:
    """Simple Inonu-Wigner contraction of g with respect to k.

    In the adapted basis: k x k brackets as in g, k x p brackets projected onto
    p along k, p x p brackets zero.

    Args:
        d: Decomposition g = k + p.
        name: Optional name of the result.

    Returns:
        LieAlgebra: contraction
            The limit algebra k x| p in the basis k-part then p-part.
    """
    g = d.algebra
    nk = d.dim_k
    adapted = transport_bracket(g, d.adapted_basis, basis=d.names())
    sc = {}
    for (i, j, k), c in adapted.constants().items():
        if j < nk:
            if k < nk:
                sc[(i, j, k)] = c
        elif i < nk and k >= nk:
            sc[(i, j, k)] = c
    log.debug('Contracted {} along a {}-dimensional subalgebra.'.format(g.name or 'algebra', nk))
    return LieAlgebra(adapted.basis, sc, g.field, name)


def limit_exponents(g: LieAlgebra, exponents: Sequence[int]) -> Dict[Tuple[int, int, int], int]:
    """Exponent n_i + n_j - n_k attached to every canonical constant C_ij^k.
    """
    if len(exponents) != g.dim:
        raise ContractionError('Need {} exponents, got {}.'.format(g.dim, len(exponents)))
    n = [int(e) for e in exponents]
    return {(i, j, k): n[i] + n[j] - n[k] for (i, j, k) in g.constants()}


def generalized_iw_contract(g: LieAlgebra, exponents: Sequence[int],
                            name: Optional[str]=None) -> LieAlgebra:
    """Limit of the diagonal rescaling T_eps = diag(eps^n_1, ..., eps^n_dim).

    The transported constant is C_ij^k eps^(n_i + n_j - n_k). The limit keeps
    constants with exponent 0 and drops those with positive exponent.

    Raises:
        LimitError: if some nonzero constant has a negative exponent.
    """
    powers = limit_exponents(g, exponents)
    constants = g.constants()
    failures = [(i, j, k, e) for (i, j, k), e in sorted(powers.items()) if e < 0]
    if failures:
        raise LimitError(failures)
    sc = {key: constants[key] for key, e in powers.items() if e == 0}
    return LieAlgebra(g.basis, sc, g.field, name)


def scaling_map(exponents: Sequence[int], eps: Any) -> np.ndarray:
    """Diagonal matrix diag(eps^n_1, ..., eps^n_dim)."""
    eps = gq(eps)
    t = linalg.identity(len(exponents))
    for j, e in enumerate(exponents):
        t[j, j] = eps ** int(e)
    return t


class SweepRecord(NamedTuple):
    eps: GaussianRational
    matches: bool


def epsilon_sweep(g: LieAlgebra, exponents: Sequence[int], eps_values: Sequence[Any]) -> List[SweepRecord]:
    """Compares transport by T_eps with the eps-power law at each eps.

    Returns:
        List[SweepRecord]: records
            One record per eps; matches is True when every transported constant
            equals C_ij^k eps^(n_i + n_j - n_k) exactly.
    """
    powers = limit_exponents(g, exponents)
    constants = g.constants()
    records = []
    for eps in eps_values:
        eps = gq(eps)
        transported = transport_bracket(g, scaling_map(exponents, eps)).constants()
        predicted = {key: c * eps ** powers[key] for key, c in constants.items()}
        records.append(SweepRecord(eps, transported == predicted))
    return records


def canonical_complement(g: LieAlgebra, k_basis: Any) -> np.ndarray:
    """Complement of span(k) made of standard basis vectors, chosen greedily.
    """
    k = _as_columns(k_basis, g.dim)
    chosen = []
    current = k
    for j in range(g.dim):
        e = basis_vector(g, j)
        if not linalg.span_contains(current, e):
            chosen.append(e)
            current = np.hstack([current, e.reshape(g.dim, 1)])
    return linalg.columns(chosen, g.dim)


def semidirect_quotient(g: LieAlgebra, k_basis: Any, name: Optional[str]=None) -> LieAlgebra:
    """The algebra k x| (g/k) with g/k abelian and the induced adjoint action.

    Quotient classes are represented by a canonical complement and named
    ``[e_j]``; their brackets with k are taken modulo k, so the table does
    not depend on representatives.

    Raises:
        ContractionError: if span(k) is not a subalgebra.
    """
    k = _as_columns(k_basis, g.dim)
    if linalg.rank(k) != k.shape[1]:
        raise ContractionError('k basis is linearly dependent.')
    if not is_subalgebra(g, k):
        raise ContractionError('k is not a subalgebra.')
    q = canonical_complement(g, k)
    nk, nq = k.shape[1], q.shape[1]
    adapted_inv = linalg.inverse(np.hstack([k, q]))
    names = (['k:' + vector_label(g.basis, k[:, a]) for a in range(nk)]
             + ['[{}]'.format(vector_label(g.basis, q[:, b])) for b in range(nq)])
    sc = {}
    for a in range(nk):
        for b in range(a + 1, nk):
            c = linalg.matmul(adapted_inv, bracket(g, k[:, a], k[:, b]))
            for t in range(nk):
                if c[t]:
                    sc[(a, b, t)] = c[t]
        for b in range(nq):
            c = linalg.matmul(adapted_inv, bracket(g, k[:, a], q[:, b]))
            for t in range(nk, nk + nq):
                if c[t]:
                    sc[(a, nk + b, t)] = c[t]
    return LieAlgebra(names, sc, g.field, name)


def complement_change(g: LieAlgebra, k_basis: Any, p_from: Any, p_to: Any) -> np.ndarray:
    """Map between the contractions for two complements of the same k.

    The k-block is the identity; p_from vectors go to their p_to components
    along k, which is the identification of both complements with g/k.

    Returns:
        np.ndarray: m
            Matrix in adapted coordinates with
            transport_bracket(iw_contract(k, p_to), m) == iw_contract(k, p_from).
    """
    k = _as_columns(k_basis, g.dim)
    p1 = _as_columns(p_from, g.dim)
    target = Decomposition(g, k, p_to)
    nk = k.shape[1]
    m = linalg.identity(g.dim)
    for b in range(p1.shape[1]):
        c = target.coords(p1[:, b])
        m[:, nk + b] = linalg.zero_vector(g.dim)
        for t in range(nk, g.dim):
            m[t, nk + b] = c[t]
    return m


def complements_agree(g: LieAlgebra, k_basis: Any, p_from: Any, p_to: Any) -> bool:
    """True if the contractions for two complements match through g/k.
    """
    first = iw_contract(Decomposition(g, k_basis, p_from))
    second = iw_contract(Decomposition(g, k_basis, p_to))
    m = complement_change(g, k_basis, p_from, p_to)
    return structurally_equal(transport_bracket(second, m), first)


class WitnessReport(NamedTuple):
    """Outcome of :func:`check_equivalence_witness`.

    condition is None on pass, else 'a' (restriction to k), 'b' (defect
    outside k') or 'induced' (the quotient map failed its table check).
    pair holds the offending 0-based basis indices.
    """
    passed: bool
    condition: Optional[str] = None
    pair: Tuple[int, ...] = ()
    detail: str = ''
    nu_tilde: Optional[np.ndarray] = None


def check_equivalence_witness(g: LieAlgebra, k_basis: Any, k2_basis: Any, nu: Any) -> WitnessReport:
    """Checks a sufficient condition for k and k' to give isomorphic contractions.

    (a) nu restricted to k is a Lie isomorphism onto k'. (b) For X in k and
    Y in g, nu([X,Y]) - [nu X, nu Y] lies in k'. On success the induced map
    between the two semidirect quotients is built and verified by transport.

    Args:
        g: Ambient algebra.
        k_basis: Basis of the subalgebra k.
        k2_basis: Basis of the subalgebra k'.
        nu: Invertible linear map of g (column convention).

    Returns:
        WitnessReport: report

    Raises:
        linalg.SingularMatrixError: if nu is singular.
        ContractionError: if k or k' is not a subalgebra.
    """
    k = _as_columns(k_basis, g.dim)
    k2 = _as_columns(k2_basis, g.dim)
    nu = linalg.as_matrix(nu)
    linalg.inverse(nu)
    for sub in (k, k2):
        if not is_subalgebra(g, sub):
            raise ContractionError('Witness subspaces must be subalgebras.')
    nk = k.shape[1]
    if k2.shape[1] != nk:
        return WitnessReport(False, 'a', (), 'dim k = {} but dim k\' = {}'.format(nk, k2.shape[1]))
    images = [linalg.matmul(nu, k[:, a]) for a in range(nk)]
    for a in range(nk):
        if not linalg.span_contains(k2, images[a]):
            return WitnessReport(False, 'a', (a,), 'nu(k_{}) is not in k\''.format(a + 1))
        for b in range(a + 1, nk):
            lhs = linalg.matmul(nu, bracket(g, k[:, a], k[:, b]))
            if not linalg.equal(lhs, bracket(g, images[a], images[b])):
                return WitnessReport(False, 'a', (a, b), 'nu is not a homomorphism on k')
    for a in range(nk):
        for j in range(g.dim):
            e = basis_vector(g, j)
            defect = (linalg.matmul(nu, bracket(g, k[:, a], e))
                      - bracket(g, images[a], linalg.matmul(nu, e)))
            if not linalg.span_contains(k2, defect):
                return WitnessReport(False, 'b', (a, j), 'defect for (k_{}, {}) leaves k\''.format(a + 1, g.basis[j]))

    source = semidirect_quotient(g, k)
    target = semidirect_quotient(g, k2)
    q1 = canonical_complement(g, k)
    q2 = canonical_complement(g, k2)
    target_inv = linalg.inverse(np.hstack([k2, q2]))
    nu_tilde = linalg.zeros(g.dim, g.dim)
    for a in range(nk):
        nu_tilde[:nk, a] = linalg.solve_in_span(k2, images[a])
    for b in range(q1.shape[1]):
        c = linalg.matmul(target_inv, linalg.matmul(nu, q1[:, b]))
        for t in range(nk, g.dim):
            nu_tilde[t, nk + b] = c[t]
    try:
        induced = transport_bracket(target, nu_tilde)
    except linalg.SingularMatrixError:
        return WitnessReport(False, 'induced', (), 'induced map is singular', nu_tilde)
    if not structurally_equal(induced, source):
        return WitnessReport(False, 'induced', (), 'induced map is not a Lie isomorphism', nu_tilde)
    log.debug('Equivalence witness verified; induced map certified.')
    return WitnessReport(True, nu_tilde=nu_tilde)


def semidirect_split_holds(d: Decomposition, h: LieAlgebra) -> bool:
    """Whether h brackets k with the whole space the way k x| p does.

    k x k brackets must agree with g in the adapted basis and k x p brackets
    with the p-component of g's bracket.
    """
    g = d.algebra
    n, nk = g.dim, d.dim_k
    if h.dim != n:
        return False
    adapted = transport_bracket(g, d.adapted_basis)
    for a in range(nk):
        x = basis_vector(g, a)
        for j in range(n):
            y = basis_vector(g, j)
            expected = bracket(adapted, x, y)
            if j >= nk:
                expected[:nk] = linalg.zero_vector(nk)
            if not linalg.equal(bracket(h, x, y), expected):
                return False
    return True


class T0Report(NamedTuple):
    """Span checks on the limit map T_0 = pr_k of a simple contraction.
    """
    image_subalgebra_of_g: bool
    image_subalgebra_of_contraction: bool
    kernel_abelian_ideal: bool
    splits: bool
    action_trivial: bool

    @property
    def passed(self) -> bool:
        return (self.image_subalgebra_of_g and self.image_subalgebra_of_contraction
                and self.kernel_abelian_ideal and self.splits)


def t0_analysis(d: Decomposition) -> T0Report:
    """Confirms im(T_0) = k and ker(T_0) = p play their roles in the contraction.

    im(T_0) must be a subalgebra of g and of the contraction, ker(T_0) an
    abelian ideal of the contraction, and the contraction their semidirect
    product. action_trivial records whether k acts trivially on p.

    Raises:
        RuntimeError: if any of the structural checks fails.
    """
    h = iw_contract(d)
    n, nk = h.dim, d.dim_k
    ident = linalg.identity(n)
    image = ident[:, :nk]
    kernel = ident[:, nk:]
    kernel_abelian = all(linalg.is_zero(bracket(h, kernel[:, a], kernel[:, b]))
                         for a in range(kernel.shape[1]) for b in range(a + 1, kernel.shape[1]))
    action_trivial = all(linalg.is_zero(bracket(h, image[:, a], kernel[:, b]))
                         for a in range(nk) for b in range(kernel.shape[1]))
    report = T0Report(image_subalgebra_of_g=is_subalgebra(d.algebra, d.k),
                      image_subalgebra_of_contraction=is_subalgebra(h, image),
                      kernel_abelian_ideal=kernel_abelian and is_ideal(h, kernel),
                      splits=semidirect_split_holds(d, h),
                      action_trivial=action_trivial)
    if not report.passed:
        raise RuntimeError('Contraction failed its T_0 span checks: {}.'.format(report))
    return report
