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

"""Algebraic families of Lie algebras over the affine line.

A family is a free module over C[z] (or R[z]) with basis e_1..e_n and
polynomial structure constants. Its fiber at alpha is the Lie algebra with
constants C_ij^k(alpha). The contraction family of a symmetric pair g = k + p
keeps the k x k and k x p constants of g and multiplies the p x p constants by
z, so its real fibers are g (alpha > 0), the dual g* (alpha < 0) and the
contraction k x| p (alpha = 0).
"""

import logging
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from lie_contractions import linalg
from lie_contractions.contraction import iw_contract
from lie_contractions.lie_core import (Field, LieAlgebra, MatrixLieAlgebra, algebra_from_matrices,
                                       structurally_equal, transport_bracket, vector_label)
from lie_contractions.scalars import (GaussianRational, I, ONE, Polynomial, ZERO_POLY,
                                      format_scalar, gq, rational_sqrt)
from lie_contractions.symmetric import SymmetricPair, dual_form

log = logging.getLogger(__name__)

Index3 = Tuple[int, int, int]

#: Serialized name of the involution sigma(f e_j) = conj(f) e_j.
COEFFICIENT_CONJUGATION = 'coefficient-conjugation'


class FamilyError(ValueError):
    """Raised for malformed families or unavailable real forms.
    """


def _poly(value: Any) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (list, tuple)):
        return Polynomial(value)
    return Polynomial.constant(gq(value))


class AlgebraicFamily(object):
    """Family of complex Lie algebras: free C[z]-module with polynomial constants.

    Like :class:`LieAlgebra`, constants are stored as given and antisymmetric
    partners are implied unless stored explicitly.
    """
    field = Field.COMPLEX

    def __init__(self, basis: Sequence[str], sc: Mapping[Index3, Any],
                 involution: Any=None, name: Optional[str]=None) -> None:
        """
        Args:
            basis: Basis names; the rank is their count.
            sc: Mapping (i, j, k) -> Polynomial (or scalar, or ascending coefficients).
            involution: None, or the matrix S of sigma(f e_j) = conj(f) S e_j.
                The string 'coefficient-conjugation' stands for S = 1.
            name: Optional label.
        """
        self.basis = tuple(str(b) for b in basis)
        n = len(self.basis)
        if n == 0:
            raise FamilyError('A family needs a non-empty basis.')
        raw = {}
        for key, f in dict(sc).items():
            i, j, k = (int(x) for x in key)
            if not all(0 <= x < n for x in (i, j, k)):
                raise FamilyError('Index {} out of range for rank {}.'.format(key, n))
            f = _poly(f)
            if f:
                raw[(i, j, k)] = f
        self.sc = raw
        if isinstance(involution, str):
            if involution != COEFFICIENT_CONJUGATION:
                raise FamilyError('Unknown involution {!r}.'.format(involution))
            involution = linalg.identity(n)
        self.involution = linalg.as_matrix(involution) if involution is not None else None
        self.name = name
        self._full = None

    @property
    def rank(self) -> int:
        return len(self.basis)

    def full(self) -> Dict[Index3, Polynomial]:
        """All nonzero constants with implied antisymmetric partners."""
        if self._full is None:
            full = dict(self.sc)
            for (i, j, k), f in self.sc.items():
                if i != j and (j, i, k) not in self.sc:
                    full[(j, i, k)] = -f
            self._full = full
        return self._full

    def constants(self) -> Dict[Index3, Polynomial]:
        """Canonical constants (i < j), sorted."""
        return {key: f for key, f in sorted(self.full().items()) if key[0] < key[1]}

    def has_coefficient_conjugation(self) -> bool:
        return self.involution is not None and linalg.equal(self.involution, linalg.identity(self.rank))

    def is_real(self) -> bool:
        return all(f.is_real for f in self.sc.values())

    def __eq__(self, other):
        if not isinstance(other, AlgebraicFamily):
            return NotImplemented
        same_inv = ((self.involution is None and other.involution is None)
                    or (self.involution is not None and other.involution is not None
                        and linalg.equal(self.involution, other.involution)))
        return (type(self) is type(other) and self.basis == other.basis
                and self.constants() == other.constants() and same_inv)

    def __repr__(self):
        return '{}({!r}, rank={})'.format(type(self).__name__, self.name or '', self.rank)


class RealFamily(AlgebraicFamily):
    """Family of real Lie algebras: free R[z]-module, real coefficients only.
    """
    field = Field.REAL

    def __init__(self, basis: Sequence[str], sc: Mapping[Index3, Any], name: Optional[str]=None) -> None:
        super().__init__(basis, sc, None, name)
        for key, f in self.sc.items():
            if not f.is_real:
                raise FamilyError('Real family has non-real constant {} at {}.'.format(f, key))


class ContractionFamily(RealFamily):
    """Real family built from a symmetric pair; keeps the pair for certificates.
    """
    def __init__(self, basis: Sequence[str], sc: Mapping[Index3, Any], pair: SymmetricPair,
                 name: Optional[str]=None) -> None:
        super().__init__(basis, sc, name)
        self.pair = pair


def fiber(fam: AlgebraicFamily, alpha: Any) -> LieAlgebra:
    """Lie algebra with constants C_ij^k(alpha).

    Raises:
        FamilyError: for non-real alpha on a real family.
    """
    alpha = gq(alpha)
    if fam.field is Field.REAL and not alpha.is_real:
        raise FamilyError('Real families have fibers only at real parameters, got {}.'.format(
            format_scalar(alpha)))
    sc = {key: f(alpha) for key, f in fam.sc.items()}
    name = '{}|{}'.format(fam.name, format_scalar(alpha)) if fam.name else None
    return LieAlgebra(fam.basis, sc, fam.field, name)


class FamilyReport(NamedTuple):
    """Outcome of :func:`check_family`; residue is a full polynomial."""
    passed: bool
    kind: Optional[str] = None
    indices: Tuple[int, ...] = ()
    residue: Optional[Polynomial] = None

    def describe(self) -> str:
        if self.passed:
            return 'pass'
        idx = ','.join(str(i + 1) for i in self.indices)
        return '{} violation at ({}): residue {}'.format(self.kind, idx, self.residue)


def check_family(fam: AlgebraicFamily) -> FamilyReport:
    """Antisymmetry and Jacobi over the polynomial ring.

    Returns:
        FamilyReport: report
            Pass, or the first violation with its residue polynomial.
    """
    n = fam.rank
    full = fam.full()
    for (i, j, k), f in sorted(fam.sc.items()):
        if i == j:
            return FamilyReport(False, 'antisymmetry', (i, j, k), f)
        if i < j and (j, i, k) in fam.sc:
            s = f + fam.sc[(j, i, k)]
            if s:
                return FamilyReport(False, 'antisymmetry', (i, j, k), s)
    by_pair = {}
    for (i, j, k), f in full.items():
        by_pair.setdefault((i, j), []).append((k, f))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                residue = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    for m, f in by_pair.get((a, b), ()):
                        for l, g in by_pair.get((m, c), ()):
                            residue[l] = residue.get(l, ZERO_POLY) + f * g
                for l in range(n):
                    r = residue.get(l, ZERO_POLY)
                    if r:
                        return FamilyReport(False, 'jacobi', (i, j, k, l), r)
    return FamilyReport(True)


def constant_family(g: LieAlgebra, name: Optional[str]=None) -> AlgebraicFamily:
    """C[z] tensor g; coefficient conjugation when g is real."""
    involution = COEFFICIENT_CONJUGATION if g.field is Field.REAL else None
    return AlgebraicFamily(g.basis, {key: Polynomial.constant(c) for key, c in g.sc.items()},
                           involution, name or g.name)


def conjugate_family(fam: AlgebraicFamily) -> AlgebraicFamily:
    """Family with every coefficient conjugated."""
    return AlgebraicFamily(fam.basis, {key: f.conj() for key, f in fam.sc.items()},
                           fam.involution, fam.name)


def _sigma(fam: AlgebraicFamily, v: Sequence[Any]) -> np.ndarray:
    return linalg.matmul(fam.involution, linalg.conj_matrix(linalg.as_vector(v)))


def check_involution(fam: AlgebraicFamily) -> None:
    """Verifies sigma^2 = 1 and sigma [e_i, e_j] = [sigma e_i, sigma e_j] over C[z].

    Raises:
        FamilyError: if the family has no involution or it fails a check.
    """
    if fam.involution is None:
        raise FamilyError('Family carries no anti-holomorphic involution.')
    s = fam.involution
    n = fam.rank
    if not linalg.equal(linalg.matmul(s, linalg.conj_matrix(s)), linalg.identity(n)):
        raise FamilyError('Involution does not square to the identity.')
    full = fam.full()
    for i in range(n):
        for j in range(i + 1, n):
            lhs = [ZERO_POLY] * n
            for k in range(n):
                f = full.get((i, j, k))
                if f:
                    for t in range(n):
                        if s[t, k]:
                            lhs[t] = lhs[t] + f.conj() * s[t, k]
            rhs = [ZERO_POLY] * n
            for (a, b, k), f in full.items():
                c = s[a, i] * s[b, j]
                if c:
                    rhs[k] = rhs[k] + f * c
            if lhs != rhs:
                raise FamilyError('Involution is not a morphism on ({}, {}).'.format(fam.basis[i], fam.basis[j]))


def real_points(fam: AlgebraicFamily, name: Optional[str]=None) -> RealFamily:
    """Real family of sigma-fixed points.

    With coefficient conjugation the basis is kept and every constant must
    have real coefficients. Otherwise an adapted basis is chosen greedily from
    (e_j + sigma e_j)/2 and i(e_j - sigma e_j)/2 and the constants are
    re-expressed in it.

    Raises:
        FamilyError: if there is no involution or the constants are not real.
    """
    check_involution(fam)
    name = name or fam.name
    if fam.has_coefficient_conjugation():
        if not fam.is_real():
            raise FamilyError('Constants are not real in the conjugation-fixed basis.')
        return RealFamily(fam.basis, fam.sc, name)
    n = fam.rank
    chosen = []
    for j in range(n):
        e = linalg.unit_vector(n, j)
        s = _sigma(fam, e)
        for x in (linalg.scale(e + s, gq(1) / 2), linalg.scale(e - s, I / 2)):
            if linalg.real_rank(chosen + [x]) == len(chosen) + 1:
                chosen.append(x)
    if len(chosen) != n:
        raise FamilyError('Fixed points do not span the family.')
    b = linalg.columns(chosen, n)
    b_inv = linalg.inverse(b)
    full = fam.full()
    sc = {}
    for a in range(n):
        for c in range(a + 1, n):
            v = [ZERO_POLY] * n
            for (i, j, k), f in full.items():
                w = b[i, a] * b[j, c]
                if w:
                    v[k] = v[k] + f * w
            for t in range(n):
                acc = ZERO_POLY
                for k in range(n):
                    if b_inv[t, k] and v[k]:
                        acc = acc + v[k] * b_inv[t, k]
                if acc:
                    if not acc.is_real:
                        raise FamilyError('Constant {} in the adapted basis is not real.'.format(acc))
                    sc[(a, c, t)] = acc
    return RealFamily([vector_label(fam.basis, x) for x in chosen], sc, name)


def _poly_matrix(m: Any) -> np.ndarray:
    arr = np.array(m, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, x in np.ndenumerate(arr):
        out[idx] = _poly(x)
    return out


def _poly_commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            acc = ZERO_POLY
            for k in range(n):
                if a[i, k] and b[k, j]:
                    acc = acc + a[i, k] * b[k, j]
                if b[i, k] and a[k, j]:
                    acc = acc - b[i, k] * a[k, j]
            out[i, j] = acc
    return out


def family_from_matrices(basis: Sequence[str], matrices: Sequence[Any], involution: Any=None,
                         name: Optional[str]=None) -> AlgebraicFamily:
    """C[z]-submodule of gl_n(C[z]) spanned by polynomial matrices.

    Coordinates are solved on a set of entries where every generator is
    constant and the constant block is invertible.

    Raises:
        FamilyError: if no such entries exist or the span is not closed.
    """
    mats = [_poly_matrix(m) for m in matrices]
    n = len(mats)
    size = mats[0].shape
    entries = [idx for idx in np.ndindex(*size) if all(m[idx].degree <= 0 for m in mats)]
    const = linalg.zeros(len(entries), n)
    for r, idx in enumerate(entries):
        for j, m in enumerate(mats):
            const[r, j] = m[idx].coeff(0)
    _, rows = linalg.rref(const.T.copy())
    if len(rows) != n:
        raise FamilyError('No invertible block of constant entries spans the generators.')
    pivots = [entries[r] for r in rows]
    a_inv = linalg.inverse(const[list(rows), :])
    sc = {}
    for i in range(n):
        for j in range(i + 1, n):
            comm = _poly_commutator(mats[i], mats[j])
            coords = []
            for t in range(n):
                acc = ZERO_POLY
                for r, idx in enumerate(pivots):
                    if a_inv[t, r] and comm[idx]:
                        acc = acc + comm[idx] * a_inv[t, r]
                coords.append(acc)
            for idx in np.ndindex(*size):
                recon = ZERO_POLY
                for t in range(n):
                    if coords[t] and mats[t][idx]:
                        recon = recon + coords[t] * mats[t][idx]
                if recon != comm[idx]:
                    raise FamilyError('Commutator of {} and {} leaves the span.'.format(basis[i], basis[j]))
            for t in range(n):
                if coords[t]:
                    sc[(i, j, t)] = coords[t]
    return AlgebraicFamily(basis, sc, involution, name)


def example_family() -> AlgebraicFamily:
    """Matrices [[0, a, b], [-a, 0, c], [z b, z c, 0]] with entrywise conjugation.

    Brackets [A, B] = -C, [A, C] = B, [B, C] = z A; fibers are so(3, C) for
    alpha != 0 and so(2, C) x| C^2 at alpha = 0.
    """
    z = Polynomial.z()
    a = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    b = [[0, 0, 1], [0, 0, 0], [z, 0, 0]]
    c = [[0, 0, 0], [0, 0, 1], [0, z, 0]]
    return family_from_matrices(['A', 'B', 'C'], [a, b, c], COEFFICIENT_CONJUGATION, 'so(3,C) z-family')


def contraction_family(sp: SymmetricPair, name: Optional[str]=None) -> ContractionFamily:
    """Family on k + p whose p x p constants carry a factor z.

    Built over C[z] with coefficient conjugation and restricted to its real
    points. Fibers: 1 -> g, -1 -> g*, 0 -> the contraction, all in the
    adapted basis.
    """
    sp.check_grading()
    g = sp.algebra
    nk = sp.dim_k
    z = Polynomial.z()
    adapted = transport_bracket(g, sp.adapted_basis)
    sc = {}
    for (i, j, k), c in adapted.constants().items():
        sc[(i, j, k)] = z * c if i >= nk else Polynomial.constant(c)
    name = name or ('{} family'.format(g.name) if g.name else None)
    complex_family = AlgebraicFamily(sp.k_names() + sp.p_names(), sc, COEFFICIENT_CONJUGATION, name)
    real = real_points(complex_family)
    log.info('Built contraction family of rank {}.'.format(real.rank))
    return ContractionFamily(real.basis, real.sc, sp, name)


def block_family(sp: SymmetricPair, name: Optional[str]=None) -> AlgebraicFamily:
    """Family spanned by [[X+, X-], [z X-, X+]] for X+ in k and X- in p.

    Uses the matrix realization of g, so the result is an independent
    computation of :func:`contraction_family`'s table.
    """
    g = sp.algebra
    if not isinstance(g, MatrixLieAlgebra):
        raise FamilyError('Block family needs a matrix realization of the algebra.')
    z = Polynomial.z()
    mats = []
    for a in range(sp.dim_k):
        x = g.matrix_of(sp.k[:, a])
        zero = linalg.zeros(*x.shape)
        mats.append(linalg.block_matrix([[x, zero], [zero, x]]))
    for b in range(sp.dim_p):
        x = g.matrix_of(sp.p[:, b])
        zero = linalg.zeros(*x.shape)
        zx = np.empty(x.shape, dtype=object)
        for idx, c in np.ndenumerate(x):
            zx[idx] = z * c
        mats.append(linalg.block_matrix([[zero, x], [zx, zero]]))
    return family_from_matrices(sp.k_names() + sp.p_names(), mats, COEFFICIENT_CONJUGATION, name)


class IotaReport(NamedTuple):
    """Identities of iota(X) = 1/2 [[X + tX, X - tX], [X - tX, X + tX]] (t = theta~)."""
    embedding: bool
    conjugation: bool
    theta: bool
    sigma_star: bool

    @property
    def passed(self) -> bool:
        return self.embedding and self.conjugation and self.theta and self.sigma_star


def iota_check(sp: SymmetricPair) -> IotaReport:
    """Checks iota against g's table and its compatibility with sigma, theta~, sigma*.

    Tested on e_j and (1+i) e_j: iota(sigma X) = conj iota(X),
    iota(theta X) = J iota(X) J and iota(sigma* X) = J conj(iota(X)) J with
    J = diag(1, -1) in n x n blocks.
    """
    g = sp.algebra
    if not isinstance(g, MatrixLieAlgebra):
        raise FamilyError('iota needs a matrix realization of the algebra.')
    theta = sp.involution.matrix
    half = gq(1) / 2

    def iota(x):
        m = g.matrix_of(x)
        t = g.matrix_of(linalg.matmul(theta, linalg.as_vector(x)))
        plus = linalg.scale(m + t, half)
        minus = linalg.scale(m - t, half)
        return linalg.block_matrix([[plus, minus], [minus, plus]])

    size = g.matrices[0].shape[0]
    j = linalg.identity(2 * size)
    for i in range(size, 2 * size):
        j[i, i] = -ONE
    images = [iota(linalg.unit_vector(g.dim, a)) for a in range(g.dim)]
    try:
        embedding = structurally_equal(algebra_from_matrices(g.basis, images, Field.COMPLEX), g)
    except ValueError:
        embedding = False
    conjugation = theta_ok = sigma_star_ok = True
    for a in range(g.dim):
        for c in (gq(1), ONE + I):
            x = linalg.scale(linalg.unit_vector(g.dim, a), c)
            ix = iota(x)
            conj_ix = linalg.conj_matrix(ix)
            conjugation &= linalg.equal(iota(linalg.conj_matrix(x)), conj_ix)
            theta_ok &= linalg.equal(iota(linalg.matmul(theta, x)), linalg.matmul(linalg.matmul(j, ix), j))
            star = linalg.matmul(theta, linalg.conj_matrix(x))
            sigma_star_ok &= linalg.equal(iota(star), linalg.matmul(linalg.matmul(j, conj_ix), j))
    return IotaReport(embedding, conjugation, theta_ok, sigma_star_ok)


class FiberCertificate(NamedTuple):
    """Explicit isomorphism from a fiber onto one side of the trichotomy.

    target is 'g', 'dual' or 'contraction'; status is 'verified', 'failed' or
    'absent' (alpha is not plus or minus a rational square).
    """
    alpha: GaussianRational
    target: Optional[str]
    beta: Optional[GaussianRational]
    matrix: Optional[np.ndarray]
    status: str

    @property
    def verified(self) -> bool:
        return self.status == 'verified'


def certificate_target(fam: ContractionFamily, alpha: Any) -> Tuple[str, LieAlgebra]:
    """Side of the trichotomy for a real alpha, with its algebra in the adapted basis."""
    sp = fam.pair
    alpha = gq(alpha)
    if not alpha.is_real:
        raise FamilyError('The trichotomy is stated for real parameters only.')
    if alpha.re > 0:
        return 'g', transport_bracket(sp.algebra, sp.adapted_basis, basis=fam.basis)
    if alpha.re < 0:
        return 'dual', dual_form(sp)[0]
    return 'contraction', iw_contract(sp.decomposition())


def fiber_isomorphism_certificate(fam: ContractionFamily, alpha: Any) -> FiberCertificate:
    """Isomorphism from fiber(alpha) onto g, g* or the contraction.

    For alpha = +-beta^2 the map scales the p-block by beta; for alpha = 0 it
    is the identity. The map m is verified by checking that transporting the
    target's table by m gives the fiber's table exactly.
    """
    alpha = gq(alpha)
    target_name, target = certificate_target(fam, alpha)
    nk = fam.pair.dim_k
    if alpha.re == 0:
        beta = None
        m = linalg.identity(fam.rank)
    else:
        root = rational_sqrt(abs(alpha.re))
        if root is None:
            log.warning('No certificate at alpha = {}: not a rational square up to sign.'.format(
                format_scalar(alpha)))
            return FiberCertificate(alpha, target_name, None, None, 'absent')
        beta = gq(root)
        m = linalg.identity(fam.rank)
        for b in range(nk, fam.rank):
            m[b, b] = beta
    verified = structurally_equal(transport_bracket(target, m), fiber(fam, alpha))
    status = 'verified' if verified else 'failed'
    log.debug('Certificate at alpha = {} onto {}: {}.'.format(format_scalar(alpha), target_name, status))
    return FiberCertificate(alpha, target_name, beta, m, status)


def matrix_realization_check(sp: SymmetricPair, alpha: Any) -> bool:
    """Compares the block-matrix fiber [[X+, X-], [alpha X-, X+]] with the abstract fiber.
    """
    g = sp.algebra
    if not isinstance(g, MatrixLieAlgebra):
        raise FamilyError('Matrix check needs a matrix realization of the algebra.')
    alpha = gq(alpha)
    mats = []
    for a in range(sp.dim_k):
        x = g.matrix_of(sp.k[:, a])
        zero = linalg.zeros(*x.shape)
        mats.append(linalg.block_matrix([[x, zero], [zero, x]]))
    for b in range(sp.dim_p):
        x = g.matrix_of(sp.p[:, b])
        zero = linalg.zeros(*x.shape)
        mats.append(linalg.block_matrix([[zero, x], [linalg.scale(x, alpha), zero]]))
    realized = algebra_from_matrices(sp.k_names() + sp.p_names(), mats, Field.REAL)
    return structurally_equal(realized, fiber(contraction_family(sp), alpha))
