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


"""End-to-end checks over the whole so(p+d,q) catalog with p + d + q <= 5."""

import itertools
from fractions import Fraction

import pytest

from lie_contractions import linalg, utils
from lie_contractions.contraction import (Decomposition, LimitError, canonical_complement,
                                          check_equivalence_witness, complement_change, complements_agree,
                                          epsilon_sweep, generalized_iw_contract, iw_contract,
                                          limit_exponents, semidirect_quotient)
from lie_contractions.family import (contraction_family, fiber, fiber_isomorphism_certificate,
                                     matrix_realization_check)
from lie_contractions.lie_core import (fingerprint, killing_form, killing_signature, structurally_equal,
                                       transport_bracket, validate)
from lie_contractions.scalars import parse_scalar
from lie_contractions.so_catalog import (build_so, catalog_params, dual_iso_via_Jhalf, iso,
                                         so_plus_abelian, symmetric_pair)
from lie_contractions.symmetric import double_dual_check, dual_form, duality_checks

CATALOG = list(catalog_params(5))
CASES = [(2, 1, 0), (1, 1, 1), (2, 1, 1), (2, 2, 0), (3, 1, 1)]
ALPHAS = [-4, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 4]
BETAS = [parse_scalar(b) for b in utils.load_config()['verify']['betas']]
EPSILONS = [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]


def catalog_id(params):
    return 'theta{}'.format(params)


@pytest.fixture(scope='module', params=CATALOG, ids=catalog_id)
def catalog_pair(request):
    return request.param, symmetric_pair(request.param)


def test_axioms_hold_everywhere(catalog_pair):
    params, sp = catalog_pair
    assert validate(sp.algebra).passed
    assert validate(build_so(params.p, params.q + params.d)).passed
    assert validate(iw_contract(sp.decomposition())).passed
    assert validate(dual_form(sp)[0]).passed
    fam = contraction_family(sp)
    for alpha in ALPHAS:
        report = validate(fiber(fam, alpha))
        assert report.passed, report.describe()


@pytest.mark.parametrize('params', CASES, ids=catalog_id)
def test_fiber_trichotomy(params):
    sp = symmetric_pair(params)
    fam = contraction_family(sp)
    assert structurally_equal(fiber(fam, 0), iw_contract(sp.decomposition()))
    zero = fiber_isomorphism_certificate(fam, 0)
    assert zero.target == 'contraction' and zero.verified
    for beta in BETAS:
        square = beta * beta
        positive = fiber_isomorphism_certificate(fam, square)
        assert positive.target == 'g' and positive.verified
        negative = fiber_isomorphism_certificate(fam, -square)
        assert negative.target == 'dual' and negative.verified

    p, d, q = params
    expected = {1: fingerprint(sp.algebra), -1: fingerprint(build_so(p, d + q))}
    for alpha in (2, 3, -2, Fraction(-2, 3)):
        cert = fiber_isomorphism_certificate(fam, alpha)
        assert cert.status == 'absent'
        side = 1 if alpha > 0 else -1
        assert fingerprint(fiber(fam, alpha)) == expected[side]


def test_duality_identities(catalog_pair):
    _, sp = catalog_pair
    report = duality_checks(sp)
    assert report.passed, report
    assert double_dual_check(sp)
    _, pair = dual_form(sp)
    assert (pair.dim_k, pair.dim_p) == (sp.dim_k, sp.dim_p)


def test_dual_is_certified_isomorphic(catalog_pair):
    params, _ = catalog_pair
    cert = dual_iso_via_Jhalf(params)
    assert cert.real
    assert cert.passed


def test_so4_contractions_from_scratch(so4, so4_diagonal, so4_ideals):
    k, p = so4_diagonal
    diagonal = fingerprint(iw_contract(Decomposition(so4, k, p)))
    assert diagonal == fingerprint(iso(3))
    assert diagonal != fingerprint(so_plus_abelian(3))
    k1, k2 = so4_ideals
    ideal = fingerprint(iw_contract(Decomposition(so4, k1, k2)))
    assert ideal == fingerprint(so_plus_abelian(3))
    assert ideal != fingerprint(iso(3))


@pytest.mark.parametrize('params', [p for p in CATALOG if p.k_dim() and p.p_dim()], ids=catalog_id)
def test_contraction_is_independent_of_complement(params):
    sp = symmetric_pair(params)
    g = sp.algebra
    shift = sp.k[:, 0]
    p_to = linalg.columns([sp.p[:, b] + linalg.scale(shift, b + 1) for b in range(sp.dim_p)], g.dim)
    assert complements_agree(g, sp.k, sp.p, p_to)
    quotient = semidirect_quotient(g, sp.k)
    canonical = canonical_complement(g, sp.k)
    for p in (sp.p, p_to):
        h = iw_contract(Decomposition(g, sp.k, p))
        m = complement_change(g, sp.k, canonical, p)
        assert structurally_equal(transport_bracket(h, m), quotient)


def exponent_assignments(sp):
    nk, n = sp.dim_k, sp.algebra.dim
    yield [0] * nk + [1] * (n - nk)
    yield [1] * nk + [0] * (n - nk)
    yield [0] * nk + [2] * (n - nk)
    yield list(range(n))


@pytest.mark.parametrize('params', [p for p in CATALOG if p.size <= 4], ids=catalog_id)
def test_epsilon_power_law(params):
    sp = symmetric_pair(params)
    adapted = transport_bracket(sp.algebra, sp.adapted_basis)
    for exponents in exponent_assignments(sp):
        assert all(r.matches for r in epsilon_sweep(adapted, exponents, EPSILONS))
        negative = any(e < 0 for e in limit_exponents(adapted, exponents).values())
        try:
            generalized_iw_contract(adapted, exponents)
            exists = True
        except LimitError:
            exists = False
        assert exists is not negative
    simple = generalized_iw_contract(adapted, [0] * sp.dim_k + [1] * sp.dim_p)
    assert structurally_equal(simple, iw_contract(sp.decomposition()))


def test_epsilon_power_law_all_small_exponents(so3):
    for exponents in itertools.product(range(3), repeat=3):
        assert all(r.matches for r in epsilon_sweep(so3, exponents, EPSILONS))


def test_matrix_realization(catalog_pair):
    _, sp = catalog_pair
    for alpha in (-1, 0, 1, 4):
        assert matrix_realization_check(sp, alpha)


@pytest.mark.parametrize('p, q', [(p, n - p) for n in range(3, 6) for p in range(n + 1)])
def test_killing_signature_by_congruence(p, q):
    g = build_so(p, q)
    expected = (p * q, p * (p - 1) // 2 + q * (q - 1) // 2)
    assert linalg.congruence_signature(killing_form(g)) == expected
    assert killing_signature(g) == expected
    assert fingerprint(g).killing_signature == expected


@pytest.mark.parametrize('params', [p for p in CATALOG if p.k_dim() and p.size <= 4], ids=catalog_id)
def test_identity_witness(params):
    sp = symmetric_pair(params)
    g = sp.algebra
    report = check_equivalence_witness(g, sp.k, sp.k, linalg.identity(g.dim))
    assert report.passed
    quotient = semidirect_quotient(g, sp.k)
    induced = transport_bracket(quotient, report.nu_tilde)
    assert validate(induced).passed
    assert structurally_equal(induced, quotient)
