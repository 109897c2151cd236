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

"""Command-line front end.

Subcommands read JSON documents (or catalog names) and write JSON to stdout
or ``--out``. Exit codes: 0 pass, 1 verification failure, 2 usage or schema
error. Logging goes to stderr.

Negative parameter lists must be attached to their flag, as in
``--alphas=-1,0,1``.
"""

import argparse
import logging
import sys
from collections import OrderedDict
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

from lie_contractions import serialization, utils
from lie_contractions.contraction import Decomposition, LimitError, generalized_iw_contract, iw_contract
from lie_contractions.family import (AlgebraicFamily, check_family, contraction_family, fiber,
                                     fiber_isomorphism_certificate)
from lie_contractions.lie_core import Fingerprint, LieAlgebra, fingerprint, validate
from lie_contractions.scalars import GaussianRational, format_scalar, gq, parse_scalar
from lie_contractions.so_catalog import SOParams, build_so, contracted, from_name, symmetric_pair
from lie_contractions.symmetric import SymmetricPair, dual_form, split

log = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Bad command-line arguments or unusable input."""


class VerifyRecord(NamedTuple):
    alpha: GaussianRational
    fingerprint: Fingerprint
    expected: str
    fingerprint_equal: bool
    certificate: str
    passed: bool


class VerifyReport(NamedTuple):
    """Fiber-by-fiber comparison of a contraction family with its trichotomy.

    A record passes when its fingerprint matches the expected algebra and no
    certificate failed; certificates are absent when alpha is not plus or
    minus a rational square.
    """
    params: SOParams
    records: Tuple[VerifyRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> Dict[str, Any]:
        return OrderedDict([
            ('format', 'verify-report/v1'),
            ('params', str(self.params)),
            ('passed', self.passed),
            ('records', [OrderedDict([
                ('alpha', format_scalar(r.alpha)),
                ('expected', r.expected),
                ('fingerprint', serialization.fingerprint_to_json(r.fingerprint)),
                ('fingerprint_equal', r.fingerprint_equal),
                ('certificate', r.certificate),
                ('passed', r.passed)]) for r in self.records]),
        ])

    def to_text(self) -> str:
        lines = ['verify {}: {}'.format(self.params, 'PASS' if self.passed else 'FAIL')]
        for r in self.records:
            lines.append('  alpha={:<6} expected={:<20} fingerprint-equal={:<3} certificate={:<19} {}'.format(
                format_scalar(r.alpha), r.expected, 'yes' if r.fingerprint_equal else 'no',
                r.certificate, 'PASS' if r.passed else 'FAIL'))
        return '\n'.join(lines)


def cmd_verify(params: SOParams, alphas: Sequence[Any]) -> VerifyReport:
    """Checks every fiber of the contraction family of (so(p+d,q), theta_{p,d,q}).

    alpha > 0 is compared with so(p+d,q), alpha < 0 with so(p,d+q) and alpha = 0
    with (so(p,q) + so(d)) x| (M_{p x d} + M_{d x q}), each by fingerprint and,
    where alpha = +-beta^2 or 0, by a verified isomorphism.
    """
    params = SOParams(*params).check()
    p, d, q = params
    sp = symmetric_pair(params)
    fam = contraction_family(sp)
    expected = {
        1: ('so({},{})'.format(p + d, q), fingerprint(sp.algebra)),
        -1: ('so({},{})'.format(p, d + q), fingerprint(build_so(p, d + q))),
        0: ('contracted({})'.format(params), fingerprint(contracted(params))),
    }
    records = []
    for alpha in alphas:
        alpha = gq(alpha)
        if not alpha.is_real:
            raise UsageError('verify takes real parameters, got {}.'.format(format_scalar(alpha)))
        side = (alpha.re > 0) - (alpha.re < 0)
        name, expected_fp = expected[side]
        fp = fingerprint(fiber(fam, alpha))
        cert = fiber_isomorphism_certificate(fam, alpha)
        status = 'absent (non-square)' if cert.status == 'absent' else cert.status
        equal = fp == expected_fp
        records.append(VerifyRecord(alpha, fp, name, equal, status, equal and cert.status != 'failed'))
    report = VerifyReport(params, tuple(records))
    log.info('Verification of ({}) {}.'.format(params, 'passed' if report.passed else 'failed'))
    return report


def parse_alphas(text: str) -> List[GaussianRational]:
    try:
        return [parse_scalar(s) for s in text.split(',') if s.strip()]
    except ValueError as e:
        raise UsageError(str(e))


def configured_alphas(config: Dict[str, Any]) -> List[GaussianRational]:
    """verify.alphas together with +-beta^2 for every beta in verify.betas, sorted.

    Each beta contributes alpha = beta^2 and alpha = -beta^2.
    """
    alphas = {parse_scalar(a) for a in config['verify']['alphas']}
    for text in config['verify'].get('betas', []):
        beta = parse_scalar(text)
        if not beta.is_real or not beta:
            raise UsageError('verify.betas must be nonzero rationals, got {}.'.format(text))
        alphas.update((beta * beta, -(beta * beta)))
    return sorted(alphas, key=lambda a: a.re)


def _load(args: argparse.Namespace) -> Any:
    """Object named by --input (a JSON document) or --catalog (a catalog name)."""
    if getattr(args, 'catalog', None):
        return from_name(args.catalog)
    if not getattr(args, 'input', None):
        raise UsageError('Give --input FILE or --catalog NAME.')
    doc = serialization.read_json(args.input)
    fmt = doc.get('format') if isinstance(doc, dict) else None
    if fmt == 'involution/v1' or (fmt is None and isinstance(doc, dict) and 'matrix' in doc):
        return split(serialization.involution_from_json(doc))
    if fmt == 'family/v1' or (fmt is None and isinstance(doc, dict) and 'rank' in doc):
        return serialization.family_from_json(doc)
    return serialization.algebra_from_json(doc)


def _algebra(obj: Any) -> LieAlgebra:
    if isinstance(obj, SymmetricPair):
        return obj.algebra
    if isinstance(obj, LieAlgebra):
        return obj
    raise UsageError('Expected a Lie algebra input.')


def _pair(obj: Any) -> SymmetricPair:
    if isinstance(obj, SymmetricPair):
        return obj
    raise UsageError('Expected an involution/v1 input or a theta:p,d,q catalog name.')


def _indices(g: LieAlgebra, text: str) -> List[int]:
    """1-based indices or basis names, comma separated."""
    out = []
    for token in (s.strip() for s in text.split(',')):
        if not token:
            continue
        if token.isdigit():
            idx = int(token) - 1
        elif token in g.basis:
            idx = g.basis.index(token)
        else:
            raise UsageError('Unknown basis vector {!r}.'.format(token))
        if not 0 <= idx < g.dim:
            raise UsageError('Index {} out of range for dim {}.'.format(token, g.dim))
        out.append(idx)
    return out


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, 'out', None):
        with open(args.out, 'w') as f:
            f.write(text)
        log.info('Output written to {}.'.format(args.out))
    else:
        sys.stdout.write(text)


def cmd_validate(args: argparse.Namespace) -> int:
    """Antisymmetry and Jacobi of an algebra or family; exit 1 reports the first violation."""
    obj = _load(args)
    if isinstance(obj, AlgebraicFamily):
        report = check_family(obj)
        residue = str(report.residue) if report.residue is not None else None
    else:
        report = validate(_algebra(obj))
        residue = format_scalar(report.residue) if report.residue is not None else None
    if args.json:
        doc = OrderedDict([('passed', report.passed), ('kind', report.kind),
                           ('indices', [i + 1 for i in report.indices]), ('residue', residue)])
        _emit(args, serialization.dumps(doc))
    else:
        _emit(args, report.describe() + '\n')
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_contract(args: argparse.Namespace) -> int:
    obj = _load(args)
    if args.k is None:
        d = _pair(obj).decomposition()
    else:
        g = _algebra(obj)
        k = _indices(g, args.k)
        p = _indices(g, args.p) if args.p else None
        d = Decomposition.from_indices(g, k, p)
    _emit(args, serialization.dumps(serialization.algebra_to_json(iw_contract(d))))
    return EXIT_PASS


def cmd_gcontract(args: argparse.Namespace) -> int:
    g = _algebra(_load(args))
    try:
        exponents = [int(s) for s in args.exponents.split(',')]
    except ValueError:
        raise UsageError('--exponents takes a comma-separated list of integers.')
    try:
        h = generalized_iw_contract(g, exponents)
    except LimitError as e:
        if args.json:
            doc = OrderedDict([('passed', False), ('failures', [
                OrderedDict([('i', i + 1), ('j', j + 1), ('k', k + 1), ('exponent', n)])
                for i, j, k, n in e.failures])])
            _emit(args, serialization.dumps(doc))
        else:
            _emit(args, str(e) + '\n')
        return EXIT_FAIL
    _emit(args, serialization.dumps(serialization.algebra_to_json(h)))
    return EXIT_PASS


def cmd_dualize(args: argparse.Namespace) -> int:
    dual, _ = dual_form(_pair(_load(args)))
    _emit(args, serialization.dumps(serialization.algebra_to_json(dual)))
    return EXIT_PASS


def cmd_family(args: argparse.Namespace) -> int:
    fam = contraction_family(_pair(_load(args)))
    _emit(args, serialization.dumps(serialization.family_to_json(fam)))
    return EXIT_PASS


def cmd_fiber(args: argparse.Namespace) -> int:
    """Fibers of a family document, or of the contraction family of a symmetric pair."""
    fam = _load(args)
    if not isinstance(fam, AlgebraicFamily):
        if isinstance(fam, SymmetricPair):
            fam = contraction_family(fam)
        else:
            raise UsageError('fiber expects a family/v1 input.')
    if not args.alphas:
        raise UsageError('fiber needs --alphas.')
    docs = [serialization.algebra_to_json(fiber(fam, a)) for a in parse_alphas(args.alphas)]
    _emit(args, serialization.dumps(docs[0] if len(docs) == 1 else docs))
    return EXIT_PASS


def cmd_fingerprint(args: argparse.Namespace) -> int:
    g = _algebra(_load(args))
    fp = fingerprint(g)
    _emit(args, serialization.dumps(serialization.fingerprint_to_json(fp, g.name)))
    return EXIT_PASS


def run_verify(args: argparse.Namespace) -> int:
    config = args.config_data
    if args.params:
        if len(args.params) != 3:
            raise UsageError('verify takes three integers p d q.')
        cases = [SOParams(*args.params)]
    else:
        cases = [SOParams(*c) for c in config['verify']['cases']]
    alphas = parse_alphas(args.alphas) if args.alphas else configured_alphas(config)
    reports = [cmd_verify(c, alphas) for c in cases]
    if args.json:
        docs = [r.to_json() for r in reports]
        _emit(args, serialization.dumps(docs[0] if len(docs) == 1 else docs))
    else:
        _emit(args, '\n'.join(r.to_text() for r in reports) + '\n')
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _add_io(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--input', help='JSON document to read.')
    parser.add_argument('--catalog', help='Catalog name such as so:3,0 or theta:2,1,0.')
    parser.add_argument('--out', help='Write output here instead of stdout.')
    parser.add_argument('--json', action='store_true', help='Machine-readable report.')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='lie-contractions',
        description='Contractions, dual real forms and contraction families of Lie algebras.')
    parser.add_argument('--config', help='Configuration JSON file (default: packaged verify.json).')
    parser.add_argument('-v', '--verbose', action='store_true', help='Debug logging.')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('validate', help='Check antisymmetry and Jacobi of an algebra or family.')
    _add_io(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser('contract', help='Simple Inonu-Wigner contraction.')
    _add_io(p)
    p.add_argument('--k', help='Subalgebra basis: 1-based indices or names.')
    p.add_argument('--p', help='Complement basis (default: remaining basis vectors).')
    p.set_defaults(handler=cmd_contract)

    p = sub.add_parser('gcontract', help='Generalized Inonu-Wigner contraction.')
    _add_io(p)
    p.add_argument('--exponents', required=True, help='One integer per basis vector.')
    p.set_defaults(handler=cmd_gcontract)

    p = sub.add_parser('dualize', help='Dual symmetric Lie algebra.')
    _add_io(p)
    p.set_defaults(handler=cmd_dualize)

    p = sub.add_parser('family', help='Contraction family of a symmetric pair.')
    _add_io(p)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser('fiber', help='Fibers of a family.')
    _add_io(p)
    p.add_argument('--alphas', help='Comma-separated parameters, e.g. --alphas=-1,0,1.')
    p.set_defaults(handler=cmd_fiber)

    p = sub.add_parser('fingerprint', help='Isomorphism invariants.')
    _add_io(p)
    p.set_defaults(handler=cmd_fingerprint)

    p = sub.add_parser('verify', help='Check the fibers of the so(p+d,q) contraction family.')
    p.add_argument('params', nargs='*', type=int, help='p d q (default: configured cases).')
    p.add_argument('--alphas', help='Comma-separated parameters (default: configured).')
    p.add_argument('--out', help='Write output here instead of stdout.')
    p.add_argument('--json', action='store_true', help='Machine-readable report.')
    p.set_defaults(handler=run_verify)
    return parser


def main(argv: Optional[Sequence[str]]=None) -> int:
    """Entry point of the ``lie-contractions`` console script.

    Returns:
        int: exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        config = utils.load_config(args.config)
    except (OSError, ValueError) as e:
        sys.stderr.write('lie-contractions: bad configuration: {}\n'.format(e))
        return EXIT_USAGE
    utils.setup_logging(config, logging.DEBUG if args.verbose else None)
    args.config_data = config
    try:
        return args.handler(args)
    except (ValueError, OSError) as e:
        log.error(str(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
