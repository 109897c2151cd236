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


import json
import logging

import pytest

from lie_contractions import cli, serialization, utils
from lie_contractions.lie_core import fingerprint, structurally_equal, validate
from lie_contractions.scalars import format_scalar
from lie_contractions.so_catalog import build_so, iso


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    root = logging.getLogger()
    for handler in root.handlers[:]:
        handler.close()
        root.removeHandler(handler)


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def algebra_out(text):
    return serialization.algebra_from_json(json.loads(text))


def test_validate_catalog_algebra(capsys):
    code, out = run(capsys, 'validate', '--catalog', 'so:3,0')
    assert code == cli.EXIT_PASS
    assert out == 'pass\n'


def test_validate_failing_document(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'dim': 3, 'field': 'real', 'basis': ['e1', 'e2', 'e3'],
                                'sc': [{'i': 1, 'j': 2, 'k': 1, 'c': '1'},
                                       {'i': 1, 'j': 3, 'k': 3, 'c': '1'}]}))
    code, out = run(capsys, 'validate', '--input', str(path), '--json')
    assert code == cli.EXIT_FAIL
    report = json.loads(out)
    assert report['passed'] is False
    assert report['kind'] == 'jacobi'
    assert all(i >= 1 for i in report['indices'])


def test_validate_family_document(capsys, tmp_path):
    code, out = run(capsys, 'family', '--catalog', 'theta:2,1,0')
    assert code == cli.EXIT_PASS
    path = tmp_path / 'family.json'
    path.write_text(out)
    code, out = run(capsys, 'validate', '--input', str(path))
    assert code == cli.EXIT_PASS
    assert out == 'pass\n'


def test_contract_symmetric_pair(capsys):
    code, out = run(capsys, 'contract', '--catalog', 'theta:2,1,0')
    assert code == cli.EXIT_PASS
    h = algebra_out(out)
    assert validate(h).passed
    assert fingerprint(h) == fingerprint(iso(2))


@pytest.mark.parametrize('k', ['1', 'L12'])
def test_contract_with_explicit_subalgebra(capsys, k):
    code, out = run(capsys, 'contract', '--catalog', 'so:3,0', '--k', k)
    assert code == cli.EXIT_PASS
    assert fingerprint(algebra_out(out)) == fingerprint(iso(2))


def test_contract_needs_subalgebra_for_plain_algebra(capsys):
    code, _ = run(capsys, 'contract', '--catalog', 'so:3,0')
    assert code == cli.EXIT_USAGE
    code, _ = run(capsys, 'contract', '--catalog', 'so:3,0', '--k', 'L99')
    assert code == cli.EXIT_USAGE


def test_gcontract_failure_report(capsys):
    code, out = run(capsys, 'gcontract', '--catalog', 'so:3,0', '--exponents', '1,0,0', '--json')
    assert code == cli.EXIT_FAIL
    doc = json.loads(out)
    assert doc['passed'] is False
    assert doc['failures'] == [{'i': 2, 'j': 3, 'k': 1, 'exponent': -1}]
    code, out = run(capsys, 'gcontract', '--catalog', 'so:3,0', '--exponents', '1,0,0')
    assert code == cli.EXIT_FAIL
    assert '(2,3,1):-1' in out


def test_gcontract_success(capsys):
    code, out = run(capsys, 'gcontract', '--catalog', 'so:3,0', '--exponents', '0,1,1')
    assert code == cli.EXIT_PASS
    assert fingerprint(algebra_out(out)) == fingerprint(iso(2))
    code, _ = run(capsys, 'gcontract', '--catalog', 'so:3,0', '--exponents', '0,a,1')
    assert code == cli.EXIT_USAGE


def test_dualize(capsys):
    code, out = run(capsys, 'dualize', '--catalog', 'theta:2,1,0')
    assert code == cli.EXIT_PASS
    assert fingerprint(algebra_out(out)) == fingerprint(build_so(2, 1))


def test_family_to_file_and_fibers(capsys, tmp_path):
    path = tmp_path / 'family.json'
    code, out = run(capsys, 'family', '--catalog', 'theta:2,1,0', '--out', str(path))
    assert code == cli.EXIT_PASS
    assert out == ''
    assert json.loads(path.read_text())['format'] == 'family/v1'

    code, out = run(capsys, 'fiber', '--input', str(path), '--alphas=-1,0,1')
    assert code == cli.EXIT_PASS
    docs = json.loads(out)
    assert len(docs) == 3
    fps = [fingerprint(serialization.algebra_from_json(d)) for d in docs]
    assert fps == [fingerprint(build_so(2, 1)), fingerprint(iso(2)), fingerprint(build_so(3, 0))]

    code, out = run(capsys, 'fiber', '--input', str(path), '--alphas', '4')
    assert code == cli.EXIT_PASS
    assert json.loads(out)['format'] == 'lie-algebra/v1'


def test_fiber_needs_parameters(capsys):
    code, _ = run(capsys, 'fiber', '--catalog', 'theta:2,1,0')
    assert code == cli.EXIT_USAGE
    code, _ = run(capsys, 'fiber', '--catalog', 'so:3,0', '--alphas', '1')
    assert code == cli.EXIT_USAGE


def test_fingerprint(capsys):
    code, out = run(capsys, 'fingerprint', '--catalog', 'heisenberg:3')
    assert code == cli.EXIT_PASS
    doc = json.loads(out)
    assert doc['algebra'] == 'heisenberg(3)'
    assert doc['center_dim'] == 1
    assert doc['derived_dims'] == [3, 1, 0]
    assert doc['killing_signature'] == [0, 0]


def test_verify_single_case(capsys):
    code, out = run(capsys, 'verify', '2', '1', '0', '--json')
    assert code == cli.EXIT_PASS
    doc = json.loads(out)
    assert doc['format'] == 'verify-report/v1'
    assert doc['params'] == '2,1,0'
    assert doc['passed'] is True
    assert [r['alpha'] for r in doc['records']] == ['-4', '-1', '-1/2', '-1/4', '0', '1/4', '1/2', '1', '4']
    assert [r['expected'] for r in doc['records']][:5] == ['so(2,1)'] * 4 + ['contracted(2,1,0)']
    assert [r['certificate'] for r in doc['records']].count('verified') == 7
    serialization.validate_document(doc, 'verify-report/v1')


def test_configured_alphas_add_beta_squares():
    config = utils.load_config()
    alphas = [format_scalar(a) for a in cli.configured_alphas(config)]
    assert alphas == ['-4', '-1', '-1/2', '-1/4', '0', '1/4', '1/2', '1', '4']
    config['verify']['betas'] = ['3']
    assert '9' in [format_scalar(a) for a in cli.configured_alphas(config)]
    for bad in ('0', 'i'):
        config['verify']['betas'] = [bad]
        with pytest.raises(cli.UsageError):
            cli.configured_alphas(config)


def test_verify_text_and_absent_certificate(capsys):
    code, out = run(capsys, 'verify', '1', '1', '1', '--alphas=2,-3,1/3')
    assert code == cli.EXIT_PASS
    assert out.startswith('verify 1,1,1: PASS')
    assert out.count('absent (non-square)') == 3


def test_verify_default_cases(capsys):
    code, out = run(capsys, 'verify', '--alphas=-1,0,1')
    assert code == cli.EXIT_PASS
    assert out.count('PASS\n') >= 5
    assert len([line for line in out.splitlines() if line.startswith('verify ')]) == 5


@pytest.mark.parametrize('argv', [
    ['verify', '1', '2'],
    ['verify', '0', '1', '0'],
    ['validate'],
    ['validate', '--catalog', 'sl:2'],
    ['nonsense'],
])
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == cli.EXIT_USAGE


def test_missing_and_malformed_input(capsys, tmp_path):
    assert cli.main(['validate', '--input', str(tmp_path / 'missing.json')]) == cli.EXIT_USAGE
    path = tmp_path / 'broken.json'
    path.write_text('{"dim": 3,')
    assert cli.main(['validate', '--input', str(path)]) == cli.EXIT_USAGE


def test_bad_config(capsys, tmp_path):
    path = tmp_path / 'config.json'
    path.write_text(json.dumps({'info': {}}))
    assert cli.main(['--config', str(path), 'validate', '--catalog', 'so:3,0']) == cli.EXIT_USAGE
    assert 'bad configuration' in capsys.readouterr().err


def test_validate_reports_antisymmetry_defect(capsys, tmp_path):
    path = tmp_path / 'corrupted.json'
    path.write_text(json.dumps({'format': 'lie-algebra/v1', 'dim': 3, 'field': 'real', 'basis': ['a', 'b', 'c'],
                                'sc': [{'i': 1, 'j': 2, 'k': 3, 'c': '1'},
                                       {'i': 2, 'j': 1, 'k': 3, 'c': '1'}]}))
    code, out = run(capsys, 'validate', '--input', str(path))
    assert code == cli.EXIT_FAIL
    assert out.startswith('antisymmetry violation at (1,2,3)')


def test_fiber_at_zero_is_the_contraction(capsys, tmp_path):
    path = tmp_path / 'family.json'
    run(capsys, 'family', '--catalog', 'theta:2,1,1', '--out', str(path))
    code, out = run(capsys, 'fiber', '--input', str(path), '--alphas', '0')
    assert code == cli.EXIT_PASS
    code, contracted_out = run(capsys, 'contract', '--catalog', 'theta:2,1,1')
    assert structurally_equal(algebra_out(out), algebra_out(contracted_out))


def test_output_is_deterministic(capsys):
    first = run(capsys, 'dualize', '--catalog', 'theta:2,1,1')
    second = run(capsys, 'dualize', '--catalog', 'theta:2,1,1')
    assert first == second


def test_zero_denominator_is_a_schema_error(capsys, tmp_path):
    path = tmp_path / 'zero.json'
    path.write_text(json.dumps({'dim': 2, 'field': 'real', 'basis': ['a', 'b'],
                                'sc': [{'i': 1, 'j': 2, 'k': 2, 'c': '1/0'}]}))
    assert cli.main(['validate', '--input', str(path)]) == cli.EXIT_USAGE
    assert '/sc/0/c' in capsys.readouterr().err
