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

import pytest

from lie_contractions import linalg, serialization
from lie_contractions.family import AlgebraicFamily, RealFamily, contraction_family, example_family
from lie_contractions.lie_core import fingerprint, validate
from lie_contractions.serialization import SchemaError
from lie_contractions.so_catalog import symmetric_pair
from lie_contractions.symmetric import split


def _algebra_doc(sc, dim=3):
    return {'format': 'lie-algebra/v1', 'dim': dim, 'field': 'real',
            'basis': ['e{}'.format(i + 1) for i in range(dim)],
            'sc': [{'i': i, 'j': j, 'k': k, 'c': c} for i, j, k, c in sc]}


def test_algebra_document(so3):
    doc = serialization.algebra_to_json(so3)
    assert doc['format'] == 'lie-algebra/v1'
    assert doc['sc'] == [{'i': 1, 'j': 2, 'k': 3, 'c': '1'},
                         {'i': 1, 'j': 3, 'k': 2, 'c': '-1'},
                         {'i': 2, 'j': 3, 'k': 1, 'c': '1'}]
    text = serialization.dumps(doc)
    assert text.endswith('\n')
    assert serialization.algebra_from_json(serialization.loads(text)) == so3


def test_reader_keeps_raw_entries():
    doc = _algebra_doc([(2, 1, 3, '1'), (1, 2, 3, '1')])
    g = serialization.algebra_from_json(doc)
    report = validate(g)
    assert report.kind == 'antisymmetry'
    assert report.indices == (0, 1, 2)


def test_reader_accepts_any_index_order():
    doc = _algebra_doc([(2, 1, 3, '-1')])
    g = serialization.algebra_from_json(doc)
    assert g.constants() == {(0, 1, 2): 1}


def test_reader_rejects_duplicates():
    with pytest.raises(SchemaError) as info:
        serialization.algebra_from_json(_algebra_doc([(1, 2, 3, '1'), (1, 2, 3, '2')]))
    assert info.value.path == '/sc/1'


@pytest.mark.parametrize('sc, path', [
    ([(1, 2, 4, '1')], '/sc/0'),
    ([(1, 2, 3, 'x')], '/sc/0/c'),
    ([(1, 2, 3, '')], '/sc/0/c'),
    ([(1, 2, 3, '1/0')], '/sc/0/c'),
    ([(0, 2, 3, '1')], '/sc/0/i'),
])
def test_reader_reports_paths(sc, path):
    with pytest.raises(SchemaError) as info:
        serialization.algebra_from_json(_algebra_doc(sc))
    assert info.value.path == path


def test_reader_checks_required_fields_and_format():
    doc = _algebra_doc([])
    del doc['dim']
    with pytest.raises(SchemaError):
        serialization.algebra_from_json(doc)
    doc = _algebra_doc([])
    doc['format'] = 'family/v1'
    with pytest.raises(SchemaError) as info:
        serialization.algebra_from_json(doc)
    assert info.value.path == '/format'
    doc = _algebra_doc([], dim=2)
    doc['basis'] = ['a']
    with pytest.raises(SchemaError):
        serialization.algebra_from_json(doc)


def test_malformed_json():
    with pytest.raises(SchemaError) as info:
        serialization.loads('{\n  "dim": 3,\n')
    assert info.value.line is not None
    assert 'line' in str(info.value)


def test_involution_document(pair_210):
    doc = {'format': 'involution/v1', 'algebra': 'so:3,0',
           'matrix': [['1', '0', '0'], ['0', '-1', '0'], ['0', '0', '-1']]}
    theta = serialization.involution_from_json(doc)
    assert linalg.equal(theta.matrix, pair_210.involution.matrix)
    again = serialization.involution_from_json(serialization.involution_to_json(theta))
    assert linalg.equal(split(again).k, pair_210.k)


def test_involution_document_errors():
    doc = {'format': 'involution/v1', 'algebra': 'so:3,0', 'matrix': [['1', '0'], ['0', '1']]}
    with pytest.raises(SchemaError):
        serialization.involution_from_json(doc)
    doc = {'format': 'involution/v1', 'algebra': 'so:3,0',
           'matrix': [['1', '0', '0'], ['0', '1', '0'], ['0', '0', '-1']]}
    with pytest.raises(ValueError):
        serialization.involution_from_json(doc)


def test_family_documents(pair_210):
    fam = example_family()
    doc = serialization.family_to_json(fam)
    assert doc['involution'] == 'coefficient-conjugation'
    assert {'i': 2, 'j': 3, 'k': 1, 'c': ['0', '1']} in doc['sc']
    assert serialization.family_from_json(json.loads(serialization.dumps(doc))) == fam

    real = contraction_family(pair_210)
    doc = serialization.family_to_json(real)
    assert doc['field'] == 'real' and doc['involution'] is None
    back = serialization.family_from_json(doc)
    assert isinstance(back, RealFamily)
    assert back.basis == real.basis
    assert back.constants() == real.constants()


def test_family_with_matrix_involution():
    fam = AlgebraicFamily(['a', 'b'], {(0, 1, 1): 1}, linalg.as_matrix([[1, 0], [0, -1]]))
    doc = serialization.family_to_json(fam)
    assert doc['involution'] == [['1', '0'], ['0', '-1']]
    assert serialization.family_from_json(doc) == fam


def test_real_family_with_involution_is_rejected():
    doc = serialization.family_to_json(example_family())
    doc['field'] = 'real'
    with pytest.raises(SchemaError):
        serialization.family_from_json(doc)


def test_fingerprint_document(so21):
    fp = fingerprint(so21)
    doc = serialization.fingerprint_to_json(fp, so21.name)
    assert doc['killing_signature'] == [2, 1]
    assert doc['algebra'] == 'so(2,1)'
    assert serialization.fingerprint_from_json(doc) == fp


def test_unknown_schema():
    with pytest.raises(ValueError):
        serialization.load_schema('tensor/v1')


def test_catalog_algebra_documents():
    g = symmetric_pair((1, 1, 1)).algebra
    assert serialization.algebra_from_json(serialization.algebra_to_json(g)) == g
