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

"""JSON forms of algebras, involutions, families, fingerprints and reports.

Every document carries ``"format": "<name>/v1"`` and is checked against the
JSON schema of the same name shipped in ``lie_contractions/schemas``.
Writers emit 1-based indices with constants sorted by (i, j, k).
"""

import json
import logging
import os
from collections import OrderedDict
from typing import Any, Dict, List, Optional

import jsonschema
import jsonschema.exceptions
import numpy as np

from lie_contractions import linalg
from lie_contractions.family import AlgebraicFamily, COEFFICIENT_CONJUGATION, RealFamily
from lie_contractions.lie_core import Field, Fingerprint, LieAlgebra
from lie_contractions.scalars import Polynomial, format_scalar, parse_scalar
from lie_contractions.so_catalog import from_name
from lie_contractions.symmetric import Involution, SymmetricPair

log = logging.getLogger(__name__)

SCHEMA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'schemas')

_SCHEMA_FILES = {
    'lie-algebra/v1': 'lie-algebra.json',
    'involution/v1': 'involution.json',
    'family/v1': 'family.json',
    'fingerprint/v1': 'fingerprint.json',
    'verify-report/v1': 'verify-report.json',
    'config': 'config.json',
}

_schemas = {}


class SchemaError(ValueError):
    """Malformed or schema-violating JSON input.

    Attributes:
        path: JSON path of the offending field, e.g. '/sc/0/c'.
        line: Line of a JSON syntax error, if any.
        column: Column of a JSON syntax error, if any.
    """
    def __init__(self, message: str, path: str='', line: Optional[int]=None,
                 column: Optional[int]=None) -> None:
        self.path = path
        self.line = line
        self.column = column
        where = []
        if path:
            where.append('at {}'.format(path))
        if line is not None:
            where.append('line {} column {}'.format(line, column))
        super().__init__('{}{}'.format(message, ' ({})'.format(', '.join(where)) if where else ''))


def load_schema(name: str) -> Dict[str, Any]:
    """Schema for a format name such as 'lie-algebra/v1' (cached)."""
    if name not in _schemas:
        try:
            fname = _SCHEMA_FILES[name]
        except KeyError:
            raise ValueError('No schema for {!r}.'.format(name))
        with open(os.path.join(SCHEMA_DIR, fname)) as f:
            _schemas[name] = json.load(f)
    return _schemas[name]


def validate_document(doc: Any, name: str) -> None:
    """Validates doc against a schema.

    Raises:
        SchemaError: for the first violation, with its JSON path.
    """
    validator = jsonschema.Draft7Validator(load_schema(name))
    err = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if err is not None:
        path = '/' + '/'.join(str(p) for p in err.absolute_path)
        raise SchemaError('{} document invalid: {}'.format(name, err.message), path)
    fmt = doc.get('format') if isinstance(doc, dict) else None
    if fmt is not None and fmt != name and name != 'config':
        raise SchemaError('Expected format {}, got {}.'.format(name, fmt), '/format')


def loads(text: str) -> Any:
    """Parses JSON into ordered dicts.

    Raises:
        SchemaError: on JSON syntax errors, with line and column.
    """
    try:
        return json.loads(text, object_pairs_hook=OrderedDict)
    except json.JSONDecodeError as e:
        raise SchemaError('Malformed JSON: {}'.format(e.msg), line=e.lineno, column=e.colno)


def read_json(path: str) -> Any:
    with open(path) as f:
        return loads(f.read())


def dumps(doc: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(doc, indent=2) + '\n'


def _scalar(text: str, path: str):
    try:
        return parse_scalar(text)
    except ValueError as e:
        raise SchemaError(str(e), path)


def matrix_to_json(m: np.ndarray) -> List[List[str]]:
    return [[format_scalar(x) for x in row] for row in m]


def matrix_from_json(rows: List[List[str]], path: str='/matrix') -> np.ndarray:
    if not rows or len({len(r) for r in rows}) != 1:
        raise SchemaError('Matrix rows must be non-empty and of equal length.', path)
    return linalg.as_matrix([[_scalar(x, '{}/{}/{}'.format(path, i, j)) for j, x in enumerate(row)]
                             for i, row in enumerate(rows)])


def algebra_to_json(g: LieAlgebra) -> Dict[str, Any]:
    return OrderedDict([
        ('format', 'lie-algebra/v1'),
        ('name', g.name),
        ('dim', g.dim),
        ('field', g.field.value),
        ('basis', list(g.basis)),
        ('sc', [OrderedDict([('i', i + 1), ('j', j + 1), ('k', k + 1), ('c', format_scalar(c))])
                for (i, j, k), c in sorted(g.constants().items())]),
    ])


def _check_indices(entry: Dict[str, Any], n: int, path: str) -> tuple:
    idx = tuple(entry[key] - 1 for key in ('i', 'j', 'k'))
    if max(idx) >= n:
        raise SchemaError('Index exceeds dimension {}.'.format(n), path)
    return idx


def algebra_from_json(doc: Dict[str, Any]) -> LieAlgebra:
    """Reads a lie-algebra/v1 object; stored entries are kept in any index order.
    """
    validate_document(doc, 'lie-algebra/v1')
    n = doc['dim']
    if len(doc['basis']) != n:
        raise SchemaError('basis has {} names but dim is {}.'.format(len(doc['basis']), n), '/basis')
    sc = {}
    for t, entry in enumerate(doc['sc']):
        path = '/sc/{}'.format(t)
        idx = _check_indices(entry, n, path)
        if idx in sc:
            raise SchemaError('Duplicate constant {}.'.format(tuple(i + 1 for i in idx)), path)
        sc[idx] = _scalar(entry['c'], path + '/c')
    return LieAlgebra(doc['basis'], sc, Field(doc['field']), doc.get('name'))


def involution_to_json(theta: Involution) -> Dict[str, Any]:
    return OrderedDict([
        ('format', 'involution/v1'),
        ('algebra', algebra_to_json(theta.algebra)),
        ('matrix', matrix_to_json(theta.matrix)),
    ])


def involution_from_json(doc: Dict[str, Any]) -> Involution:
    """Reads an involution/v1 object; the algebra may be a catalog name.

    The involution is checked by :meth:`Involution.check`.
    """
    validate_document(doc, 'involution/v1')
    algebra = doc['algebra']
    if isinstance(algebra, str):
        resolved = from_name(algebra)
        g = resolved.algebra if isinstance(resolved, SymmetricPair) else resolved
    else:
        g = algebra_from_json(algebra)
    m = matrix_from_json(doc['matrix'])
    if m.shape != (g.dim, g.dim):
        raise SchemaError('Matrix shape {} does not match dim {}.'.format(m.shape, g.dim), '/matrix')
    return Involution(g, m)


def family_to_json(fam: AlgebraicFamily) -> Dict[str, Any]:
    if fam.involution is None:
        involution = None
    elif fam.has_coefficient_conjugation():
        involution = COEFFICIENT_CONJUGATION
    else:
        involution = matrix_to_json(fam.involution)
    return OrderedDict([
        ('format', 'family/v1'),
        ('name', fam.name),
        ('rank', fam.rank),
        ('field', fam.field.value),
        ('basis', list(fam.basis)),
        ('sc', [OrderedDict([('i', i + 1), ('j', j + 1), ('k', k + 1),
                             ('c', [format_scalar(c) for c in f.coeffs])])
                for (i, j, k), f in fam.constants().items()]),
        ('involution', involution),
    ])


def family_from_json(doc: Dict[str, Any]) -> AlgebraicFamily:
    """Reads a family/v1 object; ``"field": "real"`` gives a RealFamily."""
    validate_document(doc, 'family/v1')
    n = doc['rank']
    if len(doc['basis']) != n:
        raise SchemaError('basis has {} names but rank is {}.'.format(len(doc['basis']), n), '/basis')
    sc = {}
    for t, entry in enumerate(doc['sc']):
        path = '/sc/{}'.format(t)
        idx = _check_indices(entry, n, path)
        sc[idx] = Polynomial([_scalar(c, '{}/c/{}'.format(path, d)) for d, c in enumerate(entry['c'])])
    involution = doc.get('involution')
    if isinstance(involution, list):
        involution = matrix_from_json(involution, '/involution')
    if doc.get('field') == 'real':
        if involution is not None:
            raise SchemaError('Real families carry no involution.', '/involution')
        return RealFamily(doc['basis'], sc, doc.get('name'))
    return AlgebraicFamily(doc['basis'], sc, involution, doc.get('name'))


def fingerprint_to_json(fp: Fingerprint, algebra: Optional[str]=None) -> Dict[str, Any]:
    return OrderedDict([
        ('format', 'fingerprint/v1'),
        ('algebra', algebra),
        ('dim', fp.dim),
        ('center_dim', fp.center_dim),
        ('derived_dims', list(fp.derived_dims)),
        ('lcs_dims', list(fp.lcs_dims)),
        ('killing_rank', fp.killing_rank),
        ('killing_signature', list(fp.killing_signature) if fp.killing_signature is not None else None),
        ('radical_dim', fp.radical_dim),
    ])


def fingerprint_from_json(doc: Dict[str, Any]) -> Fingerprint:
    validate_document(doc, 'fingerprint/v1')
    sig = doc['killing_signature']
    return Fingerprint(dim=doc['dim'], center_dim=doc['center_dim'],
                       derived_dims=tuple(doc['derived_dims']), lcs_dims=tuple(doc['lcs_dims']),
                       killing_rank=doc['killing_rank'],
                       killing_signature=tuple(sig) if sig is not None else None,
                       radical_dim=doc['radical_dim'])
