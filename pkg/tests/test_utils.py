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

from lie_contractions import utils
from lie_contractions.serialization import SchemaError


def test_default_config():
    config = utils.load_config()
    assert config['info']['timestamp_format'] == '%Y-%m-%d_%H:%M:%S'
    assert config['verify']['cases'][0] == [2, 1, 0]
    assert config['verify']['alphas'] == ['-4', '-1', '-1/2', '0', '1/2', '1', '4']
    assert list(config) == ['info', 'logging', 'verify']


def test_invalid_config(tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_text(json.dumps({'info': {'timestamp_format': '%H'}, 'logging': {'level': 'LOUD'},
                               'verify': {'cases': [], 'alphas': []}}))
    with pytest.raises(SchemaError) as info:
        utils.load_config(str(bad))
    assert info.value.path == '/logging/level'


def test_next_file_name(tmp_path):
    base = str(tmp_path / 'run')
    assert utils.next_file_name(base, 'log') == base + '0.log'
    (tmp_path / 'run0.log').write_text('')
    (tmp_path / 'run1.log').write_text('')
    assert utils.next_file_name(base, 'log') == base + '2.log'


def test_setup_logging_writes_log_file(tmp_path):
    config = utils.load_config()
    config['logging']['log_dir'] = str(tmp_path / 'logs')
    config['logging']['log_name'] = 'session'
    utils.setup_logging(config, logging.DEBUG)
    logging.getLogger('lie_contractions.test').info('hello')
    for handler in logging.getLogger().handlers:
        handler.flush()
    text = (tmp_path / 'logs' / 'session0.log').read_text()
    assert 'INFO:' in text and ':hello' in text
    for handler in logging.getLogger().handlers[:]:
        handler.close()
        logging.getLogger().removeHandler(handler)
