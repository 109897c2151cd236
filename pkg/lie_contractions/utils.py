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
import os
import sys
from collections import OrderedDict
from typing import Any, Dict, Optional

from lie_contractions.serialization import validate_document

log = logging.getLogger(__name__)

#: Packaged default configuration.
DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'config', 'verify.json')


def load_json_ordered(filename: str) -> OrderedDict:
    """Loads json file as an ordered dict.

    Args:
        filename: Path to json file to be loaded.

    Returns:
        OrderedDict: odict
            OrderedDict containing data from json file.
    """
    with open(filename) as f:
        odict = json.load(f, object_pairs_hook=OrderedDict)
    return odict


def next_file_name(fpath: str, extension: str) -> str:
    """Appends an integer to fpath to create a unique file name:
        fpath + {next unused integer} + '.' + extension

    Args:
        fpath: Path to file you want to create (no extension).
        extension: Extension of file you want to create.

    Returns:
        str: next_file_name
            Unique file name starting with fpath and ending with extension.
    """
    i = 0
    while os.path.exists('{}{}.{}'.format(fpath, i, extension)):
        i += 1
    return '{}{}.{}'.format(fpath, i, extension)


def load_config(config_file: Optional[str]=None) -> OrderedDict:
    """Loads and validates a configuration file (default: the packaged verify.json).

    Raises:
        SchemaError: if the file violates the configuration schema.
    """
    config = load_json_ordered(config_file or DEFAULT_CONFIG)
    validate_document(config, 'config')
    return config


def setup_logging(config: Dict[str, Any], level: Optional[int]=None) -> None:
    """Configures the root logger from the 'logging' and 'info' config sections.

    Messages go to stderr, and also to logs/{log_name}{n}.log under
    log_dir when log_dir is set.

    Args:
        config: Loaded configuration.
        level: Overrides the configured level, e.g. logging.DEBUG.
    """
    log_config = config['logging']
    if level is None:
        level = getattr(logging, log_config['level'])
    handlers = [logging.StreamHandler(sys.stderr)]
    log_dir = log_config.get('log_dir')
    if log_dir:
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)
        log_file = next_file_name(os.path.join(log_dir, log_config.get('log_name', 'lie-contractions')), 'log')
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level,
        format='%(levelname)s:%(asctime)s:%(module)s:%(message)s',
        datefmt=config['info']['timestamp_format'],
        handlers=handlers,
        force=True)
    log.debug('Logging started.')
