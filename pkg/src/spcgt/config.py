"""
spcgt/config.py

Layered configuration: built-in defaults, then the file named by SPCGT_CONFIG, then a file given on
the command line, then the SPCGT_CACHE_DIR environment override.
"""

from spcgt.config_schema import upgrade_config_schema
from spcgt.constants import *
from spcgt.utils import *
import errno
import logging
import os
import yaml

log = logging.getLogger(__name__)


def load_config_file(path):
    result = dict()
    try:
        with open(path, 'r', **FILE_ENCODING_KWARGS) as f:
            for d in yaml.load_all(f, Loader=yaml.FullLoader):
                # An empty section in yaml yields None here; skip it rather than crash.
                if not d:
                    continue
                result.update(upgrade_config_schema(d))
    except IOError as e:
        if e.errno != errno.ENOENT:
            raise SpcgtFatalError("unusual error while trying to read %s: %s" % (path, e))
        raise SpcgtFatalError('%s does not exist.' % (path,))
    except yaml.YAMLError as e:
        raise InvalidArgument('%s is not valid YAML: %s' % (path, e))
    log.debug('Loaded config file %s: %s', path, result)
    return result


def load_config(config_path=None, **overrides):
    '''
    Returns the effective configuration dict.  Keyword overrides (already-validated values, as
    supplied by unit tests or command-line flags) win over everything else; None means "not given".
    '''
    config = dict(SPCGT_DEFAULT_CONFIG)

    env_config_path = os.environ.get(SPCGT_CONFIG_ENV, '')
    if env_config_path:
        config.update(load_config_file(env_config_path))
    if config_path:
        config.update(load_config_file(config_path))

    env_cache_dir = os.environ.get(SPCGT_CACHE_DIR_ENV, '')
    if env_cache_dir:
        config['cache_dir'] = env_cache_dir

    config.update(upgrade_config_schema({k: v for k, v in overrides.items() if v is not None}))

    log.debug('Effective config: %s', config)
    return config
