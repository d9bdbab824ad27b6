"""
spcgt/config_schema.py

Validation of configuration documents.  YAML is forgiving about types (an empty value shows up as
None, numbers may arrive as strings when quoted), so everything is normalized here before the rest
of spcgt ever sees it.
"""

from spcgt.constants import SPCGT_DEFAULT_CONFIG
from spcgt.utils import InvalidArgument
import logging

log = logging.getLogger(__name__)


def validate_positive_int(key, value):
    if isinstance(value, bool):
        raise InvalidArgument('config key %s expects an integer but found %r' % (key, value))
    if isinstance(value, str):
        # Quoted numbers and things like "2_000_000" are common in hand-written YAML:
        try:
            value = int(value.replace('_', ''))
        except ValueError:
            raise InvalidArgument('config key %s expects an integer but found %r' % (key, value))
    if not isinstance(value, int):
        raise InvalidArgument('config key %s expects an integer but found %r' % (key, value))
    if value < 1:
        raise InvalidArgument('config key %s must be positive but found %d' % (key, value))
    return value


def validate_bool(key, value):
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.lower() in ['yes', 'true', 'on', '1']:
        return True
    if isinstance(value, str) and value.lower() in ['no', 'false', 'off', '0']:
        return False
    raise InvalidArgument('config key %s expects a boolean but found %r' % (key, value))


def validate_path(key, value):
    if not isinstance(value, str) or not value:
        raise InvalidArgument('config key %s expects a non-empty path but found %r' % (key, value))
    return value


CONFIG_VALIDATORS = {
    'cache_dir': validate_path,
    'order_cap': validate_positive_int,
    'oracle_cap': validate_positive_int,
    'jacobian_budget': validate_positive_int,
    'use_cache': validate_bool,
    'seed': validate_positive_int,
    'samples': validate_positive_int,
}


def upgrade_config_value(key, value):
    if key not in CONFIG_VALIDATORS:
        raise InvalidArgument('unknown config key: %s (known keys: %s)' % (key, ', '.join(sorted(CONFIG_VALIDATORS))))
    if value is None:
        # An empty value in YAML shows up as None; treat it as "use the default":
        return SPCGT_DEFAULT_CONFIG[key]
    return CONFIG_VALIDATORS[key](key, value)


def upgrade_config_schema(value):
    if value is None:
        # Empty documents in YAML show up as None in python; auto-convert now:
        return {}
    if isinstance(value, dict):
        return {k: upgrade_config_value(k, v) for k, v in value.items()}
    raise InvalidArgument('a config document must be a dict, but found %r' % (value,))
