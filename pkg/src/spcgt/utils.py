"""
spcgt/utils.py

Generic spcgt util functions
"""

from spcgt.constants import *
import errno
import hashlib
import json
import logging
import os

log = logging.getLogger(__name__)
FILE_ENCODING_KWARGS = {'encoding': 'utf-8'}


class SpcgtFatalError(Exception):
    '''
    An exception type that is used to declare a fatal error -- an error where you might want to
    just kill the app.

    Low-level code never exits on its own.  It raises this exception (or one of the more specific
    subclasses below) instead; the command-line front end turns it into a one-line diagnostic and
    a non-zero exit status, and unit tests catch it and move on.
    '''
    pass


class InvalidArgument(SpcgtFatalError):
    'An argument is outside the domain of the operation (wrong shape, wrong modulus, bad range).'
    pass


class ResourceLimitExceeded(SpcgtFatalError):
    'A computation would exceed a configured cap, such as the enumeration order cap.'
    pass


class UnsupportedCase(SpcgtFatalError):
    'The inputs fall outside the hypotheses of the theorem a calculator implements.'
    pass


class StateError(SpcgtFatalError):
    'An operation needs data that has not been computed yet (for example, Cayley data).'
    pass


class SpcgtInternalError(SpcgtFatalError):
    'A consistency check that should never fail did fail.'
    pass


def h_data(*data):
    '''
    SHA-256 over the given chunks.  Strings are encoded as UTF-8; anything else is passed through
    str() first, so that integers hash the same way on every platform.
    '''
    m = hashlib.sha256()
    for d in data:
        if isinstance(d, str):
            d = d.encode('utf-8')
        elif not isinstance(d, (bytes, bytearray, memoryview)):
            d = str(d).encode('utf-8')
        m.update(d)
    return m.hexdigest()


def write_existing_file(filename, contents, mode='w'):
    kwargs = {} if 'b' in mode else FILE_ENCODING_KWARGS
    try:
        with open(filename, mode, **kwargs) as f:
            f.write(contents)
        return
    except IOError as e:
        if e.errno != errno.ENOENT:
            raise SpcgtFatalError("cannot write file: %s" % (e,))
    os.makedirs(os.path.dirname(filename))
    with open(filename, mode, **kwargs) as f:
        f.write(contents)


def dump_json(data):
    'The one JSON serialization spcgt uses: sorted keys, default separators, one line.'
    return json.dumps(data, sort_keys=True)


def emit_json(data, out='-'):
    data = dump_json(data)

    if out in ['-']:
        print(data)
        return

    write_existing_file(out, data + '\n')


def require_int(name, value, minimum):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidArgument('%s must be an integer, but found %r' % (name, value))
    if value < minimum:
        raise InvalidArgument('%s must be at least %d, but found %d' % (name, minimum, value))
    return value


def env_flag(name):
    return os.environ.get(name, '').strip().lower() not in ['', '0', 'false', 'no']
