"""
spcgt/groups/cache.py

On-disk cache of enumerated groups.

A cache file holds one group's Cayley data in a fixed little-endian layout:

    8 bytes   magic SPCGT\\x00\\x01\\x00
    u64       element count N
    u8        entry width w (minimal bytes for L - 1)
    u32       matrix size n
    N*n*n*w   elements in BFS order, canonically encoded
    N * i32   spanning tree parent (-1 for the identity)
    N * i16   spanning tree generator (-1 for the identity)
    u64       relator count R
    R * 3*u32 relator edges (u, j, w) with u * s_j = w
    32 bytes  SHA-256 of everything above

Anything that fails to parse is rejected with a warning; the caller recomputes the group.
"""

from spcgt.constants import SPCGT_CACHE_EXTENSION, SPCGT_CACHE_MAGIC
from spcgt.groups.enumeration import CayleyData, compact_dtype
from spcgt.linalg.zmatrix import entry_width
from spcgt.utils import h_data, write_existing_file
import hashlib
import logging
import numpy as np
import os
import struct

log = logging.getLogger(__name__)

HEADER = struct.Struct('<QBI')
COUNT = struct.Struct('<Q')
DIGEST_SIZE = 32


class CacheRejected(Exception):
    'Raised internally when a cache file cannot be trusted; never escapes this module.'
    pass


def cache_key(group):
    'SHA-256 over (g, L, canonical generator encodings).'
    return h_data(struct.pack('<II', group.g, group.modulus), *[x.canonical_bytes() for x in group.generators])


def cache_path(cache_dir, group):
    return os.path.join(cache_dir, cache_key(group) + SPCGT_CACHE_EXTENSION)


def encode_entries(a, width):
    'Fixed-width little-endian bytes of a nonnegative integer array.'
    raw = np.ascontiguousarray(np.asarray(a).astype('<u8').reshape(-1)).view(np.uint8).reshape(-1, 8)
    return raw[:, :width].tobytes()


def decode_entries(data, width):
    raw = np.frombuffer(data, dtype=np.uint8).reshape(-1, width)
    padded = np.zeros((raw.shape[0], 8), dtype=np.uint8)
    padded[:, :width] = raw
    return padded.view('<u8').reshape(-1)


def serialize_cayley(cayley):
    n = cayley.elements.shape[1]
    width = entry_width(cayley.modulus)
    u, j, w = cayley.relator_edges()
    chunks = [
        SPCGT_CACHE_MAGIC,
        HEADER.pack(cayley.order, width, n),
        encode_entries(cayley.elements, width),
        cayley.parent.astype('<i4').tobytes(),
        cayley.parent_gen.astype('<i2').tobytes(),
        COUNT.pack(len(u)),
        np.stack([u, j, w], axis=1).astype('<u4').tobytes(),
    ]
    payload = b''.join(chunks)
    return payload + hashlib.sha256(payload).digest()


def save_cayley(path, cayley):
    data = serialize_cayley(cayley)
    tmp = path + '.tmp'
    try:
        write_existing_file(tmp, data, mode='wb')
        os.replace(tmp, path)
    except (IOError, OSError) as e:
        log.warning('Unable to write group cache %s: %s', path, e)
        return False
    log.info('Wrote group cache %s (%d bytes)', path, len(data))
    return True


def _take(data, offset, size):
    if offset + size > len(data):
        raise CacheRejected('truncated at byte %d' % (offset,))
    return data[offset:offset + size], offset + size


def parse_cayley(data, modulus, generator_count, expected_order=None):
    if len(data) < len(SPCGT_CACHE_MAGIC) + HEADER.size + DIGEST_SIZE:
        raise CacheRejected('file too short')
    if data[:len(SPCGT_CACHE_MAGIC)] != SPCGT_CACHE_MAGIC:
        raise CacheRejected('bad magic')
    payload, digest = data[:-DIGEST_SIZE], data[-DIGEST_SIZE:]
    if hashlib.sha256(payload).digest() != digest:
        raise CacheRejected('checksum mismatch')

    offset = len(SPCGT_CACHE_MAGIC)
    header, offset = _take(payload, offset, HEADER.size)
    count, width, n = HEADER.unpack(header)
    if width != entry_width(modulus):
        raise CacheRejected('entry width %d does not match modulus %d' % (width, modulus))
    if expected_order is not None and count != expected_order:
        raise CacheRejected('element count %d disagrees with the order formula (%d)' % (count, expected_order))

    raw, offset = _take(payload, offset, count * n * n * width)
    elements = decode_entries(raw, width)
    if np.any(elements >= modulus):
        raise CacheRejected('element entries out of range')
    elements = elements.astype(compact_dtype(modulus)).reshape(count, n, n)

    raw, offset = _take(payload, offset, 4 * count)
    parent = np.frombuffer(raw, dtype='<i4').astype(np.int32)
    raw, offset = _take(payload, offset, 2 * count)
    parent_gen = np.frombuffer(raw, dtype='<i2').astype(np.int16)
    raw, offset = _take(payload, offset, COUNT.size)
    (relator_count,) = COUNT.unpack(raw)
    raw, offset = _take(payload, offset, 12 * relator_count)
    edges = np.frombuffer(raw, dtype='<u4').reshape(-1, 3).astype(np.int64)
    if offset != len(payload):
        raise CacheRejected('%d trailing bytes' % (len(payload) - offset,))

    if count < 1 or parent[0] != -1 or parent_gen[0] != -1:
        raise CacheRejected('spanning tree does not start at the identity')
    if count > 1:
        idx = np.arange(1, count)
        if np.any(parent[1:] < 0) or np.any(parent[1:] >= idx) or np.any(np.diff(parent[1:]) < 0):
            raise CacheRejected('spanning tree is not in BFS order')
        if np.any(parent_gen[1:] < 0) or np.any(parent_gen[1:] >= generator_count):
            raise CacheRejected('spanning tree generator out of range')
    if relator_count + count - 1 != count * generator_count:
        raise CacheRejected('relator count %d does not complete the Cayley graph' % (relator_count,))

    table = np.full((count, generator_count), -1, dtype=np.int64)
    table[parent[1:], parent_gen[1:]] = np.arange(1, count)
    if len(edges):
        if np.any(edges[:, 0] >= count) or np.any(edges[:, 1] >= generator_count) or np.any(edges[:, 2] >= count):
            raise CacheRejected('relator edge out of range')
        table[edges[:, 0], edges[:, 1]] = edges[:, 2]
    if np.any(table < 0):
        raise CacheRejected('Cayley table has holes')

    cayley = CayleyData(elements, parent, parent_gen, table.astype(np.int32), modulus, from_cache=True)
    if len(np.unique(cayley.sorted_keys)) != count:
        raise CacheRejected('duplicate elements')
    return cayley


def load_cayley(path, group, expected_order=None):
    'The cached Cayley data of `group`, or None when there is no trustworthy cache file.'
    try:
        with open(path, 'rb') as f:
            data = f.read()
    except (IOError, OSError):
        return None
    try:
        cayley = parse_cayley(data, group.modulus, group.generator_count, expected_order)
    except (CacheRejected, ValueError) as e:
        log.warning('Rejecting group cache %s: %s', path, e)
        return None
    if cayley.elements.shape[1] != group.dim:
        log.warning('Rejecting group cache %s: matrix size %d does not match g=%d', path,
                    cayley.elements.shape[1], group.g)
        return None
    return cayley
