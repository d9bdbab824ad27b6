"""
spcgt/constants.py

Shared constants used by spcgt
"""

SPCGT_CACHE_MAGIC = b'SPCGT\x00\x01\x00'
SPCGT_CACHE_EXTENSION = '.spcgt'
SPCGT_CACHE_DIR_ENV = 'SPCGT_CACHE_DIR'
SPCGT_DEFAULT_CACHE_DIR = './.spcgt-cache'

SPCGT_CONFIG_ENV = 'SPCGT_CONFIG'
SPCGT_FULL_TESTS_ENV = 'SPCGT_FULL_TESTS'

# Enumeration refuses groups whose predicted order exceeds this:
SPCGT_DEFAULT_ORDER_CAP = 2 * 10 ** 6

# The bar-complex oracle is only meant for small groups:
SPCGT_DEFAULT_ORACLE_CAP = 10 ** 4

# Number of leading BFS elements whose full Fox Jacobian the cocycle solver keeps in memory:
SPCGT_DEFAULT_JACOBIAN_BUDGET = 4096

SPCGT_DEFAULT_SEED = 1729
SPCGT_DEFAULT_SAMPLES = 1000

# Rows handed to the modular eliminator per batch:
SPCGT_ELIMINATION_CHUNK = 2048

# Group products formed per batch during enumeration and sweeps over the Cayley graph:
SPCGT_ENUMERATION_CHUNK = 2 ** 18

SPCGT_DEFAULT_CONFIG = {
    'cache_dir': SPCGT_DEFAULT_CACHE_DIR,
    'order_cap': SPCGT_DEFAULT_ORDER_CAP,
    'oracle_cap': SPCGT_DEFAULT_ORACLE_CAP,
    'jacobian_budget': SPCGT_DEFAULT_JACOBIAN_BUDGET,
    'use_cache': True,
    'seed': SPCGT_DEFAULT_SEED,
    'samples': SPCGT_DEFAULT_SAMPLES,
}

SPCGT_CONFIG_TEMPLATE = '''---
# spcgt configuration file
#
# Every key is optional; anything missing falls back to the built-in default.
# Point spcgt at this file with `spcgt --config PATH ...` or by exporting
# SPCGT_CONFIG=PATH.  SPCGT_CACHE_DIR, when set, overrides cache_dir.

# Where enumerated groups (elements, spanning tree, relators) are cached:
#cache_dir: ./.spcgt-cache

# Refuse to enumerate any Sp_2g(Z/L) whose order exceeds this:
#order_cap: 2000000

# Refuse to run the dense bar-complex oracle on groups larger than this:
#oracle_cap: 10000

# How many leading BFS elements get a fully materialized Fox Jacobian in the
# cocycle solver.  Larger values use more memory but shrink the candidate
# cocycle space before the full relator sweep:
#jacobian_budget: 4096

# Set to false to always recompute groups:
#use_cache: true

# Base seed and sample count of the verification suites:
#seed: 1729
#samples: 1000
'''
