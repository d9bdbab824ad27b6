"""
spcgt/groups/nonsplit.py

Evidence that 1 -> sp_2g(Z/p) -> Sp_2g(Z/p^(k+1)) -> Sp_2g(Z/p^k) -> 1 does not split: the element
Y = I + E_(1,g+1) has order p^k in Sp_2g(Z/p^k), but none of its lifts has order p^k.
"""

from spcgt.groups.symplectic import is_symplectic
from spcgt.linalg import ZMatrix, is_prime
from spcgt.modules.lie import random_lie_element
from spcgt.utils import InvalidArgument, SpcgtInternalError, require_int
import collections
import logging
import numpy as np

log = logging.getLogger(__name__)

NonsplitTrial = collections.namedtuple('NonsplitTrial', ['lift', 'order', 'passed'])


class NonsplitReport(object):
    def __init__(self, p, k, g, trials):
        self.p = p
        self.k = k
        self.g = g
        self.trials = trials

    @property
    def passed(self):
        return all(t.passed for t in self.trials)

    @property
    def failures(self):
        return sum(1 for t in self.trials if not t.passed)

    def to_json(self):
        return {
            'g': self.g,
            'k': self.k,
            'p': self.p,
            'passed': self.passed,
            'trials': len(self.trials),
            'failures': self.failures,
            'orders': sorted(set(t.order for t in self.trials)),
        }


def base_element(g, modulus):
    'Y = I + E_(1,g+1), symplectic over Z (E_(1,g+1) lies in sp_2g and squares to zero).'
    a = np.eye(2 * g, dtype=np.int64)
    a[0, g] = 1
    return ZMatrix.from_array(a, modulus)


def element_order(x, bound):
    'The least n <= bound with X^n = I, or None.'
    power = x
    for n in range(1, bound + 1):
        if power.is_identity():
            return n
        power = power @ x
    return None


def nonsplit_witness(p, k, g, trial_count, seed):
    '''
    Draws trial_count random lifts X = Y + p^k * Y * B of Y (B uniform in sp_2g(Z/p)), checks
    that each is symplectic modulo p^(k+1), reduces to Y, and has order strictly greater than p^k.
    '''
    if not is_prime(p):
        raise InvalidArgument('p must be prime, found %d' % (p,))
    require_int('k', k, 1)
    require_int('g', g, 1)
    require_int('trial_count', trial_count, 1)
    if (p, k) in [(2, 1), (3, 1)]:
        raise InvalidArgument('the non-split check needs (p, k) not in {(2, 1), (3, 1)}, found (%d, %d)' % (p, k))

    low = p ** k
    high = p ** (k + 1)
    y = base_element(g, high)
    if base_element(g, low) ** low != ZMatrix.identity(2 * g, low):
        raise SpcgtInternalError('I + E does not have order p^k')

    rng = np.random.default_rng(seed)
    trials = []
    for _ in range(trial_count):
        b = random_lie_element(g, p, rng).lift().reduce(high)
        x = y + low * (y @ b)
        if not is_symplectic(x, g, high) or x.reduce(low) != base_element(g, low):
            raise SpcgtInternalError('constructed lift is not a symplectic lift of I + E')
        passed = not (x ** low).is_identity()
        order = element_order(x, high)
        trials.append(NonsplitTrial(x, order, passed))
        log.debug('lift %r has order %s', x, order)

    report = NonsplitReport(p, k, g, trials)
    log.info('Non-split check p=%d k=%d g=%d: %d/%d lifts have order > %d', p, k, g,
             trial_count - report.failures, trial_count, low)
    return report
