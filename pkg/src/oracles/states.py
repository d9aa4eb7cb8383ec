import itertools
import logging
from dataclasses import dataclass

from sympy import QQ

from src.core.combinatorics import compositions, count_compositions, multinomial, product
from src.core.config import DEFAULT_SETTINGS
from src.core.errors import StateSpaceTooLarge, ZeroNormalizingConstant
from src.core.result import ComputationResult, Quantity, WorkCounters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NetworkState:
    """k[i][j] = number of class-j jobs at station i."""
    k: tuple

    @property
    def row_totals(self):
        return tuple(sum(row) for row in self.k)

    def class_totals(self):
        return tuple(sum(column) for column in zip(*self.k))


def state_space_size(instance):
    # prod_j C(N_j + n - 1, n - 1)
    return product(count_compositions(count, instance.n) for count in instance.counts)


def enumerate_states(instance):
    """Yield every state of the closed network once, in a fixed order."""
    per_class = [list(compositions(count, instance.n)) for count in instance.counts]
    for placement in itertools.product(*per_class):
        # placement[j][i] is the class-j count at station i
        yield NetworkState(tuple(zip(*placement)))


def state_weight(instance, state):
    """prod_i (k_i! / prod_j k_ij!) prod_l theta_il^k_il"""
    weight = QQ.one
    for row, counts in zip(instance.theta.rows, state.k):
        weight *= multinomial(counts)
        for theta_il, k_il in zip(row, counts):
            if k_il:
                weight *= theta_il ** k_il
    return weight


def _check_guard(instance, guard):
    size = state_space_size(instance)
    if size > guard:
        raise StateSpaceTooLarge(f"state space has {size} states, guard is {guard}", size, guard)
    return size


def bruteforce_g(instance, guard=None):
    """G as the sum of product-form weights over the whole state space."""
    guard = DEFAULT_SETTINGS.state_guard if guard is None else guard
    size = _check_guard(instance, guard)
    total = QQ.zero
    for state in enumerate_states(instance):
        total += state_weight(instance, state)
    logger.debug("bruteforce: n=%d d=%d states=%d", instance.n, instance.d, size)
    return ComputationResult(
        quantity=Quantity.G,
        value=total,
        algorithm="bruteforce",
        work=WorkCounters(terms=size),
    )


def _normalizing_constant(instance, g, guard):
    if g is None:
        g = bruteforce_g(instance, guard).value
    if not g:
        raise ZeroNormalizingConstant("G = 0, the state probabilities are undefined")
    return g


def state_probability(instance, state, g=None, guard=None):
    """
    P(k) = weight(k) / G.
    :param g: Precomputed G; computed by enumeration when omitted.
    """
    return state_weight(instance, state) / _normalizing_constant(instance, g, guard)


def mean_queue_lengths(instance, guard=None):
    """E[k_ij] under the product-form distribution, as an n x d grid."""
    guard = DEFAULT_SETTINGS.state_guard if guard is None else guard
    _check_guard(instance, guard)
    sums = [[QQ.zero] * instance.d for _ in range(instance.n)]
    g = QQ.zero
    for state in enumerate_states(instance):
        weight = state_weight(instance, state)
        g += weight
        for i, counts in enumerate(state.k):
            for j, k_ij in enumerate(counts):
                if k_ij:
                    sums[i][j] += k_ij * weight
    g = _normalizing_constant(instance, g, guard)
    return tuple(tuple(value / g for value in row) for row in sums)
