import itertools
import logging

from sympy import QQ

from src.core.combinatorics import binomial, factorial, product
from src.core.errors import DegenerateDenominator
from src.core.result import ComputationResult, Quantity, WorkCounters
from src.explicit.divided import confluent_divided_difference
from src.explicit.groups import CoefficientGroups

logger = logging.getLogger(__name__)


def _aggregate(t, row):
    # sum_j t_j theta_ij
    total = QQ.zero
    for t_j, theta_ij in zip(t, row):
        if t_j:
            total += t_j * theta_ij
    return total


def _box_weight(instance, t):
    # (-1)^(N - t) prod_j C(N_j, t_j)
    weight = product(binomial(count, t_j) for count, t_j in zip(instance.counts, t))
    return -weight if (instance.total - sum(t)) % 2 else weight


def _box(instance):
    return itertools.product(*(range(count + 1) for count in instance.counts))


def _normalization(instance):
    return product(factorial(count) for count in instance.counts)


def explicit1_g(instance):
    """
    G = 1/(N_1!...N_d!) sum_{0 <= t <= N} (-1)^(N - t) prod_j C(N_j, t_j)
            sum_i a_i^(N + n - 1) / prod_{k != i}(a_i - a_k),   a_i = sum_j t_j theta_ij.

    The t = 0 term is 0 when N >= 1; for N = 0 the sum is 1. Raises
    DegenerateDenominator at the first t != 0 where two aggregates a_i, a_k coincide.
    Work counter: n terms per point of the box, n * prod_j (N_j + 1).
    """
    n, power = instance.n, instance.total + instance.n - 1
    total, terms = QQ.zero, 0
    for t in _box(instance):
        terms += n
        if not any(t):
            if instance.total == 0:
                total += 1
            continue
        aggregates = [_aggregate(t, row) for row in instance.theta.rows]
        inner = QQ.zero
        for i in range(n):
            denominator = QQ.one
            for k in range(n):
                if k == i:
                    continue
                difference = aggregates[i] - aggregates[k]
                if not difference:
                    raise DegenerateDenominator(t, i, k)
                denominator *= difference
            inner += aggregates[i] ** power / denominator
        total += _box_weight(instance, t) * inner
    logger.debug("explicit1: n=%d d=%d terms=%d", n, instance.d, terms)
    return ComputationResult(
        quantity=Quantity.G,
        value=total / _normalization(instance),
        algorithm="explicit1",
        work=WorkCounters(terms=terms),
    )


def explicit_repeated_g(instance):
    """
    Generalization of explicit1_g to repeated rows: rows are grouped by exact equality
    and, at every t, the inner sum is the confluent divided difference of
    x^(N + n - 1) on the group aggregates with the group multiplicities.
    """
    groups = CoefficientGroups.from_rows(instance.theta)
    total, terms = QQ.zero, 0
    for t in _box(instance):
        if not any(t):
            terms += 1
            if instance.total == 0:
                total += 1
            continue
        nodes = [_aggregate(t, row) for row in groups.distinct]
        for j, k in itertools.combinations(range(len(nodes)), 2):
            if nodes[j] == nodes[k]:
                raise DegenerateDenominator(t, groups.first_index[j], groups.first_index[k])
        inner, evaluated = confluent_divided_difference(nodes, groups.mult, instance.total, instance.n)
        terms += evaluated
        total += _box_weight(instance, t) * inner
    logger.debug("explicit_repeated: n=%d groups=%d terms=%d", instance.n, len(groups), terms)
    return ComputationResult(
        quantity=Quantity.G,
        value=total / _normalization(instance),
        algorithm="explicit_repeated",
        work=WorkCounters(terms=terms),
    )
