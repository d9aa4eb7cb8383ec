import logging

from sympy import QQ

from src.core.combinatorics import binomial, compositions
from src.core.errors import RepeatedCoefficients, WrongClassCount
from src.core.result import ComputationResult, Quantity, WorkCounters
from src.explicit.groups import CoefficientGroups

logger = logging.getLogger(__name__)


def _require_single_class(instance, name):
    if instance.d != 1:
        raise WrongClassCount(f"{name} needs exactly one class, got d={instance.d}", d=instance.d)


def confluent_divided_difference(nodes, mult, N, n):
    """
    Divided difference of x^(N + n - 1) on `nodes`, node j repeated mult[j] times
    (sum(mult) == n). Nodes must be pairwise distinct.

    Expanded as
        sum_j (-1)^(m_j - 1) t_j^(N + n - m_j)
              sum_{r >= 0, |r| = m_j - 1} (-1)^(r_j) C(N + r_j, r_j)
                  prod_{k != j} C(m_k + r_k - 1, r_k) t_k^r_k / (t_j - t_k)^(m_k + r_k)
    where the composition r runs over all components, r_j included.

    :return: (value, number of inner terms evaluated)
    """
    value, terms = QQ.zero, 0
    size = len(nodes)
    for j in range(size):
        m_j = mult[j]
        outer = nodes[j] ** (N + n - m_j)
        if (m_j - 1) % 2:
            outer = -outer
        differences = [nodes[j] - nodes[k] for k in range(size)]
        inner = QQ.zero
        for r in compositions(m_j - 1, size):
            term = QQ(binomial(N + r[j], r[j]))
            if r[j] % 2:
                term = -term
            for k in range(size):
                if k == j:
                    continue
                term *= binomial(mult[k] + r[k] - 1, r[k]) * nodes[k] ** r[k]
                term /= differences[k] ** (mult[k] + r[k])
            inner += term
            terms += 1
        value += outer * inner
    return value, terms


def koe58_g(instance, printed_order=False):
    """
    d = 1, pairwise distinct theta_i: G = sum_i theta_i^(N + n - 1) / prod_{k != i}(theta_i - theta_k),
    the divided difference [theta_1, ..., theta_n] x^(N + n - 1).

    With printed_order=True the denominators are prod_{k != i}(theta_k - theta_i), which
    differs from G by (-1)^(n - 1); kept to pin that sign convention.
    """
    _require_single_class(instance, "koe58")
    values = instance.theta.column(0)
    groups = CoefficientGroups.from_items(values)
    if groups.has_repeats():
        repeated = [str(value) for value, m in zip(groups.distinct, groups.mult) if m > 1]
        raise RepeatedCoefficients(
            f"coefficients {', '.join(repeated)} are repeated; use gen for the confluent form",
            repeated=repeated,
        )
    power = instance.total + instance.n - 1
    total = QQ.zero
    for i, theta_i in enumerate(values):
        denominator = QQ.one
        for k, theta_k in enumerate(values):
            if k != i:
                denominator *= (theta_k - theta_i) if printed_order else (theta_i - theta_k)
        total += theta_i ** power / denominator
    logger.debug("koe58: n=%d N=%d printed_order=%s", instance.n, instance.total, printed_order)
    return ComputationResult(
        quantity=Quantity.G,
        value=total,
        algorithm="koe58_printed" if printed_order else "koe58",
        work=WorkCounters(terms=instance.n),
    )


def gen_g(instance):
    """d = 1 with repeated coefficients allowed: confluent divided difference of x^(N + n - 1)."""
    _require_single_class(instance, "gen")
    groups = CoefficientGroups.from_column(instance.theta)
    value, terms = confluent_divided_difference(groups.distinct, groups.mult, instance.total, instance.n)
    logger.debug("gen: n=%d distinct=%d terms=%d", instance.n, len(groups), terms)
    return ComputationResult(
        quantity=Quantity.G,
        value=value,
        algorithm="gen",
        work=WorkCounters(terms=terms),
    )
