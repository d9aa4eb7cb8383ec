import logging

from sympy import QQ

from src.core.combinatorics import binomial, compositions, factorial, product
from src.core.result import ComputationResult, Quantity, WorkCounters

logger = logging.getLogger(__name__)


def explicit2_g(instance):
    """
    G = 1/(N_1!...N_d!) sum_{h >= 0, |h| <= N} (-1)^(N - |h|) C(N + n - 1, N - |h|)
            prod_j (sum_i h_i theta_ij)^N_j

    No distinctness conditions. Work counter: C(N + n, n) terms.
    """
    n, N = instance.n, instance.total
    columns = [instance.theta.column(j) for j in range(instance.d)]
    total, terms = QQ.zero, 0
    for size in range(N + 1):
        weight = binomial(N + n - 1, N - size)
        if (N - size) % 2:
            weight = -weight
        for h in compositions(size, n):
            term = QQ(weight)
            for column, count in zip(columns, instance.counts):
                if count == 0:
                    continue
                form = QQ.zero
                for h_i, theta_ij in zip(h, column):
                    if h_i:
                        form += h_i * theta_ij
                term *= form ** count
            total += term
            terms += 1
    logger.debug("explicit2: n=%d N=%d terms=%d", n, N, terms)
    return ComputationResult(
        quantity=Quantity.G,
        value=total / product(factorial(count) for count in instance.counts),
        algorithm="explicit2",
        work=WorkCounters(terms=terms),
    )
