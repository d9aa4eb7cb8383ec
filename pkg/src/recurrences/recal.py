import logging
from dataclasses import dataclass

from sympy import QQ

from src.core.combinatorics import compositions, group_repeats
from src.core.errors import EmptyStations
from src.core.instance import ThetaMatrix
from src.core.result import ComputationResult, Quantity, WorkCounters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RowMultiplicity:
    """Distinct rows of theta with the number of copies of each row currently present."""
    base: ThetaMatrix
    mult: tuple

    @classmethod
    def fold(cls, theta):
        """Group identical rows of theta, keeping first-appearance order."""
        rows, mult, _ = group_repeats(theta.rows)
        return cls(ThetaMatrix(rows, theta.d), mult)


def _removal_order(counts):
    # class d is emptied first, then d - 1, ..., then class 1
    order = []
    for c in reversed(range(len(counts))):
        order.extend([c] * counts[c])
    remaining, removed = [], [0] * len(counts)
    for c in order:
        remaining.append(counts[c] - removed[c])
        removed[c] += 1
    return order, remaining


def recal_g(instance):
    """
    Compute G(theta, N) with RECAL,
    G(theta, N) = N_d^{-1} sum_i theta_id G(theta + theta_i, N - 1_d).

    Matrices reached by the recursion differ from theta only by extra copies of its
    rows, so each is a RowMultiplicity. Level l holds every multiplicity vector
    reachable after l removals (all with the same remaining population), computed
    from level N (where G(., 0) = 1) down to level 0. Work counter: multiplicity
    states filled, C(N + n', n') for n' distinct rows.
    """
    if instance.n < 1:
        raise EmptyStations("RECAL needs at least one row")
    folded = RowMultiplicity.fold(instance.theta)
    base, start = folded.base.rows, folded.mult
    k = len(base)
    order, remaining = _removal_order(instance.counts)

    upper = {increment: QQ.one for increment in compositions(len(order), k)}
    filled = len(upper)
    for level in reversed(range(len(order))):
        c = order[level]
        lower = {}
        for increment in compositions(level, k):
            total = QQ.zero
            for i in range(k):
                coefficient = base[i][c]
                if not coefficient:
                    continue
                grown = increment[:i] + (increment[i] + 1,) + increment[i + 1:]
                total += (start[i] + increment[i]) * coefficient * upper[grown]
            lower[increment] = total / remaining[level]
        filled += len(lower)
        upper = lower

    logger.debug("recal: n=%d distinct=%d d=%d states=%d", instance.n, k, instance.d, filled)
    return ComputationResult(
        quantity=Quantity.G,
        value=upper[(0,) * k],
        algorithm="recal",
        work=WorkCounters(table_entries=filled),
    )
