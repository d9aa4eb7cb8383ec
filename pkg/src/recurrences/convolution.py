import logging

import numpy as np
from sympy import QQ

from src.core.errors import EmptyStations
from src.core.result import ComputationResult, Quantity, WorkCounters

logger = logging.getLogger(__name__)


class ConvolutionTable:
    """
    Population lattice 0 <= m <= N for one prefix of rows of theta.

    Layer i holds G(theta restricted to its first i rows, m). Only two layers are
    kept alive since the recurrence references layers i - 1 and i.
    """

    def __init__(self, population):
        self.shape = tuple(count + 1 for count in population.counts)
        self.cells_filled = 0
        self.layer = self._base_layer()

    def _base_layer(self):
        # G(empty, m) = 0 for m != 0 and G(., 0) = 1
        layer = np.full(self.shape, QQ.zero, dtype=object)
        layer[(0,) * len(self.shape)] = QQ.one
        self.cells_filled += layer.size
        return layer

    def add_row(self, row):
        """Advance from layer i - 1 to layer i by folding in one row of theta."""
        previous = self.layer
        current = np.empty(self.shape, dtype=object)
        # np.ndindex walks in C order, so every m - 1_j is filled before m
        for m in np.ndindex(*self.shape):
            value = previous[m]
            for j, coefficient in enumerate(row):
                if m[j] == 0 or not coefficient:
                    continue
                lower = m[:j] + (m[j] - 1,) + m[j + 1:]
                value += coefficient * current[lower]
            current[m] = value
        self.layer = current
        self.cells_filled += current.size

    def value(self, m=None):
        if m is None:
            m = tuple(size - 1 for size in self.shape)
        return self.layer[tuple(m)]


def convolution_g(instance):
    """
    Compute G(theta, N) with the convolution recurrence
    G(theta, N) = G(theta - theta_n, N) + sum_j theta_nj G(theta, N - 1_j).

    Work counter: (n + 1) * prod_j (N_j + 1) table cells, row 0 included.
    """
    if instance.n < 1:
        raise EmptyStations("convolution needs at least one row")
    table = ConvolutionTable(instance.population)
    for row in instance.theta.rows:
        table.add_row(row)
    logger.debug("convolution: n=%d d=%d cells=%d", instance.n, instance.d, table.cells_filled)
    return ComputationResult(
        quantity=Quantity.G,
        value=table.value(),
        algorithm="convolution",
        work=WorkCounters(table_entries=table.cells_filled),
    )
