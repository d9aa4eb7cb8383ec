import logging

from sympy import QQ, symbols
from sympy.polys.rings import ring

from src.core.errors import InvalidRange
from src.core.result import ComputationResult, Quantity, WorkCounters

logger = logging.getLogger(__name__)


class TruncatedSeries:
    """
    Multivariate power series in z_1..z_d over QQ keeping only the monomials z^m
    with 0 <= m <= box componentwise; everything outside the box is dropped.
    """

    def __init__(self, poly, box):
        self.poly = poly
        self.box = tuple(box)
        self._truncate()

    @classmethod
    def one(cls, box):
        R, *_ = ring(symbols(f"z0:{len(box)}"), QQ)
        return cls(R.one, box)

    @property
    def ring(self):
        return self.poly.ring

    @property
    def gens(self):
        return self.poly.ring.gens

    def _truncate(self):
        outside = [monom for monom in self.poly if any(e > b for e, b in zip(monom, self.box))]
        if outside:
            poly = self.poly.copy()
            for monom in outside:
                del poly[monom]
            self.poly = poly

    def __mul__(self, other):
        other_poly = other.poly if isinstance(other, TruncatedSeries) else other
        return TruncatedSeries(self.poly * other_poly, self.box)

    def __add__(self, other):
        other_poly = other.poly if isinstance(other, TruncatedSeries) else other
        return TruncatedSeries(self.poly + other_poly, self.box)

    def __len__(self):
        return len(self.poly)

    def coefficient(self, m):
        return self.poly.get(tuple(m), QQ.zero)

    def geometric(self, form):
        """1 / (1 - form) truncated to the box, for a form with no constant term."""
        series = TruncatedSeries(self.ring.one, self.box)
        power = series
        while True:
            power = power * form
            if not power.poly:
                return series
            series = series + power


def taylor_g(instance, box=None):
    """
    G as the coefficient of z^N in prod_i (1 - sum_j z_j theta_ij)^(-1), multiplying
    one box-truncated geometric series per row of theta.
    :param box: Truncation box, at least N componentwise; defaults to N itself.
    """
    counts = instance.counts
    box = tuple(counts) if box is None else tuple(box)
    if len(box) != len(counts) or any(b < count for b, count in zip(box, counts)):
        raise InvalidRange(f"truncation box {list(box)} must cover the population {list(counts)}", box=list(box))
    running = TruncatedSeries.one(box)
    gens = running.gens
    peak = len(running)
    for row in instance.theta.rows:
        form = running.ring.zero
        for z_j, theta_ij in zip(gens, row):
            form += z_j * theta_ij
        running = running * running.geometric(form)
        peak = max(peak, len(running))
    logger.debug("taylor: n=%d box=%s coefficients=%d", instance.n, box, peak)
    return ComputationResult(
        quantity=Quantity.G,
        value=running.coefficient(counts),
        algorithm="taylor",
        work=WorkCounters(table_entries=peak),
    )
