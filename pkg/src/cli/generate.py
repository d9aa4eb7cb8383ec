import numpy as np
from sympy import QQ

from src.core.instance import Instance, Population, ThetaMatrix
from src.oracles.states import state_space_size

DENOMINATORS = (1, 2, 3, 4)
BOUND = 5


def random_scalar(rng):
    """Random rational p/q in [-5, 5] with q in {1, 2, 3, 4}."""
    q = int(rng.choice(DENOMINATORS))
    p = int(rng.integers(-BOUND * q, BOUND * q + 1))
    return QQ(p, q)


def _columns_distinct(rows):
    return all(len(set(column)) == len(column) for column in zip(*rows))


def random_instance(rng, n, d, population, distinct=False):
    """
    Seeded instance with random rational coefficients.
    :param distinct: Redraw until every column holds pairwise distinct entries.
    """
    while True:
        rows = tuple(tuple(random_scalar(rng) for _ in range(d)) for _ in range(n))
        if not distinct or _columns_distinct(rows):
            return Instance(ThetaMatrix(rows, d), Population(tuple(population)))


def random_family(seed, count, n_max=4, d_max=3, count_max=6, state_limit=None, distinct=False):
    """
    Yield `count` seeded instances with 1 <= n <= n_max, 1 <= d <= d_max and
    0 <= N_j <= count_max. With state_limit, shapes whose state space exceeds it
    are redrawn so the enumeration oracle stays cheap.
    """
    rng = np.random.default_rng(seed)
    produced = 0
    while produced < count:
        n = int(rng.integers(1, n_max + 1))
        d = int(rng.integers(1, d_max + 1))
        population = tuple(int(value) for value in rng.integers(0, count_max + 1, size=d))
        instance = random_instance(rng, n, d, population, distinct=distinct)
        if state_limit is not None and state_space_size(instance) > state_limit:
            continue
        produced += 1
        yield instance
