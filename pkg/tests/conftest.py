import pytest

from src.cli.generate import random_family
from src.core.config import Settings
from src.core.instance import ThetaMatrix
from tests.helpers import FAMILY_SEED


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture(scope="session")
def desk_family():
    """Seeded n <= 4, d <= 3, N_j <= 6 instances with a state space small enough to enumerate."""
    return list(random_family(FAMILY_SEED, 200, state_limit=2000))


@pytest.fixture(scope="session")
def positive_family():
    instances = []
    for instance in random_family(FAMILY_SEED + 1, 20, state_limit=500):
        rows = tuple(tuple(abs(value) + 1 for value in row) for row in instance.theta.rows)
        instances.append(instance.with_theta(ThetaMatrix(rows, instance.d)))
    return instances
