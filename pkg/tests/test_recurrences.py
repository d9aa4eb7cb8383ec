import itertools
import time

import numpy as np
import pytest
from sympy import QQ

from src.cli.generate import random_family, random_instance
from src.core.combinatorics import binomial, group_repeats, product
from src.core.instance import Population, ThetaMatrix, append_row
from src.oracles.states import bruteforce_g
from src.recurrences.convolution import ConvolutionTable, convolution_g
from src.recurrences.recal import RowMultiplicity, recal_g
from tests.helpers import FAMILY_SEED, make

GOLDEN = [
    ([[1], [2]], [2], 7),
    ([[1, 1], [2, 3]], [1, 1], 19),
    ([[1], [-1]], [2], 1),
    ([[1], [2]], [1], 3),
    ([[1, 1], [1, 1], [2, 3]], [1, 1], 28),
    ([[3, -1], [2, 5]], [0, 0], 1),
]


@pytest.mark.parametrize("algorithm", [convolution_g, recal_g])
@pytest.mark.parametrize("theta, population, expected", GOLDEN)
def test_golden_values(algorithm, theta, population, expected):
    assert algorithm(make(theta, population)).value == expected


@pytest.mark.parametrize("algorithm", [convolution_g, recal_g])
@pytest.mark.parametrize("n, N", [(1, 0), (1, 20), (2, 7), (3, 20), (5, 11), (20, 20)])
def test_all_ones_counts_states(algorithm, n, N):
    instance = make([[1]] * n, [N])
    assert algorithm(instance).value == binomial(N + n - 1, n - 1)


def test_convolution_table_base_layer():
    table = ConvolutionTable(Population((2, 1)))
    assert table.value((0, 0)) == 1
    assert all(table.value(m) == 0 for m in np.ndindex(3, 2) if m != (0, 0))
    assert table.cells_filled == 6


def test_recal_intermediate_matrices():
    # G((1, 2, 1), 1) = 4 and G((1, 2, 2), 1) = 5 feed the N = 2 step
    assert recal_g(make([[1], [2], [1]], [1])).value == 4
    assert recal_g(make([[1], [2], [2]], [1])).value == 5


def test_row_multiplicity_fold():
    theta = ThetaMatrix.from_rows([[1, 2], [3, 4], [1, 2]])
    folded = RowMultiplicity.fold(theta)
    assert folded.mult == (2, 1)
    assert folded.base.rows == ((QQ(1), QQ(2)), (QQ(3), QQ(4)))


def test_recurrences_agree_with_enumeration(desk_family):
    for instance in desk_family:
        expected = bruteforce_g(instance).value
        assert convolution_g(instance).value == expected, instance
        assert recal_g(instance).value == expected, instance


def test_convolution_work_counter(desk_family):
    for instance in desk_family:
        cells = (instance.n + 1) * product(count + 1 for count in instance.counts)
        assert convolution_g(instance).work.table_entries == cells


def test_recal_work_counter_counts_multiplicity_states(desk_family):
    for instance in desk_family:
        distinct = len(group_repeats(instance.theta.rows)[0])
        assert recal_g(instance).work.table_entries == binomial(instance.total + distinct, distinct)


def test_recal_work_grows_with_rows():
    rng = np.random.default_rng(FAMILY_SEED)
    counters = [recal_g(random_instance(rng, n, 1, (6,), distinct=True)).work.table_entries for n in (1, 2, 3, 4)]
    assert counters == sorted(counters)
    assert len(set(counters)) == 4


def _structural_family():
    return list(random_family(FAMILY_SEED + 2, 50))


def test_zero_row_invariance():
    for instance in _structural_family():
        padded = instance.with_theta(append_row(instance.theta, [0] * instance.d))
        assert convolution_g(padded).value == convolution_g(instance).value


def test_column_homogeneity():
    c = QQ(-3, 2)
    for instance in _structural_family():
        j = instance.d - 1
        rows = tuple(row[:j] + (row[j] * c,) + row[j + 1:] for row in instance.theta.rows)
        scaled = instance.with_theta(ThetaMatrix(rows, instance.d))
        assert convolution_g(scaled).value == c ** instance.counts[j] * convolution_g(instance).value


def test_row_permutation_invariance():
    rng = np.random.default_rng(FAMILY_SEED + 4)
    for instance in _structural_family():
        order = rng.permutation(instance.n)
        permuted = ThetaMatrix(tuple(instance.theta.rows[i] for i in order), instance.d)
        assert convolution_g(instance.with_theta(permuted)).value == convolution_g(instance).value


def test_column_population_permutation_invariance():
    rng = np.random.default_rng(FAMILY_SEED + 5)
    for instance in _structural_family():
        order = [int(j) for j in rng.permutation(instance.d)]
        rows = tuple(tuple(row[j] for j in order) for row in instance.theta.rows)
        permuted = make(rows, [instance.counts[j] for j in order])
        assert convolution_g(permuted).value == convolution_g(instance).value


def test_recal_is_invariant_under_input_duplicates_order():
    a = make([[1, 2], [3, 1], [1, 2]], [2, 1])
    b = make([[1, 2], [1, 2], [3, 1]], [2, 1])
    assert recal_g(a).value == recal_g(b).value == convolution_g(a).value


def test_convolution_large_population_is_fast():
    rng = np.random.default_rng(FAMILY_SEED)
    instance = random_instance(rng, 4, 1, (500,))
    start_time = time.perf_counter()
    result = convolution_g(instance)
    assert time.perf_counter() - start_time < 5
    assert result.work.table_entries == 5 * 501


def test_convolution_handles_every_small_lattice():
    for counts in itertools.product(range(3), repeat=2):
        instance = make([[1, 2], [2, 1], ["1/2", "-3"]], list(counts))
        assert convolution_g(instance).value == bruteforce_g(instance).value


def test_recal_with_many_stations():
    # auto picks RECAL here: C(1 + 1200, 1) states against 1201 * 2 cells
    result = recal_g(make([[i + 1] for i in range(1200)], [1]))
    assert result.value == 1200 * 1201 // 2
    assert result.work.table_entries == 1200 + 1
