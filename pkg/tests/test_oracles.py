import pytest
from sympy import QQ, symbols
from sympy.polys.rings import ring

from src.core.combinatorics import binomial, product
from src.core.conversion import j_to_g
from src.core.errors import ExpansionTooLarge, InvalidRange, StateSpaceTooLarge, ZeroNormalizingConstant
from src.core.result import Quantity
from src.oracles.monomial import integrate_polynomial, monomial_integrate_j, simplex_monomial_integral
from src.oracles.states import (
    NetworkState,
    bruteforce_g,
    enumerate_states,
    mean_queue_lengths,
    state_probability,
    state_space_size,
    state_weight,
)
from src.oracles.taylor import TruncatedSeries, taylor_g
from tests.helpers import make


def test_enumeration_covers_the_state_space(desk_family):
    for instance in desk_family[:40]:
        states = list(enumerate_states(instance))
        assert len(states) == state_space_size(instance)
        assert len(set(states)) == len(states)
        assert all(state.class_totals() == instance.counts for state in states)


def test_state_space_size():
    assert state_space_size(make([[1, 1], [2, 2], [3, 3]], [2, 1])) == 6 * 3
    assert state_space_size(make([[1]], [9])) == 1


def test_state_weight_examples():
    instance = make([[1, 1], [2, 3]], [1, 1])
    assert state_weight(instance, NetworkState(((1, 1), (0, 0)))) == 2
    assert state_weight(instance, NetworkState(((0, 0), (1, 1)))) == 12
    assert state_weight(instance, NetworkState(((1, 0), (0, 1)))) == 3
    assert state_weight(make([[0], [2]], [2]), NetworkState(((1,), (1,)))) == 0
    assert NetworkState(((1, 0), (0, 1))).row_totals == (1, 1)


def test_bruteforce_examples():
    assert bruteforce_g(make([[1], [2]], [2])).value == 7
    result = bruteforce_g(make([[1, 1], [2, 3]], [1, 1]))
    assert result.value == 19
    assert result.work.terms == 4


def test_bruteforce_guard():
    with pytest.raises(StateSpaceTooLarge) as caught:
        bruteforce_g(make([[1], [2]], [2]), guard=2)
    assert (caught.value.size, caught.value.limit) == (3, 2)


def test_state_probability_examples():
    instance = make([[1], [2]], [1])
    assert state_probability(instance, NetworkState(((1,), (0,)))) == QQ(1, 3)
    assert state_probability(instance, NetworkState(((0,), (1,))), g=QQ(3)) == QQ(2, 3)


def test_state_probabilities_sum_to_one(positive_family):
    for instance in positive_family:
        g = bruteforce_g(instance).value
        assert sum(state_probability(instance, state, g=g) for state in enumerate_states(instance)) == 1


def test_state_probability_needs_nonzero_g():
    instance = make([[1], [-1]], [1])
    assert bruteforce_g(instance).value == 0
    with pytest.raises(ZeroNormalizingConstant):
        state_probability(instance, NetworkState(((1,), (0,))))
    with pytest.raises(ZeroNormalizingConstant):
        mean_queue_lengths(instance)


def test_mean_queue_lengths(positive_family):
    assert mean_queue_lengths(make([[1], [2]], [1])) == ((QQ(1, 3),), (QQ(2, 3),))
    for instance in positive_family:
        means = mean_queue_lengths(instance)
        for j, count in enumerate(instance.counts):
            assert sum(row[j] for row in means) == count


def test_taylor_examples():
    assert taylor_g(make([[1], [2]], [2])).value == 7
    assert taylor_g(make([[1, 1], [2, 3]], [1, 1])).value == 19
    assert taylor_g(make([[1], [-1]], [2])).value == 1
    assert taylor_g(make([[1, 1], [2, 3]], [1, 1]), box=(3, 2)).value == 19


def test_truncated_geometric_series():
    one = TruncatedSeries.one((3,))
    (z,) = one.gens
    series = one.geometric(z * 2)
    assert len(series) == 4
    assert [series.coefficient((m,)) for m in range(5)] == [1, 2, 4, 8, 0]


def test_monomial_examples():
    result = monomial_integrate_j(make([[1], [2]], [2]))
    assert result.quantity is Quantity.J
    assert result.value == QQ(7, 3)
    assert monomial_integrate_j(make([[1], [0]], [1])).value == QQ(1, 2)
    assert monomial_integrate_j(make([[1], [-1]], [2])).value == QQ(1, 3)


def test_monomial_guard():
    with pytest.raises(ExpansionTooLarge):
        monomial_integrate_j(make([[1], [2]], [2]), guard=2)


def test_integrate_polynomial():
    R, x0, x1, x2 = ring(symbols("x0:3"), QQ)
    assert integrate_polynomial(R.one) == QQ(1, 2)
    assert integrate_polynomial(x0 * x1) == simplex_monomial_integral((1, 1, 0)) == QQ(1, 24)
    assert integrate_polynomial(x0 + x1 + x2) == 3 * QQ(1, 6)


def test_oracles_agree(desk_family):
    for instance in desk_family[:60]:
        expected = bruteforce_g(instance).value
        assert taylor_g(instance).value == expected
        assert j_to_g(monomial_integrate_j(instance).value, instance) == expected


def test_taylor_box_must_cover_population():
    instance = make([[1, 1], [2, 3]], [1, 1])
    with pytest.raises(InvalidRange):
        taylor_g(instance, box=(1, 0))
    with pytest.raises(InvalidRange):
        taylor_g(instance, box=(2,))


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("N", range(0, 7))
def test_state_count_formula(n, N):
    for counts in [(N,), (N, 6 - N)]:
        instance = make([[i + 1] * len(counts) for i in range(n)], list(counts))
        expected = product(binomial(count + n - 1, n - 1) for count in counts)
        assert state_space_size(instance) == expected
        assert sum(1 for _ in enumerate_states(instance)) == expected
