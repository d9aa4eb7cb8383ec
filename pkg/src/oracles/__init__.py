from src.oracles.monomial import integrate_polynomial, monomial_integrate_j
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

__all__ = [
    "NetworkState",
    "TruncatedSeries",
    "bruteforce_g",
    "enumerate_states",
    "integrate_polynomial",
    "mean_queue_lengths",
    "monomial_integrate_j",
    "state_probability",
    "state_space_size",
    "state_weight",
    "taylor_g",
]
