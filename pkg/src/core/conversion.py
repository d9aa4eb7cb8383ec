from sympy import QQ

from src.core.combinatorics import factorial, product
from src.core.errors import EmptyStations
from src.core.result import Quantity


def _scale(instance):
    # N_1! ... N_d! / (N + n - 1)!
    if instance.n < 1:
        raise EmptyStations("J is undefined for an empty coefficient matrix")
    top = product(factorial(count) for count in instance.counts)
    return QQ(top, factorial(instance.total + instance.n - 1))


def g_to_j(g, instance):
    """J(theta, N) = N_1!...N_d! / (N + n - 1)! * G(theta, N)."""
    return _scale(instance) * g


def j_to_g(j, instance):
    return j / _scale(instance)


def as_j(result, instance):
    """Turn a G result into the matching J result, keeping algorithm and work counters."""
    if result.quantity is Quantity.J:
        return result
    return result.with_value(Quantity.J, g_to_j(result.value, instance))


def as_g(result, instance):
    if result.quantity is Quantity.G:
        return result
    return result.with_value(Quantity.G, j_to_g(result.value, instance))
