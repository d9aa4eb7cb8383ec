import functools
import itertools

from mpmath.libmp.libintmath import ifac


@functools.lru_cache(maxsize=None)
def factorial(k):
    return int(ifac(k))


@functools.lru_cache(maxsize=None)
def binomial(a, b):
    if b < 0 or a < b:
        return 0
    return factorial(a) // (factorial(b) * factorial(a - b))


def multinomial(parts):
    """(sum parts)! / prod(part!) for nonnegative integer parts."""
    result = factorial(sum(parts))
    for part in parts:
        result //= factorial(part)
    return result


def compositions(total, length):
    """
    Yield every tuple of `length` nonnegative integers summing to `total`.
    Order is lexicographic, first component ascending.
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    # stars and bars: length - 1 bar positions among total + length - 1 slots
    slots = total + length - 1
    for bars in itertools.combinations(range(slots), length - 1):
        previous = -1
        parts = []
        for bar in bars:
            parts.append(bar - previous - 1)
            previous = bar
        parts.append(slots - previous - 1)
        yield tuple(parts)


def count_compositions(total, length):
    if length == 0:
        return 1 if total == 0 else 0
    return binomial(total + length - 1, length - 1)


def product(values):
    result = 1
    for value in values:
        result *= value
    return result


def group_repeats(items):
    """
    Group equal items in first-appearance order.
    :return: (distinct items, multiplicities, index of each group's first member)
    """
    distinct, mult, first_index = [], [], []
    for index, item in enumerate(items):
        if item in distinct:
            mult[distinct.index(item)] += 1
        else:
            distinct.append(item)
            mult.append(1)
            first_index.append(index)
    return tuple(distinct), tuple(mult), tuple(first_index)
