from dataclasses import dataclass

from src.core.errors import (
    DimensionMismatch,
    EmptyClasses,
    EmptyStations,
    IndexOutOfRange,
    InvalidLiteral,
    NegativePopulation,
)
from src.core.scalars import to_scalar


@dataclass(frozen=True)
class ThetaMatrix:
    """
    n x d coefficient matrix of the linear forms, rows = stations, columns = classes.
    n = 0 is the empty matrix used as the convolution termination operand.
    """
    rows: tuple
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise EmptyClasses("a coefficient matrix needs at least one column")
        for row in self.rows:
            if len(row) != self.d:
                raise DimensionMismatch(f"row of length {len(row)} in a matrix with {self.d} columns")

    @classmethod
    def from_rows(cls, rows, d=None):
        rows = tuple(tuple(to_scalar(value) for value in row) for row in rows)
        if d is None:
            if not rows:
                raise EmptyClasses("cannot infer the column count of an empty matrix")
            d = len(rows[0])
        return cls(rows, d)

    @classmethod
    def empty(cls, d):
        return cls((), d)

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, index):
        return self.rows[index]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def is_empty(self):
        return not self.rows


@dataclass(frozen=True)
class Population:
    """Per-class job counts N = (N_1, ..., N_d)."""
    counts: tuple

    def __post_init__(self):
        if not self.counts:
            raise EmptyClasses("population vector is empty")
        for j, count in enumerate(self.counts):
            if count < 0:
                raise NegativePopulation(f"N_{j + 1} = {count} is negative", index=j, value=count)

    @property
    def d(self):
        return len(self.counts)

    @property
    def total(self):
        return sum(self.counts)

    def is_zero(self):
        return self.total == 0

    def decrement(self, j):
        """Return N - 1_j; only defined when N_j >= 1."""
        if self.counts[j] < 1:
            raise NegativePopulation(f"cannot decrement N_{j + 1} = 0", index=j, value=0)
        counts = list(self.counts)
        counts[j] -= 1
        return Population(tuple(counts))


@dataclass(frozen=True)
class Instance:
    theta: ThetaMatrix
    population: Population

    def __post_init__(self):
        if self.theta.d != self.population.d:
            raise DimensionMismatch(
                f"theta has {self.theta.d} columns but the population has {self.population.d} classes"
            )

    @property
    def n(self):
        return self.theta.n

    @property
    def d(self):
        return self.theta.d

    @property
    def counts(self):
        return self.population.counts

    @property
    def total(self):
        return self.population.total

    def with_theta(self, theta):
        return Instance(theta, self.population)


def validate(raw_theta, raw_population):
    """
    Build a validated Instance from raw nested lists.
    :param raw_theta: Grid of scalars (ints, ExactScalars, "p/q" or decimal strings).
    :param raw_population: Vector of per-class integer counts.
    :return: Instance with n >= 1 and d >= 1.
    """
    raw_theta = [list(row) for row in raw_theta]
    raw_population = list(raw_population)
    for value in raw_population:
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidLiteral(f"population entries must be integers, got {value!r}", literal=repr(value))

    if not raw_population or (raw_theta and any(len(row) == 0 for row in raw_theta)):
        raise EmptyClasses("at least one class is required")
    if not raw_theta:
        raise EmptyStations("at least one row (station) is required")
    widths = {len(row) for row in raw_theta}
    if len(widths) != 1:
        raise DimensionMismatch(f"ragged coefficient matrix with row lengths {sorted(widths)}")
    d = widths.pop()
    if d != len(raw_population):
        raise DimensionMismatch(
            f"theta has {d} columns but the population has {len(raw_population)} entries",
            columns=d,
            classes=len(raw_population),
        )
    population = Population(tuple(raw_population))
    return Instance(ThetaMatrix.from_rows(raw_theta, d), population)


def remove_row(theta, i):
    """Return theta - theta_i; removing the last remaining row yields the empty matrix."""
    if not 0 <= i < theta.n:
        raise IndexOutOfRange(f"row index {i} outside 0..{theta.n - 1}", index=i)
    return ThetaMatrix(theta.rows[:i] + theta.rows[i + 1:], theta.d)


def append_row(theta, row):
    """Return theta + row, the new row placed last."""
    row = tuple(to_scalar(value) for value in row)
    if len(row) != theta.d:
        raise DimensionMismatch(f"row of length {len(row)} appended to a matrix with {theta.d} columns")
    return ThetaMatrix(theta.rows + (row,), theta.d)
