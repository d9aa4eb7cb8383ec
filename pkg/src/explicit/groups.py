from dataclasses import dataclass

from src.core.combinatorics import group_repeats


@dataclass(frozen=True)
class CoefficientGroups:
    """
    Distinct coefficients (scalars when d = 1, whole rows otherwise) with their
    multiplicities; first_index keeps the position of each group's first member.
    """
    distinct: tuple
    mult: tuple
    first_index: tuple

    @classmethod
    def from_items(cls, items):
        return cls(*group_repeats(items))

    @classmethod
    def from_rows(cls, theta):
        return cls.from_items(theta.rows)

    @classmethod
    def from_column(cls, theta, j=0):
        return cls.from_items(theta.column(j))

    def __len__(self):
        return len(self.distinct)

    @property
    def size(self):
        return sum(self.mult)

    def has_repeats(self):
        return any(m > 1 for m in self.mult)
