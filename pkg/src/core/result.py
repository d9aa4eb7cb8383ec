from dataclasses import dataclass, field, replace
from enum import Enum


class Quantity(str, Enum):
    G = "G"
    J = "J"


@dataclass(frozen=True)
class WorkCounters:
    table_entries: int = 0
    terms: int = 0

    def as_dict(self):
        return {"table_entries": self.table_entries, "terms": self.terms}

    @property
    def total(self):
        return self.table_entries + self.terms


@dataclass(frozen=True)
class ComputationResult:
    quantity: Quantity
    value: object
    algorithm: str
    work: WorkCounters = field(default_factory=WorkCounters)

    def with_value(self, quantity, value):
        return replace(self, quantity=quantity, value=value)
