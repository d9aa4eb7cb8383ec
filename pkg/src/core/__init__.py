from src.core.errors import SimplexError
from src.core.instance import Instance, Population, ThetaMatrix, append_row, remove_row, validate
from src.core.conversion import as_j, g_to_j, j_to_g
from src.core.result import ComputationResult, Quantity, WorkCounters
from src.core.scalars import ExactScalar, to_scalar

__all__ = [
    "ComputationResult",
    "ExactScalar",
    "Instance",
    "Population",
    "Quantity",
    "SimplexError",
    "ThetaMatrix",
    "WorkCounters",
    "append_row",
    "as_j",
    "g_to_j",
    "j_to_g",
    "remove_row",
    "to_scalar",
    "validate",
]
