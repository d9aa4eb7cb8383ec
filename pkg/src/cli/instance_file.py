import json
from dataclasses import dataclass

from src.core.errors import InvalidLiteral, MalformedInstanceFile
from src.core.instance import validate

QUANTITIES = ("G", "J", "both")


class _DecimalText(str):
    """Raw text of a JSON number with a fraction or exponent part."""


def _theta_literal(value):
    if isinstance(value, (bool, float)) or value is None:
        raise InvalidLiteral(f"unsupported scalar literal {value!r}", literal=repr(value))
    if isinstance(value, (int, str)):
        return str(value) if isinstance(value, _DecimalText) else value
    raise InvalidLiteral(f"unsupported scalar literal {value!r}", literal=repr(value))


def _population_entry(value):
    if isinstance(value, _DecimalText) or isinstance(value, bool) or not isinstance(value, int):
        raise InvalidLiteral(f"population entries must be JSON integers, got {value!r}", literal=str(value))
    return value


@dataclass(frozen=True)
class InstanceFile:
    theta: tuple
    population: tuple
    quantity: str = "both"

    def to_instance(self):
        return validate(self.theta, self.population)


def parse_instance_text(text):
    """Parse the JSON instance schema {"theta": [[...]], "population": [...], "quantity"?: ...}."""
    try:
        payload = json.loads(text, parse_float=_DecimalText)
    except json.JSONDecodeError as error:
        raise MalformedInstanceFile(f"instance file is not valid JSON: {error}") from None
    if not isinstance(payload, dict):
        raise MalformedInstanceFile("instance file must hold a JSON object")
    missing = [key for key in ("theta", "population") if key not in payload]
    if missing:
        raise MalformedInstanceFile(f"instance file is missing {', '.join(missing)}", missing=missing)

    theta = payload["theta"]
    if not isinstance(theta, list) or not all(isinstance(row, list) for row in theta):
        raise MalformedInstanceFile("theta must be a list of rows")
    population = payload["population"]
    if not isinstance(population, list):
        raise MalformedInstanceFile("population must be a list of integers")
    quantity = payload.get("quantity", "both")
    if quantity not in QUANTITIES:
        raise MalformedInstanceFile(f"quantity must be one of {', '.join(QUANTITIES)}, got {quantity!r}")

    return InstanceFile(
        theta=tuple(tuple(_theta_literal(value) for value in row) for row in theta),
        population=tuple(_population_entry(value) for value in population),
        quantity=quantity,
    )


def load_instance_file(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as error:
        raise MalformedInstanceFile(f"cannot read instance file {path}: {error}", path=str(path)) from None
    return parse_instance_text(text)
