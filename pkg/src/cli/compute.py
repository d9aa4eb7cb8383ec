import logging

from src.cli.instance_file import load_instance_file
from src.cli.registry import ALGORITHMS, run_algorithm, select_algorithm
from src.cli.render import render_error, render_result
from src.core.errors import AlgorithmPreconditionError, GuardExceeded, InvalidInstance, InvalidRange

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECONDITION = 3
EXIT_DISAGREEMENT = 4


def cmd_compute(path, settings, algorithm="auto", quantity=None, output="json"):
    """
    Compute G and/or J for one instance file.
    :return: (exit code, rendered text)
    """
    try:
        if algorithm != "auto" and algorithm not in ALGORITHMS:
            raise InvalidRange(f"unknown algorithm {algorithm!r}", choices=list(ALGORITHMS))
        instance_file = load_instance_file(path)
        instance = instance_file.to_instance()
    except (InvalidInstance, InvalidRange) as error:
        logger.warning("invalid input: %s", error)
        return EXIT_INVALID, render_error(error, output)

    name = select_algorithm(instance) if algorithm == "auto" else algorithm
    try:
        result = run_algorithm(name, instance, settings)
    except (AlgorithmPreconditionError, GuardExceeded) as error:
        logger.warning("%s cannot run: %s", name, error)
        return EXIT_PRECONDITION, render_error(error, output)

    return EXIT_OK, render_result(result, instance, quantity or instance_file.quantity, output, settings.decimal_digits)
