import itertools
import logging
import time

import numpy as np
import pandas as pd
from tqdm import tqdm

from src.cli.compute import EXIT_INVALID, EXIT_OK
from src.cli.generate import random_instance
from src.cli.registry import ALGORITHMS, run_algorithm
from src.cli.render import render_error, value_hash
from src.core.errors import AlgorithmPreconditionError, GuardExceeded, InvalidRange

logger = logging.getLogger(__name__)

COLUMNS = ["instance", "n", "d", "population", "algorithm", "status", "work", "table_entries", "terms", "wall_time", "value_hash"]


def parse_range(text, name, minimum=0):
    """
    Parse "4", "2-4" or "50,100,200" (pieces may be mixed, e.g. "1-3,8").
    :return: sorted list of distinct integers
    """
    values = set()
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if "-" in piece[1:]:
                low, high = piece.split("-", 1)
                values.update(range(int(low), int(high) + 1))
            else:
                values.add(int(piece))
    except ValueError:
        raise InvalidRange(f"malformed {name} range {text!r}", name=name) from None
    if not values:
        raise InvalidRange(f"empty {name} range {text!r}", name=name)
    if min(values) < minimum:
        raise InvalidRange(f"{name} values must be >= {minimum}, got {text!r}", name=name)
    return sorted(values)


class BenchmarkRun:
    def __init__(self, settings, algorithms):
        unknown = [name for name in algorithms if name not in ALGORITHMS]
        if unknown or not algorithms:
            raise InvalidRange(f"unknown algorithms {unknown}" if unknown else "no algorithms given", choices=list(ALGORITHMS))
        self.settings = settings
        self.algorithms = list(algorithms)
        self.records = []

    def measure(self, index, instance, name):
        record = {
            "instance": index,
            "n": instance.n,
            "d": instance.d,
            "population": ",".join(str(count) for count in instance.counts),
            "algorithm": name,
        }
        start_time = time.perf_counter()
        try:
            result = run_algorithm(name, instance, self.settings)
        except (AlgorithmPreconditionError, GuardExceeded) as error:
            record.update(status=f"skipped: {error.code}", work=None, table_entries=None, terms=None, value_hash=None)
        else:
            record.update(
                status="ok",
                work=result.work.total,
                table_entries=result.work.table_entries,
                terms=result.work.terms,
                value_hash=value_hash(result.value),
            )
        record["wall_time"] = time.perf_counter() - start_time
        self.records.append(record)
        logger.debug("bench %s on instance %d: %s", name, index, record["status"])

    def frame(self):
        frame = pd.DataFrame(self.records, columns=COLUMNS)
        return frame.astype({"work": "Int64", "table_entries": "Int64", "terms": "Int64"})


def cmd_bench(settings, n_values, d_values, count_values, algorithms, output="csv", progress=True):
    """
    Measure work counters and wall time over the family n x d x N, one seeded
    instance per shape with population (N, ..., N).
    :return: (exit code, rendered table)
    """
    try:
        n_range = parse_range(n_values, "n", minimum=1)
        d_range = parse_range(d_values, "d", minimum=1)
        count_range = parse_range(count_values, "N", minimum=0)
        run = BenchmarkRun(settings, algorithms)
    except InvalidRange as error:
        return EXIT_INVALID, render_error(error, "json" if output == "json" else "text")

    rng = np.random.default_rng(settings.seed)
    shapes = list(itertools.product(n_range, d_range, count_range))
    for index, (n, d, count) in enumerate(tqdm(shapes, desc="bench", disable=not progress)):
        instance = random_instance(rng, n, d, (count,) * d)
        for name in run.algorithms:
            run.measure(index, instance, name)

    frame = run.frame()
    if output == "json":
        return EXIT_OK, frame.to_json(orient="records")
    return EXIT_OK, frame.to_csv(index=False)
