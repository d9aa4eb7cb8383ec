import json
import logging
from dataclasses import dataclass, field

from tqdm import tqdm

from src.cli.compute import EXIT_DISAGREEMENT, EXIT_INVALID, EXIT_OK
from src.cli.generate import random_family
from src.cli.instance_file import load_instance_file
from src.cli.registry import ALGORITHMS, run_algorithm
from src.cli.render import quantity_fields, render_check, render_error
from src.core.errors import AlgorithmPreconditionError, GuardExceeded, InvalidInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckEntry:
    algorithm: str
    result: object = None
    reason: str = None
    message: str = None

    @property
    def skipped(self):
        return self.result is None


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)
    reference: str = None
    reference_value: object = None

    @property
    def agreement(self):
        return all(entry.skipped or entry.result.value == self.reference_value for entry in self.entries)

    def disagreeing(self):
        return [entry.algorithm for entry in self.entries if not entry.skipped and entry.result.value != self.reference_value]

    def as_dict(self, instance, digits):
        results = []
        for entry in self.entries:
            if entry.skipped:
                results.append({"algorithm": entry.algorithm, "status": "skipped", "reason": entry.reason, "message": entry.message})
                continue
            item = {"algorithm": entry.algorithm, "status": "ok"}
            item.update(quantity_fields(entry.result.value, instance, "both", digits))
            item["work"] = entry.result.work.as_dict()
            results.append(item)
        reference = {"algorithm": self.reference}
        reference.update(quantity_fields(self.reference_value, instance, "both", digits))
        return {
            "status": "ok" if self.agreement else "disagreement",
            "agreement": self.agreement,
            "reference": reference,
            "results": results,
        }


def check_instance(instance, settings, algorithms=None):
    """Run every algorithm on one instance and compare against the reference value."""
    report = CheckReport()
    for name in algorithms or ALGORITHMS:
        try:
            report.entries.append(CheckEntry(name, result=run_algorithm(name, instance, settings)))
        except (AlgorithmPreconditionError, GuardExceeded) as error:
            report.entries.append(CheckEntry(name, reason=error.code, message=error.message))

    by_name = {entry.algorithm: entry for entry in report.entries}
    brute = by_name.get("bruteforce")
    reference = brute if brute is not None and not brute.skipped else by_name.get("convolution")
    if reference is None or reference.skipped:
        reference = CheckEntry("convolution", result=run_algorithm("convolution", instance, settings))
    report.reference = reference.algorithm
    report.reference_value = reference.result.value
    if not report.agreement:
        logger.error("cross-check disagreement on %s: %s", instance, report.disagreeing())
    return report


def cmd_check(path, settings, output="json"):
    """
    Cross-check every applicable algorithm on one instance file.
    :return: (exit code, rendered text)
    """
    try:
        instance = load_instance_file(path).to_instance()
    except InvalidInstance as error:
        return EXIT_INVALID, render_error(error, output)
    report = check_instance(instance, settings)
    code = EXIT_OK if report.agreement else EXIT_DISAGREEMENT
    return code, render_check(report, instance, output, settings.decimal_digits)


def run_family(settings, count, state_limit=10**4, progress=True):
    """
    Cross-check a seeded random family (n <= 4, d <= 3, N_j <= 6).
    :return: list of (instance, CheckReport) pairs
    """
    instances = list(random_family(settings.seed, count, state_limit=state_limit))
    reports = []
    for instance in tqdm(instances, desc="check", disable=not progress):
        reports.append((instance, check_instance(instance, settings)))
    return reports


def cmd_check_family(settings, count, output="json", progress=True):
    reports = run_family(settings, count, progress=progress)
    failures = [(instance, report) for instance, report in reports if not report.agreement]
    summary = {
        "status": "ok" if not failures else "disagreement",
        "instances": len(reports),
        "disagreements": len(failures),
        "seed": settings.seed,
    }
    if output == "json":
        return (EXIT_OK if not failures else EXIT_DISAGREEMENT), json.dumps(summary)
    lines = [f"{key}: {value}" for key, value in summary.items()]
    return (EXIT_OK if not failures else EXIT_DISAGREEMENT), "\n".join(lines)
