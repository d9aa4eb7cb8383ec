import logging

from src.core.combinatorics import binomial, group_repeats, product
from src.core.conversion import as_g
from src.explicit import explicit1_g, explicit2_g, explicit_repeated_g, gen_g, koe58_g
from src.oracles import bruteforce_g, monomial_integrate_j, taylor_g
from src.recurrences import convolution_g, recal_g

logger = logging.getLogger(__name__)

# Fixed order used for cross-check rendering.
ALGORITHMS = {
    "convolution": convolution_g,
    "recal": recal_g,
    "koe58": koe58_g,
    "gen": gen_g,
    "explicit1": explicit1_g,
    "explicit_repeated": explicit_repeated_g,
    "explicit2": explicit2_g,
    "taylor": taylor_g,
    "bruteforce": bruteforce_g,
    "monomial": monomial_integrate_j,
}

AUTO_CANDIDATES = ("convolution", "recal")


def run_algorithm(name, instance, settings):
    """Run one algorithm and return its result as a G result."""
    if name == "bruteforce":
        result = bruteforce_g(instance, guard=settings.state_guard)
    elif name == "monomial":
        result = monomial_integrate_j(instance, guard=settings.expansion_guard)
    else:
        result = ALGORITHMS[name](instance)
    return as_g(result, instance)


def estimate_work(instance):
    """
    Work counters the two recurrences will report, from their closed forms:
    convolution fills (n + 1) * prod_j (N_j + 1) cells, RECAL fills C(N + n', n')
    multiplicity states for n' distinct rows.
    """
    distinct = len(group_repeats(instance.theta.rows)[0])
    return {
        "convolution": (instance.n + 1) * product(count + 1 for count in instance.counts),
        "recal": binomial(instance.total + distinct, distinct),
    }


def select_algorithm(instance):
    estimates = estimate_work(instance)
    choice = min(AUTO_CANDIDATES, key=lambda name: (estimates[name], AUTO_CANDIDATES.index(name)))
    logger.info("auto-selected %s from estimates %s", choice, estimates)
    return choice
