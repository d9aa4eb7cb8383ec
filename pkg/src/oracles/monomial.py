import logging

from sympy import QQ, symbols
from sympy.polys.rings import ring

from src.core.combinatorics import count_compositions, factorial, product
from src.core.config import DEFAULT_SETTINGS
from src.core.errors import ExpansionTooLarge
from src.core.result import ComputationResult, Quantity, WorkCounters

logger = logging.getLogger(__name__)


def simplex_monomial_integral(exponents):
    """Integral of x^a over the unit simplex: prod_i a_i! / (|a| + n - 1)!."""
    return QQ(product(factorial(a) for a in exponents), factorial(sum(exponents) + len(exponents) - 1))


def integrate_polynomial(poly):
    """
    Integrate a polynomial (element of a sympy ring over QQ in n variables) over the
    unit simplex in R^n, term by term.
    """
    total = QQ.zero
    for monom, coefficient in poly.terms():
        total += coefficient * simplex_monomial_integral(monom)
    return total


def monomial_integrate_j(instance, guard=None):
    """
    J(theta, N) computed directly: expand prod_j (sum_i theta_ij x_i)^N_j into monomials
    and integrate each one. Independent of every G algorithm.
    """
    guard = DEFAULT_SETTINGS.expansion_guard if guard is None else guard
    size = count_compositions(instance.total, instance.n)
    if size > guard:
        raise ExpansionTooLarge(f"expansion may reach {size} monomials, guard is {guard}", size, guard)

    R, *xs = ring(symbols(f"x0:{instance.n}"), QQ)
    integrand = R.one
    for j, count in enumerate(instance.counts):
        if count == 0:
            continue
        form = R.zero
        for x_i, theta_ij in zip(xs, instance.theta.column(j)):
            form += x_i * theta_ij
        integrand *= form ** count
    value = integrate_polynomial(integrand)
    logger.debug("monomial: n=%d N=%d monomials=%d", instance.n, instance.total, len(integrand))
    return ComputationResult(
        quantity=Quantity.J,
        value=value,
        algorithm="monomial",
        work=WorkCounters(terms=len(integrand)),
    )
