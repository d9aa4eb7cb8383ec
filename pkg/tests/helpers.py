from hypothesis import strategies as st
from sympy import QQ

from src.core.instance import Instance, Population, ThetaMatrix, validate

FAMILY_SEED = 20240601


def make(theta, population):
    return validate(theta, population)


scalars = st.fractions(min_value=-5, max_value=5, max_denominator=4).map(lambda f: QQ(f.numerator, f.denominator))


@st.composite
def instances(draw, max_n=3, max_d=2, max_count=3):
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    rows = draw(st.lists(st.lists(scalars, min_size=d, max_size=d).map(tuple), min_size=n, max_size=n))
    counts = draw(st.lists(st.integers(0, max_count), min_size=d, max_size=d))
    return Instance(ThetaMatrix(tuple(rows), d), Population(tuple(counts)))
