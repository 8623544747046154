from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from rumin_poisson.exterior import Multiform, layout
from rumin_poisson.lie_model import buildModel
from rumin_poisson.scalars import Scalar

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small = st.fractions(min_value=-7, max_value=7, max_denominator=7)
scalars = st.builds(Scalar, small, small)


def forms(n=1, max_terms=4):
    dim = layout(n).dim
    return st.dictionaries(st.integers(0, (1 << dim) - 1), scalars, max_size=max_terms).map(
        lambda d: Multiform(n, d)
    )


def homogeneous(n=1, degree=None, max_terms=3):
    dim = layout(n).dim
    masks = [m for m in range(1 << dim) if degree is None or bin(m).count("1") == degree]
    return st.dictionaries(st.sampled_from(masks), scalars, max_size=max_terms).map(lambda d: Multiform(n, d))


def frac(a, b=1):
    return Fraction(a, b)


@pytest.fixture(scope="session", params=[1, 2, 3])
def model(request):
    return buildModel(request.param)


@pytest.fixture(scope="session")
def model1():
    return buildModel(1)


@pytest.fixture(scope="session")
def model2():
    return buildModel(2)
