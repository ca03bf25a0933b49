import random

import pytest

from hdx.groups import group_from_spec
from hdx.instances import complete_complex, single_simplex


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture(scope="session")
def f2():
    return group_from_spec("Z2")


@pytest.fixture(scope="session")
def z3():
    return group_from_spec("Z3")


@pytest.fixture(scope="session")
def s3():
    return group_from_spec("S3")


@pytest.fixture(scope="session")
def k4_skeleton():
    return complete_complex(4, 2)


@pytest.fixture(scope="session")
def tetrahedron():
    return single_simplex(3)
