import random

import pytest

from lsquare.monomials import parse_ideal
from lsquare.randoms import sample_ideal

ACCEPTANCE_SEED = 1
ACCEPTANCE_COUNT = 500
ACCEPTANCE_MAX_N = 7
ACCEPTANCE_MAX_Q = 5


@pytest.fixture(scope="session")
def sweep_ideals():
    """The seeded 500-ideal sample shared by the acceptance criteria."""
    rng = random.Random(ACCEPTANCE_SEED)
    return [
        sample_ideal(rng, ACCEPTANCE_MAX_N, ACCEPTANCE_MAX_Q)
        for _ in range(ACCEPTANCE_COUNT)
    ]


@pytest.fixture(scope="session")
def sweep_results(sweep_ideals):
    """Full invariant-suite results for every sweep ideal, computed once."""
    from lsquare.randoms import ideal_checks

    return [ideal_checks(ideal) for ideal in sweep_ideals]


@pytest.fixture()
def running_ideal():
    ideal, _ = parse_ideal("abe,bc,cdf,ad")
    return ideal


@pytest.fixture()
def four_variables_ideal():
    ideal, _ = parse_ideal("x,y,z,w")
    return ideal


@pytest.fixture()
def sharpness_ideal():
    ideal, _ = parse_ideal("xabc,yade,zbdf,wcef")
    return ideal
