import random

import pytest

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.algebra.free_cga import FreeCGA
from scripts.biquotient.config import FIXTURES_DIR


@pytest.fixture
def fixture_path():
    def _path(name: str) -> str:
        return str(FIXTURES_DIR / name)
    return _path


@pytest.fixture
def mixed_algebra() -> FreeCGA:
    """Two odd and two even generators."""
    return FreeCGA.from_degrees([("a", 1), ("x", 2), ("b", 3), ("y", 4)])


def random_element(algebra: FreeCGA, rng: random.Random, max_degree: int = 6) -> Element:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        degree = rng.randint(0, max_degree)
        basis = algebra.monomial_basis(degree)
        if basis:
            terms[rng.choice(basis)] = rng.randint(-3, 3)
    return Element(algebra, terms)
