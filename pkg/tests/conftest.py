import random
from fractions import Fraction

import pytest

from superyangian.core import AlgebraParams
from superyangian.normal_form import yangian

CONFIGS = [(1, 1), (2, 1), (1, 2), (2, 2)]


def random_element(Y, rng: random.Random, max_deg1: int = 6, max_terms: int = 3, max_len: int = 4):
    """A free (unreduced) random element: words of generators, deg_1 bounded."""
    out = Y.zero
    D = Y.size
    for _ in range(rng.randint(1, max_terms)):
        budget = rng.randint(0, max_deg1)
        word = Y.one
        length = 0
        while budget > 0 and length < max_len:
            r = rng.randint(1, min(budget, 3))
            word = word * Y.t(rng.randint(1, D), rng.randint(1, D), r)
            budget -= r
            length += 1
        out = out + word.scale(rng.choice([1, -1, 2, 3, -1, 2]) * rng.choice([1, 1, 1, Fraction(1, 2)]))
    return out


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=CONFIGS, ids=lambda mn: f"gl{mn[0]}|{mn[1]}")
def mn(request):
    return request.param


@pytest.fixture
def gl11():
    return yangian(1, 1)


@pytest.fixture
def gl21():
    return yangian(2, 1)
