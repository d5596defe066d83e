import random

import pytest

from seifert import Forest


def random_forest(rng: random.Random, vmax: int = 12,
                  attach: float = 0.75) -> Forest:
    """Uniform-attachment random forest: vertex i >= 1 hangs onto a random
    earlier vertex with the given probability, else starts a new tree."""
    v = rng.randint(0, vmax)
    edges = []
    for i in range(1, v):
        if rng.random() < attach:
            edges.append((rng.randrange(i), i))
    return Forest.from_edges(v, edges)


@pytest.fixture
def rng():
    return random.Random(20260825)
