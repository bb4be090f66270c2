import random

import pytest
from hypothesis import settings

from oddcycles.graph import Graph, build

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240611)
