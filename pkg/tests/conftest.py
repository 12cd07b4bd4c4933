import random

import pytest

from clumplab.canonical import canonicalize
from clumplab.constructions import counterexample_graph, eppt_odd
from clumplab.core import WeightedClumpGraph, make_clump_graph, min_weighted_degree


def random_layered_graph(rng: random.Random, k: int = 3, max_depth: int = 12,
                         max_weight: int = 6) -> WeightedClumpGraph:
    """A random rooted k-colorable layered weighted graph (not canonical)."""
    depth = rng.randint(0, max_depth)
    layers = [[(rng.randrange(k), 1)]]
    prev = {layers[0][0][0]}
    for _ in range(depth):
        while True:
            cols = [c for c in range(k) if rng.random() < 0.55]
            if len(prev) == 1:
                cols = [c for c in cols if c not in prev]
            if cols:
                break
        layers.append([(c, rng.randint(1, max_weight)) for c in cols])
        prev = set(cols)
    return make_clump_graph(k, layers)


def canonical_pair(graph: WeightedClumpGraph) -> tuple[WeightedClumpGraph, int]:
    delta = min_weighted_degree(graph)
    result, _ = canonicalize(graph, delta)
    return result, delta


@pytest.fixture(scope="session")
def corpus_k3() -> list[tuple[WeightedClumpGraph, int]]:
    """Canonical 3-colored graphs with their minimum degrees."""
    out = []
    for delta in (2, 4, 5):
        for p in (1, 2):
            out.append(canonical_pair(counterexample_graph(1, delta, p)))
    rng = random.Random(20240817)
    for _ in range(40):
        out.append(canonical_pair(random_layered_graph(rng)))
    return out


@pytest.fixture(scope="session")
def corpus_by_k() -> dict[int, list[tuple[WeightedClumpGraph, int]]]:
    """Canonical graphs keyed by color count, for the certificate checks."""
    k3 = [canonical_pair(counterexample_graph(1, d, p)) for d in (4, 5) for p in (1, 2)]
    k4 = [(eppt_odd(2, 5, d), 5) for d in (4, 6, 9)]
    k5 = [canonical_pair(counterexample_graph(2, d, p)) for d in (4, 7) for p in (1, 2)]
    return {3: k3, 4: k4, 5: k5}
