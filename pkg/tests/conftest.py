from __future__ import annotations

import random
from itertools import combinations, product

import pytest

from kswitch.graph import SignedGraph
from kswitch.switching import SwitchingAssignment
from kswitch.ternary import enumerate_vectors, inner_product

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SignedGraph:
    edges = [(u, v, rng.choice((1, -1))) for u, v in combinations(range(n), 2) if rng.random() < p]
    return SignedGraph(n, tuple(edges))


def random_assignment(rng: random.Random, g: SignedGraph, k: int) -> SwitchingAssignment:
    """A uniformly built valid k-switching: each vertex avoids orthogonality with earlier neighbours."""
    vectors = enumerate_vectors(k)
    while True:
        vals: list = []
        for v in range(g.n):
            ok = [x for x in vectors
                  if all(inner_product(x, vals[w]) != 0 for w in g.neighbors[v] if w < v)]
            if not ok:
                break
            vals.append(rng.choice(ok))
        else:
            return SwitchingAssignment(k, tuple(vals))


def all_signed_graphs(n: int):
    """Every simple graph on ``n`` labelled vertices with every sign pattern."""
    pairs = list(combinations(range(n), 2))
    for states in product((0, 1, -1), repeat=len(pairs)):
        yield SignedGraph(n, tuple((u, v, s) for (u, v), s in zip(pairs, states) if s))


def enumerate_cycles(g: SignedGraph) -> list[tuple[int, ...]]:
    """All cycles, each once (start at its smallest vertex, fixed direction)."""
    found = set()

    def extend(path):
        start, last = path[0], path[-1]
        for w in g.neighbors[last]:
            if w == start and len(path) >= 3 and path[1] < path[-1]:
                found.add(tuple(path))
            elif w > start and w not in path:
                extend(path + [w])

    for s in range(g.n):
        extend([s])
    return sorted(found)


def cycle_sign_oracle(g: SignedGraph, cyc) -> int:
    s = 1
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        s *= g.sign(a, b)
    return s


@pytest.fixture
def rng():
    return random.Random(20240611)
