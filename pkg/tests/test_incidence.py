import numpy as np
import pytest

from conftest import random_graph
from kswitch.errors import NoEdgesError
from kswitch.generators import cycle, disjoint_union, figure4, path
from kswitch.graph import SignedGraph, connected_components
from kswitch.incidence import build_incidence, ceil_log3, injective_mu, mu_from_incidence
from kswitch.switching import is_positive_switching
from kswitch.ternary import inner_product

FIG4_B = [[1, 1, 1, 0, 0], [1, 0, 0, 1, 1], [0, 1, 0, -1, 0], [0, 0, -1, 0, 1]]


def test_figure4_matrix():
    assert build_incidence(figure4()).tolist() == FIG4_B
    mu = mu_from_incidence(figure4())
    assert [list(v) for v in mu.values] == FIG4_B
    assert injective_mu(figure4()) == mu


def test_single_edge_columns():
    assert build_incidence(path(2, 1)).tolist() == [[1], [1]]
    assert build_incidence(path(2, -1)).tolist() == [[1], [-1]]
    assert mu_from_incidence(path(2, 1)).values == ((1,), (1,))


def test_no_edges():
    with pytest.raises(NoEdgesError):
        build_incidence(SignedGraph(3))
    with pytest.raises(NoEdgesError):
        mu_from_incidence(SignedGraph(1))


def test_c3_negative():
    g = cycle(3, 1)
    mu = mu_from_incidence(g)
    assert mu.dimension == 3
    for u, v, s in g.edges:
        assert inner_product(mu[u], mu[v]) == s


def test_injective_mu_repairs():
    z = injective_mu(path(2, 1))
    assert z.values == ((1, 1), (1, 0))
    assert injective_mu(SignedGraph(3)).values == ((0,), (1,), (-1,))
    assert injective_mu(SignedGraph(1)).dimension == 1
    g = disjoint_union([path(2, 1), path(2, 1), SignedGraph(4)])
    z = injective_mu(g)
    assert z.dimension == g.m + ceil_log3(5)
    assert is_positive_switching(g, z, require_injective=True)


def test_ceil_log3():
    assert [ceil_log3(x) for x in (1, 2, 3, 4, 9, 10, 27, 28)] == [0, 1, 1, 2, 2, 3, 3, 4]


@pytest.mark.parametrize("seed", range(40))
def test_properties_random(seed):
    import random
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 10), rng.random())
    z = injective_mu(g)
    assert is_positive_switching(g, z, require_injective=True)
    if not g.m:
        return
    mu = mu_from_incidence(g)
    for u, v, s in g.edges:
        assert inner_product(mu[u], mu[v]) == s
    for v in range(g.n):
        assert inner_product(mu[v], mu[v]) == g.degree(v)
    assert is_positive_switching(g, mu)
    positive_k2 = any(c.n == 2 and c.m == 1 and c.edges[0][2] == 1
                      for c, _ in connected_components(g))
    if len(g.isolated_vertices()) <= 1 and not positive_k2:
        assert mu.is_injective()
        assert np.array_equal(np.array(z.values), build_incidence(g))

