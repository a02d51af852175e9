"""The incidence construction: a positive switching of dimension m read off
the incidence matrix of the negated graph, plus an injective variant."""

from __future__ import annotations

import numpy as np

from .errors import NoEdgesError
from .graph import SignedGraph, connected_components
from .switching import SwitchingAssignment
from .ternary import enumerate_lines


def build_incidence(g: SignedGraph) -> np.ndarray:
    """``n x m`` matrix; column ``k`` is edge ``k`` in canonical order.

    The smaller endpoint gets +1 and the other endpoint gets the edge sign.
    """
    if g.m == 0:
        raise NoEdgesError("graph has no edges")
    B = np.zeros((g.n, g.m), dtype=np.int8)
    for k, (u, v, s) in enumerate(g.edges):
        B[u, k] = 1
        B[v, k] = s
    return B


def mu_from_incidence(g: SignedGraph) -> SwitchingAssignment:
    """Row ``i`` of the incidence matrix as the vector of vertex ``i``.

    Endpoint products equal the edge signs and each squared norm is the
    vertex degree, so this always switches ``g`` to all positive.
    """
    B = build_incidence(g)
    return SwitchingAssignment(g.m, tuple(tuple(int(x) for x in row) for row in B))


def _distinct_suffixes(count: int, d: int) -> list[tuple[int, ...]]:
    # zero first, then +/- pairs of line representatives
    out = [(0,) * d]
    for line in enumerate_lines(d):
        out.append(line)
        out.append(tuple(-x for x in line))
    return out[:count]


def ceil_log3(x: int) -> int:
    """Least ``d >= 0`` with ``3**d >= x``."""
    d = 0
    while 3 ** d < x:
        d += 1
    return d


def injective_mu(g: SignedGraph) -> SwitchingAssignment:
    """An injective positive switching built from the incidence construction.

    If the plain construction already is injective it is returned as is.
    Otherwise extra coordinates separate the two ends of each positive-edge
    component and give isolated vertices pairwise distinct suffixes.
    """
    if g.m == 0:
        d = max(1, ceil_log3(g.n))
        return SwitchingAssignment(d, tuple(_distinct_suffixes(g.n, d)))
    mu = mu_from_incidence(g)
    if mu.is_injective():
        return mu
    isolated = g.isolated_vertices()
    d = max(1, ceil_log3(len(isolated) + 1))
    suffix = {v: [0] * d for v in range(g.n)}
    for comp, vmap in connected_components(g):
        if comp.n == 2 and comp.edges[0][2] == 1:
            suffix[vmap[0]][0] = 1
    for v, s in zip(isolated, _distinct_suffixes(len(isolated), d)):
        suffix[v] = list(s)
    return SwitchingAssignment(g.m + d, tuple(mu[v] + tuple(suffix[v]) for v in range(g.n)))
