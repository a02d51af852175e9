"""Constructors for the signed-graph families and fixed examples.

Vertex ``v_i`` of the usual 1-based drawings is id ``i - 1`` here.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InputError
from .graph import SignedGraph, apply_1_switching
from .switching import SwitchingAssignment


def cycle(n: int, negative_edge_count: int = 1) -> SignedGraph:
    """Cycle ``v1 v2 ... vn v1``; edges ``e_i = v_i v_{i+1}`` with ``e_n = v_n v_1``.

    The first ``negative_edge_count`` edges ``e_1, e_2, ...`` are negative.
    """
    if n < 3:
        raise InputError(f"a cycle needs n >= 3, got {n}")
    if not 0 <= negative_edge_count <= n:
        raise InputError(f"negative edge count must be in 0..{n}")
    edges = [(i, (i + 1) % n, -1 if i < negative_edge_count else 1) for i in range(n)]
    return SignedGraph(n, tuple(edges))


def path(n: int, sign: int = 1) -> SignedGraph:
    if n < 1:
        raise InputError(f"a path needs n >= 1, got {n}")
    if sign not in (1, -1):
        raise InputError("sign must be +1 or -1")
    return SignedGraph(n, tuple((i, i + 1, sign) for i in range(n - 1)))


def complete(n: int, negative_edges: str = "none") -> SignedGraph:
    """``K_n`` with no, one (``v1 vn``) or all edges negative."""
    if n < 1:
        raise InputError(f"a complete graph needs n >= 1, got {n}")
    if negative_edges not in ("none", "one", "all"):
        raise InputError(f"negative_edges must be none, one or all, got {negative_edges!r}")
    if negative_edges == "one" and n < 2:
        raise InputError("K_1 has no edge to make negative")
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if negative_edges == "all" or (negative_edges == "one" and (u, v) == (0, n - 1)):
                edges.append((u, v, -1))
            else:
                edges.append((u, v, 1))
    return SignedGraph(n, tuple(edges))


def wheel_antibalanced(n: int) -> SignedGraph:
    """Wheel with ``n`` spokes: rim ``v1..vn`` all negative, hub ``v_{n+1}`` joined positively."""
    if n < 3:
        raise InputError(f"a wheel needs n >= 3 spokes, got {n}")
    rim = [(i, (i + 1) % n, -1) for i in range(n)]
    spokes = [(i, n, 1) for i in range(n)]
    return SignedGraph(n + 1, tuple(rim + spokes))


def figure1() -> SignedGraph:
    """4-cycle whose only negative edge is ``v1 v2``."""
    return cycle(4, 1)


def figure2() -> SignedGraph:
    es = [(1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7), (6, 7)]
    return SignedGraph(7, tuple((u - 1, v - 1, -1) for u, v in es))


FIGURE3_ETA = (-1, -1, 1, 1, 1, 1, 1)


def figure3() -> SignedGraph:
    """``figure2`` switched at ``v1`` and ``v2``."""
    return apply_1_switching(figure2(), FIGURE3_ETA)


def figure4() -> SignedGraph:
    es = [(1, 2, 1), (1, 3, 1), (1, 4, -1), (2, 3, -1), (2, 4, 1)]
    return SignedGraph(4, tuple((u - 1, v - 1, s) for u, v, s in es))


def disjoint_union(graphs: Sequence[SignedGraph]) -> SignedGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset, s) for u, v, s in g.edges)
        offset += g.n
    return SignedGraph(offset, tuple(edges))


def add_pendant(g: SignedGraph, attach_vertex: int, sign: int = 1) -> SignedGraph:
    """New vertex ``g.n`` joined to ``attach_vertex``."""
    if not 0 <= attach_vertex < g.n:
        raise InputError(f"no vertex {attach_vertex}")
    return SignedGraph(g.n + 1, g.edges + ((attach_vertex, g.n, sign),))


# Explicit switchings from the constructions for each family.

def cycle_positive_switching(n: int) -> SwitchingAssignment:
    """2-dimensional (or 3 for n = 3) positive switching of ``cycle(n, 1)``."""
    # the family construction negates e_n = v_n v_1; here e_1 is the negative
    # edge, so vertex i plays the role of v_i and vertex 0 that of v_n
    if n == 3:
        base = [(1, 0, 0), (1, 1, 1), (-1, 1, 1)]
    else:
        base = [(1, 0), (1, 1)] + [(0, 1)] * (n - 3) + [(-1, 1)]
    return SwitchingAssignment.from_vectors([base[(i - 1) % n] for i in range(n)])


def wheel_positive_switching(n: int) -> SwitchingAssignment:
    """3-dimensional positive switching of ``wheel_antibalanced(n)`` by circular shifts."""
    def shift(v):
        return v[1:] + v[:1]

    rim = [(-1, 1, 1)]
    for _ in range(1, n):
        rim.append(shift(rim[-1]))
    if n % 3 == 1:
        rim[-1] = (1, 1, -1)
    return SwitchingAssignment.from_vectors(rim + [(1, 1, 1)])


def complete_one_negative_switching(n: int) -> SwitchingAssignment:
    return SwitchingAssignment.from_vectors([(-1, 1, 1)] + [(1, 1, 1)] * (n - 2) + [(1, 1, -1)])


FAMILIES = {
    "cycle": "cycle N NEG  (first NEG edges negative)",
    "path": "path N SIGN  (SIGN is + or -)",
    "complete": "complete N none|one|all",
    "wheel": "wheel N  (antibalanced, N spokes)",
    "figure1": "figure1", "figure2": "figure2", "figure3": "figure3", "figure4": "figure4",
}


def from_family(name: str, params: Sequence[str]) -> SignedGraph:
    """Build a family member from command-line style string parameters."""
    try:
        if name == "cycle":
            n, neg = params
            return cycle(int(n), int(neg))
        if name == "path":
            n, s = params
            if s not in ("+", "-"):
                raise InputError("path sign must be + or -")
            return path(int(n), 1 if s == "+" else -1)
        if name == "complete":
            n, which = params
            return complete(int(n), which)
        if name == "wheel":
            (n,) = params
            return wheel_antibalanced(int(n))
        if name in ("figure1", "figure2", "figure3", "figure4") and not params:
            return globals()[name]()
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad parameters for {name}: {' '.join(params)}") from exc
    if name in FAMILIES:
        raise InputError(f"usage: gen {FAMILIES[name]}")
    raise InputError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
