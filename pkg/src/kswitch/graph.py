"""Signed graphs and ordinary (1-) switching."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .clique import CliqueSearch
from .errors import InputError

Edge = tuple[int, int, int]
#: A 1-switching: one entry in {+1, -1} per vertex.
OneSwitching = tuple[int, ...]


@dataclass(frozen=True)
class SignedGraph:
    """Simple undirected graph on vertices ``0..n-1`` with edge signs in {+1, -1}.

    Edges are stored canonically as ``(u, v, sign)`` with ``u < v``, sorted,
    so two graphs are equal exactly when they have the same signed edges.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        seen: set[tuple[int, int]] = set()
        canon = []
        for e in self.edges:
            try:
                u, v, s = (int(x) for x in e)
            except (TypeError, ValueError) as exc:
                raise InputError(f"bad edge {e!r}") from exc
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {u}-{v} has an endpoint outside 0..{self.n - 1}")
            if s not in (1, -1):
                raise InputError(f"edge sign must be +1 or -1, got {s}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InputError(f"parallel edge {u}-{v}")
            seen.add((u, v))
            canon.append((u, v, s))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _signs(self) -> dict[tuple[int, int], int]:
        return {(u, v): s for u, v, s in self.edges}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        bits = [0] * self.n
        for u, v, _ in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    def sign(self, u: int, v: int) -> int | None:
        """Sign of edge ``uv``, or ``None`` if the vertices are not adjacent."""
        if u > v:
            u, v = v, u
        return self._signs.get((u, v))

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.neighbors[v]]

    def is_all_positive(self) -> bool:
        return all(s == 1 for _, _, s in self.edges)

    def is_all_negative(self) -> bool:
        return all(s == -1 for _, _, s in self.edges)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def with_signs(self, signs: Iterable[int]) -> SignedGraph:
        """Same underlying graph with new edge signs, given in canonical edge order."""
        return SignedGraph(self.n, tuple((u, v, s) for (u, v, _), s in zip(self.edges, signs, strict=True)))

    def induced_subgraph(self, vertices: Sequence[int]) -> SignedGraph:
        """Subgraph induced on ``vertices``, relabelled ``0..len-1`` in the given order."""
        idx = {v: i for i, v in enumerate(vertices)}
        es = [(idx[u], idx[v], s) for u, v, s in self.edges if u in idx and v in idx]
        return SignedGraph(len(vertices), tuple(es))

    def triangles(self) -> list[tuple[int, int, int]]:
        adj = self.adjacency_bits
        out = []
        for u, v, _ in self.edges:
            common = adj[u] & adj[v] & ~((1 << (v + 1)) - 1)
            while common:
                low = common & -common
                out.append((u, v, low.bit_length() - 1))
                common ^= low
        return out


def negate(g: SignedGraph) -> SignedGraph:
    """The graph with every edge sign reversed."""
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def _check_one_switching(g: SignedGraph, eta: Sequence[int]) -> None:
    if len(eta) != g.n:
        raise InputError(f"1-switching has {len(eta)} values for {g.n} vertices")
    for x in eta:
        if x not in (1, -1):
            raise InputError(f"1-switching value {x} is not +1 or -1")


def apply_1_switching(g: SignedGraph, eta: Sequence[int]) -> SignedGraph:
    _check_one_switching(g, eta)
    return SignedGraph(g.n, tuple((u, v, s * eta[u] * eta[v]) for u, v, s in g.edges))


@dataclass(frozen=True)
class BalanceCertificate:
    """Either a switching to all-positive signs or a negative cycle."""

    balanced: bool
    switching: OneSwitching | None = None
    negative_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.balanced


def _normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    i = min(range(len(cycle)), key=cycle.__getitem__)
    c = list(cycle[i:]) + list(cycle[:i])
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Sign product of the closed walk ``cycle[0], ..., cycle[-1], cycle[0]``."""
    prod = 1
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        s = g.sign(a, b)
        if s is None:
            raise InputError(f"{a}-{b} is not an edge")
        prod *= s
    return prod


def _bfs_forest(g: SignedGraph):
    eta = [0] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    tree: set[tuple[int, int]] = set()
    for root in range(g.n):
        if eta[root]:
            continue
        eta[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if not eta[w]:
                    eta[w] = eta[u] * g.sign(u, w)
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    tree.add((min(u, w), max(u, w)))
                    queue.append(w)
    return eta, parent, depth, tree


def forest_switching(g: SignedGraph) -> OneSwitching:
    """1-switching that makes every edge of a breadth-first spanning forest positive."""
    return tuple(_bfs_forest(g)[0])


def is_balanced(g: SignedGraph) -> BalanceCertificate:
    """Balance test by breadth-first spanning forest.

    Roots get +1 and each tree child gets its parent's value times the tree
    edge sign; the first non-tree edge (canonical order) that stays negative
    closes a negative cycle with the tree path between its ends.
    """
    eta, parent, depth, tree = _bfs_forest(g)
    for u, v, s in g.edges:
        if (u, v) in tree or s * eta[u] * eta[v] == 1:
            continue
        up, down = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            up.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            down.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            up.append(a)
            down.append(b)
        cycle = up + down[-2::-1]
        return BalanceCertificate(False, negative_cycle=_normalize_cycle(cycle))
    return BalanceCertificate(True, switching=tuple(eta))


def is_antibalanced(g: SignedGraph) -> BalanceCertificate:
    """Balance certificate of the negated graph.

    A returned switching makes ``g`` all negative.
    """
    return is_balanced(negate(g))


def connected_components(g: SignedGraph) -> list[tuple[SignedGraph, tuple[int, ...]]]:
    """Components in order of their smallest vertex.

    Each entry is ``(component, vertex_map)`` where ``vertex_map[i]`` is the
    original id of the component's vertex ``i`` (ids kept in increasing order).
    """
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        vmap = tuple(sorted(comp))
        out.append((g.induced_subgraph(vmap), vmap))
    return out


def clique_number(g: SignedGraph) -> int:
    if g.n == 0:
        raise InputError("clique number of the empty graph is undefined")
    return len(CliqueSearch(g.adjacency_bits).solve())


def has_negative_triangle(g: SignedGraph) -> bool:
    return any(g.sign(a, b) * g.sign(b, c) * g.sign(a, c) == -1 for a, b, c in g.triangles())
