"""Exact maximum clique by branch and bound over integer bitsets.

Greedy colouring gives the bound (Tomita-style MCQ); vertices are relabelled
by descending degree so that bit order is the colouring order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


def bitsets_from_matrix(mat: np.ndarray) -> list[int]:
    """Row ``i`` of a boolean square matrix -> int whose bit ``j`` is ``mat[i, j]``."""
    packed = np.packbits(np.asarray(mat, dtype=bool), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class CliqueSearch:
    """Maximum clique search over an adjacency given as bitsets.

    ``adj[i]`` must not contain bit ``i``.  ``nodes`` counts branch nodes over
    every call to :meth:`solve`.
    """

    adj: Sequence[int]
    nodes: int = 0
    _order: list[int] = field(init=False, repr=False)
    _radj: list[int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.adj)
        degree = [a.bit_count() for a in self.adj]
        self._order = sorted(range(n), key=lambda v: (-degree[v], v))
        pos = {v: i for i, v in enumerate(self._order)}
        radj = []
        for v in self._order:
            m = 0
            for w in iter_bits(self.adj[v]):
                m |= 1 << pos[w]
            radj.append(m)
        self._radj = radj
        self._pos = pos

    def _to_internal(self, mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= 1 << self._pos[v]
        return out

    def solve(self, candidates: int | None = None, *, at_least: int = 0,
              stop_at: int | None = None) -> list[int]:
        """Largest clique inside ``candidates`` (all vertices by default).

        Returns ``[]`` unless a clique larger than ``at_least`` exists.  The
        search stops early once a clique of size ``stop_at`` is found, so pass
        a proven upper bound there.
        """
        n = len(self.adj)
        if candidates is None:
            P = (1 << n) - 1
        else:
            P = self._to_internal(candidates)
        radj = self._radj
        best: list[int] = []
        best_size = at_least
        limit = stop_at if stop_at is not None else n + 1
        R: list[int] = []

        def expand(P: int) -> bool:
            nonlocal best, best_size
            self.nodes += 1
            # greedy colouring of P in bit order
            order: list[int] = []
            colours: list[int] = []
            Q = P
            colour = 0
            while Q:
                colour += 1
                avail = Q
                while avail:
                    low = avail & -avail
                    v = low.bit_length() - 1
                    avail &= ~radj[v] & ~low
                    Q &= ~low
                    order.append(v)
                    colours.append(colour)
            for i in range(len(order) - 1, -1, -1):
                if len(R) + colours[i] <= best_size:
                    return False
                v = order[i]
                R.append(v)
                NP = P & radj[v]
                if NP:
                    if expand(NP):
                        return True
                elif len(R) > best_size:
                    best = list(R)
                    best_size = len(R)
                    if best_size >= limit:
                        R.pop()
                        return True
                R.pop()
                P &= ~(1 << v)
            return False

        if P:
            expand(P)
        return sorted(self._order[v] for v in best)


def max_clique(adj: Sequence[int], candidates: int | None = None) -> list[int]:
    return CliqueSearch(adj).solve(candidates)
