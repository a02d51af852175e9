"""Exact balancing dimension (bdim) and strong balancing dimension (sbdim).

Both are found by trying k = lower bound, lower bound + 1, ... and asking a
complete backtracking search whether a (injective) positive k-switching
exists.  A failed search at k certifies that no such switching exists, so
the first success is the exact value.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from . import nip
from .clique import bitsets_from_matrix
from .errors import CapacityError, InputError
from .graph import (SignedGraph, apply_1_switching, clique_number, connected_components,
                    forest_switching, has_negative_triangle, is_antibalanced, is_balanced)
from .incidence import ceil_log3, injective_mu, mu_from_incidence
from .switching import SwitchingAssignment, compose, is_positive_switching
from .ternary import ENUM_CAP, enumerate_vectors, orbit_representatives

#: Default limit on ``(3**k) ** n`` for the brute-force oracle.
ORACLE_BUDGET = 2_000_000

#: ``nu_bar`` is only consulted for antibalanced complete graphs up to this order.
NU_BAR_MAX_N = 8


@dataclass
class BoundTrace:
    lower_bounds: list[tuple[str, int]] = field(default_factory=list)
    upper_bounds: list[tuple[str, int]] = field(default_factory=list)

    @property
    def effective_lower(self) -> int:
        return max((v for _, v in self.lower_bounds), default=1)

    @property
    def effective_upper(self) -> int | None:
        return min((v for _, v in self.upper_bounds), default=None)

    def upper_source(self) -> str | None:
        u = self.effective_upper
        return next((name for name, v in self.upper_bounds if v == u), None)

    def as_dict(self) -> dict:
        return {
            "lower": [[n, v] for n, v in self.lower_bounds],
            "upper": [[n, v] for n, v in self.upper_bounds],
            "effective_lower": self.effective_lower,
            "effective_upper": self.effective_upper,
        }


@dataclass
class DimensionResult:
    kind: str  # "bdim" | "sbdim"
    value: int
    witness: SwitchingAssignment
    trace: BoundTrace
    nodes: int = 0
    elapsed: float = 0.0
    convention: bool = False
    certified: list[tuple[int, bool]] = field(default_factory=list)

    def as_dict(self, timing: bool = False) -> dict:
        stats = {"nodes": self.nodes, "searched": [[k, ok] for k, ok in self.certified]}
        if timing:
            stats["elapsed"] = round(self.elapsed, 6)
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": {"dimension": self.witness.dimension,
                        "vectors": [list(v) for v in self.witness.values]},
            "bounds": self.trace.as_dict(),
            "stats": stats,
            "convention": self.convention,
        }


# -- bounds ----------------------------------------------------------------

def _antibalanced_complete_nu_bar(g: SignedGraph) -> tuple[str, int] | None:
    if g.n < 2 or not g.is_complete() or not is_antibalanced(g):
        return None
    if g.n <= NU_BAR_MAX_N:
        return "antibalanced-complete", nip.nu_bar(g.n)
    return "nip-size", g.n - 1


def _is_unbalanced_cycle(g: SignedGraph) -> bool:
    return _is_cycle_graph(g) and not is_balanced(g)


def _is_antibalanced_wheel(g: SignedGraph) -> bool:
    n = g.n
    if n < 4 or g.m != 2 * (n - 1):
        return False
    hubs = [v for v in range(n) if g.degree(v) == n - 1]
    if not hubs:
        return False
    rim = [v for v in range(n) if v != hubs[0]]
    if not _is_cycle_graph(g.induced_subgraph(rim)):
        return False
    return bool(is_antibalanced(g))


def _is_cycle_graph(g: SignedGraph) -> bool:
    return (g.n >= 3 and g.m == g.n and all(g.degree(v) == 2 for v in range(g.n))
            and len(connected_components(g)) == 1)


def lower_bounds(g: SignedGraph, kind: str = "bdim") -> BoundTrace:
    """Every applicable proven lower bound on ``kind`` for ``g``."""
    if kind not in ("bdim", "sbdim"):
        raise InputError(f"kind must be bdim or sbdim, got {kind!r}")
    out = [("trivial", 1)]
    if kind == "sbdim" and g.is_all_positive():
        return BoundTrace(out)
    if not is_balanced(g):
        out.append(("unbalanced", 2))
    if has_negative_triangle(g):
        out.append(("negative-triangle", 3))
    # A clique needs pairwise non-orthogonal vectors, at most two per line,
    # but only if they are distinct: bdim may repeat a vector across a
    # positive clique (balanced K_3 has bdim 1), so this is sbdim-only.
    if kind == "sbdim" and g.m:
        p = -(-clique_number(g) // 2)
        k = nip.lambda_inverse(p)
        if k is not None:
            out.append(("clique-lambda", k))
    if kind == "sbdim" and g.n:
        if not g.isolated_vertices():
            out.append(("log3", ceil_log3(g.n + 1)))
        else:
            out.append(("injective-count", ceil_log3(g.n)))
    ab = _antibalanced_complete_nu_bar(g)
    if ab is not None:
        out.append(ab)
    return BoundTrace(out)


def upper_bounds(g: SignedGraph, kind: str = "bdim") -> list[tuple[str, int]]:
    if kind == "sbdim":
        if g.is_all_positive():
            return [("all-positive-convention", 1)]
        out = [("injective-mu", injective_mu(g).dimension)]
        if g.n >= 2 and g.is_complete() and g.is_all_negative() and g.n <= NU_BAR_MAX_N:
            out.append(("all-negative-complete", nip.nu_bar(g.n)))
        return out
    if g.m == 0:
        return [("edgeless", 1)]
    out = [("edge-count", g.m)]
    if is_balanced(g):
        out.append(("balanced", 1))
    if _is_unbalanced_cycle(g):
        out.append(("unbalanced-cycle", 3 if g.n == 3 else 2))
    if _is_antibalanced_wheel(g):
        out.append(("antibalanced-wheel", 3))
    ab = _antibalanced_complete_nu_bar(g)
    if ab is not None and ab[0] == "antibalanced-complete":
        out.append(ab)
    return out


def bound_trace(g: SignedGraph, kind: str = "bdim") -> BoundTrace:
    trace = lower_bounds(g, kind)
    trace.upper_bounds = upper_bounds(g, kind)
    return trace


# -- search ----------------------------------------------------------------

@lru_cache(maxsize=16)
def _tables(k: int):
    vectors = enumerate_vectors(k)
    M = np.array(vectors, dtype=np.int16)
    G = M @ M.T
    pos = bitsets_from_matrix(G > 0)
    neg = bitsets_from_matrix(G < 0)
    index = {v: i for i, v in enumerate(vectors)}
    root = 0
    for r in orbit_representatives(k):
        root |= 1 << index[r]
    return vectors, pos, neg, root


def search_order(g: SignedGraph) -> list[int]:
    """Non-isolated vertices: components in order, then descending degree, ties by id."""
    order = []
    for _, vmap in connected_components(g):
        if len(vmap) > 1:
            order.extend(sorted(vmap, key=lambda v: (-g.degree(v), v)))
    return order


def _search_from(g: SignedGraph, k: int, injective: bool, order: list[int],
                 roots: int) -> tuple[dict[int, int] | None, int]:
    vectors, pos, neg, _ = _tables(k)
    full = (1 << len(vectors)) - 1
    rank = {v: i for i, v in enumerate(order)}
    later = [[(w, g.sign(v, w)) for w in g.neighbors[v] if rank[w] > rank[v]] for v in order]
    dom = {v: full for v in order}
    assign: dict[int, int] = {}
    nodes = 0
    used = 0
    depth_n = len(order)

    def rec(d: int) -> bool:
        nonlocal nodes, used
        if d == depth_n:
            return True
        v = order[d]
        cand = dom[v] & ~used if injective else dom[v]
        if d == 0:
            cand &= roots
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            nodes += 1
            pc, nc = pos[c], neg[c]
            taken = used | low
            saved = []
            ok = True
            for w, s in later[d]:
                nd = dom[w] & (pc if s > 0 else nc)
                if not (nd & ~taken if injective else nd):
                    ok = False
                    break
                saved.append((w, dom[w]))
                dom[w] = nd
            if ok:
                assign[v] = c
                if injective:
                    used = taken
                if rec(d + 1):
                    return True
                if injective:
                    used &= ~low
                del assign[v]
            for w, old in saved:
                dom[w] = old
        return False

    found = rec(0)
    return (dict(assign) if found else None), nodes


def _worker(args):
    g, k, injective, order, root = args
    return _search_from(g, k, injective, order, root)


def _search(g: SignedGraph, k: int, injective: bool, order: list[int], threads: int):
    _, _, _, roots = _tables(k)
    if threads <= 1 or not order:
        return _search_from(g, k, injective, order, roots)
    singles = []
    r = roots
    while r:
        low = r & -r
        singles.append(low)
        r ^= low
    total = 0
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_worker, (g, k, injective, order, s)) for s in singles]
        try:
            # the first success in root order wins, as in the sequential search
            for fut in futures:
                assign, nodes = fut.result()
                total += nodes
                if assign is not None:
                    return assign, total
        finally:
            for fut in futures:
                fut.cancel()
    return None, total


@dataclass
class SearchStats:
    nodes: int = 0


def find_k_positive(g: SignedGraph, k: int, injective: bool = False, *, threads: int = 1,
                    stats: SearchStats | None = None) -> SwitchingAssignment | None:
    """A (injective) positive k-switching of ``g``, or ``None`` if none exists.

    The search is complete.  Signed permutations of the coordinates preserve
    every inner product, so the first searched vertex only tries one
    representative per orbit.  Without injectivity, components are solved
    independently, each with its own restricted first vertex.
    """
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if k > ENUM_CAP:
        raise CapacityError(f"k = {k} exceeds the enumeration cap {ENUM_CAP}")
    stats = stats if stats is not None else SearchStats()
    vectors = _tables(k)[0]
    zero = (0,) * k
    isolated = g.isolated_vertices()
    values: list[tuple[int, ...] | None] = [None] * g.n
    if injective:
        if g.n > 3 ** k:
            return None
        order = search_order(g)
        assign, nodes = _search(g, k, True, order, threads)
        stats.nodes += nodes
        if assign is None:
            return None
        for v, c in assign.items():
            values[v] = vectors[c]
        taken = set(vectors[c] for c in assign.values())
        spare = (v for v in (zero,) + vectors if v not in taken)
        for v in isolated:
            values[v] = next(spare)
    else:
        for comp, vmap in connected_components(g):
            if comp.n == 1:
                values[vmap[0]] = zero
                continue
            assign, nodes = _search(comp, k, False, search_order(comp), threads)
            stats.nodes += nodes
            if assign is None:
                return None
            for v, c in assign.items():
                values[vmap[v]] = vectors[c]
    return SwitchingAssignment(k, tuple(values))


def brute_force_oracle(g: SignedGraph, k: int, injective: bool = False, *,
                       budget: int = ORACLE_BUDGET) -> SwitchingAssignment | None:
    """Plain enumeration of every map ``V -> {-1,0,1}^k`` in canonical order."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if (3 ** k) ** g.n > budget:
        raise CapacityError(f"(3^{k})^{g.n} assignments exceed the budget {budget}")
    vectors = enumerate_vectors(k, include_zero=True)
    N = len(vectors)
    sign = [[0] * N for _ in range(N)]
    for i, a in enumerate(vectors):
        for j, b in enumerate(vectors):
            p = sum(x * y for x, y in zip(a, b))
            sign[i][j] = (p > 0) - (p < 0)
    edges = g.edges
    for combo in product(range(N), repeat=g.n):
        if all(sign[combo[u]][combo[v]] == s for u, v, s in edges):
            if injective and len(set(combo)) != g.n:
                continue
            return SwitchingAssignment(k, tuple(vectors[i] for i in combo))
    return None


# -- dimensions ------------------------------------------------------------

def _constant(n: int) -> SwitchingAssignment:
    return SwitchingAssignment(1, ((1,),) * n)


def _solve_component(comp: SignedGraph, max_k: int | None, threads: int, stats: SearchStats,
                     certified: list) -> SwitchingAssignment:
    trace = bound_trace(comp, "bdim")
    lo, hi = trace.effective_lower, trace.effective_upper
    for k in range(lo, hi + 1):
        if max_k is not None and k > max_k:
            raise CapacityError(f"bdim exceeds --max-k {max_k}", lower=k, upper=hi)
        if k == hi and trace.upper_source() == "edge-count":
            return mu_from_incidence(comp)
        zeta = find_k_positive(comp, k, threads=threads, stats=stats)
        certified.append((k, zeta is not None))
        if zeta is not None:
            return zeta
    raise AssertionError(f"no positive switching found up to the proven upper bound {hi}")


def bdim(g: SignedGraph, *, max_k: int | None = None, threads: int = 1) -> DimensionResult:
    """Balancing dimension with a witness.

    The graph is first switched so that a spanning forest is positive (bdim
    does not change under 1-switching); each component is then solved on its
    own and the witnesses are zero-padded to the largest dimension.
    """
    start = time.perf_counter()
    trace = bound_trace(g, "bdim")
    stats = SearchStats()
    certified: list[tuple[int, bool]] = []
    if g.m == 0:
        return DimensionResult("bdim", 1, _constant(g.n), trace, elapsed=time.perf_counter() - start)
    cert = is_balanced(g)
    if cert:
        witness = SwitchingAssignment(1, tuple((x,) for x in cert.switching))
        return DimensionResult("bdim", 1, witness, trace, elapsed=time.perf_counter() - start)
    eta = forest_switching(g)
    h = apply_1_switching(g, eta)
    parts = []
    for comp, vmap in connected_components(h):
        if comp.m == 0:
            continue
        if is_balanced(comp):
            parts.append((_constant(comp.n), vmap))
        else:
            parts.append((_solve_component(comp, max_k, threads, stats, certified), vmap))
    k = max(z.dimension for z, _ in parts)
    values: list[tuple[int, ...]] = [(0,) * k] * g.n
    for z, vmap in parts:
        for i, v in enumerate(vmap):
            values[v] = z[i] + (0,) * (k - z.dimension)
    witness = compose(eta, SwitchingAssignment(k, tuple(values)))
    assert is_positive_switching(g, witness), "bdim witness failed verification"
    return DimensionResult("bdim", k, witness, trace, nodes=stats.nodes,
                           elapsed=time.perf_counter() - start, certified=certified)


def sbdim(g: SignedGraph, *, max_k: int | None = None, threads: int = 1) -> DimensionResult:
    """Strong balancing dimension with an injective witness.

    All-positive graphs get 1 by convention (the witness is then the constant
    assignment and is not injective).  Injectivity couples the components, so
    the search is global and the graph is not switched first.
    """
    start = time.perf_counter()
    trace = bound_trace(g, "sbdim")
    if g.is_all_positive():
        return DimensionResult("sbdim", 1, _constant(g.n), trace, convention=True,
                               elapsed=time.perf_counter() - start)
    stats = SearchStats()
    certified: list[tuple[int, bool]] = []
    lo, hi = trace.effective_lower, trace.effective_upper
    for k in range(lo, hi + 1):
        if max_k is not None and k > max_k:
            raise CapacityError(f"sbdim exceeds --max-k {max_k}", lower=k, upper=hi)
        if k == hi and trace.upper_source() == "injective-mu":
            zeta = injective_mu(g)
        else:
            zeta = find_k_positive(g, k, injective=True, threads=threads, stats=stats)
            certified.append((k, zeta is not None))
        if zeta is not None:
            assert is_positive_switching(g, zeta, True), "sbdim witness failed verification"
            return DimensionResult("sbdim", k, zeta, trace, nodes=stats.nodes,
                                   elapsed=time.perf_counter() - start, certified=certified)
    raise AssertionError(f"no injective positive switching up to the proven upper bound {hi}")
