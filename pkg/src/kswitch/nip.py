"""Largest negative-inner-product (NIP) sets and non-orthogonal line families.

``nu(k)`` is the largest set of vectors in {-1,0,1}^k with pairwise
strictly negative inner products; ``lambda_lines(k)`` the largest family of
pairwise non-orthogonal lines.  Both are maximum cliques of a compatibility
graph.  Signed coordinate permutations act on that graph with orbits given
by support size, so every clique can be moved to contain an orbit
representative.  The search runs one subproblem per orbit and drops orbits
already handled from later ones.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import numpy as np

from .clique import CliqueSearch, bitsets_from_matrix
from .errors import CapacityError, InputError
from .ternary import (TernaryVector, enumerate_lines, enumerate_vectors, format_vector,
                      inner_product, line_representative, parse_vector, support_size)

log = logging.getLogger(__name__)

#: Environment variable naming the default on-disk cache file.
CACHE_ENV = "KSWITCH_CACHE"

#: Largest k that ``nu_bar`` will compute ``nu`` for by default.
NU_BAR_K_MAX = 7

#: Largest k that ``lambda_inverse`` tries by default.
LAMBDA_K_CAP = 6


@dataclass
class NIPReport:
    quantity: str  # "nu" | "lambda"
    k: int
    value: int
    witness: tuple[TernaryVector, ...]
    graph_vertices: int
    graph_edges: int
    nodes: int = 0
    elapsed: float = 0.0
    source: str = field(default="computed")

    def as_dict(self, timing: bool = False) -> dict:
        d = {
            "kind": self.quantity,
            "k": self.k,
            "value": self.value,
            "witness": [list(v) for v in self.witness],
            "graph": {"vertices": self.graph_vertices, "edges": self.graph_edges},
            "stats": {"nodes": self.nodes},
            "source": self.source,
        }
        if timing:
            d["stats"]["elapsed"] = round(self.elapsed, 6)
        return d


def is_nip_set(vectors) -> bool:
    vs = list(vectors)
    if len(set(vs)) != len(vs) or not all(any(v) for v in vs):
        return False
    return all(inner_product(a, b) < 0 for a, b in combinations(vs, 2))


def is_non_orthogonal_line_family(lines) -> bool:
    ls = list(lines)
    if any(line_representative(v) != tuple(v) for v in ls) or len(set(ls)) != len(ls):
        return False
    return all(inner_product(a, b) != 0 for a, b in combinations(ls, 2))


def _gram(vectors) -> np.ndarray:
    M = np.array(vectors, dtype=np.int16)
    return M @ M.T


def _orbit_clique(vectors, adj, stop_at: int | None) -> tuple[list[int], int]:
    """Maximum clique using one subproblem per support-size orbit."""
    k = len(vectors[0])
    by_support = {}
    for i, v in enumerate(vectors):
        by_support.setdefault(support_size(v), 0)
        by_support[support_size(v)] |= 1 << i
    index = {v: i for i, v in enumerate(vectors)}
    search = CliqueSearch(adj)
    best: list[int] = []
    allowed = (1 << len(vectors)) - 1
    for t in range(k, 0, -1):
        rep = index[(1,) * t + (0,) * (k - t)]
        sub = search.solve(adj[rep] & allowed, at_least=max(len(best) - 1, 0),
                           stop_at=None if stop_at is None else stop_at - 1)
        if len(sub) + 1 > len(best):
            best = sorted([rep] + sub)
        if stop_at is not None and len(best) >= stop_at:
            break
        allowed &= ~by_support[t]
    return best, search.nodes


_nu_cache: dict[int, NIPReport] = {}
_lambda_cache: dict[int, NIPReport] = {}


def _cache_path(path) -> Path | None:
    if path is not None:
        return Path(path)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def load_cache(path) -> dict[tuple[str, int], NIPReport]:
    """Read cache records ``<kind> <k> <value> <v1>;<v2>;...``.

    Records whose witness does not verify are skipped.
    """
    out: dict[tuple[str, int], NIPReport] = {}
    p = Path(path)
    if not p.exists():
        return out
    for lineno, line in enumerate(p.read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            kind, k_s, value_s, wit = line.split()
            k, value = int(k_s), int(value_s)
            witness = tuple(parse_vector(w) for w in wit.split(";"))
        except (ValueError, InputError):
            log.warning("cache %s line %d: malformed record ignored", p, lineno)
            continue
        good = (len(witness) == value and all(len(w) == k for w in witness)
                and (is_nip_set(witness) and value <= k + 1 if kind == "nu"
                     else kind == "lambda" and is_non_orthogonal_line_family(witness)))
        if not good:
            log.warning("cache %s line %d: witness fails verification, ignored", p, lineno)
            continue
        nverts = 3 ** k - 1 if kind == "nu" else (3 ** k - 1) // 2
        out[(kind, k)] = NIPReport(kind, k, value, witness, nverts, -1, source="cache")
    return out


def save_cache(path, reports) -> None:
    p = Path(path)
    existing = load_cache(p)
    for r in reports:
        existing[(r.quantity, r.k)] = r
    lines = [f"{kind} {k} {r.value} " + ";".join(format_vector(v) for v in r.witness)
             for (kind, k), r in sorted(existing.items())]
    p.write_text("\n".join(lines) + "\n")


def _from_disk(kind: str, k: int, cache) -> NIPReport | None:
    p = _cache_path(cache)
    if p is None:
        return None
    return load_cache(p).get((kind, k))


def _remember(memo: dict, report: NIPReport, cache) -> NIPReport:
    """Keep ``report`` in memory and make sure the cache file has it."""
    memo[report.k] = report
    p = _cache_path(cache)
    if p is not None and (report.quantity, report.k) not in load_cache(p):
        save_cache(p, [report])
    return report


def nu(k: int, *, cache=None) -> NIPReport:
    """Largest NIP set in {-1,0,1}^k, by exact maximum clique.

    At most ``k + 1`` vectors can have pairwise negative products, so the
    search stops as soon as it reaches that size.
    """
    if k in _nu_cache:
        return _remember(_nu_cache, _nu_cache[k], cache)
    hit = _from_disk("nu", k, cache)
    if hit is not None:
        return _remember(_nu_cache, hit, cache)
    start = time.perf_counter()
    vectors = enumerate_vectors(k)
    neg = _gram(vectors) < 0
    adj = bitsets_from_matrix(neg)
    best, nodes = _orbit_clique(vectors, adj, stop_at=k + 1)
    witness = tuple(vectors[i] for i in best)
    assert is_nip_set(witness), "clique engine returned a non-NIP witness"
    report = NIPReport("nu", k, len(witness), witness, len(vectors), int(neg.sum()) // 2,
                       nodes=nodes, elapsed=time.perf_counter() - start)
    return _remember(_nu_cache, report, cache)


def nu_bar(n: int, *, k_max: int = NU_BAR_K_MAX, cache=None) -> int:
    """Least k with ``nu(k) >= n``, trying k = 1, 2, ... up to ``k_max``."""
    if n < 2:
        raise InputError(f"nu_bar needs n >= 2, got {n}")
    for k in range(1, k_max + 1):
        if nu(k, cache=cache).value >= n:
            return k
    raise CapacityError(f"no NIP set of size {n} for k <= {k_max}", lower=k_max + 1)


def lambda_lines(k: int, *, cache=None) -> NIPReport:
    """Largest family of pairwise non-orthogonal lines in {-1,0,1}^k."""
    if k in _lambda_cache:
        return _remember(_lambda_cache, _lambda_cache[k], cache)
    hit = _from_disk("lambda", k, cache)
    if hit is not None:
        return _remember(_lambda_cache, hit, cache)
    start = time.perf_counter()
    lines = enumerate_lines(k)
    nonorth = _gram(lines) != 0
    np.fill_diagonal(nonorth, False)
    adj = bitsets_from_matrix(nonorth)
    best, nodes = _orbit_clique(lines, adj, stop_at=None)
    witness = tuple(lines[i] for i in best)
    assert is_non_orthogonal_line_family(witness)
    report = NIPReport("lambda", k, len(witness), witness, len(lines), int(nonorth.sum()) // 2,
                       nodes=nodes, elapsed=time.perf_counter() - start)
    return _remember(_lambda_cache, report, cache)


def lambda_inverse(p: int, k_cap: int = LAMBDA_K_CAP, *, cache=None) -> int | None:
    """Least ``k <= k_cap`` with ``lambda_lines(k) >= p``; ``None`` if the cap is exceeded."""
    if p < 1:
        raise InputError(f"lambda_inverse needs p >= 1, got {p}")
    for k in range(1, k_cap + 1):
        if lambda_lines(k, cache=cache).value >= p:
            return k
    return None


def clear_caches() -> None:
    _nu_cache.clear()
    _lambda_cache.clear()
