"""Vector-valued (k-) switching functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError, KSwitchError, ValidationError
from .graph import SignedGraph, _check_one_switching
from .ternary import TernaryVector, as_vector, inner_product, sgn
from .ternary import zero_pad as _pad


@dataclass(frozen=True)
class SwitchingAssignment:
    """A map ``vertex -> vector in {-1,0,1}^k``; ``values[v]`` is the vector of vertex ``v``."""

    dimension: int
    values: tuple[TernaryVector, ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise InputError(f"dimension must be >= 1, got {self.dimension}")
        vals = tuple(as_vector(v) for v in self.values)
        for i, v in enumerate(vals):
            if len(v) != self.dimension:
                raise InputError(f"vertex {i} has a {len(v)}-vector, expected dimension {self.dimension}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[int]]) -> SwitchingAssignment:
        vals = [as_vector(v) for v in vectors]
        if not vals:
            raise InputError("cannot infer the dimension of an empty assignment")
        return cls(len(vals[0]), tuple(vals))

    @classmethod
    def constant(cls, n: int, vector: Sequence[int]) -> SwitchingAssignment:
        v = as_vector(vector)
        return cls(len(v), (v,) * n)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> TernaryVector:
        return self.values[v]

    def __neg__(self) -> SwitchingAssignment:
        return SwitchingAssignment(self.dimension, tuple(tuple(-x for x in v) for v in self.values))

    def zero_pad(self, k2: int) -> SwitchingAssignment:
        return SwitchingAssignment(k2, tuple(_pad(v, k2) for v in self.values))

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)


@dataclass(frozen=True)
class Violation:
    kind: str  # "orthogonal-edge" | "zero-on-non-isolated"
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "orthogonal-edge":
            return f"edge {self.vertices[0]}-{self.vertices[1]} has orthogonal endpoint vectors"
        return f"non-isolated vertex {self.vertices[0]} is assigned the zero vector"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _check_total(g: SignedGraph, zeta: SwitchingAssignment) -> None:
    if len(zeta.values) != g.n:
        raise InputError(f"assignment has {len(zeta.values)} values for {g.n} vertices")


def validate(g: SignedGraph, zeta: SwitchingAssignment) -> ValidationReport:
    """Check that ``zeta`` is a k-switching for ``g``.

    Endpoint vectors of each edge must not be orthogonal; the zero vector is
    only allowed on isolated vertices.
    """
    _check_total(g, zeta)
    out = []
    for v in range(g.n):
        if g.neighbors[v] and not any(zeta[v]):
            out.append(Violation("zero-on-non-isolated", (v,)))
    for u, v, _ in g.edges:
        if inner_product(zeta[u], zeta[v]) == 0:
            out.append(Violation("orthogonal-edge", (u, v)))
    return ValidationReport(tuple(out))


def apply_k_switching(g: SignedGraph, zeta: SwitchingAssignment) -> SignedGraph:
    report = validate(g, zeta)
    if not report:
        raise ValidationError("not a valid switching: " + "; ".join(map(str, report.violations)),
                              report.violations)
    return SignedGraph(g.n, tuple((u, v, s * sgn(inner_product(zeta[u], zeta[v])))
                                  for u, v, s in g.edges))


def compose(eta: Sequence[int], zeta: SwitchingAssignment) -> SwitchingAssignment:
    """Pointwise product ``eta(v) * zeta(v)``."""
    if len(eta) != len(zeta.values):
        raise InputError(f"1-switching has {len(eta)} values, assignment has {len(zeta.values)}")
    for x in eta:
        if x not in (1, -1):
            raise InputError(f"1-switching value {x} is not +1 or -1")
    return SwitchingAssignment(zeta.dimension,
                               tuple(tuple(e * x for x in v) for e, v in zip(eta, zeta.values)))


@dataclass(frozen=True)
class PositivityReport:
    """Outcome of :func:`is_positive_switching`; truthy when it holds."""

    ok: bool
    reasons: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def is_positive_switching(g: SignedGraph, zeta: SwitchingAssignment,
                          require_injective: bool = False) -> PositivityReport:
    """Does ``zeta`` switch ``g`` to all positive (injectively, if asked)?

    Never raises on bad input; problems are reported as reasons.
    """
    try:
        report = validate(g, zeta)
    except KSwitchError as exc:
        return PositivityReport(False, (str(exc),))
    reasons = [str(v) for v in report.violations]
    for u, v, s in g.edges:
        p = inner_product(zeta[u], zeta[v])
        if p and s * sgn(p) != 1:
            reasons.append(f"edge {u}-{v} stays negative")
    if require_injective and not zeta.is_injective():
        seen: dict[TernaryVector, int] = {}
        for v, vec in enumerate(zeta.values):
            if vec in seen:
                reasons.append(f"vertices {seen[vec]} and {v} share a vector")
            else:
                seen[vec] = v
    return PositivityReport(not reasons, tuple(reasons))


def one_switching_as_assignment(g: SignedGraph, eta: Sequence[int]) -> SwitchingAssignment:
    """A 1-switching viewed as a 1-dimensional vector assignment."""
    _check_one_switching(g, eta)
    return SwitchingAssignment(1, tuple((x,) for x in eta))
