"""Vectors over {-1, 0, 1}.

Vectors are plain tuples of ints.  Python's tuple ordering on entries drawn
from -1 < 0 < 1 coincides with balanced-ternary numeric order (first entry
most significant), so ``sorted`` gives the canonical order used everywhere.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import CapacityError, InputError

Trit = int
TernaryVector = tuple[int, ...]

#: Largest dimension for which full enumeration is allowed (3**12 = 531441).
ENUM_CAP = 12

TRITS = (-1, 0, 1)


def as_vector(values: Iterable[int]) -> TernaryVector:
    v = tuple(int(x) for x in values)
    if not v:
        raise InputError("ternary vector must have dimension >= 1")
    for x in v:
        if x not in (-1, 0, 1):
            raise InputError(f"entry {x} is not in {{-1, 0, 1}}")
    return v


def inner_product(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} != {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def negate(v: Sequence[int]) -> TernaryVector:
    return tuple(-x for x in v)


def support_size(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def _check_cap(k: int) -> None:
    if k < 1:
        raise InputError(f"dimension must be >= 1, got {k}")
    if k > ENUM_CAP:
        raise CapacityError(f"dimension {k} exceeds enumeration cap {ENUM_CAP}")


@lru_cache(maxsize=None)
def _enumerate(k: int, include_zero: bool) -> tuple[TernaryVector, ...]:
    vs = product(TRITS, repeat=k)
    if include_zero:
        return tuple(vs)
    return tuple(v for v in vs if any(v))


def enumerate_vectors(k: int, include_zero: bool = False) -> tuple[TernaryVector, ...]:
    """All vectors of dimension ``k`` in canonical order.

    Without the zero vector there are ``3**k - 1`` of them.
    """
    _check_cap(k)
    return _enumerate(k, include_zero)


def zero_pad(v: Sequence[int], k2: int) -> TernaryVector:
    if k2 < len(v):
        raise InputError(f"cannot pad a {len(v)}-vector down to dimension {k2}")
    return tuple(v) + (0,) * (k2 - len(v))


def canonical_form(v: Sequence[int]) -> TernaryVector:
    """Representative of ``v``'s orbit under signed coordinate permutations.

    Flipping signs makes every nonzero entry positive and sorting descending
    moves them to the front, so the orbit is determined by the support size.
    """
    t = support_size(v)
    return (1,) * t + (0,) * (len(v) - t)


def orbit_representatives(k: int) -> list[TernaryVector]:
    """One representative per orbit of nonzero vectors: ``(1,..,1,0,..,0)`` with t ones."""
    _check_cap(k)
    return [(1,) * t + (0,) * (k - t) for t in range(1, k + 1)]


def line_representative(v: Sequence[int]) -> TernaryVector:
    """The vector of the line ``{v, -v}`` whose first nonzero entry is +1."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else negate(v)
    raise InputError("the zero vector spans no line")


def enumerate_lines(k: int) -> tuple[TernaryVector, ...]:
    """The ``(3**k - 1) / 2`` line representatives of dimension ``k`` in canonical order."""
    return tuple(v for v in enumerate_vectors(k) if line_representative(v) == v)


def parse_vector(text: str) -> TernaryVector:
    """Parse ``"1,-1,0"`` (commas and/or whitespace)."""
    parts = text.replace(",", " ").split()
    try:
        return as_vector(int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"bad ternary vector {text!r}") from exc


def format_vector(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)
