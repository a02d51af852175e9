import pytest

from conftest import random_assignment, random_graph
from kswitch.errors import InputError, ValidationError
from kswitch.generators import cycle, figure1, figure2, path
from kswitch.graph import SignedGraph, apply_1_switching, negate
from kswitch.switching import (SwitchingAssignment, apply_k_switching, compose,
                               is_positive_switching, one_switching_as_assignment, validate)

EX1 = SwitchingAssignment.from_vectors([(-1, 0), (1, -1), (0, -1), (-1, -1)])


def test_validate_examples():
    assert validate(figure1(), EX1)
    bad = validate(path(2, 1), SwitchingAssignment.from_vectors([(1, 0), (0, 1)]))
    assert not bad and [v.kind for v in bad.violations] == ["orthogonal-edge"]
    assert bad.violations[0].vertices == (0, 1)
    assert validate(SignedGraph(1), SwitchingAssignment.from_vectors([(0, 0)]))
    zero = validate(path(2, 1), SwitchingAssignment.from_vectors([(0, 0), (1, 0)]))
    assert "zero-on-non-isolated" in [v.kind for v in zero.violations]


def test_validate_input_errors():
    with pytest.raises(InputError):
        validate(figure1(), SwitchingAssignment.from_vectors([(1, 0)] * 3))
    with pytest.raises(InputError):
        SwitchingAssignment(2, ((1, 0), (1, 0, 1)))


def test_apply_examples():
    assert apply_k_switching(figure1(), EX1).is_all_positive()
    c3 = cycle(3, 3)
    zeta = SwitchingAssignment.from_vectors([(-1, 1, 1), (1, -1, 1), (1, 1, -1)])
    assert apply_k_switching(c3, zeta) == cycle(3, 0)
    g = figure2()
    assert apply_k_switching(g, SwitchingAssignment.constant(7, (1, 1))) == g
    with pytest.raises(ValidationError):
        apply_k_switching(path(2, 1), SwitchingAssignment.from_vectors([(1, 0), (0, 1)]))


def test_compose_examples():
    assert compose((1,) * 4, EX1) == EX1
    assert compose((-1,) * 4, EX1) == -EX1
    assert apply_k_switching(figure1(), -EX1) == apply_k_switching(figure1(), EX1)
    z = compose((-1, 1, 1, 1), EX1)
    assert z[0] == (1, 0) and z.values[1:] == EX1.values[1:]
    with pytest.raises(InputError):
        compose((1, 1), EX1)


def test_is_positive_switching_examples():
    c8 = SwitchingAssignment.from_vectors(
        [(1, 0), (-1, 0), (1, -1), (-1, 1), (0, -1), (0, 1), (-1, -1), (1, 1)])
    assert is_positive_switching(cycle(8, 7), c8, require_injective=True)
    fig2 = SwitchingAssignment.from_vectors(
        [(1, 0, 0), (0, 0, 1), (-1, -1, -1), (0, 1, 0), (-1, 1, 1), (1, -1, 1), (1, 1, -1)])
    assert is_positive_switching(figure2(), fig2, require_injective=True)
    rep = is_positive_switching(figure1(), SwitchingAssignment.constant(4, (1, 1)), True)
    assert not rep and rep.reasons[0] == "edge 0-1 stays negative"
    assert any("share a vector" in r for r in rep.reasons)


def test_is_positive_switching_never_raises():
    assert not is_positive_switching(figure1(), SwitchingAssignment.from_vectors([(1,)]))


def test_one_switching_differs_at_isolated_vertices():
    g = SignedGraph(2)
    a = one_switching_as_assignment(g, (1, -1))
    assert a.dimension == 1 and a.values == ((1,), (-1,))
    # a 1-switching may use zero on an isolated vertex; a OneSwitching cannot
    assert validate(g, SwitchingAssignment.from_vectors([(0,), (1,)]))
    with pytest.raises(InputError):
        apply_1_switching(g, (0, 1))


def test_switching_identities_small(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7), rng.random())
        z = random_assignment(rng, g, rng.randint(1, 3))
        h = apply_k_switching(g, z)
        assert apply_k_switching(h, z) == g
        assert negate(h) == apply_k_switching(negate(g), z)
        assert apply_k_switching(g, -z) == h
        if is_positive_switching(g, z):
            assert is_positive_switching(g, z.zero_pad(z.dimension + rng.randint(1, 3)))
