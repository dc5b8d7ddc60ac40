import numpy as np
import pytest

from sobrify.errors import CycleError, EmptyInput, ParseError, UnknownLabel
from sobrify.poset import (
    ClosedSet,
    FinitePoset,
    build_poset,
    down_closure,
    enumerate_closed,
    format_poset,
    order_axiom_violation,
    parse_poset,
    principal,
    supremum,
    upper_bounds,
)


def test_singleton():
    P = build_poset(["a"], [])
    assert P.leq.tolist() == [[True]]


def test_chain_transitive_closure(chain3):
    assert chain3.le("a", "c")
    assert not chain3.le("c", "a")


def test_cycle_rejected():
    with pytest.raises(CycleError):
        build_poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        build_poset(["a"], [("a", "z")])


def test_axiom_violation_names_axiom():
    leq = np.array([[True, True], [True, True]])
    assert order_axiom_violation(leq)[0] == "antisymmetry"
    with pytest.raises(Exception):
        FinitePoset(["a", "b"], leq)


def test_down_closure(chain3, diamond):
    assert chain3.members(down_closure(chain3, ["b"])) == ("a", "b")
    assert not down_closure(chain3, [])
    assert set(diamond.members(down_closure(diamond, ["m1", "m2"]))) == {"b", "m1", "m2"}


@pytest.mark.parametrize("fixture,count", [("chain3", 4), ("antichain3", 8), ("diamond", 6)])
def test_closed_set_counts(request, fixture, count):
    P = request.getfixturevalue(fixture)
    lattice = enumerate_closed(P)
    assert len(lattice) == count
    assert lattice.is_distributive()


def test_chain_closed_sets_listed(chain3):
    got = [chain3.members(c) for c in enumerate_closed(chain3)]
    assert got == [(), ("a",), ("a", "b"), ("a", "b", "c")]


def test_upper_bounds(chain3, antichain2, diamond):
    assert upper_bounds(chain3, ["a", "b"]) == {"b", "c"}
    assert upper_bounds(antichain2, ["a", "b"]) == frozenset()
    assert upper_bounds(diamond, ["m1", "m2"]) == {"t"}
    with pytest.raises(EmptyInput):
        upper_bounds(chain3, [])


def test_supremum(diamond):
    assert diamond.labels[supremum(diamond, diamond.mask(["m1", "m2"]))] == "t"


def test_closed_set_ops():
    a, b = ClosedSet(0b011), ClosedSet(0b101)
    assert a.union(b).bits == 0b111
    assert a.intersection(b).bits == 0b001
    assert len(a) == 2 and 1 in a and 2 not in a
    assert not a.issubset(b)


def test_parse_roundtrip(diamond):
    text = "# a diamond\nelem b\nelem m1\nelem m2\nelem t\ncover b m1\ncover b m2\ncover m1 t\ncover m2 t\n"
    P = parse_poset(text)
    assert P == diamond
    assert parse_poset(format_poset(P)) == P


@pytest.mark.parametrize("text", ["elem a b\n", "node a\n", "elem a\nelem a\n", "elem a\ncover a b\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_poset(text)


def test_principal(chain3):
    assert chain3.format_set(principal(chain3, "b")) == "{a,b}"
