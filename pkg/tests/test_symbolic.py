import pytest

from sobrify.errors import EmptySetError, SpaceMismatch
from sobrify.generated import INF, HPoint, SPoint
from sobrify.oracles import oracle_member, oracle_trace
from sobrify.symbolic import (
    ALL,
    HLevelGen,
    HPointGen,
    SAllGen,
    SLevelsGen,
    SPointGen,
    TMinBoundedGen,
    TPrincipalGen,
    Trace,
    canonicalize,
    closed,
    gen_subset,
    is_irreducible_sym,
    l_image,
    member,
    subset,
    sup_of_generator_chain,
    t_geq_k,
    trace,
    union,
)

BOUND = 10


def test_membership_examples():
    level_eps = closed(HLevelGen(()))
    assert member(HPoint(3, (2,)), level_eps)
    assert oracle_member(HPoint(3, (2,)), level_eps, BOUND) == (True, True)
    level_2 = closed(HLevelGen((2,)))
    assert not member(HPoint(3, ()), level_2)
    assert oracle_member(HPoint(3, ()), level_2, BOUND) == (False, True)
    assert member(HPoint(4, (1, 3)), closed(HPointGen(4, (1, 3))))


def test_generator_inclusion_examples():
    assert gen_subset(HLevelGen((5,)), HPointGen(5, ()))
    assert gen_subset(HLevelGen((3, 2)), HLevelGen((2,)))
    assert not gen_subset(HPointGen(5, ()), HLevelGen((1,)))
    assert not gen_subset(HLevelGen((5,)), HPointGen(4, ()))


def test_canonicalize_examples():
    C = canonicalize("H", [HLevelGen((5,)), HPointGen(5, ())])
    assert C.gens == {HPointGen(5, ())}
    D = canonicalize("H", [HPointGen(1, ()), HPointGen(2, ())])
    assert len(D) == 2
    assert union(D, D) == D


def test_subset_of_unions():
    C = closed(HLevelGen((1,)))
    D = closed(HPointGen(0, ()), HPointGen(1, ()))
    assert subset(C, D)
    assert not subset(closed(HLevelGen(())), D)


def test_chain_sups():
    assert sup_of_generator_chain([HLevelGen((n,)) for n in range(1, 5)]) == HLevelGen(())
    assert sup_of_generator_chain([HPointGen(4, (n, 7)) for n in range(1, 5)]) == HPointGen(4, (7,))
    assert sup_of_generator_chain([SLevelsGen(n) for n in range(4)]) == SAllGen()
    assert sup_of_generator_chain([SPointGen(2, n) for n in range(4)]) == SPointGen(2, INF)


def test_trace_examples():
    assert trace(closed(HPointGen(5, ())), (2,)) == ALL
    assert trace(closed(HPointGen(1, ())), (2,)) == Trace(frozenset({1}))
    s = (3, 1)
    assert trace(closed(HLevelGen(s)), s) == ALL
    for C, s in [(closed(HPointGen(5, ())), (2,)), (closed(HPointGen(1, ())), (2,))]:
        assert oracle_trace(C, s, BOUND) == trace(C, s)


def test_t_geq_k_examples():
    C = closed(HPointGen(5, ()))
    everything = t_geq_k(C, 1)
    assert all(member(s, everything) for s in [(), (9,), (9, 9)])
    six = t_geq_k(C, 6)
    assert six.gens == {TMinBoundedGen(5, ())}
    assert member((9, 3), six) and not member((9, 6), six) and not member((), six)


def test_l_image_examples():
    assert l_image(closed(HPointGen(3, ()))).gens == {TPrincipalGen(())}
    L = l_image(closed(HLevelGen((2, 1))))
    assert member((2, 1), L) and member((1, 1), L) and not member((1,), L)
    assert len(l_image(canonicalize("H", []))) == 0


def test_irreducible_examples():
    assert is_irreducible_sym(closed(HLevelGen((2,))))
    assert not is_irreducible_sym(closed(HPointGen(1, ()), HPointGen(2, ())))
    assert not is_irreducible_sym(closed(SLevelsGen(1)))
    with pytest.raises(EmptySetError):
        is_irreducible_sym(canonicalize("H", []))


def test_space_checks():
    with pytest.raises(SpaceMismatch):
        canonicalize("H", [SPointGen(0, 1)])
    with pytest.raises(SpaceMismatch):
        member(SPoint(0, 1), closed(HLevelGen(())))
