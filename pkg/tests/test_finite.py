import pytest

from sobrify.errors import EmptySetError, NotIrreducibleFamily, NotMonotone, SizeLimitExceeded
from sobrify.finite import (
    dhat_map,
    dhat_members,
    eps,
    irr_poset,
    is_dominated,
    is_irreducible,
    is_scpo,
    mu_union,
    nabla,
    phi_psi_transport,
    prec_compact_set,
    prec_rel,
    triangle_rel,
)
from sobrify.iso import IsoWitness, is_order_iso, poset_iso
from sobrify.poset import ClosedSet, build_poset, down_closure, enumerate_closed, principal


def test_principal_is_irreducible(diamond):
    for x in diamond.labels:
        assert is_irreducible(diamond, principal(diamond, x))


def test_reducible_sets(antichain2, diamond):
    assert not is_irreducible(antichain2, ClosedSet(antichain2.full))
    assert not is_irreducible(diamond, down_closure(diamond, ["m1", "m2"]))


def test_empty_not_allowed(chain3):
    with pytest.raises(EmptySetError):
        is_irreducible(chain3, ClosedSet(0))


def test_cover_limit():
    P = build_poset([f"x{i}" for i in range(13)], [])
    with pytest.raises(SizeLimitExceeded):
        is_irreducible(P, ClosedSet(1))


@pytest.mark.parametrize("fixture", ["chain3", "antichain2"])
def test_sobrification_is_iso(request, fixture):
    P = request.getfixturevalue(fixture)
    D, eta = irr_poset(P)
    inv = {v: k for k, v in eta.items()}
    assert is_order_iso(P, D, IsoWitness(eta, inv))


def test_singleton_sobrification():
    P = build_poset(["a"], [])
    D, eta = irr_poset(P)
    assert D.labels == ("{a}",) and eta == {"a": "{a}"}


def test_eps(chain3):
    got = eps(chain3, down_closure(chain3, ["b"]))
    assert got == {principal(chain3, "a"), principal(chain3, "b")}
    assert eps(chain3, ClosedSet(0)) == frozenset()
    assert eps(chain3, ClosedSet(chain3.full)) == frozenset(dhat_members(chain3))


def test_mu_union(chain3, antichain2):
    a, b = principal(chain3, "a"), principal(chain3, "b")
    assert mu_union(chain3, [a]) == a
    assert chain3.members(mu_union(chain3, [a, b])) == ("a", "b")
    with pytest.raises(NotIrreducibleFamily):
        mu_union(antichain2, [principal(antichain2, "a"), principal(antichain2, "b")])


def test_triangle(chain3, diamond):
    for x in diamond.labels:
        A = principal(diamond, x)
        assert triangle_rel(diamond, A, A)
        assert {principal(diamond, y) for y in diamond.labels if diamond.le(y, x)} <= nabla(diamond, A)
    assert triangle_rel(chain3, principal(chain3, "a"), principal(chain3, "c"))


def test_prec_is_order(diamond):
    for x in diamond.labels:
        for y in diamond.labels:
            assert prec_rel(diamond, x, y) == diamond.le(x, y)
    assert prec_compact_set(diamond) == set(diamond.labels)


def test_compact_elements_of_sobrification(diamond):
    D, eta = irr_poset(diamond)
    assert prec_compact_set(D) == set(eta.values())


def test_dominated(chain3):
    assert is_dominated(chain3)
    five = build_poset(["b", "l", "r", "t", "z"], [("b", "l"), ("b", "r"), ("l", "t"), ("r", "t")])
    assert is_dominated(five)
    assert is_scpo(five)


def test_transport_identity(diamond):
    D, _ = irr_poset(diamond)
    ident = {x: x for x in D.labels}
    w = phi_psi_transport(diamond, diamond, IsoWitness(ident, ident))
    assert all(w.forward[b] == b and w.backward[b] == b for b in enumerate_closed(diamond))


def test_transport_relabel(chain3):
    Q = build_poset(["x", "y", "z"], [("x", "y"), ("y", "z")])
    DP, DQ = irr_poset(chain3)[0], irr_poset(Q)[0]
    w = phi_psi_transport(chain3, Q, poset_iso(DP, DQ))
    for b in enumerate_closed(chain3):
        assert len(w.forward[b]) == len(b)


def test_dhat_map(chain3):
    two = build_poset(["x", "y"], [("x", "y")])
    ident = {x: x for x in chain3.labels}
    assert dhat_map(chain3, chain3, ident, principal(chain3, "b")) == principal(chain3, "b")
    collapse = {"a": "x", "b": "x", "c": "y"}
    assert two.members(dhat_map(chain3, two, collapse, principal(chain3, "b"))) == ("x",)
    const = {"a": "y", "b": "y", "c": "y"}
    assert dhat_map(chain3, two, const, principal(chain3, "c")) == principal(two, "y")
    with pytest.raises(NotMonotone):
        dhat_map(chain3, two, {"a": "y", "b": "x", "c": "x"}, principal(chain3, "c"))
