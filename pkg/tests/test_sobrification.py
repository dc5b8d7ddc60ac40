import pytest

from sobrify.errors import SpaceMismatch
from sobrify.generated import INF, HPoint, Window
from sobrify.sobrification import (
    dhat_chain_sup,
    dhat_order,
    dhat_s_structure,
    dominated_witness_S,
    eps_sym,
    eta_inverse,
    has_top_dhat,
    nabla_sym,
    non_idempotence_witness_S,
    not_dominated_witness_H,
    triangle_sym,
    verify_h_sobh,
)
from sobrify.symbolic import HLevelGen, HPointGen, SAllGen, SPointGen, closed


def test_order_examples():
    assert dhat_order(HLevelGen((5,)), HPointGen(5, ()))
    assert dhat_order(SPointGen(2, 3), SPointGen(2, INF))
    assert not dhat_order(HPointGen(1, ()), HPointGen(2, ()))
    with pytest.raises(SpaceMismatch):
        dhat_order(HPointGen(1, ()), SPointGen(1, 1))


def test_chain_sup_examples():
    assert dhat_chain_sup([HLevelGen((n, 2)) for n in range(1, 5)]) == HLevelGen((2,))
    assert dhat_chain_sup([SPointGen(1, n) for n in range(4)]) == SPointGen(1, INF)
    assert dhat_chain_sup([HLevelGen((n,)) for n in range(4)]) == HLevelGen(())


def test_tops():
    assert has_top_dhat("H") == HLevelGen(())
    assert has_top_dhat("S") == SAllGen()


def test_triangle_examples():
    H = HLevelGen(())
    for n in range(5):
        assert triangle_sym(HLevelGen((n,)), H)
    assert not triangle_sym(H, H)
    assert triangle_sym(HPointGen(2, (1,)), HPointGen(2, (1,)))
    assert nabla_sym(SAllGen())(SPointGen(3, INF))
    assert triangle_sym(SPointGen(0, 2), SPointGen(3, INF))


def test_eps_and_eta_inverse():
    C = closed(HPointGen(2, (1,)))
    fam = eps_sym(C)
    for p in [HPoint(2, (1,)), HPoint(0, (1, 1)), HPoint(2, (1, 1))]:
        assert eta_inverse(fam, p)
    assert not eta_inverse(fam, HPoint(2, ()))
    assert eps_sym(closed(HPointGen(1, ()))).issubset(eps_sym(closed(HLevelGen(()))))


def test_dhat_s_has_one_extra_top():
    D = dhat_s_structure(Window(2, 2))
    assert len(D) == 10
    assert all(D.le(x, "all") for x in D.labels)


@pytest.mark.parametrize("make", [not_dominated_witness_H, dominated_witness_S, non_idempotence_witness_S])
def test_certificates(make):
    cert = make(8)
    assert cert.passed, cert.to_text()
    assert "claim:" in cert.to_text() and "paper_ref:" in cert.to_text()


def test_h_sobh_certificate():
    cert = verify_h_sobh(8, 2, Window(3, 3, 2), samples=15)
    assert cert.passed, cert.to_text()
