import random

from sobrify.finite import irr_poset
from sobrify.iso import is_order_iso, poset_iso
from sobrify.oracles import brute_iso, random_poset, relabel


def test_identity_chain(chain3):
    w = poset_iso(chain3, chain3)
    assert w is not None and is_order_iso(chain3, chain3, w)


def test_chain_vs_antichain(chain3, antichain3):
    assert poset_iso(chain3, antichain3) is None


def test_random_against_sobrification():
    rng = random.Random(3)
    for _ in range(40):
        P = random_poset(rng)
        D, _ = irr_poset(P)
        w = poset_iso(P, D)
        assert w is not None and is_order_iso(P, D, w)


def test_matches_permutation_search():
    rng = random.Random(11)
    for k in range(60):
        P = random_poset(rng, 5)
        Q = relabel(P, rng) if k % 3 == 0 else random_poset(rng, 5)
        assert (poset_iso(P, Q) is not None) == brute_iso(P, Q)
