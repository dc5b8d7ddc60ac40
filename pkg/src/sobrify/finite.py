"""Order sobrification of finite posets, computed straight from the definitions.

Families of irreducible closed sets (subsets of the order sobrification) are
passed around as frozensets of :class:`ClosedSet`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping

from .errors import (
    EmptySetError,
    NotClosedFamily,
    NotIrreducibleFamily,
    NotIso,
    NotMonotone,
    OrderError,
    SizeLimitExceeded,
)
from .iso import IsoWitness, is_order_iso
from .poset import (
    ClosedSet,
    FinitePoset,
    _indices,
    enumerate_closed,
    enumerate_down_sets,
    supremum,
)

COVER_LIMIT = 12
STRONG_CLOSURE_LIMIT = 16


def is_irreducible(P: FinitePoset, C: ClosedSet, limit: int = COVER_LIMIT) -> bool:
    """True iff every cover of ``C`` by two closed sets has a member containing ``C``.

    A cover ``C <= B | B'`` restricts to the cover by ``B & C`` and ``B' & C``,
    and any proper closed subset of ``C`` enlarges to a maximal one, so it is
    enough to look at pairs of maximal proper closed subsets of ``C``.
    """
    if not C:
        raise EmptySetError("irreducibility requires a nonempty set")
    if len(P) > limit:
        raise SizeLimitExceeded(f"|P| = {len(P)} exceeds cover-quantification limit {limit}")
    if not P.is_down_closed(C.bits):
        raise OrderError(f"{P.format_set(C)} is not closed")
    proper = [b for b in enumerate_down_sets(P, within=C.bits) if b != C.bits]
    maximal = [b for b in proper if not any(o != b and b & ~o == 0 for o in proper)]
    return not any(b1 | b2 == C.bits for b1, b2 in combinations_with_replacement(maximal, 2))


@lru_cache(maxsize=512)
def dhat_members(P: FinitePoset) -> tuple[ClosedSet, ...]:
    """The irreducible closed sets of ``P`` in canonical lattice order."""
    return tuple(c for c in enumerate_closed(P) if c and is_irreducible(P, c))


@lru_cache(maxsize=512)
def irr_poset(P: FinitePoset) -> tuple[FinitePoset, dict[str, str]]:
    """Return the order sobrification of ``P`` and the unit map ``x -> down(x)``."""
    members = dhat_members(P)
    n = len(members)
    leq = [[members[i].issubset(members[j]) for j in range(n)] for i in range(n)]
    D = FinitePoset([P.format_set(a) for a in members], leq, validate=False)
    eta = {P.labels[x]: P.format_set(P.down[x]) for x in range(len(P))}
    for lab in eta.values():
        D.index(lab)  # principal ideals are always irreducible
    return D, eta


def family_bits(P: FinitePoset, family: Iterable[ClosedSet]) -> int:
    """Encode a family of irreducible closed sets as a bit mask over ``irr_poset(P)``."""
    pos = {a: i for i, a in enumerate(dhat_members(P))}
    bits = 0
    for a in family:
        if a not in pos:
            raise OrderError(f"{P.format_set(a)} is not an irreducible closed set")
        bits |= 1 << pos[a]
    return bits


def family_from_bits(P: FinitePoset, bits: int) -> frozenset[ClosedSet]:
    members = dhat_members(P)
    return frozenset(members[i] for i in _indices(bits))


def eps(P: FinitePoset, B: ClosedSet) -> frozenset[ClosedSet]:
    """All irreducible closed sets contained in ``B``."""
    return frozenset(a for a in dhat_members(P) if a.issubset(B))


def mu_union(P: FinitePoset, family: Iterable[ClosedSet]) -> ClosedSet:
    """Multiplication of the monad: the plain union of a closed irreducible family."""
    family = frozenset(family)
    D, _ = irr_poset(P)
    bits = family_bits(P, family)
    if not D.is_down_closed(bits):
        raise NotClosedFamily("family is not down-closed in the order sobrification")
    if not bits or not is_irreducible(D, ClosedSet(bits)):
        raise NotIrreducibleFamily("family is not irreducible in the order sobrification")
    union = 0
    for a in family:
        union |= a.bits
    if not P.is_down_closed(union):
        raise AssertionError("union of a closed family must be closed")
    return ClosedSet(union)


def triangle_rel(P: FinitePoset, smaller: ClosedSet, A: ClosedSet) -> bool:
    """``smaller`` lies inside the principal ideal of some point of ``A``."""
    return any(smaller.bits & ~P.down[x] == 0 for x in A)


def nabla(P: FinitePoset, A: ClosedSet) -> frozenset[ClosedSet]:
    return frozenset(b for b in dhat_members(P) if triangle_rel(P, b, A))


def prec_rel(P: FinitePoset, lower: str, upper: str) -> bool:
    """Every irreducible closed set whose supremum is above ``upper`` contains ``lower``."""
    i, x = P.index(lower), P.index(upper)
    for a in dhat_members(P):
        top = supremum(P, a.bits)
        if top is None:
            raise OrderError(f"{P.format_set(a)} has no supremum; P is not strongly complete")
        if P.leq[x, top] and i not in a:
            return False
    return True


def prec_compact_set(P: FinitePoset) -> frozenset[str]:
    return frozenset(lab for lab in P.labels if prec_rel(P, lab, lab))


def is_scpo(P: FinitePoset) -> bool:
    return all(supremum(P, a.bits) is not None for a in dhat_members(P))


def is_strongly_closed(P: FinitePoset, C: ClosedSet) -> bool:
    """``C`` contains the supremum of each of its irreducible subsets."""
    if len(C) > STRONG_CLOSURE_LIMIT:
        raise SizeLimitExceeded(f"|C| = {len(C)} too large for subset quantification")
    elems = list(C)
    for pick in range(1, 1 << len(elems)):
        sub = 0
        closure = 0
        for k, e in enumerate(elems):
            if pick >> k & 1:
                sub |= 1 << e
                closure |= P.down[e]
        if not is_irreducible(P, ClosedSet(closure)):
            continue
        top = supremum(P, sub)
        if top is None or top not in C:
            return False
    return True


@dataclass(frozen=True)
class Domination:
    """Outcome of :func:`is_dominated`; falsy when a counterexample was found."""

    dominated: bool
    failing: ClosedSet | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.dominated


def is_dominated(P: FinitePoset) -> Domination:
    """Check that the family of sets below a point of ``A`` is closed, for every irreducible ``A``.

    In a finite order sobrification every directed family has a largest
    member, so closure under directed suprema is automatic and only
    down-closure needs checking.
    """
    D, _ = irr_poset(P)
    members = dhat_members(P)
    for a in members:
        bits = family_bits(P, nabla(P, a))
        for i in _indices(bits):
            escaped = D.down[i] & ~bits
            if escaped:
                j = next(_indices(escaped))
                return Domination(
                    False,
                    a,
                    f"{D.labels[j]} <= {D.labels[i]} but only the latter is triangle-below "
                    f"{P.format_set(a)}",
                )
    return Domination(True)


def _transport(
    B: ClosedSet,
    src: tuple[ClosedSet, ...],
    src_labels: tuple[str, ...],
    dst_by_label: Mapping[str, ClosedSet],
    fmap: Mapping[str, str],
) -> ClosedSet:
    bits = 0
    for lab, a in zip(src_labels, src):
        if a.issubset(B):
            bits |= dst_by_label[fmap[lab]].bits
    return ClosedSet(bits)


def phi_psi_transport(P: FinitePoset, Q: FinitePoset, i: IsoWitness) -> IsoWitness:
    """Turn an isomorphism of order sobrifications into one of closed-set lattices.

    ``phi(B)`` is the union of the images of the irreducible closed subsets of
    ``B``; ``psi`` is built the same way from the inverse.
    """
    DP, _ = irr_poset(P)
    DQ, _ = irr_poset(Q)
    if not is_order_iso(DP, DQ, i):
        raise NotIso("supplied map is not an isomorphism of the order sobrifications")
    mp, mq = dhat_members(P), dhat_members(Q)
    by_p = dict(zip(DP.labels, mp))
    by_q = dict(zip(DQ.labels, mq))
    gp, gq = enumerate_closed(P), enumerate_closed(Q)
    phi = {b: _transport(b, mp, DP.labels, by_q, i.forward) for b in gp}
    psi = {c: _transport(c, mq, DQ.labels, by_p, i.backward) for c in gq}
    for b in gp:
        if phi[b] not in gq or psi.get(phi[b]) != b:
            raise NotIso(f"psi(phi({P.format_set(b)})) != {P.format_set(b)}")
    for c in gq:
        if psi[c] not in gp or phi.get(psi[c]) != c:
            raise NotIso(f"phi(psi({Q.format_set(c)})) != {Q.format_set(c)}")
    for a in gp:
        for b in gp:
            if a.issubset(b) != phi[a].issubset(phi[b]):
                raise NotIso("phi does not preserve and reflect inclusion")
    return IsoWitness(phi, psi)


def is_monotone(P: FinitePoset, Q: FinitePoset, f: Mapping[str, str]) -> bool:
    for a in P.labels:
        for b in P.labels:
            if P.le(a, b) and not Q.le(f[a], f[b]):
                return False
    return True


def dhat_map(P: FinitePoset, Q: FinitePoset, f: Mapping[str, str], A: ClosedSet) -> ClosedSet:
    """Closure of the direct image of ``A`` under a monotone map."""
    if not is_monotone(P, Q, f):
        raise NotMonotone("map is not monotone")
    bits = 0
    for x in A:
        bits |= Q.down[Q.index(f[P.labels[x]])]
    image = ClosedSet(bits)
    if A and not is_irreducible(Q, image):
        raise AssertionError("direct image of an irreducible set must be irreducible")
    return image
