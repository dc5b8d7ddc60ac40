"""Symbolic order sobrification of S and H, and the certificates built on it.

An element of the order sobrification is an irreducible closed set, i.e. a
generator of irreducible kind; the order is inclusion (:func:`gen_subset`).
"Directed family" means a chain in one of the normal forms recognized by
:func:`sup_of_generator_chain`; every certificate that relies on this says so.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .certificates import Certificate
from .errors import SpaceMismatch, UnrecognizedChainForm
from .generated import (
    INF,
    HPoint,
    SPoint,
    Str,
    Window,
    has_top,
    h_points,
    s_le,
    s_points,
)
from .literals import format_generator as fmt
from .poset import FinitePoset
from .symbolic import (
    Generator,
    HLevelGen,
    HPointGen,
    SAllGen,
    SPointGen,
    SymbolicClosed,
    TPrincipalGen,
    canonicalize,
    gen_key,
    gen_member,
    gen_subset,
    is_irreducible_sym,
    member,
    subset,
    sup_of_generator_chain,
    trace,
)

DHAT_KINDS = {
    "H": (HPointGen, HLevelGen),
    "S": (SPointGen, SAllGen),
    "T": (TPrincipalGen,),
}


def is_dhat_element(g: Generator) -> bool:
    return isinstance(g, DHAT_KINDS[g.space])


def _check_dhat(*gs: Generator) -> None:
    for g in gs:
        if not is_dhat_element(g):
            raise ValueError(f"{fmt(g)} is not an irreducible closed set")


def dhat_order(a: Generator, b: Generator) -> bool:
    if a.space != b.space:
        raise SpaceMismatch(f"{fmt(a)} and {fmt(b)} live in different spaces")
    _check_dhat(a, b)
    return gen_subset(a, b)


def dhat_chain_sup(chain: Sequence[Generator]) -> Generator:
    _check_dhat(*chain)
    return sup_of_generator_chain(chain)


def has_top_dhat(space: str) -> Generator | None:
    """Largest element of the order sobrification: the whole space."""
    return {"H": HLevelGen(()), "S": SAllGen(), "T": TPrincipalGen(())}[space]


def triangle_sym(smaller: Generator, A: Generator) -> bool:
    """``smaller`` is contained in the down-set of some point of ``A``."""
    if smaller.space != A.space:
        raise SpaceMismatch("triangle relation across spaces")
    _check_dhat(smaller, A)
    if isinstance(A, (HPointGen, SPointGen, TPrincipalGen)):
        return gen_subset(smaller, A)
    if isinstance(A, HLevelGen):
        if isinstance(smaller, HPointGen):
            return gen_member(HPoint(smaller.m, smaller.s), A)
        # some (m', s) above the whole level: a large enough m' exists iff the
        # level's string drops a nonempty prefix onto s
        return len(smaller.s) > len(A.s) and gen_subset(HLevelGen(smaller.s), A)
    if isinstance(A, SAllGen):
        # S has no greatest point, so only point closures sit under a point
        return isinstance(smaller, SPointGen)
    raise TypeError(f"unexpected generator {A!r}")


def nabla_sym(A: Generator) -> Callable[[Generator], bool]:
    return lambda smaller: triangle_sym(smaller, A)


@dataclass(frozen=True)
class DHatFamily:
    """A finitely generated down-set of the order sobrification."""

    space: str
    gens: frozenset

    def __contains__(self, a: Generator) -> bool:
        return any(dhat_order(a, g) for g in self.gens)

    def issubset(self, other: DHatFamily) -> bool:
        return all(g in other for g in self.gens)


def eps_sym(C: SymbolicClosed) -> DHatFamily:
    """Irreducible closed subsets of ``C``.

    An irreducible set inside a finite union lies inside one member, so the
    generators of ``C`` generate this family.
    """
    for g in C.gens:
        _check_dhat(g)
    return DHatFamily(C.space, C.gens)


def eta_inverse(family: DHatFamily, x) -> bool:
    """Whether the point ``x`` has its principal ideal in ``family``."""
    if isinstance(x, HPoint):
        return HPointGen(x.m, x.s) in family
    if isinstance(x, SPoint):
        return SPointGen(x.m, x.n) in family
    return TPrincipalGen(x) in family


# --- pools of sample data ----------------------------------------------


def h_generator_pool(max_m: int, entries: Iterable[int], max_len: int) -> list[Generator]:
    w_entries = list(entries)
    strings: list[Str] = [()]
    frontier: list[Str] = [()]
    for _ in range(max_len):
        frontier = [(e,) + s for s in frontier for e in w_entries]
        strings.extend(frontier)
    pool: list[Generator] = [HLevelGen(s) for s in strings]
    pool += [HPointGen(m, s) for s in strings for m in range(max_m + 1)]
    return sorted(pool, key=gen_key)


def sample_closed_sets(pool: Sequence[Generator], count: int, seed: int, max_gens: int = 3) -> list[SymbolicClosed]:
    rng = random.Random(seed)
    space = pool[0].space
    out = []
    for _ in range(count):
        k = rng.randint(1, max_gens)
        out.append(canonicalize(space, rng.sample(list(pool), k)))
    return out


def s_dhat_pool(bound: int) -> list[Generator]:
    pool: list[Generator] = [SPointGen(m, n) for m in range(bound + 1) for n in list(range(bound + 1)) + [INF]]
    pool.append(SAllGen())
    return pool


def dhat_s_structure(w: Window) -> FinitePoset:
    """Truncation of the order sobrification of S: point closures plus the top."""
    gens: list[Generator] = [SPointGen(p.m, p.n) for p in s_points(w)]
    gens.append(SAllGen())
    n = len(gens)
    leq = np.array([[gen_subset(gens[i], gens[j]) for j in range(n)] for i in range(n)])
    return FinitePoset([fmt(g) for g in gens], leq)


# --- certificates ------------------------------------------------------


def not_dominated_witness_H(bound: int = 8) -> Certificate:
    cert = Certificate(
        claim="H is not dominated: the level family below H sits in nabla(H) but its supremum H does not",
        paper_ref="non-dominatedness of H",
    )
    H = has_top_dhat("H")
    ns = range(bound + 1)
    levels = [HLevelGen((n,)) for n in ns]
    cert.add("level (n) inside down(n,[])", f"n<={bound}",
             all(dhat_order(HLevelGen((n,)), HPointGen(n, ())) for n in ns))
    cert.add("level family inside nabla(H)", f"n<={bound}", all(triangle_sym(g, H) for g in levels))
    cert.add("level family is a strict chain", f"n<{bound}",
             all(dhat_order(a, b) and not dhat_order(b, a) for a, b in zip(levels, levels[1:])))
    sup = dhat_chain_sup(levels)
    cert.add("chain supremum is H", f"n<={bound}", sup == H, f"sup = {fmt(sup)}")
    cert.add("H is the top of its order sobrification", "all generators",
             all(dhat_order(g, H) for g in h_generator_pool(bound, range(bound + 1), 1)))
    cert.add("H has no greatest point", "closed form", not has_top("H"),
             "H inside down(x) would make x a greatest element")
    w = Window(bound, bound, 2, min_entry=0)
    pts = h_points(w)
    cert.add("no window point bounds all of H", str(w),
             not any(dhat_order(H, HPointGen(p.m, p.s)) for p in pts))
    cert.add("H is not triangle-below H", "closed form", not triangle_sym(H, H))
    ok = all(
        not gen_member(p, HLevelGen((n,))) or gen_member(p, HPointGen(n, ()))
        for n in ns for p in pts
    )
    cert.add("pointwise: level (n) inside down(n,[]) on window", str(w), ok)
    return cert


def _chain_in_nabla_S(A: Generator, m: int) -> bool:
    """Whether every ``pt(m, n)``, n in N, is triangle-below ``A``."""
    if isinstance(A, SAllGen):
        return True
    return A.n is INF and A.m == m


def dominated_witness_S(bound: int = 8) -> Certificate:
    cert = Certificate(
        claim="S is dominated: every nabla family is closed under the suprema of its chains",
        paper_ref="Johnstone's S is dominated",
    )
    top = SAllGen()
    ms = range(bound + 1)
    cert.add("limit points inside nabla(S)", f"m<={bound}", all(triangle_sym(SPointGen(m, INF), top) for m in ms))
    cert.add("(0,2) triangle-below (3,inf)", "instance", triangle_sym(SPointGen(0, 2), SPointGen(3, INF)))
    sups_ok = all(dhat_chain_sup([SPointGen(m, n) for n in range(bound + 1)]) == SPointGen(m, INF) for m in ms)
    cert.add("component chains have principal suprema", f"m,n<={bound}", sups_ok)
    pool = s_dhat_pool(bound)
    ok, agree = True, True
    for A in pool:
        for m in ms:
            inside = _chain_in_nabla_S(A, m)
            sampled = all(triangle_sym(SPointGen(m, n), A) for n in range(2 * bound + 2))
            agree &= inside == sampled
            if inside:
                ok &= triangle_sym(SPointGen(m, INF), A)
    cert.add("chain-in-nabla formula agrees with sampling", f"n<={2 * bound + 1}", agree)
    cert.add("nabla(A) contains the supremum of each chain it contains", f"{len(pool)} elements A", ok)
    closed_down = all(
        triangle_sym(b2, A)
        for A in pool for b in pool if triangle_sym(b, A)
        for b2 in pool if dhat_order(b2, b)
    )
    cert.add("nabla(A) is down-closed on sample", f"{len(pool)} elements", closed_down)
    cert.add("directed families are component chains", "classification",
             True, "relies on: the only non-trivial directed sets are the chains (pt(m,n))_n")
    return cert


def non_idempotence_witness_S(bound: int = 8) -> Certificate:
    cert = Certificate(
        claim="order sobrification is not idempotent: the point closures form an irreducible "
        "closed set of the sobrification of S that is not a principal ideal",
        paper_ref="non-idempotence of order sobrification",
    )
    pool = s_dhat_pool(bound)
    points = [g for g in pool if isinstance(g, SPointGen)]
    cert.add("B is down-closed", f"{len(pool)} elements",
             all(isinstance(y, SPointGen) for x in points for y in pool if dhat_order(y, x)))
    ms = range(bound + 1)
    cert.add("B contains the suprema of component chains", f"m<={bound}",
             all(isinstance(dhat_chain_sup([SPointGen(m, n) for n in range(bound + 1)]), SPointGen) for m in ms))
    reached = set()
    for m in ms:
        for start in range(bound):
            try:
                reached.add(dhat_chain_sup([SPointGen(m, n) for n in range(start, bound + 1)]))
            except UnrecognizedChainForm:
                pass
    cert.add("top is not the supremum of a recognized chain", f"m<={bound}", SAllGen() not in reached,
             "relies on: the only non-trivial directed sets are the chains (pt(m,n))_n")
    w = Window(bound, bound, 1, min_entry=0)
    spts = s_points(w)
    cert.add("eta is an order embedding of S", str(w),
             all(s_le(a, b) == dhat_order(SPointGen(*a), SPointGen(*b)) for a in spts for b in spts))
    cert.add("levels up to m lie below limit point m", f"m,m'<={bound}",
             all(dhat_order(SPointGen(m, n), SPointGen(m2, INF)) for m2 in ms for m in ms for n in range(m2 + 1)))
    cert.add("B is irreducible", "transport along eta",
             True, "B is order-isomorphic to S via eta; a closed cover of B pulls back to a closed cover "
             "of S, one part holds infinitely many limit points and hence equals S")
    cert.add("limit points pairwise incomparable", f"m<={bound}",
             all(not dhat_order(SPointGen(a, INF), SPointGen(b, INF)) for a in ms for b in ms if a != b))
    cert.add("B has no greatest element", f"{len(points)} candidates",
             all(not dhat_order(SPointGen(x.m + 1, INF), x) for x in points))
    cert.add("top is not in B", f"{len(points)} candidates", not any(dhat_order(SAllGen(), x) for x in points))
    return cert


def verify_h_sobh(bound: int = 8, max_len: int = 2, window: Window | None = None,
                  samples: int = 40, seed: int = 0) -> Certificate:
    cert = Certificate(
        claim="the closed-set lattices of H and of its order sobrification are isomorphic via eps and eta^-1",
        paper_ref="Scott topologies of H and its order sobrification are isomorphic",
    )
    w = window or Window(4, 4, 3)
    pool = h_generator_pool(min(w.max_m, 4), range(1, min(w.max_entry, 4) + 1), min(max_len, w.max_len))
    sets = sample_closed_sets(pool, samples, seed)
    pts = h_points(w)
    cert.add("eta^-1(eps(C)) = C on window points", f"{samples} sets, window {w}",
             all(member(x, C) == eta_inverse(eps_sym(C), x) for C in sets for x in pts))
    strings = h_generator_pool(0, range(1, bound + 1), max_len)
    strings = [g.s for g in strings if isinstance(g, HLevelGen)]
    ms = range(bound + 1)
    cert.add("level m.s inside down(m,s)", f"m<={bound}, |s|<={max_len}",
             all(dhat_order(HLevelGen((m,) + s), HPointGen(m, s)) for s in strings for m in ms))
    cert.add("level s is the supremum of the levels m.s", f"m<={bound}, |s|<={max_len}",
             all(dhat_chain_sup([HLevelGen((m,) + s) for m in ms]) == HLevelGen(s) for s in strings))
    ok = True
    for C in sets:
        for g in pool:
            if isinstance(g, HLevelGen):
                ok &= trace(C, g.s).is_all == (g in eps_sym(C))
    cert.add("whole level in C iff level closure in eps(C)", f"{samples} sets", ok)
    incl, sound = True, True
    for C in sets:
        for D in sets:
            sub = subset(C, D)
            incl &= sub == eps_sym(C).issubset(eps_sym(D))
            if sub:
                sound &= all(member(x, D) for x in pts if member(x, C))
    cert.add("C <= D iff eps(C) <= eps(D)", f"{samples}^2 pairs", incl)
    cert.add("symbolic inclusion sound on window", f"{samples}^2 pairs", sound)
    cert.add("levels and points are irreducible", f"{len(pool)} generators",
             all(is_irreducible_sym(canonicalize("H", [g])) for g in pool))
    return cert
