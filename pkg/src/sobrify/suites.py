"""Verification suites: each bundles window or sampled checks into certificates."""
from __future__ import annotations

import random
from itertools import combinations
from typing import Callable

import numpy as np

from . import finite, oracles
from .certificates import Certificate, Report
from .errors import NotIso, UnknownSuite
from .generated import (
    INF,
    HPoint,
    SPoint,
    Window,
    chain_sup_h,
    chain_sup_s,
    chain_sup_t,
    h_composite_witness,
    h_le,
    h_maximal,
    h_points,
    h_relation_kind,
    l_map,
    s_le,
    t_le,
    window_points,
)
from .iso import IsoWitness, is_order_iso, poset_iso
from .poset import ClosedSet, _indices, enumerate_closed, supremum, upper_bounds
from .sobrification import (
    dhat_chain_sup,
    dhat_order,
    dhat_s_structure,
    dominated_witness_S,
    h_generator_pool,
    has_top_dhat,
    non_idempotence_witness_S,
    not_dominated_witness_H,
    sample_closed_sets,
    triangle_sym,
    verify_h_sobh,
)
from .symbolic import (
    HLevelGen,
    HPointGen,
    SAllGen,
    SLevelsGen,
    SPointGen,
    TMinBoundedGen,
    TPrincipalGen,
    canonicalize,
    gen_member,
    gen_subset,
    is_irreducible_sym,
    l_image,
    member,
    subset,
    t_geq_k,
    trace,
)

SUITES = ("finite-core", "h-order", "s-order", "tree", "symbolic", "sobrification")

DEFAULT_WINDOW = Window(4, 4, 3)


class _Tally:
    """Accumulate a pass/fail over many samples, remembering the first failure."""

    def __init__(self):
        self.ok = True
        self.detail = ""
        self.count = 0

    def __call__(self, cond: bool, detail: Callable[[], str] | str = "") -> None:
        self.count += 1
        if not cond and self.ok:
            self.ok = False
            self.detail = detail() if callable(detail) else detail


# --- order suites -------------------------------------------------------


def _leq_matrix(points, le) -> np.ndarray:
    return np.array([[le(a, b) for b in points] for a in points], dtype=bool)


def _axiom_checks(cert: Certificate, leq: np.ndarray, points, bound: str) -> None:
    n = len(points)
    eye = np.eye(n, dtype=bool)
    bad = np.flatnonzero(~leq.diagonal())
    cert.add("reflexivity", bound, bad.size == 0, f"fails at {points[bad[0]]}" if bad.size else "")
    sym = np.argwhere(leq & leq.T & ~eye)
    cert.add("antisymmetry", bound, sym.size == 0,
             f"{points[sym[0][0]]} and {points[sym[0][1]]}" if sym.size else "")
    comp = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    trans = np.argwhere(comp & ~leq)
    cert.add(f"transitivity ({n}^3 triples)", bound, trans.size == 0,
             f"{points[trans[0][0]]} -> {points[trans[0][1]]}" if trans.size else "")


def _decomposition_check(cert: Certificate, strict: np.ndarray, oracle: np.ndarray, points, bound: str) -> None:
    diff = np.argwhere(strict != oracle)
    cert.add("strict order equals union of basic relations", bound, diff.size == 0,
             f"disagree at {points[diff[0][0]]}, {points[diff[0][1]]}" if diff.size else "")


def h_order_certificate(w: Window, le: Callable = h_le) -> Certificate:
    cert = Certificate(claim="the relation on H is a partial order made of the five relation cases",
                       paper_ref="characterisation of the order on H")
    pts = h_points(w)
    bound = f"window {w}"
    leq = _leq_matrix(pts, le)
    _axiom_checks(cert, leq, pts, bound)
    strict = leq & ~np.eye(len(pts), dtype=bool)
    rels = oracles.h_strict_relations(pts)
    _decomposition_check(cert, strict, np.logical_or.reduce(list(rels.values())), pts, bound)
    kinds = _Tally()
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            kind = h_relation_kind(a, b)
            if kind is None:
                kinds(not strict[i, j], lambda: f"no case found for {a} < {b}")
                continue
            kinds(bool(strict[i, j] and rels[kind][i, j]), lambda: f"case {kind} wrong for {a}, {b}")
            if ";" in kind:
                c = h_composite_witness(a, b)
                first = oracles.h_lt2 if kind.startswith("<2") else oracles.h_lt3
                kinds(first(a, c) and oracles.h_lt1(c, b), lambda: f"bad witness {c} for {a} {kind} {b}")
    cert.add("closed-form case analysis and composite witnesses", bound, kinds.ok, kinds.detail)
    compat = _Tally()
    for i, a in enumerate(pts):
        for j, b in enumerate(pts):
            if leq[i, j]:
                compat(t_le(l_map(a), l_map(b)), lambda: f"{a} <= {b} but levels unordered")
    cert.add("level map is monotone", bound, compat.ok, compat.detail)
    maximal = _Tally()
    for i, a in enumerate(pts):
        maximal(h_maximal(a) == (not strict[i].any()), lambda: f"maximality wrong at {a}")
    cert.add("maximal points are exactly (m,[])", bound, maximal.ok, maximal.detail)
    cert.add("several maximal points in window", bound, sum(h_maximal(p) for p in pts) >= 2)
    sups = _Tally()
    index = {p: k for k, p in enumerate(pts)}
    heads = list(w.entries) + [w.max_entry + 1]
    for p in pts:
        if len(p.s) >= w.max_len:
            continue
        chain = [HPoint(p.m, (n,) + p.s) for n in heads]
        sups(chain_sup_h(chain) == p, lambda: f"sup formula fails at {p}")
        sups(all(le(c, p) for c in chain), lambda: f"{p} is not an upper bound")
        for q in pts:
            if strict[index[q], index[p]]:
                sups(not all(le(c, q) for c in chain), lambda: f"{q} < {p} bounds the chain into {p}")
    cert.add("chain suprema are least upper bounds", bound, sups.ok, sups.detail)
    _consistency_check(cert, "H", w, le)
    return cert


def _consistency_check(cert: Certificate, space: str, w: Window, le: Callable) -> None:
    small = Window(max(1, w.max_m - 1), max(1, w.max_entry - 1), max(1, w.max_len - 1), w.min_entry)
    big_pts = window_points(space, w)
    small_pts = window_points(space, small)
    pos = {p: k for k, p in enumerate(big_pts)}
    big = _leq_matrix(big_pts, le)
    idx = np.array([pos[p] for p in small_pts])
    ok = set(small_pts) <= set(big_pts) and np.array_equal(big[np.ix_(idx, idx)], _leq_matrix(small_pts, le))
    cert.add("truncation restricts consistently", f"{small} inside {w}", ok)


def s_order_certificate(w: Window) -> Certificate:
    cert = Certificate(claim="the relation on S is a partial order made of the three relation cases",
                       paper_ref="order on Johnstone's S")
    pts = window_points("S", w)
    bound = f"window {w.max_m},{w.max_entry}"
    leq = _leq_matrix(pts, s_le)
    _axiom_checks(cert, leq, pts, bound)
    strict = leq & ~np.eye(len(pts), dtype=bool)
    _decomposition_check(cert, strict, oracles.s_strict_oracle(pts), pts, bound)
    sups = _Tally()
    heads = list(w.entries) + [w.max_entry + 1]
    for m in range(w.max_m + 1):
        top = SPoint(m, INF)
        chain = [SPoint(m, n) for n in heads]
        sups(chain_sup_s(chain) == top, f"sup wrong for component {m}")
        sups(all(s_le(c, top) for c in chain), f"limit point {m} is not an upper bound")
        for q in pts:
            if s_le(q, top) and q != top:
                sups(not all(s_le(c, q) for c in chain), f"{q} bounds component {m}")
    cert.add("component chains have their limit point as supremum", bound, sups.ok, sups.detail)
    _consistency_check(cert, "S", w, s_le)
    return cert


def tree_certificate(w: Window) -> Certificate:
    cert = Certificate(claim="T is a partial order, a tree with root [], and chains n.s have supremum s",
                       paper_ref="the tree T")
    pts = window_points("T", w)
    bound = f"window {w.max_entry},{w.max_len}"
    leq = _leq_matrix(pts, t_le)
    _axiom_checks(cert, leq, pts, bound)
    strict = leq & ~np.eye(len(pts), dtype=bool)
    _decomposition_check(cert, strict, oracles.t_strict_oracle(pts), pts, bound)
    linear = _Tally()
    for i, s in enumerate(pts):
        above = np.flatnonzero(leq[i])
        sub = leq[np.ix_(above, above)]
        linear(bool((sub | sub.T).all()), lambda: f"up-set of {s} is not a chain")
    cert.add("up-sets are linearly ordered", bound, linear.ok, linear.detail)
    root = pts.index(())
    cert.add("[] is the greatest element", bound, bool(leq[:, root].all()))
    sups = _Tally()
    heads = list(w.entries) + [w.max_entry + 1]
    for k, s in enumerate(pts):
        if len(s) >= w.max_len:
            continue
        chain = [(n,) + s for n in heads]
        sups(chain_sup_t(chain) == s, f"sup wrong at {s}")
        for j, q in enumerate(pts):
            if strict[j, k]:
                sups(not all(t_le(c, q) for c in chain), f"{q} bounds the chain into {s}")
    cert.add("chain suprema are least upper bounds", bound, sups.ok, sups.detail)
    _consistency_check(cert, "T", w, t_le)
    return cert


# --- finite core --------------------------------------------------------


def _finite_poset_checks(cert_data: dict[str, _Tally], P) -> None:
    t = cert_data
    labels = P.labels
    desc = lambda: f"poset with covers {[(P.labels[i], P.labels[j]) for i, j in np.argwhere(P.covers)]}"
    closed = oracles.brute_down_sets(P)
    lattice = enumerate_closed(P)
    t["closed sets match power-set filter"](sorted(c.bits for c in lattice) == sorted(closed), desc)
    t["closed-set lattice is distributive"](lattice.is_distributive(), desc)
    principal = {P.down[i] for i in range(len(P))}
    brute_irr = {b for b in closed if oracles.brute_irreducible(P, b, closed)}
    irr = {a.bits for a in finite.dhat_members(P)}
    t["irreducible closed sets are the principal ideals"](brute_irr == principal == irr, desc)
    D, eta = finite.irr_poset(P)
    inv = {v: k for k, v in eta.items()}
    t["eta is an isomorphism onto the order sobrification"](is_order_iso(P, D, IsoWitness(eta, inv)), desc)
    t["compact elements of the sobrification are eta(P)"](finite.prec_compact_set(D) == frozenset(eta.values()), desc)
    t["prec coincides with the order"](
        all(finite.prec_rel(P, a, b) == P.le(a, b) for a in labels for b in labels), desc)
    t["finite posets are dominated"](bool(finite.is_dominated(P)), desc)
    t["finite posets are strongly complete"](finite.is_scpo(P), desc)
    members = finite.dhat_members(P)
    dclosed = enumerate_closed(D)
    for B in lattice:
        fam = finite.family_bits(P, finite.eps(P, B))
        t["eps(B) is closed and strongly closed"](
            D.is_down_closed(fam) and finite.is_strongly_closed(D, ClosedSet(fam)), desc)
        union = 0
        for a in finite.eps(P, B):
            union |= a.bits
        t["union of eps(B) is B"](union == B.bits, desc)
    for fam in dclosed:
        if not fam:
            continue
        union = 0
        for i in fam:
            union |= members[i].bits
        back = finite.family_bits(P, finite.eps(P, ClosedSet(union)))
        strong = finite.is_strongly_closed(D, fam)
        t["closed families lie in eps of their union"](fam.bits & ~back == 0, desc)
        if strong:
            t["strongly closed families equal eps of their union"](fam.bits == back, desc)
        if finite.is_irreducible(D, fam):
            mu = finite.mu_union(P, finite.family_from_bits(P, fam.bits))
            top = supremum(D, fam.bits)
            t["union of a closed irreducible family is closed irreducible"](
                P.is_down_closed(mu.bits) and finite.is_irreducible(P, mu), desc)
            t["irreducible families have the union as supremum"](
                top is not None and members[top].bits == mu.bits, desc)
    for A in members:
        nab = finite.nabla(P, A)
        union = 0
        for a in nab:
            union |= a.bits
        t["A is the supremum of nabla(A)"](union == A.bits, desc)
        t["nabla(A) is irreducible"](finite.is_irreducible(D, ClosedSet(finite.family_bits(P, nab))), desc)
        for A2 in members:
            tri = finite.triangle_rel(P, A2, A)
            prec = finite.prec_rel(D, P.format_set(A2), P.format_set(A))
            t["triangle and prec coincide on the sobrification"](tri == prec, desc)
    for lab in labels:
        for lab2 in labels:
            ub = upper_bounds(P, [lab, lab2])
            brute = {x for x in labels if P.le(lab, x) and P.le(lab2, x)}
            t["upper bounds match brute force and form an up-set"](
                ub == brute and all(y in ub for x in ub for y in labels if P.le(x, y)), desc)


def finite_core_certificates(seed: int = 0, posets: int = 200, pairs: int = 100,
                             max_size: int = 6) -> list[Certificate]:
    rng = random.Random(seed)
    names = [
        "closed sets match power-set filter",
        "closed-set lattice is distributive",
        "irreducible closed sets are the principal ideals",
        "eta is an isomorphism onto the order sobrification",
        "compact elements of the sobrification are eta(P)",
        "prec coincides with the order",
        "finite posets are dominated",
        "finite posets are strongly complete",
        "eps(B) is closed and strongly closed",
        "union of eps(B) is B",
        "closed families lie in eps of their union",
        "strongly closed families equal eps of their union",
        "union of a closed irreducible family is closed irreducible",
        "irreducible families have the union as supremum",
        "A is the supremum of nabla(A)",
        "nabla(A) is irreducible",
        "triangle and prec coincide on the sobrification",
        "upper bounds match brute force and form an up-set",
    ]
    tallies = {n: _Tally() for n in names}
    for _ in range(posets):
        _finite_poset_checks(tallies, oracles.random_poset(rng, max_size))
    sob = Certificate(claim="finite posets are sober, dominated and equal to their order sobrification",
                      paper_ref="dominated dcpos; order sobrification monad")
    for n in names:
        sob.add(n, f"{posets} random posets, |P|<={max_size}", tallies[n].ok, tallies[n].detail)

    faithful = Certificate(claim="closed-set lattices determine finite posets up to isomorphism",
                           paper_ref="dominated dcpos are Gamma-faithful")
    agree, brute, transport = _Tally(), _Tally(), _Tally()
    positives = 0
    for k in range(pairs):
        P = oracles.random_poset(rng, max_size)
        Q = oracles.relabel(P, rng) if k % 2 == 0 else oracles.random_poset(rng, max_size)
        iso = poset_iso(P, Q)
        gp, gq = enumerate_closed(P).as_poset(), enumerate_closed(Q).as_poset()
        giso = poset_iso(gp, gq)
        positives += iso is not None
        desc = f"pair {k}"
        agree((iso is None) == (giso is None), desc)
        brute((iso is not None) == oracles.brute_iso(P, Q), desc)
        if iso is not None:
            brute(is_order_iso(P, Q, iso), desc)
        DP, DQ = finite.irr_poset(P)[0], finite.irr_poset(Q)[0]
        diso = poset_iso(DP, DQ)
        if diso is not None:
            try:
                w = finite.phi_psi_transport(P, Q, diso)
                transport(all(w.backward[w.forward[b]] == b for b in enumerate_closed(P)), desc)
            except NotIso as exc:
                transport(False, f"{desc}: {exc}")
    bound = f"{pairs} pairs, |P|,|Q|<={max_size}, {positives} isomorphic"
    faithful.add("lattices isomorphic iff posets isomorphic", bound, agree.ok, agree.detail)
    faithful.add("iso search agrees with permutation search", bound, brute.ok, brute.detail)
    faithful.add("phi/psi transport is a lattice isomorphism", bound, transport.ok, transport.detail)
    return [sob, faithful]


# --- symbolic -----------------------------------------------------------


def _s_pool(w: Window):
    ms = range(w.max_m + 1)
    levels = list(w.entries)
    pool = [SPointGen(m, n) for m in ms for n in levels + [INF]]
    pool += [SLevelsGen(n) for n in levels]
    pool.append(SAllGen())
    return pool


def _t_pool(w: Window):
    strings = w.strings(min(2, w.max_len))
    pool = [TPrincipalGen(s) for s in strings]
    pool += [TMinBoundedGen(c, u) for u in strings if len(u) < w.max_len for c in w.entries]
    return pool


def _masks(pool, pts, is_member) -> list[int]:
    out = []
    for g in pool:
        bits = 0
        for k, p in enumerate(pts):
            if is_member(p, g):
                bits |= 1 << k
        out.append(bits)
    return out


def symbolic_certificates(w: Window = DEFAULT_WINDOW, seed: int = 0, samples: int = 30) -> list[Certificate]:
    bound = max(w.max_m, w.max_entry) + 2
    pool = h_generator_pool(min(w.max_m, 4), [e for e in w.entries if e <= 4], min(2, w.max_len))
    pts = h_points(w)
    coh = Certificate(claim="closed-form membership, inclusion and traces agree with bounded search",
                      paper_ref="Scott-closed sets of H; principle that levels are met finitely or fully")
    mem = _Tally()
    oracle_masks = []
    for g in pool:
        C = canonicalize("H", [g])
        bits = 0
        for k, p in enumerate(pts):
            ans, stable = oracles.oracle_member(p, C, bound)
            mem(stable and ans == member(p, C), lambda: f"{p} in {C}")
            bits |= ans << k
        oracle_masks.append(bits)
    coh.add("membership matches bounded witness search (stable under doubling)",
            f"{len(pool)} generators, window {w}, witness bound {bound}", mem.ok, mem.detail)
    sub = _Tally()
    for i, g in enumerate(pool):
        for j, h in enumerate(pool):
            sub(gen_subset(g, h) == (oracle_masks[i] & ~oracle_masks[j] == 0), lambda: f"{g} vs {h}")
    coh.add("generator inclusion matches pointwise containment", f"{len(pool)}^2 pairs, window {w}",
            sub.ok, sub.detail)

    rng_seed = seed
    sets = sample_closed_sets(pool, samples, rng_seed)
    big = Window(2 * min(w.max_m, 4) + 1, min(w.max_entry, 4) + 1, 3, w.min_entry)
    big_pts = h_points(big)
    canon, incl = _Tally(), _Tally()
    rng = random.Random(seed)
    for _ in range(samples):
        gens = rng.sample(pool, rng.randint(1, 4))
        C = canonicalize("H", gens)
        C2 = canonicalize("H", C.gens)
        canon(C2 == C and all(member(p, C) == any(gen_member(p, g) for g in gens) for p in pts),
              lambda: f"canonicalize {gens}")
    for C in sets:
        cm = [member(p, C) for p in big_pts]
        for D in sets:
            pointwise = all(member(p, D) for p, inside in zip(big_pts, cm) if inside)
            incl(subset(C, D) == pointwise, lambda: f"{C} vs {D}")
    coh.add("canonical form idempotent and denotation-preserving", f"{samples} generator sets", canon.ok, canon.detail)
    coh.add("set inclusion matches pointwise containment", f"{samples}^2 pairs, window {big}", incl.ok, incl.detail)

    tr, mono = _Tally(), _Tally()
    strings = w.strings()
    for C in sets:
        traces = {s: trace(C, s) for s in strings}
        for s in strings:
            o = oracles.oracle_trace(C, s, bound)
            tr(o is not None and o == traces[s], lambda: f"trace of {C} at {s}: {traces[s]} vs {o}")
        for s in strings:
            for s2 in strings:
                if t_le(s2, s):
                    mono(traces[s].issubset(traces[s2]), lambda: f"{C}: {s2} <= {s}")
    coh.add("traces are finite or all and match stabilized counting", f"{samples} sets, window {w}", tr.ok, tr.detail)
    coh.add("traces are antitone", f"{samples} sets, window {w}", mono.ok, mono.detail)

    spts = window_points("S", w)
    spool = _s_pool(w)
    smasks = _masks(spool, spts, gen_member)
    ssub = _Tally()
    for i, g in enumerate(spool):
        for j, h in enumerate(spool):
            ssub(gen_subset(g, h) == (smasks[i] & ~smasks[j] == 0), lambda: f"{g} vs {h}")
    coh.add("S generator inclusion matches pointwise containment", f"{len(spool)}^2 pairs", ssub.ok, ssub.detail)
    # entries one past the pool so every failed inclusion has an in-window witness
    tw = Window(w.max_m, w.max_entry + 1, w.max_len + 1, w.min_entry)
    tpts = window_points("T", tw)
    tpool = _t_pool(w)
    tmasks = _masks(tpool, tpts, gen_member)
    tsub, tclosed = _Tally(), _Tally()
    for i, g in enumerate(tpool):
        for j, h in enumerate(tpool):
            tsub(gen_subset(g, h) == (tmasks[i] & ~tmasks[j] == 0), lambda: f"{g} vs {h}")
        tclosed(_t_down_closed(tmasks[i], tpts), lambda: f"{g} not down-closed")
    coh.add("T generator inclusion matches pointwise containment", f"{len(tpool)}^2 pairs, window {tw}", tsub.ok, tsub.detail)
    coh.add("T generators are down-closed", f"{len(tpool)} generators", tclosed.ok, tclosed.detail)

    irr = Certificate(claim="irreducible generators are points and levels; finite level unions of S split",
                      paper_ref="irreducible closed subsets of S and H")
    irr.add("point and level closures are irreducible", f"{len(pool)} generators",
            all(is_irreducible_sym(canonicalize("H", [g])) for g in pool))
    irr.add("two incomparable points are reducible", "pt(1,[]), pt(2,[])",
            not is_irreducible_sym(canonicalize("H", [HPointGen(1, ()), HPointGen(2, ())])))
    irr.add("levels-below closure of S is not irreducible", "lvls(n)",
            not any(is_irreducible_sym(canonicalize("S", [SLevelsGen(n)])) for n in range(w.max_entry + 1)))
    irr.add("even/odd components split levels-below into closed parts", f"window {w}",
            _even_odd_split(w))

    key = lkey_certificate(w, seed=seed)
    return [coh, irr, key]


def _t_down_closed(mask: int, pts) -> bool:
    for k in _indices(mask):
        for j, q in enumerate(pts):
            if t_le(q, pts[k]) and not mask >> j & 1:
                return False
    return True


def _even_odd_split(w: Window) -> bool:
    """lvls(1) = E u O with E, O closed (down-closed, no limit points), neither containing it."""
    pts = window_points("S", w)
    level = [p for p in pts if gen_member(p, SLevelsGen(1))]
    even = {p for p in level if p.m % 2 == 0}
    odd = {p for p in level if p.m % 2 == 1}

    def closed_part(part):
        no_limit = all(p.n is not INF for p in part)
        down = all(q in part for p in part for q in pts if s_le(q, p))
        return no_limit and down

    return bool(level) and closed_part(even) and closed_part(odd) and even | odd == set(level) \
        and bool(even - odd) and bool(odd - even)


def lkey_certificate(w: Window = DEFAULT_WINDOW, seed: int = 0, pool_size: int = 24,
                     ks=(1, 2, 6)) -> Certificate:
    cert = Certificate(claim="for closed C, the strings with at least k trace points form a closed set of T, "
                       "and the level map sends C onto the case k = 1",
                       paper_ref="level-counting lemma; the level map is closed")
    bound = max(w.max_m, w.max_entry, 5) + 2
    gens = h_generator_pool(min(w.max_m, 4), [e for e in w.entries if e <= 4], min(2, w.max_len))
    sets = sample_closed_sets(gens, pool_size, seed + 1, max_gens=4)
    # guarantee sets with many distinct point generators on one chain so k = 2, 6 bite
    sets.append(canonicalize("H", [HPointGen(m, ()) for m in range(6)]))
    sets.append(canonicalize("H", [HPointGen(m, (1,)) for m in range(3)] + [HPointGen(m, ()) for m in range(3, 6)]))
    strings = w.strings()
    brute, down, chain, image = _Tally(), _Tally(), _Tally(), _Tally()
    far = range(50, 101)
    for C in sets:
        oracle = {s: oracles.oracle_trace(C, s, bound) for s in strings}
        for k in ks:
            R = t_geq_k(C, k)
            inside = {s: member(s, R) for s in strings}
            for s in strings:
                o = oracle[s]
                brute(o is not None and inside[s] == (o.size() >= k), lambda: f"{C}, k={k}, s={s}")
                for s2 in strings:
                    if t_le(s2, s) and inside[s]:
                        down(inside[s2], lambda: f"{C}, k={k}: {s2} <= {s}")
                if all(member((n,) + s, R) for n in far):
                    chain(inside[s], lambda: f"{C}, k={k}: chain into {s}")
        L = l_image(C)
        image(L == t_geq_k(C, 1), lambda: f"l_image differs for {C}")
        for s in strings:
            o = oracle[s]
            image(o is not None and member(s, L) == (o.size() >= 1), lambda: f"l({C}) at {s}")
    bound_s = f"{len(sets)} closed sets, k in {list(ks)}, window {w}"
    cert.add("matches counting trace points", bound_s, brute.ok, brute.detail)
    cert.add("down-closed in T", bound_s, down.ok, down.detail)
    cert.add("closed under chain suprema", bound_s + ", heads 50..100", chain.ok, chain.detail)
    cert.add("level image equals k = 1 region", bound_s, image.ok, image.detail)
    return cert


# --- sobrification ------------------------------------------------------


def sobrification_certificates(w: Window = DEFAULT_WINDOW, bound: int = 8, seed: int = 0) -> list[Certificate]:
    certs = [
        not_dominated_witness_H(bound),
        dominated_witness_S(bound),
        non_idempotence_witness_S(bound),
        verify_h_sobh(bound, 2, w, seed=seed),
    ]
    st = Certificate(claim="shape of the order sobrifications of S and H",
                     paper_ref="order sobrification of S and of H")
    sw = Window(min(w.max_m, 3), min(w.max_entry, 3), 1, w.min_entry)
    D = dhat_s_structure(sw)
    S_size = len(window_points("S", sw))
    top = D.index("all")
    st.add("sobrification of S adds exactly one point", f"window {sw.max_m},{sw.max_entry}",
           len(D) == S_size + 1 and bool(D.leq[:, top].all()))
    st.add("new top is above the limit points only by covers", f"window {sw.max_m},{sw.max_entry}",
           int(D.covers[:, top].sum()) == sw.max_m + 1)
    st.add("sobrification of H has a top, H does not", "closed form",
           has_top_dhat("H") == HLevelGen(()) and not any(h_maximal(p) and p.s != () for p in h_points(w)))
    levels = _Tally()
    for s in w.strings(2):
        levels(dhat_chain_sup([HLevelGen((n,) + s) for n in range(1, 6)]) == HLevelGen(s), f"{s}")
        levels(all(dhat_order(HLevelGen((n,) + s), HLevelGen(s)) and not dhat_order(HLevelGen(s), HLevelGen((n,) + s))
                   for n in range(1, 6)), f"{s}")
    st.add("every level closure is the supremum of strictly smaller levels", f"|s|<=2, window {w}",
           levels.ok, levels.detail)
    spot = _Tally()
    pool = h_generator_pool(3, range(1, 4), 2)
    for A in pool:
        for A2 in pool:
            if triangle_sym(A2, A):
                spot(gen_subset(A2, A), f"{A2} vs {A}")
                if isinstance(A, HLevelGen):
                    sup = dhat_chain_sup([HLevelGen((n,) + A.s) for n in range(1, 6)])
                    spot(dhat_order(A2, sup), f"{A2} escapes the chain into {A}")
    st.add("triangle-below implies below every recognized chain supremum above", f"{len(pool)}^2 pairs",
           spot.ok, spot.detail)
    certs.append(st)
    return certs


# --- dispatch -----------------------------------------------------------


def run_suite(name: str, window: Window = DEFAULT_WINDOW, seed: int = 0, **kw) -> Report:
    if name == "all":
        report = Report("all", str(window), seed)
        for sub in SUITES:
            report.certificates.extend(run_suite(sub, window, seed, **kw).certificates)
        return report
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    report = Report(name, str(window), seed)
    if name == "finite-core":
        report.certificates = finite_core_certificates(seed, **kw)
    elif name == "h-order":
        report.certificates = [h_order_certificate(window)]
    elif name == "s-order":
        report.certificates = [s_order_certificate(window)]
    elif name == "tree":
        report.certificates = [tree_certificate(window)]
    elif name == "symbolic":
        report.certificates = symbolic_certificates(window, seed)
    elif name == "sobrification":
        report.certificates = sobrification_certificates(window, seed=seed)
    return report
