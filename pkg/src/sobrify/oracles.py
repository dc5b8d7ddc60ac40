"""Brute-force oracles used to cross-check the closed-form decisions.

The order oracles build the basic relations literally and compose them by
searching intermediate points inside the window (which is closed under the
intermediates the composites need).  Membership oracles search for a bounded
witness and report whether the answer is stable when the bound doubles.
"""
from __future__ import annotations

import random
from typing import Sequence

import numpy as np

from .generated import INF, HPoint, SPoint, Str, h_le
from .poset import FinitePoset, _indices, build_poset
from .symbolic import ALL, HLevelGen, SymbolicClosed, Trace, gen_member


def _ends_with(a: Str, b: Str) -> bool:
    return len(a) > len(b) and a[len(a) - len(b):] == b


def h_lt1(a: HPoint, b: HPoint) -> bool:
    return (a.m == b.m and len(a.s) == len(b.s) >= 1
            and a.s[1:] == b.s[1:] and a.s[0] < b.s[0])


def h_lt2(a: HPoint, b: HPoint) -> bool:
    return a.m == b.m and _ends_with(a.s, b.s)


def h_lt3(a: HPoint, b: HPoint) -> bool:
    return _ends_with(a.s, b.s) and min(a.s[: len(a.s) - len(b.s)]) <= b.m


def _matrix(points: Sequence, rel) -> np.ndarray:
    return np.array([[rel(a, b) for b in points] for a in points], dtype=bool)


def _compose(r: np.ndarray, q: np.ndarray) -> np.ndarray:
    return (r.astype(np.int64) @ q.astype(np.int64)) > 0


def h_strict_relations(points: Sequence[HPoint]) -> dict[str, np.ndarray]:
    r1, r2, r3 = (_matrix(points, f) for f in (h_lt1, h_lt2, h_lt3))
    return {"<1": r1, "<2": r2, "<3": r3, "<2;<1": _compose(r2, r1), "<3;<1": _compose(r3, r1)}


def h_strict_oracle(points: Sequence[HPoint]) -> np.ndarray:
    rels = h_strict_relations(points)
    return np.logical_or.reduce(list(rels.values()))


def s_strict_oracle(points: Sequence[SPoint]) -> np.ndarray:
    def lt1(a, b):
        return a.m == b.m and a.n is not INF and b.n is not INF and a.n < b.n

    def lt2(a, b):
        return a.m == b.m and a.n is not INF and b.n is INF

    def lt3(a, b):
        return a.n is not INF and b.n is INF and a.n <= b.m

    return np.logical_or.reduce([_matrix(points, f) for f in (lt1, lt2, lt3)])


def t_strict_oracle(points: Sequence[Str]) -> np.ndarray:
    def lt1(a, b):
        return len(a) == len(b) >= 1 and a[1:] == b[1:] and a[0] < b[0]

    r1, r2 = _matrix(points, lt1), _matrix(points, _ends_with)
    return r1 | r2 | _compose(r2, r1)


# --- membership and traces in H -----------------------------------------


def level_member_witness(p: HPoint, s: Str, bound: int) -> bool:
    """Search ``m' <= bound`` with ``p <= (m', s)``."""
    return any(h_le(p, HPoint(m, s)) for m in range(bound + 1))


def oracle_member(p: HPoint, C: SymbolicClosed, bound: int) -> tuple[bool, bool]:
    """Bounded-witness membership; returns ``(answer, stable_under_doubling)``."""

    def at(b: int) -> bool:
        for g in C.gens:
            if isinstance(g, HLevelGen):
                if level_member_witness(p, g.s, b):
                    return True
            elif gen_member(p, g):
                return True
        return False

    first, second = at(bound), at(2 * bound)
    return first, first == second


def oracle_trace(C: SymbolicClosed, s: Str, bound: int) -> Trace | None:
    """Trace by counting ``m <= B`` for ``B = bound, 2*bound``; None if unstable."""
    small = frozenset(m for m in range(bound + 1) if oracle_member(HPoint(m, s), C, 2 * bound + 2)[0])
    large = frozenset(m for m in range(2 * bound + 1) if oracle_member(HPoint(m, s), C, 4 * bound + 2)[0])
    if len(small) == bound + 1 and len(large) == 2 * bound + 1:
        return ALL
    if small == large:
        return Trace(small)
    return None


# --- finite posets ------------------------------------------------------


def random_poset(rng: random.Random, max_size: int = 6, density: float | None = None) -> FinitePoset:
    n = rng.randint(1, max_size)
    p = rng.uniform(0.15, 0.6) if density is None else density
    perm = list(range(n))
    rng.shuffle(perm)
    labels = [f"x{i}" for i in range(n)]
    covers = [(labels[perm[i]], labels[perm[j]]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_poset(labels, covers)


def relabel(P: FinitePoset, rng: random.Random) -> FinitePoset:
    """An isomorphic copy with shuffled positions and fresh labels."""
    n = len(P)
    perm = list(range(n))
    rng.shuffle(perm)
    labels = [f"y{k}" for k in range(n)]
    leq = P.leq[np.ix_(perm, perm)]
    return FinitePoset(labels, leq)


def brute_down_sets(P: FinitePoset) -> list[int]:
    """All subsets of ``P`` closed downward, by filtering the full power set."""
    n = len(P)
    out = []
    for bits in range(1 << n):
        if all(not P.leq[i, j] or bits >> i & 1 for j in _indices(bits) for i in range(n)):
            out.append(bits)
    return out


def brute_irreducible(P: FinitePoset, bits: int, closed: Sequence[int]) -> bool:
    """Quantify over every pair of closed sets of ``P``."""
    if not bits:
        return False
    for b in closed:
        for c in closed:
            if bits & ~(b | c) == 0 and bits & ~b and bits & ~c:
                return False
    return True


def brute_iso(P: FinitePoset, Q: FinitePoset) -> bool:
    from itertools import permutations

    if len(P) != len(Q):
        return False
    for perm in permutations(range(len(Q))):
        idx = np.array(perm)
        if np.array_equal(P.leq, Q.leq[np.ix_(idx, idx)]):
            return True
    return False
