"""Order isomorphism by backtracking with invariant pruning."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Mapping

import numpy as np

from .errors import SizeLimitExceeded
from .poset import FinitePoset

ISO_LIMIT = 256


@dataclass(frozen=True)
class IsoWitness:
    """A pair of mutually inverse order-preserving maps."""

    forward: Mapping[Hashable, Hashable]
    backward: Mapping[Hashable, Hashable]

    def inverse(self) -> IsoWitness:
        return IsoWitness(self.backward, self.forward)


def _invariants(P: FinitePoset) -> list[tuple[int, int, int, int]]:
    cov = P.covers
    indeg = cov.sum(axis=0)
    outdeg = cov.sum(axis=1)
    return [
        (int(indeg[i]), int(outdeg[i]), P.down[i].bit_count(), P.up[i].bit_count())
        for i in range(len(P))
    ]


def poset_iso(P: FinitePoset, Q: FinitePoset, limit: int = ISO_LIMIT) -> IsoWitness | None:
    """Find an order isomorphism ``P -> Q`` or prove there is none.

    Elements of ``P`` are assigned in label order within invariant classes
    (rarest class first); the first witness found is returned.
    """
    if max(len(P), len(Q)) > limit:
        raise SizeLimitExceeded(f"iso search limited to {limit} elements")
    n = len(P)
    if n != len(Q):
        return None
    inv_p, inv_q = _invariants(P), _invariants(Q)
    if Counter(inv_p) != Counter(inv_q):
        return None
    by_inv: dict[tuple, list[int]] = {}
    for j in sorted(range(n), key=lambda j: Q.labels[j]):
        by_inv.setdefault(inv_q[j], []).append(j)
    freq = Counter(inv_p)
    order = sorted(range(n), key=lambda i: (freq[inv_p[i]], inv_p[i], P.labels[i]))
    lp, lq = P.leq, Q.leq
    assign = [-1] * n
    used = [False] * n

    def consistent(i: int, j: int, depth: int) -> bool:
        for d in range(depth):
            a = order[d]
            b = assign[a]
            if lp[i, a] != lq[j, b] or lp[a, i] != lq[b, j]:
                return False
        return True

    def search(depth: int) -> bool:
        if depth == n:
            return True
        i = order[depth]
        for j in by_inv[inv_p[i]]:
            if not used[j] and consistent(i, j, depth):
                assign[i], used[j] = j, True
                if search(depth + 1):
                    return True
                assign[i], used[j] = -1, False
        return False

    if not search(0):
        return None
    fwd = {P.labels[i]: Q.labels[assign[i]] for i in range(n)}
    return IsoWitness(fwd, {v: k for k, v in fwd.items()})


def is_order_iso(P: FinitePoset, Q: FinitePoset, w: IsoWitness) -> bool:
    """Check that ``w`` is a pair of inverse bijections preserving and reflecting order."""
    if len(P) != len(Q) or set(w.forward) != set(P.labels) or set(w.backward) != set(Q.labels):
        return False
    if any(w.backward[w.forward[a]] != a for a in P.labels):
        return False
    if any(w.forward[w.backward[b]] != b for b in Q.labels):
        return False
    perm = np.array([Q.index(w.forward[a]) for a in P.labels])
    return bool(np.array_equal(P.leq, Q.leq[np.ix_(perm, perm)]))
