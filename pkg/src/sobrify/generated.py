"""Johnstone's dcpo S, the counterexample H and the tree T.

Strings over the naturals are plain tuples; ``s[0]`` is the most recently
consed entry, so ``(n,) + s`` is ``n`` consed onto ``s`` and ``t + s`` is the
concatenation with ``t`` in front.  Every order predicate here is decided in
closed form; the literal relation definitions used to cross-check them live
in :mod:`sobrify.oracles`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Sequence, Union

from .errors import SizeLimitExceeded, UnrecognizedChainForm
from .poset import FinitePoset

Str = tuple[int, ...]
EMPTY: Str = ()

TRUNCATE_LIMIT = 5000


class Limit(enum.Enum):
    INF = "inf"

    def __repr__(self) -> str:
        return "INF"


INF = Limit.INF


class HPoint(NamedTuple):
    m: int
    s: Str


class SPoint(NamedTuple):
    m: int
    n: Union[int, Limit]

    @property
    def is_limit(self) -> bool:
        return self.n is INF


@dataclass(frozen=True)
class Window:
    """Truncation bounds: ``m <= max_m``, entries in ``[min_entry, max_entry]``, ``len <= max_len``.

    For S the levels run over the same entry range, plus the limit level.
    """

    max_m: int = 4
    max_entry: int = 4
    max_len: int = 3
    min_entry: int = 1

    def __post_init__(self):
        if min(self.max_m, self.max_entry, self.max_len) < 1:
            raise ValueError("window bounds must be >= 1")
        if not 0 <= self.min_entry <= self.max_entry:
            raise ValueError("min_entry must lie in [0, max_entry]")

    @property
    def entries(self) -> range:
        return range(self.min_entry, self.max_entry + 1)

    def strings(self, max_len: int | None = None) -> list[Str]:
        top = self.max_len if max_len is None else max_len
        out: list[Str] = []
        for length in range(top + 1):
            out.extend(product(self.entries, repeat=length))
        return out

    def __str__(self) -> str:
        text = f"{self.max_m},{self.max_entry},{self.max_len}"
        return text if self.min_entry == 1 else f"{text} (entries from {self.min_entry})"


def tail_le(r: Str, s: Str) -> bool:
    """``r`` equals ``s`` or is ``s`` with a smaller first entry (same length)."""
    if len(r) != len(s):
        return False
    return not s or (r[1:] == s[1:] and r[0] <= s[0])


# --- the tree T ---------------------------------------------------------


def t_le(a: Str, b: Str) -> bool:
    """``a`` is below ``b`` in T.

    Every step of the order either lowers the first entry (same length) or
    drops a nonempty prefix, so ``a <= b`` iff ``a`` is at least as long and
    its suffix of length ``len(b)`` is ``b`` with a possibly smaller head.
    """
    if len(a) < len(b):
        return False
    return tail_le(a[len(a) - len(b):], b)


def t_lt(a: Str, b: Str) -> bool:
    return a != b and t_le(a, b)


# --- the counterexample H ----------------------------------------------


def _dropped_min(a: Str, b: Str) -> int | None:
    """Minimum of the prefix of ``a`` in front of its last ``len(b)`` entries."""
    extra = len(a) - len(b)
    return min(a[:extra]) if extra > 0 else None


def h_le(a: HPoint, b: HPoint) -> bool:
    (m, s), (m2, s2) = a, b
    if not t_le(s, s2):
        return False
    if m == m2:
        return True
    low = _dropped_min(s, s2)
    return low is not None and low <= m2


def h_lt(a: HPoint, b: HPoint) -> bool:
    return a != b and h_le(a, b)


def h_relation_kind(a: HPoint, b: HPoint) -> str | None:
    """Name of the case that puts ``a`` strictly below ``b``, or None.

    Cases are tried in the order ``<1``, ``<2``, ``<3``, ``<2;<1``, ``<3;<1``.
    """
    (m, s), (m2, s2) = a, b
    if a == b or not t_le(s, s2):
        return None
    if len(s) == len(s2):
        return "<1" if m == m2 else None
    low = _dropped_min(s, s2)
    same_tail = s[len(s) - len(s2):] == s2
    if same_tail:
        if m == m2:
            return "<2"
        return "<3" if low <= m2 else None
    if m == m2:
        return "<2;<1"
    return "<3;<1" if low <= m2 else None


def h_composite_witness(a: HPoint, b: HPoint) -> HPoint | None:
    """Intermediate point for the composite cases ``<2;<1`` and ``<3;<1``.

    The middle point is forced: it keeps the suffix of ``a`` of the length of
    ``b``'s string and takes the first coordinate of ``b``.
    """
    kind = h_relation_kind(a, b)
    if kind not in ("<2;<1", "<3;<1"):
        return None
    return HPoint(b.m, a.s[len(a.s) - len(b.s):])


def h_maximal(p: HPoint) -> bool:
    """``(m, s)`` is maximal iff ``s`` is empty: every nonempty ``s`` has ``s <1`` bumps."""
    return p.s == EMPTY


def l_map(p: HPoint) -> Str:
    return p.s


# --- Johnstone's S -----------------------------------------------------


def s_le(a: SPoint, b: SPoint) -> bool:
    if a == b:
        return True
    if a.n is INF:
        return False
    if b.n is INF:
        return a.m == b.m or a.n <= b.m
    return a.m == b.m and a.n < b.n


def s_lt(a: SPoint, b: SPoint) -> bool:
    return a != b and s_le(a, b)


def has_top(space: str) -> bool:
    """Whether the whole space has a greatest element."""
    return {"H": False, "S": False, "T": True}[space]


# --- suprema of chains in normal form --------------------------------


def _strict_heads(heads: Sequence[int]) -> bool:
    return len(heads) >= 2 and all(x < y for x, y in zip(heads, heads[1:]))


def chain_sup_h(chain: Sequence[HPoint]) -> HPoint:
    """Supremum of the chain ``(m, n.s)`` for strictly increasing ``n``: ``(m, s)``.

    The given finite prefix stands for the infinite chain it starts.
    """
    if not chain or any(not p.s for p in chain):
        raise UnrecognizedChainForm("expected points (m, n.s) with a fixed m and s")
    m, tail = chain[0].m, chain[0].s[1:]
    if any(p.m != m or p.s[1:] != tail for p in chain) or not _strict_heads([p.s[0] for p in chain]):
        raise UnrecognizedChainForm("expected points (m, n.s) with a fixed m and s")
    return HPoint(m, tail)


def chain_sup_s(chain: Sequence[SPoint]) -> SPoint:
    if not chain or any(p.n is INF or p.m != chain[0].m for p in chain):
        raise UnrecognizedChainForm("expected finite points of one component")
    if not _strict_heads([p.n for p in chain]):
        raise UnrecognizedChainForm("levels must strictly increase")
    return SPoint(chain[0].m, INF)


def chain_sup_t(chain: Sequence[Str]) -> Str:
    if not chain or any(not s or s[1:] != chain[0][1:] for s in chain):
        raise UnrecognizedChainForm("expected strings n.s with a fixed s")
    if not _strict_heads([s[0] for s in chain]):
        raise UnrecognizedChainForm("heads must strictly increase")
    return chain[0][1:]


# --- truncations -------------------------------------------------------


def h_points(w: Window) -> list[HPoint]:
    return [HPoint(m, s) for s in w.strings() for m in range(w.max_m + 1)]


def s_points(w: Window) -> list[SPoint]:
    levels: list[Union[int, Limit]] = list(w.entries)
    levels.append(INF)
    return [SPoint(m, n) for m in range(w.max_m + 1) for n in levels]


def t_points(w: Window) -> list[Str]:
    return w.strings()


def window_points(space: str, w: Window) -> list:
    return {"H": h_points, "S": s_points, "T": t_points}[space](w)


def order_of(space: str):
    return {"H": h_le, "S": s_le, "T": t_le}[space]


def truncate(space: str, w: Window, limit: int = TRUNCATE_LIMIT) -> FinitePoset:
    """The finite subposet of ``space`` on the points inside the window."""
    from .literals import format_point

    pts = window_points(space, w)
    if len(pts) > limit:
        raise SizeLimitExceeded(f"{len(pts)} points exceed truncation limit {limit}")
    return FinitePoset.from_predicate([format_point(p) for p in pts], pts, order_of(space))
