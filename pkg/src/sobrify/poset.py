"""Explicit finite posets, down-sets as bit vectors, and the lattice of closed sets.

Every directed subset of a finite poset has a greatest element, so the
Scott-closed sets of a finite poset are exactly its down-sets.  All the
operations here rely on that.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CycleError,
    EmptyInput,
    OrderError,
    ParseError,
    SizeLimitExceeded,
    UnknownLabel,
)

ENUMERATION_LIMIT = 20


def _bits(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def _indices(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class ClosedSet:
    """A down-closed subset of some finite poset, stored as a bit vector."""

    bits: int

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return _indices(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def issubset(self, other: ClosedSet) -> bool:
        return self.bits & ~other.bits == 0

    def union(self, other: ClosedSet) -> ClosedSet:
        return ClosedSet(self.bits | other.bits)

    def intersection(self, other: ClosedSet) -> ClosedSet:
        return ClosedSet(self.bits & other.bits)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), tuple(self))


class FinitePoset:
    """A finite partial order given by labels and a boolean ``leq`` matrix.

    ``leq[i, j]`` is true iff element ``i`` is below or equal to element ``j``.
    Instances are immutable; derived tables are computed lazily and cached.
    """

    def __init__(self, labels: Sequence[str], leq, *, validate: bool = True):
        self.labels: tuple[str, ...] = tuple(labels)
        leq = np.array(leq, dtype=bool)
        leq.setflags(write=False)
        self.leq = leq
        n = len(self.labels)
        if leq.shape != (n, n):
            raise OrderError(f"leq must be {n}x{n}, got {leq.shape}")
        if len(set(self.labels)) != n:
            raise OrderError("labels must be distinct")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        if validate:
            problem = order_axiom_violation(leq)
            if problem is not None:
                if problem[0] == "antisymmetry":
                    raise CycleError(f"antisymmetry fails at {problem[1:]}")
                raise OrderError(f"{problem[0]} fails at {problem[1:]}")

    @classmethod
    def from_predicate(cls, labels: Sequence[str], points: Sequence, le: Callable) -> FinitePoset:
        n = len(points)
        leq = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(points):
            for j, b in enumerate(points):
                leq[i, j] = le(a, b)
        return cls(labels, leq)

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.labels, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements)"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def le(self, a: str, b: str) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    @property
    def full(self) -> int:
        return (1 << len(self)) - 1

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Bit mask of the principal ideal of each element."""
        return tuple(_bits(np.flatnonzero(self.leq[:, j])) for j in range(len(self)))

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(_bits(np.flatnonzero(self.leq[i, :])) for i in range(len(self)))

    @cached_property
    def covers(self) -> np.ndarray:
        """``covers[i, j]`` iff ``j`` covers ``i`` (i < j with nothing between)."""
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        two_step = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return lt & ~two_step

    def members(self, subset: ClosedSet | int) -> tuple[str, ...]:
        bits = subset.bits if isinstance(subset, ClosedSet) else subset
        return tuple(self.labels[i] for i in _indices(bits))

    def mask(self, labels: Iterable[str]) -> int:
        return _bits(self.index(lab) for lab in labels)

    def is_down_closed(self, bits: int) -> bool:
        return all(self.down[i] & ~bits == 0 for i in _indices(bits))

    def format_set(self, subset: ClosedSet | int) -> str:
        return "{" + ",".join(self.members(subset)) + "}"


def order_axiom_violation(leq: np.ndarray) -> tuple | None:
    """Return ``(axiom, i, j[, k])`` for the first failed order axiom, else None."""
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    diag = np.flatnonzero(~leq.diagonal())
    if diag.size:
        return ("reflexivity", int(diag[0]), int(diag[0]))
    sym = leq & leq.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = map(int, np.argwhere(sym)[0])
        return ("antisymmetry", i, j)
    comp = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    bad = comp & ~leq
    if bad.any():
        i, k = map(int, np.argwhere(bad)[0])
        j = int(np.flatnonzero(leq[i] & leq[:, k])[0])
        return ("transitivity", i, j, k)
    return None


def build_poset(labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> FinitePoset:
    """Build the poset whose order is the reflexive-transitive closure of ``covers``."""
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise OrderError("labels must be distinct")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    rel = np.eye(n, dtype=bool)
    for a, b in covers:
        if a not in index:
            raise UnknownLabel(a)
        if b not in index:
            raise UnknownLabel(b)
        rel[index[a], index[b]] = True
    # repeated squaring reaches the transitive closure in log2(n) rounds
    while True:
        nxt = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
        if np.array_equal(nxt, rel):
            break
        rel = nxt
    cyc = rel & rel.T & ~np.eye(n, dtype=bool)
    if cyc.any():
        i, j = map(int, np.argwhere(cyc)[0])
        raise CycleError(f"{labels[i]} and {labels[j]} lie on a cycle")
    return FinitePoset(labels, rel, validate=False)


def parse_poset(text: str) -> FinitePoset:
    """Parse the line format ``elem <name>`` / ``cover <a> <b>`` with ``#`` comments."""
    labels: list[str] = []
    covers: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "elem" and len(parts) == 2:
            if parts[1] in labels:
                raise ParseError(f"line {lineno}: duplicate element {parts[1]!r}")
            labels.append(parts[1])
        elif parts[0] == "cover" and len(parts) == 3:
            covers.append((parts[1], parts[2]))
        else:
            raise ParseError(f"line {lineno}: cannot parse {raw.strip()!r}")
    try:
        return build_poset(labels, covers)
    except UnknownLabel as exc:
        raise ParseError(f"cover mentions undeclared element {exc.args[0]!r}") from None


def read_poset(path) -> FinitePoset:
    with open(path, encoding="utf-8") as fh:
        return parse_poset(fh.read())


def format_poset(P: FinitePoset) -> str:
    lines = [f"elem {lab}" for lab in P.labels]
    for i, j in np.argwhere(P.covers):
        lines.append(f"cover {P.labels[i]} {P.labels[j]}")
    return "\n".join(lines) + "\n"


def down_closure(P: FinitePoset, subset: Iterable[str]) -> ClosedSet:
    bits = 0
    for lab in subset:
        bits |= P.down[P.index(lab)]
    return ClosedSet(bits)


def principal(P: FinitePoset, label: str) -> ClosedSet:
    return ClosedSet(P.down[P.index(label)])


def upper_bounds(P: FinitePoset, subset: Iterable[str]) -> frozenset[str]:
    """Common upper bounds: the intersection of the principal filters."""
    subset = list(subset)
    if not subset:
        raise EmptyInput("upper bounds need a nonempty set")
    bits = P.full
    for lab in subset:
        bits &= P.up[P.index(lab)]
    return frozenset(P.members(bits))


def supremum(P: FinitePoset, bits: int) -> int | None:
    """Index of the least upper bound of the given set, or None."""
    ub = P.full
    for i in _indices(bits):
        ub &= P.up[i]
    for i in _indices(ub):
        if P.up[i] & ub == ub:
            return i
    return None


@dataclass(frozen=True)
class ClosedLattice:
    """All closed sets of a finite poset, in canonical order (size, then members)."""

    poset: FinitePoset
    sets: tuple[ClosedSet, ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[ClosedSet]:
        return iter(self.sets)

    def __contains__(self, item: ClosedSet) -> bool:
        return item in self._set_index

    @cached_property
    def _set_index(self) -> dict[ClosedSet, int]:
        return {c: i for i, c in enumerate(self.sets)}

    def index(self, c: ClosedSet) -> int:
        return self._set_index[c]

    def is_distributive(self) -> bool:
        sets = self.sets
        for a in sets:
            for b in sets:
                ab = a.bits & b.bits
                for c in sets:
                    if a.bits & (b.bits | c.bits) != ab | (a.bits & c.bits):
                        return False
        return True

    def as_poset(self) -> FinitePoset:
        """The lattice ordered by inclusion, labelled by member lists."""
        n = len(self.sets)
        bits = [c.bits for c in self.sets]
        leq = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(n):
                leq[i, j] = bits[i] & ~bits[j] == 0
        return FinitePoset([self.poset.format_set(c) for c in self.sets], leq, validate=False)


def _linear_extension(P: FinitePoset) -> list[int]:
    return sorted(range(len(P)), key=lambda i: (P.down[i].bit_count(), i))


def enumerate_down_sets(P: FinitePoset, within: int | None = None) -> list[int]:
    """Bit masks of all down-sets of ``P`` contained in ``within``."""
    within = P.full if within is None else within
    order = [i for i in _linear_extension(P) if within >> i & 1]
    out: list[int] = []

    def extend(pos: int, bits: int) -> None:
        if pos == len(order):
            out.append(bits)
            return
        i = order[pos]
        extend(pos + 1, bits)
        below = P.down[i] & ~(1 << i)
        if below & ~bits == 0:
            extend(pos + 1, bits | 1 << i)

    extend(0, 0)
    return out


def enumerate_closed(P: FinitePoset, limit: int = ENUMERATION_LIMIT) -> ClosedLattice:
    if len(P) > limit:
        raise SizeLimitExceeded(f"|P| = {len(P)} exceeds enumeration limit {limit}")
    sets = sorted((ClosedSet(b) for b in enumerate_down_sets(P)), key=ClosedSet.sort_key)
    return ClosedLattice(P, tuple(sets))
