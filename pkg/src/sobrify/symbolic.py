"""Finitely generated Scott-closed subsets of H, S and T.

A closed set is a finite antichain of generators, each denoting a closed set:

    HPointGen(m, s)    down-set of the point (m, s) of H
    HLevelGen(s)       down-set of the level {(m, s) | m in N} of H
    SPointGen(m, n)    down-set of a point of S (n may be INF)
    SLevelsGen(n)      all finite points of S on levels <= n
    SAllGen()          all of S
    TPrincipalGen(s)   down-set of s in T
    TMinBoundedGen(c, u)  strings t.r with r = u up to a smaller head,
                          t nonempty and min(t) <= c

Membership, inclusion and traces are all decided by closed formulas.  The
down-set of a level is the preimage of a principal down-set of T under the
level map, which is what makes these formulas short.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Iterable, Sequence, Union

from .errors import EmptySetError, NotRepresentable, SpaceMismatch, UnrecognizedChainForm
from .generated import (
    INF,
    HPoint,
    Limit,
    SPoint,
    Str,
    chain_sup_h,
    chain_sup_s,
    chain_sup_t,
    h_le,
    s_le,
    t_le,
)


@dataclass(frozen=True)
class HPointGen:
    m: int
    s: Str
    space: ClassVar[str] = "H"
    irreducible: ClassVar[bool] = True


@dataclass(frozen=True)
class HLevelGen:
    s: Str
    space: ClassVar[str] = "H"
    irreducible: ClassVar[bool] = True


@dataclass(frozen=True)
class SPointGen:
    m: int
    n: Union[int, Limit]
    space: ClassVar[str] = "S"
    irreducible: ClassVar[bool] = True


@dataclass(frozen=True)
class SLevelsGen:
    n: int
    space: ClassVar[str] = "S"
    irreducible: ClassVar[bool] = False


@dataclass(frozen=True)
class SAllGen:
    space: ClassVar[str] = "S"
    irreducible: ClassVar[bool] = True


@dataclass(frozen=True)
class TPrincipalGen:
    s: Str
    space: ClassVar[str] = "T"
    irreducible: ClassVar[bool] = True


@dataclass(frozen=True)
class TMinBoundedGen:
    c: int
    u: Str
    space: ClassVar[str] = "T"
    irreducible: ClassVar[bool] = False


Generator = Union[HPointGen, HLevelGen, SPointGen, SLevelsGen, SAllGen, TPrincipalGen, TMinBoundedGen]

_KIND_ORDER = {
    HPointGen: 0, HLevelGen: 1, SPointGen: 2, SLevelsGen: 3, SAllGen: 4,
    TPrincipalGen: 5, TMinBoundedGen: 6,
}


def gen_key(g: Generator) -> tuple:
    def norm(v):
        if v is INF:
            return (1, 0)
        if isinstance(v, tuple):
            return (0, len(v), v)
        return (0, v)

    fields = tuple(norm(v) for v in g.__dict__.values())
    return (_KIND_ORDER[type(g)], fields)


def _prefix_min(a: Str, b: Str) -> int | None:
    extra = len(a) - len(b)
    return min(a[:extra]) if extra > 0 else None


def _space_of_point(p) -> str:
    if isinstance(p, HPoint):
        return "H"
    if isinstance(p, SPoint):
        return "S"
    if isinstance(p, tuple):
        return "T"
    raise TypeError(f"not a point: {p!r}")


def gen_member(p, g: Generator) -> bool:
    if _space_of_point(p) != g.space:
        raise SpaceMismatch(f"point {p!r} is not in space {g.space}")
    if isinstance(g, HPointGen):
        return h_le(p, HPoint(g.m, g.s))
    if isinstance(g, HLevelGen):
        # p <= (m', s) for some m' iff the string of p lies below s in T (take m' = p.m)
        return t_le(p.s, g.s)
    if isinstance(g, SPointGen):
        return s_le(p, SPoint(g.m, g.n))
    if isinstance(g, SLevelsGen):
        return p.n is not INF and p.n <= g.n
    if isinstance(g, SAllGen):
        return True
    if isinstance(g, TPrincipalGen):
        return t_le(p, g.s)
    if isinstance(g, TMinBoundedGen):
        low = _prefix_min(p, g.u)
        return low is not None and low <= g.c and t_le(p, g.u)
    raise TypeError(f"not a generator: {g!r}")


def gen_subset(g: Generator, h: Generator) -> bool:
    """Inclusion of the denotations of two generators."""
    if g.space != h.space:
        raise SpaceMismatch(f"{g!r} and {h!r} live in different spaces")
    if isinstance(h, SAllGen):
        return True
    if isinstance(g, SAllGen):
        return False
    if isinstance(g, (HPointGen, SPointGen, TPrincipalGen)):
        point = {HPointGen: lambda: HPoint(g.m, g.s), SPointGen: lambda: SPoint(g.m, g.n),
                 TPrincipalGen: lambda: g.s}[type(g)]()
        return gen_member(point, h)
    if isinstance(g, HLevelGen):
        if isinstance(h, HLevelGen):
            return t_le(g.s, h.s)
        # every (m, s) with m != h.m must reach (h.m, h.s) through a dropped prefix
        low = _prefix_min(g.s, h.s)
        return low is not None and low <= h.m and t_le(g.s, h.s)
    if isinstance(g, SLevelsGen):
        if isinstance(h, SLevelsGen):
            return g.n <= h.n
        return h.n is INF and g.n <= h.m
    if isinstance(g, TMinBoundedGen):
        if not t_le(g.u, h.s if isinstance(h, TPrincipalGen) else h.u):
            return False
        if isinstance(h, TPrincipalGen):
            return True
        low = _prefix_min(g.u, h.u)
        return g.c <= h.c or (low is not None and low <= h.c)
    raise TypeError(f"not a generator: {g!r}")


def canonical_gens(gens: Iterable[Generator]) -> frozenset[Generator]:
    gens = sorted(set(gens), key=gen_key)
    keep = []
    for i, g in enumerate(gens):
        dominated = False
        for j, h in enumerate(gens):
            if i != j and gen_subset(g, h) and (not gen_subset(h, g) or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    return frozenset(keep)


@dataclass(frozen=True)
class SymbolicClosed:
    """A finite union of generator denotations, kept as a canonical antichain."""

    space: str
    gens: frozenset

    def __post_init__(self):
        for g in self.gens:
            if g.space != self.space:
                raise SpaceMismatch(f"generator {g!r} is not in space {self.space}")

    def __contains__(self, p) -> bool:
        return member(p, self)

    def __iter__(self):
        return iter(sorted(self.gens, key=gen_key))

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        from .literals import format_generator

        return "{" + ", ".join(format_generator(g) for g in self) + "}"


def canonicalize(space: str, gens: Iterable[Generator]) -> SymbolicClosed:
    gens = list(gens)
    for g in gens:
        if g.space != space:
            raise SpaceMismatch(f"generator {g!r} is not in space {space}")
    return SymbolicClosed(space, canonical_gens(gens))


def closed(*gens: Generator) -> SymbolicClosed:
    if not gens:
        raise ValueError("use canonicalize(space, []) for the empty set")
    return canonicalize(gens[0].space, gens)


def member(p, C: SymbolicClosed) -> bool:
    if _space_of_point(p) != C.space:
        raise SpaceMismatch(f"point {p!r} is not in space {C.space}")
    return any(gen_member(p, g) for g in C.gens)


def union(C: SymbolicClosed, D: SymbolicClosed) -> SymbolicClosed:
    if C.space != D.space:
        raise SpaceMismatch("union across spaces")
    return canonicalize(C.space, C.gens | D.gens)


def subset(C: SymbolicClosed, D: SymbolicClosed) -> bool:
    """Inclusion of finite unions, decided generator by generator.

    Each generator lies in a finite union only if it lies in one member:
    irreducible kinds by irreducibility, ``SLevelsGen`` and ``TMinBoundedGen``
    because a point far enough out (large component, large entries) is only
    covered by a generator containing the whole set.
    """
    if C.space != D.space:
        raise SpaceMismatch("inclusion across spaces")
    return all(any(gen_subset(g, h) for h in D.gens) for g in C.gens)


def is_irreducible_sym(C: SymbolicClosed) -> bool:
    if not C.gens:
        raise EmptySetError("irreducibility requires a nonempty set")
    return len(C.gens) == 1 and next(iter(C.gens)).irreducible


def sup_of_generator_chain(chain: Sequence[Generator]) -> Generator:
    """Closure of the union of an increasing chain given in a recognized normal form.

    Recognized: ``lvl(n.s)``, ``pt(m, n.s)`` in H; ``pt(m, n)`` and ``lvls(n)``
    in S; ``pr(n.s)`` in T, each with strictly increasing ``n``.  A finite
    prefix stands for the infinite chain it begins.
    """
    if len(chain) < 2 or len({type(g) for g in chain}) != 1:
        raise UnrecognizedChainForm("need at least two generators of one kind")
    kind = type(chain[0])
    if kind is HLevelGen:
        return HLevelGen(chain_sup_t([g.s for g in chain]))
    if kind is HPointGen:
        sup = chain_sup_h([HPoint(g.m, g.s) for g in chain])
        return HPointGen(sup.m, sup.s)
    if kind is SPointGen:
        sup = chain_sup_s([SPoint(g.m, g.n) for g in chain])
        return SPointGen(sup.m, sup.n)
    if kind is SLevelsGen:
        ns = [g.n for g in chain]
        if any(x >= y for x, y in zip(ns, ns[1:])):
            raise UnrecognizedChainForm("levels must strictly increase")
        return SAllGen()
    if kind is TPrincipalGen:
        return TPrincipalGen(chain_sup_t([g.s for g in chain]))
    raise UnrecognizedChainForm(f"no chain normal form for {kind.__name__}")


@dataclass(frozen=True)
class Trace:
    """The set of first coordinates ``m`` with ``(m, s)`` in a closed set: finite or all."""

    members: frozenset[int] | None

    @property
    def is_all(self) -> bool:
        return self.members is None

    def size(self) -> float:
        return float("inf") if self.members is None else len(self.members)

    def __or__(self, other: Trace) -> Trace:
        if self.is_all or other.is_all:
            return ALL
        return Trace(self.members | other.members)

    def issubset(self, other: Trace) -> bool:
        if other.is_all:
            return True
        return not self.is_all and self.members <= other.members

    def contains(self, m: int) -> bool:
        return self.is_all or m in self.members

    def __str__(self) -> str:
        return "All" if self.is_all else "Finite{" + ",".join(map(str, sorted(self.members))) + "}"


ALL = Trace(None)
NONE = Trace(frozenset())


def gen_trace(g: Generator, s: Str) -> Trace:
    if isinstance(g, HLevelGen):
        return ALL if t_le(s, g.s) else NONE
    if isinstance(g, HPointGen):
        if not t_le(s, g.s):
            return NONE
        low = _prefix_min(s, g.s)
        return ALL if low is not None and low <= g.m else Trace(frozenset({g.m}))
    raise SpaceMismatch(f"traces are defined on H only, got {g!r}")


def trace(C: SymbolicClosed, s: Str) -> Trace:
    if C.space != "H":
        raise SpaceMismatch("traces are defined on H only")
    out = NONE
    for g in C.gens:
        out = out | gen_trace(g, s)
    return out


def t_geq_k(C: SymbolicClosed, k: int) -> SymbolicClosed:
    """Strings ``s`` of T whose trace in ``C`` has at least ``k`` elements.

    A string has trace All iff it lies below a level generator's string, or
    in the min-bounded region of a point generator.  Otherwise its trace is
    the set of ``m`` over point generators ``pt(m, u)`` with ``s <= u``; those
    ``u`` above ``s`` form a chain in the tree, so the region with at least
    ``k`` of them is a union of principal down-sets ``pr(u*)``.
    """
    if C.space != "H":
        raise SpaceMismatch("t_geq_k takes a closed set of H")
    if k < 1:
        raise ValueError("k must be >= 1")
    out: list[Generator] = []
    points = [g for g in C.gens if isinstance(g, HPointGen)]
    for g in C.gens:
        if isinstance(g, HLevelGen):
            out.append(TPrincipalGen(g.s))
        elif isinstance(g, HPointGen):
            out.append(TMinBoundedGen(g.m, g.s))
        else:
            raise NotRepresentable(f"unexpected generator {g!r}")
    for u in {g.s for g in points}:
        ms = {g.m for g in points if t_le(u, g.s)}
        if len(ms) >= k:
            out.append(TPrincipalGen(u))
    return canonicalize("T", out)


def l_image(C: SymbolicClosed) -> SymbolicClosed:
    """Direct image under the level map ``(m, s) -> s``."""
    if C.space != "H":
        raise SpaceMismatch("l_image takes a closed set of H")
    return canonicalize("T", [TPrincipalGen(g.s) for g in C.gens])
