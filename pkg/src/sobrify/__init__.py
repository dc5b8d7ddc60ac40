"""Finite and symbolic tools for Scott-closed sets and order sobrification."""
from .errors import OrderError
from .generated import INF, HPoint, SPoint, Window
from .poset import ClosedSet, FinitePoset, build_poset, enumerate_closed, parse_poset
from .symbolic import SymbolicClosed, canonicalize, member, subset, trace

__all__ = [
    "INF",
    "ClosedSet",
    "FinitePoset",
    "HPoint",
    "OrderError",
    "SPoint",
    "SymbolicClosed",
    "Window",
    "build_poset",
    "canonicalize",
    "enumerate_closed",
    "member",
    "parse_poset",
    "subset",
    "trace",
]
