"""Text syntax for strings, points and generators.

    []  [3,2]            strings (3 is the head)
    (m,[..])             points of H
    (m,n)  (m,inf)       points of S
    pt(m,[..]) lvl([..])                 generators in H
    pt(m,n) pt(m,inf) lvls(n) all        generators in S
    pr([..]) mb(c,[..])                  generators in T
"""
from __future__ import annotations

import re

from .errors import ParseError
from .generated import INF, HPoint, SPoint, Str
from .symbolic import (
    Generator,
    HLevelGen,
    HPointGen,
    SAllGen,
    SLevelsGen,
    SPointGen,
    TMinBoundedGen,
    TPrincipalGen,
)

_STR = r"\[\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\]"
_NAT = r"\d+"


def format_str(s: Str) -> str:
    return "[" + ",".join(map(str, s)) + "]"


def parse_str(text: str) -> Str:
    text = text.strip()
    if not re.fullmatch(_STR, text):
        raise ParseError(f"not a string literal: {text!r}")
    body = text[1:-1].strip()
    return tuple(int(x) for x in body.split(",")) if body else ()


def format_point(p) -> str:
    if isinstance(p, HPoint):
        return f"({p.m},{format_str(p.s)})"
    if isinstance(p, SPoint):
        return f"({p.m},{'inf' if p.n is INF else p.n})"
    if isinstance(p, tuple):
        return format_str(p)
    raise TypeError(f"not a point: {p!r}")


def parse_point(text: str):
    """Parse an H point, an S point, or a T string."""
    text = text.strip()
    if text.startswith("["):
        return parse_str(text)
    m = re.fullmatch(rf"\(\s*({_NAT})\s*,\s*({_STR})\s*\)", text)
    if m:
        return HPoint(int(m.group(1)), parse_str(m.group(2)))
    m = re.fullmatch(rf"\(\s*({_NAT})\s*,\s*({_NAT}|inf)\s*\)", text)
    if m:
        n = INF if m.group(2) == "inf" else int(m.group(2))
        return SPoint(int(m.group(1)), n)
    raise ParseError(f"not a point literal: {text!r}")


def format_generator(g: Generator) -> str:
    if isinstance(g, HPointGen):
        return f"pt({g.m},{format_str(g.s)})"
    if isinstance(g, HLevelGen):
        return f"lvl({format_str(g.s)})"
    if isinstance(g, SPointGen):
        return f"pt({g.m},{'inf' if g.n is INF else g.n})"
    if isinstance(g, SLevelsGen):
        return f"lvls({g.n})"
    if isinstance(g, SAllGen):
        return "all"
    if isinstance(g, TPrincipalGen):
        return f"pr({format_str(g.s)})"
    if isinstance(g, TMinBoundedGen):
        return f"mb({g.c},{format_str(g.u)})"
    raise TypeError(f"not a generator: {g!r}")


def parse_generator(text: str) -> Generator:
    text = text.strip()
    if text == "all":
        return SAllGen()
    patterns = [
        (rf"pt\(\s*({_NAT})\s*,\s*({_STR})\s*\)", lambda a, b: HPointGen(int(a), parse_str(b))),
        (rf"lvl\(\s*({_STR})\s*\)", lambda a: HLevelGen(parse_str(a))),
        (rf"pt\(\s*({_NAT})\s*,\s*({_NAT}|inf)\s*\)",
         lambda a, b: SPointGen(int(a), INF if b == "inf" else int(b))),
        (rf"lvls\(\s*({_NAT})\s*\)", lambda a: SLevelsGen(int(a))),
        (rf"pr\(\s*({_STR})\s*\)", lambda a: TPrincipalGen(parse_str(a))),
        (rf"mb\(\s*({_NAT})\s*,\s*({_STR})\s*\)", lambda a, b: TMinBoundedGen(int(a), parse_str(b))),
    ]
    for pattern, build in patterns:
        m = re.fullmatch(pattern, text)
        if m:
            return build(*m.groups())
    raise ParseError(f"not a generator literal: {text!r}")
