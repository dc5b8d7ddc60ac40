"""Hasse diagrams of finite posets and window truncations in DOT syntax."""
from __future__ import annotations

import numpy as np

from .errors import SizeLimitExceeded
from .generated import Window, s_points, truncate
from .literals import format_point
from .poset import FinitePoset
from .sobrification import dhat_s_structure

NODE_LIMIT = 500
SPACES = ("H", "S", "T", "dhatS")


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def heights(P: FinitePoset) -> list[int]:
    """Length of the longest cover chain from a minimal element to each element."""
    cov = P.covers
    order = sorted(range(len(P)), key=lambda i: P.down[i].bit_count())
    h = [0] * len(P)
    for j in order:
        below = np.flatnonzero(cov[:, j])
        if below.size:
            h[j] = 1 + max(h[i] for i in below)
    return h


def hasse_dot(P: FinitePoset, name: str = "P", clusters: dict[str, list[str]] | None = None,
              limit: int = NODE_LIMIT) -> str:
    """Cover relation of ``P`` as a digraph; edges point from lower to higher."""
    if len(P) > limit:
        raise SizeLimitExceeded(f"{len(P)} nodes exceeds the DOT limit {limit}")
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    clustered = set()
    for cname, members in (clusters or {}).items():
        lines.append(f"  subgraph {_quote('cluster_' + cname)} {{")
        lines.append(f"    label={_quote(cname)};")
        for lab in members:
            lines.append(f"    {_quote(lab)};")
            clustered.add(lab)
        lines.append("  }")
    for lab in P.labels:
        if lab not in clustered:
            lines.append(f"  {_quote(lab)};")
    h = heights(P)
    for level in range(max(h, default=-1) + 1):
        same = " ".join(_quote(P.labels[i]) + ";" for i in range(len(P)) if h[i] == level)
        lines.append(f"  {{ rank=same; {same} }}")
    for i, j in np.argwhere(P.covers):
        lines.append(f"  {_quote(P.labels[i])} -> {_quote(P.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _s_clusters(w: Window, P: FinitePoset) -> dict[str, list[str]]:
    groups: dict[str, list[str]] = {}
    for p in s_points(w):
        groups.setdefault(f"C_{p.m}", []).append(format_point(p))
    return groups


def space_dot(space: str, w: Window, limit: int = NODE_LIMIT) -> str:
    if space == "dhatS":
        D = dhat_s_structure(w)
        if len(D) > limit:
            raise SizeLimitExceeded(f"{len(D)} nodes exceeds the DOT limit {limit}")
        # point closures are named by their points so the S nodes keep their names
        labels = [format_point(p) for p in s_points(w)] + ["all"]
        P = FinitePoset(labels, D.leq, validate=False)
        return hasse_dot(P, "dhatS", _s_clusters(w, P), limit)
    P = truncate(space, w, limit=limit)
    clusters = _s_clusters(w, P) if space == "S" else None
    return hasse_dot(P, space, clusters, limit)
