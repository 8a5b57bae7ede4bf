"""Serialization: causality JSON files and DOT export of cover diagrams.

Causality JSON format::

    {"points": ["a", "b", ...],
     "relation": [[1, 0, ...], ...],
     "closure": "explicit" | "cover"}

With ``"closure": "cover"`` the matrix holds only the cover (Hasse)
relation and the loader computes the reflexive-transitive closure.
"""

from __future__ import annotations

import json
from typing import IO

import numpy as np

from .order import Causality, validate_causality

__all__ = [
    "causality_to_dict",
    "causality_from_dict",
    "dump_causality",
    "load_causality",
    "cover_relation",
    "to_dot",
]


def causality_to_dict(c: Causality) -> dict:
    return {
        "points": list(c.points),
        "relation": c.relation.astype(int).tolist(),
        "closure": "explicit",
    }


def causality_from_dict(data: dict) -> Causality:
    points = [str(p) for p in data["points"]]
    rel = np.asarray(data["relation"], dtype=bool)
    if not points:
        rel = rel.reshape(0, 0)
    mode = data.get("closure", "explicit")
    if mode == "cover":
        n = len(points)
        if rel.shape != (n, n):
            raise ValueError("cover matrix must be square over the points")
        closed = rel | np.eye(n, dtype=bool)
        for k in range(n):
            closed |= np.outer(closed[:, k], closed[k, :])
        rel = closed
    elif mode != "explicit":
        raise ValueError(f"unknown closure mode {mode!r}")
    return validate_causality(points, rel)


def dump_causality(c: Causality, fp: IO[str]) -> None:
    json.dump(causality_to_dict(c), fp, indent=1, sort_keys=True)
    fp.write("\n")


def load_causality(fp: IO[str]) -> Causality:
    return causality_from_dict(json.load(fp))


def cover_relation(c: Causality) -> list[tuple[str, str]]:
    """The transitive reduction: pairs x < y with nothing strictly between."""
    strict = c.relation & ~np.eye(c.n, dtype=bool)
    via = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
    cov = strict & ~via
    return [
        (c.points[i], c.points[j]) for i, j in np.argwhere(cov)
    ]


def to_dot(c: Causality, name: str = "causality") -> str:
    """DOT digraph of the cover diagram, edges pointing up the order."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for p in c.points:
        lines.append(f'  "{p}";')
    for a, b in cover_relation(c):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
