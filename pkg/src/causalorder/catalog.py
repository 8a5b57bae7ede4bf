"""Small standard posets used throughout the tests and demos."""

from __future__ import annotations

import numpy as np

from .order import Causality, validate_causality

__all__ = ["from_cover_pairs", "chain", "antichain", "diamond4", "star5", "grid"]


def from_cover_pairs(points: list[str], covers: list[tuple[str, str]]) -> Causality:
    """Build a causality from its cover (Hasse) relation.

    The reflexive-transitive closure is computed here, then validated.
    """
    n = len(points)
    index = {p: i for i, p in enumerate(points)}
    rel = np.eye(n, dtype=bool)
    for a, b in covers:
        rel[index[a], index[b]] = True
    # Warshall closure; n is small everywhere this is used
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return validate_causality(points, rel)


def chain(n: int, prefix: str = "") -> Causality:
    """A total order on n points named a, b, c, ... (or prefix0, prefix1...)."""
    if n <= 26 and not prefix:
        points = [chr(ord("a") + i) for i in range(n)]
    else:
        points = [f"{prefix}{i}" for i in range(n)]
    covers = [(points[i], points[i + 1]) for i in range(n - 1)]
    return from_cover_pairs(points, covers)


def antichain(n: int) -> Causality:
    """n mutually unrelated points."""
    points = [f"a{i}" for i in range(n)]
    return from_cover_pairs(points, [])


def diamond4() -> Causality:
    """p below q and r (unrelated), both below s."""
    return from_cover_pairs(
        ["p", "q", "r", "s"],
        [("p", "q"), ("p", "r"), ("q", "s"), ("r", "s")],
    )


def star5() -> Causality:
    """Five points: two minima bl, br below a middle m below two maxima tl, tr.

    This is the order induced on the events (0,0), (-1,-1), (-1,1), (1,-1),
    (1,1) of 1+1 Minkowski space.
    """
    return from_cover_pairs(
        ["bl", "br", "m", "tl", "tr"],
        [("bl", "m"), ("br", "m"), ("m", "tl"), ("m", "tr")],
    )


def grid(nu: int, nv: int) -> Causality:
    """The product order on {0..nu-1} x {0..nv-1}.

    Point (u, v) precedes (u', v') iff u <= u' and v <= v'.  Ids are the
    concatenated digits, e.g. "12" for (1, 2).  grid(3, 3) is the 9-point
    lattice used as the main reconstruction fixture.
    """
    points = [f"{u}{v}" for u in range(nu) for v in range(nv)]
    n = nu * nv
    rel = np.zeros((n, n), dtype=bool)
    for i, (u1, v1) in enumerate((u, v) for u in range(nu) for v in range(nv)):
        for j, (u2, v2) in enumerate((u, v) for u in range(nu) for v in range(nv)):
            rel[i, j] = u1 <= u2 and v1 <= v2
    return validate_causality(points, rel)
