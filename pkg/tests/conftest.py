"""Shared fixtures and naive set-based oracles.

The oracles re-implement the defining predicates over frozensets with no
bit-masks or caching, so they share nothing with the library's code paths
beyond the relation matrix itself.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from causalorder import antichain, chain, diamond4, grid, star5, validate_causality


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def d4():
    return diamond4()


@pytest.fixture
def l5():
    return star5()


@pytest.fixture
def l33():
    return grid(3, 3)


@pytest.fixture
def anti3():
    return antichain(3)


# A 7-point poset found by random search whose ribbon over v0 contains a
# pair with a cut admitting no ribboned refinement (density failure).
NOT_DENSE_7_RELATION = [
    [1, 0, 1, 1, 0, 1, 1],
    [0, 1, 1, 1, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
]


@pytest.fixture
def not_dense_7():
    pts = [f"v{i}" for i in range(7)]
    return validate_causality(pts, np.array(NOT_DENSE_7_RELATION, dtype=bool))


# ---------------------------------------------------------------------------
# Naive oracles
# ---------------------------------------------------------------------------

def oracle_leq(c):
    """The relation as a set of id pairs."""
    return {
        (c.points[i], c.points[j])
        for i in range(c.n)
        for j in range(c.n)
        if c.relation[i, j]
    }


def oracle_diamond(c, x, y):
    leq = oracle_leq(c)
    return frozenset(z for z in c.points if (x, z) in leq and (z, y) in leq)


def oracle_complete(c, u):
    u = frozenset(u)
    return all(oracle_diamond(c, x, y) <= u for x in u for y in u)


def _unrelated_pairs(c, u):
    leq = oracle_leq(c)
    return [
        (x, y)
        for x, y in combinations(sorted(u), 2)
        if (x, y) not in leq and (y, x) not in leq
    ]


def oracle_convergent(c, u):
    u = frozenset(u)
    leq = oracle_leq(c)
    return all(
        any((x, z) in leq and (y, z) in leq for z in u)
        for x, y in _unrelated_pairs(c, u)
    )


def oracle_divergent(c, u):
    u = frozenset(u)
    leq = oracle_leq(c)
    return all(
        any((z, x) in leq and (z, y) in leq for z in u)
        for x, y in _unrelated_pairs(c, u)
    )


def oracle_class(c, u):
    """Classification as a string, mirroring the four-way split."""
    if not oracle_complete(c, u):
        return "neither"
    conv, div = oracle_convergent(c, u), oracle_divergent(c, u)
    if conv and div:
        return "both"
    if conv:
        return "strictly_convergent"
    if div:
        return "strictly_divergent"
    return "neither"


def oracle_all_subsets(c):
    for r in range(c.n + 1):
        yield from (frozenset(s) for s in combinations(c.points, r))


def oracle_family(c, kind):
    """All subsets of the requested kind, as frozensets."""
    out = []
    for u in oracle_all_subsets(c):
        cls = oracle_class(c, u)
        if kind == "convergent" and cls in ("both", "strictly_convergent"):
            out.append(u)
        elif kind == "divergent" and cls in ("both", "strictly_divergent"):
            out.append(u)
        elif cls == kind:
            out.append(u)
    return out


def oracle_causal_union(c, a, b, kind):
    """Intersection of all kind-supersets, or None when no superset exists."""
    a, b = frozenset(a), frozenset(b)
    sups = [x for x in oracle_family(c, kind) if a | b <= x]
    if not sups:
        return None
    out = frozenset(c.points)
    for x in sups:
        out &= x
    return out


def oracle_crossing(c):
    """Quadruple scan straight off the definition."""
    leq = oracle_leq(c)
    pts = c.points
    for x in pts:
        for y in pts:
            if x >= y or (x, y) in leq or (y, x) in leq:
                continue
            uppers = [z for z in pts if (x, z) in leq and (y, z) in leq]
            for z in uppers:
                for w in uppers:
                    if not (
                        oracle_diamond(c, x, z) & oracle_diamond(c, y, w)
                        or oracle_diamond(c, x, w) & oracle_diamond(c, y, z)
                    ):
                        return False
    return True


def random_poset(n, p_edge, rng):
    """Random DAG over a fixed order, transitively closed."""
    rel = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p_edge:
                rel[i, j] = True
    for k in range(n):
        rel |= np.outer(rel[:, k], rel[k, :])
    return validate_causality([f"v{i}" for i in range(n)], rel)
