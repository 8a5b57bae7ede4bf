"""Finite causal orders and the predicates that carve out cone-like subsets.

A :class:`Causality` is a finite ground set carrying a reflexive,
antisymmetric, transitive relation.  Subsets are handled as bit-masks
wrapped in :class:`PointSet`.  The predicates defined here (causal
completeness, convergence, divergence, the crossing property) are the
raw material for the set algebra in :mod:`causalorder.algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import config
from .errors import (
    GroundSetTooLarge,
    InvalidReversal,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
)

__all__ = [
    "Causality",
    "PointSet",
    "Direction",
    "ReversalMode",
    "OrderReversal",
    "CrossingResult",
    "validate_causality",
    "diamond",
    "incomplete_diamond",
    "is_causally_complete",
    "is_convergent",
    "is_divergent",
    "has_crossing_property",
    "reverse",
    "reverse_structure",
    "bits",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit indices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Direction(Enum):
    UPPER = "upper"
    LOWER = "lower"


class Causality:
    """A finite poset: ordered point identifiers plus a dense relation matrix.

    ``relation[i, j]`` is true iff point i precedes point j.  Instances are
    immutable after construction and cache derived data (bit-masks per row
    and column, subset classifications, the reversed structure) on first
    use, so all operations on them are pure.
    """

    def __init__(self, points: Sequence[str], relation, _checked: bool = False):
        rel = np.array(relation, dtype=bool)
        if not _checked:
            validate_matrix(rel)
        pts = tuple(str(p) for p in points)
        if len(set(pts)) != len(pts):
            raise ValueError("point identifiers must be unique")
        if len(pts) != rel.shape[0]:
            raise ValueError("points and relation size disagree")
        rel.setflags(write=False)
        self.points = pts
        self.relation = rel
        self.index = {p: i for i, p in enumerate(pts)}
        n = len(pts)
        self.succ_masks = [_row_mask(rel[i, :]) for i in range(n)]
        self.pred_masks = [_row_mask(rel[:, j]) for j in range(n)]
        self.full_mask = (1 << n) - 1
        # caches filled lazily by other modules
        self._reversed: Causality | None = None
        self._class_table = None
        self._class_memo: dict[int, object] = {}
        self._families: dict[object, object] = {}
        self._union_cache: dict[tuple[int, int, object], tuple[str, int]] = {}
        self._crossing = None
        self._law_reports: dict[str, object] = {}

    @property
    def n(self) -> int:
        return len(self.points)

    def leq(self, x: str, y: str) -> bool:
        """True iff point ``x`` precedes point ``y``."""
        return bool(self.relation[self.index[x], self.index[y]])

    def mask_of(self, ids: Iterable[str]) -> int:
        m = 0
        for p in ids:
            m |= 1 << self.index[p]
        return m

    def ids_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.points[i] for i in bits(mask))

    def subset(self, ids: Iterable[str] = ()) -> "PointSet":
        return PointSet(self, self.mask_of(ids))

    def full_set(self) -> "PointSet":
        return PointSet(self, self.full_mask)

    def __repr__(self) -> str:
        return f"Causality({self.n} points)"


def _row_mask(row: np.ndarray) -> int:
    m = 0
    for i in np.flatnonzero(row):
        m |= 1 << int(i)
    return m


def validate_matrix(relation: np.ndarray) -> None:
    """Check the poset axioms, raising with a witness on the first failure."""
    rel = np.asarray(relation, dtype=bool)
    if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
        raise ValueError("relation must be a square matrix")
    n = rel.shape[0]
    diag = np.diagonal(rel)
    if not diag.all():
        raise NotReflexive(int(np.flatnonzero(~diag)[0]))
    sym = rel & rel.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = np.argwhere(sym)[0]
        raise NotAntisymmetric(int(i), int(j))
    closure = (rel.astype(np.uint8) @ rel.astype(np.uint8)) > 0
    missing = closure & ~rel
    if missing.any():
        i, k = np.argwhere(missing)[0]
        j = int(np.flatnonzero(rel[i, :] & rel[:, k])[0])
        raise NotTransitive(int(i), j, int(k))


def validate_causality(points: Sequence[str], relation) -> Causality:
    """Build a :class:`Causality`, checking the poset axioms first.

    Raises :class:`NotReflexive`, :class:`NotAntisymmetric` or
    :class:`NotTransitive` with a witness tuple of indices.
    """
    rel = np.asarray(relation)
    validate_matrix(rel)
    return Causality(points, rel.astype(bool), _checked=True)


@dataclass(frozen=True)
class PointSet:
    """A subset of one causality's ground set, stored as a bit-mask."""

    parent: Causality = field(repr=False)
    mask: int

    def __post_init__(self):
        if self.mask & ~self.parent.full_mask:
            raise ValueError("membership mask exceeds the ground set")

    def ids(self) -> tuple[str, ...]:
        return self.parent.ids_of(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, point: str) -> bool:
        return bool(self.mask >> self.parent.index[point] & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.ids())

    def _check_parent(self, other: "PointSet") -> None:
        if other.parent is not self.parent:
            raise ValueError("point sets belong to different causalities")

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check_parent(other)
        return PointSet(self.parent, self.mask & other.mask)

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check_parent(other)
        return PointSet(self.parent, self.mask | other.mask)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check_parent(other)
        return PointSet(self.parent, self.mask & ~other.mask)

    def issubset(self, other: "PointSet") -> bool:
        self._check_parent(other)
        return not (self.mask & ~other.mask)

    def __repr__(self) -> str:
        return "PointSet{" + ",".join(self.ids()) + "}"


# ---------------------------------------------------------------------------
# Diamonds
# ---------------------------------------------------------------------------

def diamond_mask(c: Causality, ix: int, iy: int) -> int:
    return c.succ_masks[ix] & c.pred_masks[iy]


def diamond(c: Causality, x: str, y: str) -> PointSet:
    """All points z with x <= z <= y.  May be empty; diamond(x, x) = {x}."""
    return PointSet(c, diamond_mask(c, c.index[x], c.index[y]))


def incomplete_diamond(c: Causality, x: str, direction: Direction) -> PointSet:
    """The full causal past (UPPER) or future (LOWER) of a point.

    UPPER returns {z : z <= x}, LOWER returns {z : x <= z}; both contain x.
    """
    i = c.index[x]
    if direction is Direction.UPPER:
        return PointSet(c, c.pred_masks[i])
    return PointSet(c, c.succ_masks[i])


# ---------------------------------------------------------------------------
# Completeness / convergence / divergence (mask-level versions are used by
# the enumeration code, which classifies thousands of subsets per call)
# ---------------------------------------------------------------------------

def complete_mask(c: Causality, mask: int) -> bool:
    for x in bits(mask):
        inside_above = c.succ_masks[x] & mask
        for y in bits(inside_above):
            if diamond_mask(c, x, y) & ~mask:
                return False
    return True


def convergent_mask(c: Causality, mask: int) -> bool:
    members = list(bits(mask))
    for a, x in enumerate(members):
        for y in members[a + 1:]:
            if c.relation[x, y] or c.relation[y, x]:
                continue
            if not (c.succ_masks[x] & c.succ_masks[y] & mask):
                return False
    return True


def divergent_mask(c: Causality, mask: int) -> bool:
    members = list(bits(mask))
    for a, x in enumerate(members):
        for y in members[a + 1:]:
            if c.relation[x, y] or c.relation[y, x]:
                continue
            if not (c.pred_masks[x] & c.pred_masks[y] & mask):
                return False
    return True


def is_causally_complete(c: Causality, u: PointSet) -> bool:
    """True iff every diamond between members of ``u`` lies inside ``u``."""
    return complete_mask(c, u.mask)


def is_convergent(c: Causality, u: PointSet) -> bool:
    """True iff every unrelated pair in ``u`` has a common upper bound in ``u``."""
    return convergent_mask(c, u.mask)


def is_divergent(c: Causality, u: PointSet) -> bool:
    """True iff every unrelated pair in ``u`` has a common lower bound in ``u``."""
    return divergent_mask(c, u.mask)


# ---------------------------------------------------------------------------
# Crossing property
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossingResult:
    holds: bool
    witness: tuple[str, str, str, str] | None = None

    def __bool__(self) -> bool:
        return self.holds


def has_crossing_property(c: Causality) -> CrossingResult:
    """Scan all quadruples x, y <= z, w with x, y unrelated.

    For each, at least one of the diamond pairs C[x,z] & C[y,w] or
    C[x,w] & C[y,z] must intersect.  z and w range over ordered pairs
    including z = w.  Returns the first failing witness, if any.
    """
    if c._crossing is not None:
        return c._crossing
    n = c.n
    if n > config.MATRIX_CAP:
        raise GroundSetTooLarge(n, config.MATRIX_CAP, "crossing-property scan")
    result = CrossingResult(True)
    done = False
    for x in range(n):
        if done:
            break
        for y in range(x + 1, n):
            if c.relation[x, y] or c.relation[y, x]:
                continue
            uppers = c.succ_masks[x] & c.succ_masks[y]
            ups = list(bits(uppers))
            for z in ups:
                for w in ups:
                    straight = diamond_mask(c, x, z) & diamond_mask(c, y, w)
                    crossed = diamond_mask(c, x, w) & diamond_mask(c, y, z)
                    if not straight and not crossed:
                        result = CrossingResult(
                            False,
                            (c.points[x], c.points[y], c.points[z], c.points[w]),
                        )
                        done = True
                        break
                if done:
                    break
            if done:
                break
    c._crossing = result
    return result


# ---------------------------------------------------------------------------
# Order reversal
# ---------------------------------------------------------------------------

class ReversalMode(Enum):
    STRUCTURAL = "structural"
    POINT_MAP = "point_map"


@dataclass(frozen=True)
class OrderReversal:
    """Either the structural reversal (identity on points, relation
    transposed) or an order-reversing involution of the points."""

    mode: ReversalMode
    mapping: tuple[int, ...] | None = None

    @staticmethod
    def structural() -> "OrderReversal":
        return OrderReversal(ReversalMode.STRUCTURAL)

    @staticmethod
    def point_map(c: Causality, mapping: dict[str, str]) -> "OrderReversal":
        """Validate ``mapping`` as an order-reversing involution on ``c``."""
        perm = [None] * c.n
        for src, dst in mapping.items():
            perm[c.index[src]] = c.index[dst]
        if any(v is None for v in perm):
            raise InvalidReversal("mapping must cover every point")
        perm = tuple(perm)
        for i, j in enumerate(perm):
            if perm[j] != i:
                raise InvalidReversal(
                    f"mapping is not an involution at {c.points[i]}"
                )
        for i in range(c.n):
            for j in range(c.n):
                if c.relation[perm[i], perm[j]] != c.relation[j, i]:
                    raise InvalidReversal(
                        "mapping does not reverse the order at "
                        f"({c.points[i]}, {c.points[j]})"
                    )
        return OrderReversal(ReversalMode.POINT_MAP, perm)


def reverse_structure(c: Causality) -> Causality:
    """The same points under the transposed relation.  Cached; the reverse
    of the reverse is the original object."""
    if c._reversed is None:
        rev = Causality(c.points, c.relation.T.copy(), _checked=True)
        rev._reversed = c
        c._reversed = rev
    return c._reversed


def reverse(c: Causality, reversal: OrderReversal, u: PointSet) -> PointSet:
    """Image of ``u`` under the reversal.

    Structural mode returns the same membership living in the reversed
    causality; point-map mode returns the mapped subset of the original.
    The empty set maps to the empty set in both modes.
    """
    if u.parent is not c:
        raise ValueError("point set does not belong to this causality")
    if reversal.mode is ReversalMode.STRUCTURAL:
        return PointSet(reverse_structure(c), u.mask)
    mapped = 0
    for i in bits(u.mask):
        mapped |= 1 << reversal.mapping[i]
    return PointSet(c, mapped)
