"""Flat-spacetime bridge: metric order, sprinkling, horizon entropy.

Events are (d+1)-tuples of coordinates with the time component first,
under the signature (+, -, ..., -).  Finite causalities are induced from
event samples by the metric order; truncated cones and diamonds supply
the canonical causal sets whose horizon area gives an entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, UnsupportedDimension
from .order import Causality, PointSet, validate_causality

__all__ = [
    "interval",
    "classify_interval",
    "precedes",
    "SprinkleMode",
    "SprinkleConfig",
    "SprinkleResult",
    "sprinkle",
    "induced_causality",
    "boost",
    "ConeKind",
    "ConeSetDescriptor",
    "horizon_area",
    "horizon_entropy",
    "monte_carlo_cross_section",
    "cone_region_points",
    "bekenstein_hawking_alpha",
]

Event = Sequence[float]


def _check_dims(x: Event, y: Event) -> None:
    if len(x) != len(y):
        raise DimensionMismatch(f"events have dimensions {len(x)} and {len(y)}")


def interval(x: Event, y: Event) -> float:
    """The squared separation (x - y)^2 under signature (+, -, ..., -)."""
    _check_dims(x, y)
    dt = x[0] - y[0]
    out = dt * dt
    for a, b in zip(x[1:], y[1:]):
        out -= (a - b) * (a - b)
    return out


def classify_interval(value: float) -> str:
    if value > 0:
        return "timelike"
    if value == 0:
        return "lightlike"
    return "spacelike"


def precedes(x: Event, y: Event) -> bool:
    """True iff y lies in the future cone of x: causal separation and
    a time component no earlier than x's.  Lightlike-related distinct
    events count as ordered."""
    return interval(x, y) >= 0 and y[0] >= x[0]


class SprinkleMode(Enum):
    UNIFORM = "uniform"
    LATTICE = "lattice"


@dataclass(frozen=True)
class SprinkleConfig:
    """Parameters for generating a finite causality from flat spacetime.

    ``box`` holds one (min, max) interval per coordinate.  UNIFORM mode
    samples ``n`` i.i.d. points in the box.  LATTICE mode (1+1 only)
    ignores ``n`` and places events on the integer grid of the box read
    in light-cone axes (u, v), mapped to (t, x) = (u + v, u - v); aligning
    the grid with the null directions makes the induced order the product
    order of the grid, so boxes give genuine lattices.
    """

    d: int
    box: tuple[tuple[float, float], ...]
    n: int = 0
    seed: int = 0
    mode: SprinkleMode = SprinkleMode.UNIFORM

    def __post_init__(self):
        if self.d not in (1, 3):
            raise UnsupportedDimension(f"spatial dimension must be 1 or 3, got {self.d}")
        if len(self.box) != self.d + 1:
            raise DimensionMismatch(
                f"box needs {self.d + 1} axis intervals, got {len(self.box)}"
            )
        for lo, hi in self.box:
            # a zero-width axis still holds one integer in lattice mode
            if not (lo <= hi if self.mode is SprinkleMode.LATTICE else lo < hi):
                raise ValueError("box intervals must be nondegenerate")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.mode is SprinkleMode.LATTICE and self.d != 1:
            raise UnsupportedDimension("lattice mode is defined for d = 1 only")


@dataclass(frozen=True)
class SprinkleResult:
    causality: Causality
    events: tuple[tuple[float, ...], ...]


def _relation_from_events(coords: np.ndarray) -> np.ndarray:
    diff0 = coords[None, :, 0] - coords[:, None, 0]
    sq = diff0 * diff0
    for k in range(1, coords.shape[1]):
        dk = coords[None, :, k] - coords[:, None, k]
        sq -= dk * dk
    return (sq >= 0) & (diff0 >= 0)


def induced_causality(events: Sequence[Event], ids: Sequence[str] | None = None) -> Causality:
    """The finite causality the metric order induces on a list of events."""
    coords = np.asarray(events, dtype=float)
    if coords.size == 0:
        coords = coords.reshape(0, 2)
    if ids is None:
        ids = [f"e{i}" for i in range(len(coords))]
    return validate_causality(list(ids), _relation_from_events(coords))


def sprinkle(cfg: SprinkleConfig) -> SprinkleResult:
    """Generate events and the causality they induce; deterministic per seed."""
    if cfg.mode is SprinkleMode.LATTICE:
        (ulo, uhi), (vlo, vhi) = cfg.box
        us = range(math.ceil(ulo), math.floor(uhi) + 1)
        vs = range(math.ceil(vlo), math.floor(vhi) + 1)
        events = [(float(u + v), float(u - v)) for u in us for v in vs]
    else:
        rng = np.random.default_rng(cfg.seed)
        lows = np.array([lo for lo, _ in cfg.box])
        highs = np.array([hi for _, hi in cfg.box])
        pts = rng.uniform(lows, highs, size=(cfg.n, cfg.d + 1))
        events = [tuple(map(float, row)) for row in pts]
    return SprinkleResult(induced_causality(events), tuple(events))


def boost(events: Sequence[Event], rapidity: float) -> list[tuple[float, ...]]:
    """Apply a boost along the first spatial axis to every event."""
    ch, sh = math.cosh(rapidity), math.sinh(rapidity)
    out = []
    for e in events:
        t, x, rest = e[0], e[1], tuple(e[2:])
        out.append((ch * t + sh * x, sh * t + ch * x) + rest)
    return out


# ---------------------------------------------------------------------------
# Truncated cones, diamonds, horizon entropy
# ---------------------------------------------------------------------------

class ConeKind(Enum):
    FUTURE_CONE = "future_cone"
    PAST_CONE = "past_cone"
    DIAMOND = "diamond"


@dataclass(frozen=True)
class ConeSetDescriptor:
    """A truncated cone or a diamond in flat spacetime.

    FUTURE_CONE: everything the apex precedes, up to time ``cut``
    (``cut=None`` leaves it unbounded).  PAST_CONE mirrors it.  DIAMOND
    takes the apex as the bottom and ``apex2`` as the top.
    """

    kind: ConeKind
    apex: tuple[float, ...]
    cut: float | None = None
    apex2: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.kind is ConeKind.DIAMOND:
            if self.apex2 is None:
                raise ValueError("a diamond needs two apexes")
            _check_dims(self.apex, self.apex2)
            if not precedes(self.apex, self.apex2):
                raise ValueError("diamond apexes must be causally related")
        elif self.cut is not None:
            if self.kind is ConeKind.FUTURE_CONE and self.cut < self.apex[0]:
                raise ValueError("future-cone cut lies before the apex")
            if self.kind is ConeKind.PAST_CONE and self.cut > self.apex[0]:
                raise ValueError("past-cone cut lies after the apex")

    def _require_3d(self) -> None:
        if len(self.apex) != 4:
            raise UnsupportedDimension(
                "horizon areas are 2-sphere cross sections; they need d = 3"
            )


def _cross_section_radius(desc: ConeSetDescriptor, t: float) -> float:
    """Radius of the null-boundary slice at time t, or 0 outside the set."""
    if desc.kind is ConeKind.FUTURE_CONE:
        if t < desc.apex[0] or (desc.cut is not None and t > desc.cut):
            return 0.0
        return t - desc.apex[0]
    if desc.kind is ConeKind.PAST_CONE:
        if t > desc.apex[0] or (desc.cut is not None and t < desc.cut):
            return 0.0
        return desc.apex[0] - t
    lo, hi = desc.apex, desc.apex2
    if lo[1:] != hi[1:]:
        raise ValueError(
            "analytic horizon slices cover diamonds with coincident spatial apexes only"
        )
    if t < lo[0] or t > hi[0]:
        return 0.0
    mid = 0.5 * (lo[0] + hi[0])
    return (t - lo[0]) if t <= mid else (hi[0] - t)


def horizon_area(desc: ConeSetDescriptor, t: float) -> float:
    """Area 4*pi*R^2 of the horizon slice at time t (d = 3 only)."""
    desc._require_3d()
    r = _cross_section_radius(desc, t)
    return 4.0 * math.pi * r * r


def horizon_entropy(desc: ConeSetDescriptor, alpha: float) -> float:
    """alpha times the supremum over time of the horizon-slice area.

    For truncated cones the supremum sits at the cut; for diamonds at the
    midpoint.  Untruncated cones have unbounded horizon: returns +inf.
    """
    desc._require_3d()
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if desc.kind is ConeKind.DIAMOND:
        r = 0.5 * (desc.apex2[0] - desc.apex[0])
    elif desc.cut is None:
        return math.inf
    else:
        r = abs(desc.cut - desc.apex[0])
    return alpha * 4.0 * math.pi * r * r


def monte_carlo_cross_section(
    desc: ConeSetDescriptor, t: float, samples: int, seed: int = 0
) -> float:
    """Estimate the horizon-slice area without the sphere-area formula.

    Samples a cube around the spatial apex and counts points whose
    distance from the apex falls in a thin shell about the slice radius;
    the shell volume divided by its thickness estimates the area.  Used
    as an independent cross-check of :func:`horizon_area`.
    """
    desc._require_3d()
    if samples < 10_000:
        raise ValueError("cross-section estimation needs at least 10^4 samples")
    r = _cross_section_radius(desc, t)
    if r == 0.0:
        return 0.0
    eps = 0.05 * r
    half = r + eps
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-half, half, size=(samples, 3))
    dist = np.linalg.norm(pts, axis=1)
    hits = int(np.count_nonzero(np.abs(dist - r) <= eps / 2))
    volume = (2.0 * half) ** 3
    return hits / samples * volume / eps


def cone_region_points(
    desc: ConeSetDescriptor,
    events: Sequence[Event],
    causality: Causality | None = None,
) -> PointSet:
    """Select the sprinkled events lying in the described region.

    Returns a subset of ``causality`` (induced from the events when not
    supplied).  On the finite causality, past-cone and diamond selections
    classify convergent and future-cone ones divergent.
    """
    if causality is None:
        causality = induced_causality(events)
    elif causality.n != len(events):
        raise ValueError("causality and event list disagree on size")
    mask = 0
    for i, e in enumerate(events):
        if desc.kind is ConeKind.FUTURE_CONE:
            ok = precedes(desc.apex, e) and (desc.cut is None or e[0] <= desc.cut)
        elif desc.kind is ConeKind.PAST_CONE:
            ok = precedes(e, desc.apex) and (desc.cut is None or e[0] >= desc.cut)
        else:
            ok = precedes(desc.apex, e) and precedes(e, desc.apex2)
        if ok:
            mask |= 1 << i
    return PointSet(causality, mask)


def bekenstein_hawking_alpha(boltzmann: float = 1.0, planck_length: float = 1.0) -> float:
    """The area coefficient k_B / (4 l_p^2) that reproduces black-hole
    entropy scaling."""
    return boltzmann / (4.0 * planck_length * planck_length)
