"""Recovering the partial order from the set algebra alone.

For a point p, a ribbon pair is a strictly convergent set and a strictly
divergent set that pass through p and meet exactly at p.  Ribbon pairs
whose componentwise causal unions are again a ribbon pair are congruent.
Reconstruction relates two points when the congruence classes of their
ribbons absorb each other's pairs in the right direction; it applies
only to points whose ribbon is regular (every pair dense, condition 2 on
unions), and asserts that the result is a partial order.  On finite
ground sets the density condition turns out to be unsatisfiable for
non-empty ribbons, so the interesting output is the diagnostics saying
why each point failed.  Everything here is exhaustive and capped at
RIBBON_CAP points.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import config
from .algebra import (
    Kind,
    LawReport,
    LawResult,
    SetClass,
    _union_mask,
    _OK,
    class_of_mask,
    family_masks,
)
from .errors import (
    GroundSetTooLarge,
    NotCongruentDecidable,
    NotRegular,
    TheoremViolation,
)
from .order import (
    Causality,
    PointSet,
    has_crossing_property,
    reverse_structure,
)

__all__ = [
    "RibbonPair",
    "Ribbon",
    "RegularityReport",
    "ReconstructionReport",
    "RegularCausalityReport",
    "ribbon",
    "is_dense",
    "is_regular_ribbon",
    "congruent",
    "congruence_classes",
    "reconstruct_order",
    "verify_reversal_theorem",
    "is_regular_causality",
]


@dataclass(frozen=True)
class RibbonPair:
    """A strictly convergent / strictly divergent pair meeting at one point."""

    upper: PointSet
    lower: PointSet

    def masks(self) -> tuple[int, int]:
        return (self.upper.mask, self.lower.mask)


@dataclass(frozen=True)
class Ribbon:
    basepoint: str
    pairs: tuple[RibbonPair, ...]
    regular: bool | None = None
    classes: tuple[tuple[RibbonPair, ...], ...] | None = None

    def __len__(self) -> int:
        return len(self.pairs)


def _cap(c: Causality, what: str) -> None:
    if c.n > config.RIBBON_CAP:
        raise GroundSetTooLarge(c.n, config.RIBBON_CAP, what)


def _strict_through(c: Causality, ip: int, kind: Kind) -> list[int]:
    bit = 1 << ip
    return [m for m in family_masks(c, kind) if m & bit]


def ribbon(c: Causality, p: str) -> Ribbon:
    """All ribbon pairs over p.

    The trivial pair ({p}, {p}) never appears because singletons are of
    both kinds, hence never strict.
    """
    _cap(c, "ribbon computation")
    ip = c.index[p]
    bit = 1 << ip
    ups = _strict_through(c, ip, Kind.STRICTLY_CONVERGENT)
    downs = _strict_through(c, ip, Kind.STRICTLY_DIVERGENT)
    pairs = [
        RibbonPair(PointSet(c, a), PointSet(c, b))
        for a in ups
        for b in downs
        if a & b == bit
    ]
    return Ribbon(p, tuple(pairs))


# ---------------------------------------------------------------------------
# Density and regularity
# ---------------------------------------------------------------------------

def _cut_masks(c: Causality, ip: int, base: int) -> list[int]:
    """Non-trivial cuts of ``base`` by strict sets through the point.

    Non-trivial means different from the bare singleton {p}; every cut
    contains p because both operands do.
    """
    bit = 1 << ip
    pool = _strict_through(c, ip, Kind.STRICTLY_CONVERGENT) + _strict_through(
        c, ip, Kind.STRICTLY_DIVERGENT
    )
    cuts = {base & v for v in pool}
    cuts.discard(bit)
    return sorted(cuts)


def _dense_witness(c: Causality, p: str, pair: RibbonPair, rib: Ribbon | None = None):
    """None when the pair is dense, else the failing (cut of upper, cut of lower)."""
    ip = c.index[p]
    if rib is None:
        rib = ribbon(c, p)
    cuts_a = _cut_masks(c, ip, pair.upper.mask)
    cuts_b = _cut_masks(c, ip, pair.lower.mask)
    if not cuts_a or not cuts_b:
        return None
    x_arr = np.array([q.upper.mask for q in rib.pairs], dtype=np.uint64)
    y_arr = np.array([q.lower.mask for q in rib.pairs], dtype=np.uint64)
    ca = np.array(cuts_a, dtype=np.uint64)
    cb = np.array(cuts_b, dtype=np.uint64)
    sub_a = (x_arr[None, :] & ~ca[:, None]) == 0
    sub_b = (y_arr[None, :] & ~cb[:, None]) == 0
    refinable = sub_a.astype(np.uint16) @ sub_b.astype(np.uint16).T
    bad = np.argwhere(refinable == 0)
    if bad.size == 0:
        return None
    i, j = map(int, bad[0])
    return (PointSet(c, cuts_a[i]), PointSet(c, cuts_b[j]))


def is_dense(c: Causality, p: str, pair: RibbonPair) -> bool:
    """A pair is dense when every non-trivial cut of its components by
    strict sets through p can be refined back to some ribbon pair."""
    return _dense_witness(c, p, pair) is None


@dataclass(frozen=True)
class RegularityReport:
    point: str
    regular: bool
    empty: bool
    failing_condition: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.regular


def is_regular_ribbon(c: Causality, p: str) -> RegularityReport:
    """Check both regularity conditions for the ribbon over p.

    1. every ribbon pair is dense;
    2. whenever two pairs satisfy (A ∪ C) ∩ (B ∪ D) = {p} with plain
       unions, the componentwise causal unions also meet exactly at p.
    An empty ribbon is regular vacuously and flagged as such.  A causal
    union needed by condition 2 that is undefined counts as a failure,
    reported distinctly.
    """
    _cap(c, "ribbon regularity")
    rib = ribbon(c, p)
    if not rib.pairs:
        return RegularityReport(p, True, True)
    for pair in rib.pairs:
        w = _dense_witness(c, p, pair, rib)
        if w is not None:
            return RegularityReport(p, False, False, "density", (pair, *w))
    bit = 1 << c.index[p]
    pairs = rib.pairs
    for i, pr1 in enumerate(pairs):
        a, b = pr1.masks()
        for pr2 in pairs[i:]:
            cc, d = pr2.masks()
            if (a | cc) & (b | d) != bit:
                continue
            st_u, u = _union_mask(c, a, cc, Kind.CONVERGENT)
            st_l, lo = _union_mask(c, b, d, Kind.DIVERGENT)
            if st_u != _OK or st_l != _OK:
                return RegularityReport(
                    p, False, False, "undefined-union", (pr1, pr2)
                )
            if u & lo != bit:
                return RegularityReport(
                    p, False, False, "union-pair-meets-beyond-basepoint", (pr1, pr2)
                )
    return RegularityReport(p, True, False)


# ---------------------------------------------------------------------------
# Congruence
# ---------------------------------------------------------------------------

def _congruent_masks(c: Causality, bit: int, m1: tuple[int, int], m2: tuple[int, int]) -> bool:
    a, b = m1
    cc, d = m2
    st_u, u = _union_mask(c, a, cc, Kind.CONVERGENT)
    st_l, lo = _union_mask(c, b, d, Kind.DIVERGENT)
    if st_u != _OK or st_l != _OK:
        raise NotCongruentDecidable(
            "a causal union needed by the congruence test is undefined"
        )
    return (
        class_of_mask(c, u) is SetClass.STRICTLY_CONVERGENT
        and class_of_mask(c, lo) is SetClass.STRICTLY_DIVERGENT
        and u & lo == bit
    )


def congruent(c: Causality, p: str, pair1: RibbonPair, pair2: RibbonPair) -> bool:
    """True iff the componentwise causal unions form a ribbon pair over p.

    Raises NotCongruentDecidable when a needed causal union is undefined,
    so callers can tell "false" from "unanswerable".
    """
    return _congruent_masks(c, 1 << c.index[p], pair1.masks(), pair2.masks())


def congruence_classes(c: Causality, p: str) -> Ribbon:
    """Partition the (regular) ribbon over p into congruence classes.

    Raises NotRegular for irregular ribbons and TheoremViolation if more
    than two classes emerge, which is impossible on a regular ribbon.
    """
    reg = is_regular_ribbon(c, p)
    if not reg.regular:
        raise NotRegular(f"ribbon over {p} is not regular: {reg.failing_condition}")
    rib = ribbon(c, p)
    pairs = rib.pairs
    k = len(pairs)
    parent = list(range(k))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    bit = 1 << c.index[p]
    for i in range(k):
        for j in range(i + 1, k):
            if find(i) == find(j):
                continue
            if _congruent_masks(c, bit, pairs[i].masks(), pairs[j].masks()):
                parent[find(i)] = find(j)
    groups: dict[int, list[RibbonPair]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(pairs[i])
    classes = tuple(tuple(g) for g in groups.values())
    if len(classes) > 2:
        raise TheoremViolation(
            f"regular ribbon over {p} produced {len(classes)} congruence classes"
        )
    return Ribbon(p, pairs, regular=True, classes=classes)


# ---------------------------------------------------------------------------
# Order reconstruction
# ---------------------------------------------------------------------------

@dataclass
class ReconstructionReport:
    domain: tuple[str, ...]
    relation: np.ndarray
    diagnostics: dict[str, dict]
    reference: np.ndarray | None = None
    diffs: list[dict] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.diffs

    def to_dict(self) -> dict:
        out = {
            "domain": list(self.domain),
            "relation": self.relation.astype(int).tolist(),
            "diagnostics": self.diagnostics,
        }
        if self.reference is not None:
            out["agreement"] = {
                "reference": self.reference.astype(int).tolist(),
                "diffs": self.diffs,
            }
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _statement_one(
    c: Causality,
    alpha: tuple[RibbonPair, ...],
    gamma: tuple[RibbonPair, ...],
    gamma_set: frozenset,
    alpha_set: frozenset,
) -> bool:
    """For all (A,B) in alpha and (C,D) in gamma, the mixed pairs
    (A ∪c C, D) and (A, B ∪c D) land back in gamma and alpha."""
    for pr1 in alpha:
        a, b = pr1.masks()
        for pr2 in gamma:
            cc, d = pr2.masks()
            st_u, u = _union_mask(c, a, cc, Kind.CONVERGENT)
            if st_u != _OK or (u, d) not in gamma_set:
                return False
            st_l, lo = _union_mask(c, b, d, Kind.DIVERGENT)
            if st_l != _OK or (a, lo) not in alpha_set:
                return False
    return True


def reconstruct_order(c: Causality, compare_with_reference: bool = True) -> ReconstructionReport:
    """Rebuild the order between points with non-empty regular ribbons.

    p precedes q when some pair of congruence classes (alpha over p,
    gamma over q) satisfies the inclusion statement for every member
    pair.  The result is checked to be reflexive, antisymmetric and
    transitive on its domain; failure raises TheoremViolation.
    """
    _cap(c, "order reconstruction")
    diagnostics: dict[str, dict] = {}
    classes_by_point: dict[str, tuple] = {}
    domain: list[str] = []
    for p in c.points:
        reg = is_regular_ribbon(c, p)
        rib_size = len(ribbon(c, p))
        diag = {
            "ribbon_pairs": rib_size,
            "regular": reg.regular,
            "empty": reg.empty,
        }
        if not reg.regular:
            diag["failing_condition"] = reg.failing_condition
        if reg.regular and rib_size:
            rib = congruence_classes(c, p)
            diag["classes"] = len(rib.classes)
            classes_by_point[p] = rib.classes
            domain.append(p)
        diagnostics[p] = diag

    k = len(domain)
    rel = np.zeros((k, k), dtype=bool)
    class_sets = {
        p: [frozenset(pr.masks() for pr in cls) for cls in classes_by_point[p]]
        for p in domain
    }
    for i, p in enumerate(domain):
        for j, q in enumerate(domain):
            related = False
            for ai, alpha in enumerate(classes_by_point[p]):
                for gi, gamma in enumerate(classes_by_point[q]):
                    if _statement_one(
                        c, alpha, gamma, class_sets[q][gi], class_sets[p][ai]
                    ):
                        related = True
                        break
                if related:
                    break
            rel[i, j] = related

    _assert_partial_order(rel, domain)

    report = ReconstructionReport(tuple(domain), rel, diagnostics)
    if compare_with_reference:
        idx = [c.index[p] for p in domain]
        ref = c.relation[np.ix_(idx, idx)]
        report.reference = ref
        for i, p in enumerate(domain):
            for j, q in enumerate(domain):
                if rel[i, j] != ref[i, j]:
                    report.diffs.append(
                        {
                            "p": p,
                            "q": q,
                            "original": bool(ref[i, j]),
                            "reconstructed": bool(rel[i, j]),
                        }
                    )
    return report


def _assert_partial_order(rel: np.ndarray, domain: list[str]) -> None:
    k = len(domain)
    for i in range(k):
        if not rel[i, i]:
            raise TheoremViolation(
                f"reconstructed relation is not reflexive at {domain[i]}"
            )
    sym = rel & rel.T & ~np.eye(k, dtype=bool)
    if sym.any():
        i, j = np.argwhere(sym)[0]
        raise TheoremViolation(
            f"reconstructed relation is not antisymmetric at ({domain[i]}, {domain[j]})"
        )
    closure = (rel.astype(np.uint8) @ rel.astype(np.uint8)) > 0
    missing = closure & ~rel
    if missing.any():
        i, j = np.argwhere(missing)[0]
        raise TheoremViolation(
            f"reconstructed relation is not transitive at ({domain[i]}, {domain[j]})"
        )


def verify_reversal_theorem(c: Causality) -> LawReport:
    """Reconstruct on the causality and on its reversal and compare.

    Points with regular ribbons must coincide, and the two reconstructed
    relations must be mutual transposes.
    """
    rec = reconstruct_order(c, compare_with_reference=False)
    rec_rev = reconstruct_order(reverse_structure(c), compare_with_reference=False)
    report = LawReport("reversal of reconstructed order")

    res = LawResult("regular-domain-preserved", "holds", checked=1)
    if set(rec.domain) != set(rec_rev.domain):
        res = LawResult(
            "regular-domain-preserved",
            "fails",
            {
                "only_forward": sorted(set(rec.domain) - set(rec_rev.domain)),
                "only_reversed": sorted(set(rec_rev.domain) - set(rec.domain)),
            },
            1,
        )
    report.results.append(res)

    res = LawResult("reconstruction-transposes", "holds")
    if res.verdict == "holds" and set(rec.domain) == set(rec_rev.domain):
        order = {p: i for i, p in enumerate(rec.domain)}
        perm = [order[p] for p in rec_rev.domain]
        aligned = rec_rev.relation[np.ix_(perm, perm)] if len(perm) else rec_rev.relation
        res.checked = int(rec.relation.size)
        if not np.array_equal(rec.relation, aligned.T):
            bad = np.argwhere(rec.relation != aligned.T)[0]
            res = LawResult(
                "reconstruction-transposes",
                "fails",
                {"p": rec.domain[int(bad[0])], "q": rec.domain[int(bad[1])]},
                res.checked,
            )
    elif set(rec.domain) != set(rec_rev.domain):
        res = LawResult("reconstruction-transposes", "skipped", None, 0, 1)
    report.results.append(res)
    return report


# ---------------------------------------------------------------------------
# Regular causalities
# ---------------------------------------------------------------------------

@dataclass
class RegularCausalityReport:
    regular: bool
    crossing: bool
    point_diagnostics: dict[str, dict]
    extension_failures: list[dict]

    def __bool__(self) -> bool:
        return self.regular

    def point_ok(self, p: str) -> bool:
        d = self.point_diagnostics[p]
        return d["cone_union_up"] is None and d["cone_union_down"] is None

    def pair_ok(self, p: str, q: str) -> bool:
        """True when the per-point conditions hold at p and q and no
        extension failure involves the ordered pair."""
        if not (self.point_ok(p) and self.point_ok(q)):
            return False
        return not any(
            f["p"] == p and f["q"] == q or f["p"] == q and f["q"] == p
            for f in self.extension_failures
        )

    def to_dict(self) -> dict:
        return {
            "regular": self.regular,
            "crossing": self.crossing,
            "points": self.point_diagnostics,
            "extension_failures": self.extension_failures,
        }


def _bounded_strict(c: Causality, ip: int, kind: Kind) -> list[int]:
    """Strict sets through point ip whose vertex is ip itself."""
    bound = c.pred_masks[ip] if kind is Kind.STRICTLY_CONVERGENT else c.succ_masks[ip]
    return [m for m in _strict_through(c, ip, kind) if m & ~bound == 0]


def is_regular_causality(c: Causality) -> RegularCausalityReport:
    """Check the conditions under which reconstruction provably matches
    the original order: vertex-preserving causal unions of bounded strict
    sets in both directions, extension of bounded strict sets along the
    order, and the crossing property."""
    _cap(c, "regular-causality check")
    crossing = has_crossing_property(c).holds
    point_diag: dict[str, dict] = {}
    for ip, p in enumerate(c.points):
        diag = {"cone_union_up": None, "cone_union_down": None}
        for key, kind, union_kind, strict_cls in (
            ("cone_union_up", Kind.STRICTLY_CONVERGENT, Kind.CONVERGENT,
             SetClass.STRICTLY_CONVERGENT),
            ("cone_union_down", Kind.STRICTLY_DIVERGENT, Kind.DIVERGENT,
             SetClass.STRICTLY_DIVERGENT),
        ):
            fam = _bounded_strict(c, ip, kind)
            bound = c.pred_masks[ip] if kind is Kind.STRICTLY_CONVERGENT else c.succ_masks[ip]
            for i, a in enumerate(fam):
                for b in fam[i:]:
                    status, u = _union_mask(c, a, b, union_kind)
                    if (
                        status != _OK
                        or class_of_mask(c, u) is not strict_cls
                        or u & ~bound
                    ):
                        diag[key] = {
                            "a": c.ids_of(a),
                            "b": c.ids_of(b),
                            "reason": "undefined union" if status != _OK
                            else "union is not a strict vertex set at the point",
                        }
                        break
                if diag[key]:
                    break
        point_diag[p] = diag

    extension_failures: list[dict] = []
    for ip, p in enumerate(c.points):
        ups_p = _bounded_strict(c, ip, Kind.STRICTLY_CONVERGENT)
        downs_p = _bounded_strict(c, ip, Kind.STRICTLY_DIVERGENT)
        for iq, q in enumerate(c.points):
            if ip == iq or not c.relation[ip, iq]:
                continue
            ups_q = _bounded_strict(c, iq, Kind.STRICTLY_CONVERGENT)
            downs_q = _bounded_strict(c, iq, Kind.STRICTLY_DIVERGENT)
            for a in ups_p:
                if not any(a & ~b == 0 for b in ups_q):
                    extension_failures.append(
                        {"p": p, "q": q, "set": c.ids_of(a),
                         "reason": "no enclosing vertex set at the later point"}
                    )
                    break
            for a in downs_q:
                if not any(a & ~b == 0 for b in downs_p):
                    extension_failures.append(
                        {"p": p, "q": q, "set": c.ids_of(a),
                         "reason": "no enclosing vertex set at the earlier point"}
                    )
                    break

    regular = (
        crossing
        and all(
            d["cone_union_up"] is None and d["cone_union_down"] is None
            for d in point_diag.values()
        )
        and not extension_failures
    )
    return RegularCausalityReport(regular, crossing, point_diag, extension_failures)
