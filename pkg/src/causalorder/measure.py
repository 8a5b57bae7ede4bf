"""Multiplicative weights on causal-set families and their formal entropy.

A causal measure assigns each set of one family a weight in [1, inf],
equal to 1 on the empty set and on singletons, and super-multiplicative
under causal union (with equality when the causal union is the plain
union).  Entropy is the logarithm of the weight.  Measures are supplied
as explicit tables and verified here; on a finite ground set the axioms
force the constant measure (peel a maximal element off any divergent
set: the remainder is still divergent and the equality case applies),
so non-constant tables exist only to exercise the violation reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .algebra import (
    Kind,
    LawReport,
    LawResult,
    _union_mask,
    _OK,
    family_masks,
)
from .errors import MissingValue
from .order import Causality, PointSet

__all__ = [
    "CausalMeasure",
    "EntropyValue",
    "constant_measure",
    "verify_measure_axioms",
    "outer_measure_value",
    "inner_measure_value",
    "formal_entropy",
    "check_monotonicity",
    "tsallis_compose",
    "find_tsallis_violation",
]

EQUALITY_RTOL = 1e-9


@dataclass(frozen=True)
class CausalMeasure:
    """An explicit weight table over one family of causal sets."""

    parent: Causality
    kind: Kind  # Kind.DIVERGENT or Kind.CONVERGENT
    table: dict[int, float]

    def __post_init__(self):
        if self.kind not in (Kind.DIVERGENT, Kind.CONVERGENT):
            raise ValueError("measure kind must be DIVERGENT or CONVERGENT")

    def value(self, u: PointSet) -> float:
        if u.parent is not self.parent:
            raise ValueError("point set does not belong to the measured causality")
        try:
            return self.table[u.mask]
        except KeyError:
            raise MissingValue(f"measure has no value for {u.ids()}") from None

    @staticmethod
    def from_dict(c: Causality, data: dict) -> "CausalMeasure":
        kind = Kind(data.get("kind", "divergent"))
        table = {}
        for entry in data["entries"]:
            mask = c.mask_of(entry["set"])
            sigma = entry["sigma"]
            table[mask] = math.inf if sigma == "inf" else float(sigma)
        return CausalMeasure(c, kind, table)

    def to_dict(self) -> dict:
        entries = []
        for mask in sorted(self.table):
            sigma = self.table[mask]
            entries.append(
                {
                    "set": list(self.parent.ids_of(mask)),
                    "sigma": "inf" if math.isinf(sigma) else sigma,
                }
            )
        return {"kind": self.kind.value, "entries": entries}


def constant_measure(c: Causality, kind: Kind = Kind.DIVERGENT) -> CausalMeasure:
    """The unit table on every set of the family; the one measure every
    finite causality admits."""
    return CausalMeasure(c, kind, {m: 1.0 for m in family_masks(c, kind)})


def verify_measure_axioms(
    c: Causality, measure: CausalMeasure, rtol: float = EQUALITY_RTOL
) -> LawReport:
    """Check normalization and super-multiplicativity over all family pairs.

    Pairs whose causal union is undefined, or whose intersection leaves
    the family, fall outside the axiom and are counted as skipped.
    Raises MissingValue if the table lacks any enumerated family set.
    """
    fam = family_masks(c, measure.kind)
    for m in fam:
        if m not in measure.table:
            raise MissingValue(f"measure has no value for {c.ids_of(m)}")
    report = LawReport("measure axioms")

    res = LawResult("normalization", "holds")
    checks = [(0, "empty set")] + [(1 << i, c.points[i]) for i in range(c.n)]
    for mask, label in checks:
        res.checked += 1
        if measure.table[mask] != 1.0:
            res = LawResult(
                "normalization", "fails",
                {"set": label, "sigma": measure.table[mask]}, res.checked,
            )
            break
    if res.verdict == "holds":
        for m in fam:
            res.checked += 1
            if not measure.table[m] >= 1.0:
                res = LawResult(
                    "normalization", "fails",
                    {"set": c.ids_of(m), "sigma": measure.table[m],
                     "reason": "below the codomain [1, inf]"},
                    res.checked,
                )
                break
    report.results.append(res)

    res = LawResult("super-multiplicativity", "holds")
    members = set(fam)
    for i, a in enumerate(fam):
        for b in fam[i:]:
            inter = a & b
            if inter not in members:
                res.skipped += 1
                continue
            status, u = _union_mask(c, a, b, measure.kind)
            if status != _OK:
                res.skipped += 1
                continue
            res.checked += 1
            lhs = measure.table[u]
            rhs = measure.table[a] * measure.table[b] / measure.table[inter]
            witness = {
                "a": c.ids_of(a), "b": c.ids_of(b),
                "sigma_union": lhs, "bound": rhs,
            }
            if lhs < rhs and not math.isclose(lhs, rhs, rel_tol=rtol):
                res = LawResult(res.law, "fails", witness, res.checked, res.skipped)
                break
            if u == a | b and not (
                math.isinf(lhs) and math.isinf(rhs)
            ) and not math.isclose(lhs, rhs, rel_tol=rtol):
                witness["reason"] = "equality required when the causal union is the plain union"
                res = LawResult(res.law, "fails", witness, res.checked, res.skipped)
                break
        if res.verdict == "fails":
            break
    report.results.append(res)
    return report


def outer_measure_value(c: Causality, measure: CausalMeasure, a: PointSet) -> float:
    """Infimum of the measure over family supersets of ``a``; +inf when
    no family set contains it."""
    best = math.inf
    for m in family_masks(c, measure.kind):
        if a.mask & ~m == 0:
            best = min(best, measure.table[m])
    return best


def inner_measure_value(c: Causality, measure: CausalMeasure, a: PointSet) -> float:
    """Supremum of the measure over family subsets of ``a``; at least 1,
    because the empty set always qualifies."""
    best = 0.0
    for m in family_masks(c, measure.kind):
        if m & ~a.mask == 0:
            best = max(best, measure.table[m])
    return best


@dataclass(frozen=True)
class EntropyValue:
    value: float
    boltzmann: float = 1.0


def formal_entropy(
    c: Causality,
    measure: CausalMeasure,
    a: PointSet,
    boltzmann: float = 1.0,
    extension: str = "inner",
) -> EntropyValue:
    """k_B times the natural log of the measure of ``a``.

    Sets outside the family are measured through the inner extension by
    default (supremum over family subsets), or the outer one on request.
    """
    if a.mask in measure.table:
        sigma = measure.table[a.mask]
    elif extension == "inner":
        sigma = inner_measure_value(c, measure, a)
    elif extension == "outer":
        sigma = outer_measure_value(c, measure, a)
    else:
        raise ValueError(f"unknown extension {extension!r}")
    return EntropyValue(boltzmann * math.log(sigma), boltzmann)


def check_monotonicity(c: Causality, measure: CausalMeasure) -> LawReport:
    """Verify that the measure grows along inclusion.

    Checked directly on family pairs, then on arbitrary subsets through
    the inner extension (the preferred one) and the outer extension,
    reported separately.
    """
    fam = family_masks(c, measure.kind)
    report = LawReport("measure monotonicity")

    res = LawResult("family-pairs", "holds")
    for a in fam:
        for b in fam:
            if a & ~b:
                continue
            res.checked += 1
            if measure.table[a] > measure.table[b] * (1 + EQUALITY_RTOL):
                res = LawResult(
                    res.law, "fails",
                    {"a": c.ids_of(a), "b": c.ids_of(b),
                     "sigma_a": measure.table[a], "sigma_b": measure.table[b]},
                    res.checked,
                )
                break
        if res.verdict == "fails":
            break
    report.results.append(res)

    for label, fn in (("inner-extension", inner_measure_value),
                      ("outer-extension", outer_measure_value)):
        res = LawResult(label, "holds")
        full = c.full_mask
        values = [fn(c, measure, PointSet(c, m)) for m in range(full + 1)]
        for a in range(full + 1):
            va = values[a]
            for b in range(full + 1):
                if a & ~b:
                    continue
                res.checked += 1
                if va > values[b] * (1 + EQUALITY_RTOL):
                    res = LawResult(
                        label, "fails",
                        {"a": c.ids_of(a), "b": c.ids_of(b),
                         "sigma_a": va, "sigma_b": values[b]},
                        res.checked,
                    )
                    break
            if res.verdict == "fails":
                break
        report.results.append(res)
    return report


# ---------------------------------------------------------------------------
# Tsallis composition
# ---------------------------------------------------------------------------

def tsallis_compose(sa: float, sb: float, q: float, boltzmann: float = 1.0) -> float:
    """Entropy of a disjoint union under the q-deformed composition rule.

    At q = 1 this reduces to plain addition; for q > 1 the composed value
    can drop below the larger operand, breaking monotonicity.
    """
    return sa + sb + (1.0 - q) / boltzmann * sa * sb


def find_tsallis_violation(
    q_values=(1.0, 1.5, 2.0),
    entropy_values=(0.0, 0.5, 1.0, 2.0, 4.0),
    boltzmann: float = 1.0,
) -> dict | None:
    """Grid-search for a monotonicity violation S(A ∪ rest) < S(A).

    Returns the first witness found, or None (for example when every
    q <= 1)."""
    for q, sa, s_rest in product(q_values, entropy_values, entropy_values):
        composed = tsallis_compose(sa, s_rest, q, boltzmann)
        if composed < sa:
            return {
                "q": q,
                "entropy_a": sa,
                "entropy_rest": s_rest,
                "entropy_whole": composed,
            }
    return None
