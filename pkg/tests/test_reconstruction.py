"""Ribbons, density, congruence, and order reconstruction.

At desk scale the density condition is unsatisfiable on non-empty
ribbons: any two strict sets through a point cut each other down to short
chains, and chains contain no strict refinement.  The tests therefore
check the machinery on what finite posets actually exhibit: non-empty
ribbons that fail density with concrete witnesses, vacuously regular
empty ribbons, reflexivity/symmetry of congruence and the meet lemma on
real congruent pairs, and reconstruction reports whose diagnostics say
precisely why the domain is empty.
"""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import causalorder as co
from causalorder import Kind, SetClass
from causalorder.reconstruction import _congruent_masks

from conftest import random_poset


# ---------------------------------------------------------------------------
# Ribbons
# ---------------------------------------------------------------------------

def test_star5_center_ribbon(l5):
    rib = co.ribbon(l5, "m")
    assert len(rib) == 1
    (pair,) = rib.pairs
    assert set(pair.upper.ids()) == {"bl", "br", "m"}
    assert set(pair.lower.ids()) == {"m", "tl", "tr"}


def test_ribbon_pairs_are_ribboned(l33):
    for p in l33.points:
        bit = 1 << l33.index[p]
        for pair in co.ribbon(l33, p).pairs:
            assert co.classify(l33, pair.upper) is SetClass.STRICTLY_CONVERGENT
            assert co.classify(l33, pair.lower) is SetClass.STRICTLY_DIVERGENT
            assert pair.upper.mask & pair.lower.mask == bit


def test_global_extremes_have_empty_ribbons(d4, l33):
    # no strict convergent set contains a global minimum: the minimum
    # bounds every unrelated pair from below, forcing divergence
    assert len(co.ribbon(d4, "p")) == 0
    assert len(co.ribbon(d4, "s")) == 0
    assert len(co.ribbon(l33, "00")) == 0
    assert len(co.ribbon(l33, "22")) == 0


def test_antichain_ribbons_empty(anti3):
    for p in anti3.points:
        assert len(co.ribbon(anti3, p)) == 0


def test_ribbon_cap():
    with pytest.raises(co.GroundSetTooLarge):
        co.ribbon(co.antichain(15), "a0")


# ---------------------------------------------------------------------------
# Density
# ---------------------------------------------------------------------------

def test_star5_pair_not_dense(l5):
    # the strictly divergent set {bl, m, tl, tr} cuts the upper component
    # down to the chain {bl, m}, which contains no strict refinement
    (pair,) = co.ribbon(l5, "m").pairs
    assert not co.is_dense(l5, "m", pair)


def test_seven_point_fixture_not_dense(not_dense_7):
    rib = co.ribbon(not_dense_7, "v0")
    assert len(rib) > 0
    assert any(not co.is_dense(not_dense_7, "v0", pair) for pair in rib.pairs)
    reg = co.is_regular_ribbon(not_dense_7, "v0")
    assert not reg.regular and reg.failing_condition == "density"


def test_no_dense_pair_on_fixtures(d4, l5, l33, not_dense_7):
    for c in (d4, l5, l33, not_dense_7):
        for p in c.points:
            for pair in co.ribbon(c, p).pairs:
                assert not co.is_dense(c, p, pair)


def test_density_witness_is_a_real_cut(l33):
    from causalorder.reconstruction import _dense_witness

    for p in l33.points:
        rib = co.ribbon(l33, p)
        for pair in rib.pairs:
            witness = _dense_witness(l33, p, pair, rib)
            assert witness is not None
            cut_a, cut_b = witness
            bit = 1 << l33.index[p]
            assert cut_a.mask & bit and cut_b.mask & bit
            assert cut_a.mask != bit and cut_b.mask != bit
            # no ribbon pair refines the witness cuts
            for other in rib.pairs:
                assert not (
                    other.upper.issubset(cut_a) and other.lower.issubset(cut_b)
                )


# ---------------------------------------------------------------------------
# Regularity
# ---------------------------------------------------------------------------

def test_empty_ribbon_regular_and_flagged(d4):
    reg = co.is_regular_ribbon(d4, "p")
    assert reg.regular and reg.empty


def test_nonempty_ribbons_fail_density_on_fixtures(l5, l33):
    for c in (l5, l33):
        for p in c.points:
            if len(co.ribbon(c, p)):
                reg = co.is_regular_ribbon(c, p)
                assert not reg.regular
                assert reg.failing_condition == "density"
                assert reg.witness is not None


# ---------------------------------------------------------------------------
# Congruence
# ---------------------------------------------------------------------------

def test_congruence_reflexive_and_symmetric(l33):
    for p in l33.points:
        pairs = co.ribbon(l33, p).pairs
        for pr in pairs:
            assert co.congruent(l33, p, pr, pr)
        for i, pr1 in enumerate(pairs):
            for pr2 in pairs[i + 1:]:
                try:
                    fwd = co.congruent(l33, p, pr1, pr2)
                    bwd = co.congruent(l33, p, pr2, pr1)
                except co.NotCongruentDecidable:
                    continue
                assert fwd == bwd


def test_congruent_pairs_exist_and_satisfy_meet_lemma(l33):
    # whenever (A,B) ~ (C,D): A ∩ D = B ∩ C = {p}
    found = 0
    for p in l33.points:
        bit = 1 << l33.index[p]
        pairs = co.ribbon(l33, p).pairs
        for i, pr1 in enumerate(pairs):
            for pr2 in pairs[i + 1:]:
                try:
                    if not co.congruent(l33, p, pr1, pr2):
                        continue
                except co.NotCongruentDecidable:
                    continue
                found += 1
                assert pr1.upper.mask & pr2.lower.mask == bit
                assert pr1.lower.mask & pr2.upper.mask == bit
    assert found > 0


def test_congruence_classes_require_regular(l5):
    with pytest.raises(co.NotRegular):
        co.congruence_classes(l5, "m")


def test_congruence_classes_on_empty_ribbon(d4):
    rib = co.congruence_classes(d4, "p")
    assert rib.regular and rib.classes == ()


# ---------------------------------------------------------------------------
# Reconstruction
# ---------------------------------------------------------------------------

def test_reconstruct_l33_domain_empty_with_diagnostics(l33):
    rep = co.reconstruct_order(l33)
    assert rep.domain == ()
    assert rep.relation.shape == (0, 0)
    assert rep.agrees
    for p in l33.points:
        diag = rep.diagnostics[p]
        if diag["ribbon_pairs"]:
            assert diag["regular"] is False
            assert diag["failing_condition"] == "density"
        else:
            assert diag["regular"] is True and diag["empty"] is True


def test_reconstruct_empty_causality():
    c = co.validate_causality([], np.zeros((0, 0), dtype=bool))
    rep = co.reconstruct_order(c)
    assert rep.domain == () and rep.diffs == []


def test_reconstruct_report_json(l33):
    doc = co.reconstruct_order(l33).to_dict()
    assert {"domain", "relation", "diagnostics", "agreement"} <= doc.keys()
    assert doc["agreement"]["diffs"] == []
    assert set(doc["diagnostics"]) == set(l33.points)


def test_reconstruct_cap():
    with pytest.raises(co.GroundSetTooLarge):
        co.reconstruct_order(co.antichain(15))


@settings(max_examples=25, derandomize=True, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(3, 7), st.floats(0.1, 0.7))
def test_reconstruct_random_posets_is_partial_order(seed, n, p_edge):
    # reconstruct_order asserts reflexivity/antisymmetry/transitivity
    # internally and raises on violation; re-check here
    c = random_poset(n, p_edge, np.random.default_rng(seed))
    rep = co.reconstruct_order(c)
    k = len(rep.domain)
    rel = rep.relation
    assert rel.diagonal().all() if k else True
    assert not (rel & rel.T & ~np.eye(k, dtype=bool)).any()


# ---------------------------------------------------------------------------
# Reversal theorem
# ---------------------------------------------------------------------------

def test_reversal_theorem_on_fixtures(l5, l33, chain3):
    for c in (l5, l33, chain3):
        rep = co.verify_reversal_theorem(c)
        assert rep.all_hold, rep.to_dict()


def test_reversal_theorem_empty_causality():
    c = co.validate_causality([], np.zeros((0, 0), dtype=bool))
    assert co.verify_reversal_theorem(c).all_hold


# ---------------------------------------------------------------------------
# Regular causalities
# ---------------------------------------------------------------------------

def test_fixtures_are_regular_causalities(chain3, d4, l5, l33, anti3):
    for c in (chain3, d4, l5, l33, anti3):
        rep = co.is_regular_causality(c)
        assert rep.regular and rep.crossing
        assert all(rep.point_ok(p) for p in c.points)
        assert rep.extension_failures == []


def test_regular_causality_vertex_closure_is_checked(l33):
    # the bounded strict sets at the interior point are really unioned
    rep = co.is_regular_causality(l33)
    assert rep.pair_ok("00", "11")
    doc = rep.to_dict()
    assert {"regular", "crossing", "points", "extension_failures"} <= doc.keys()


def test_vertex_sets_union_keeps_vertex(l33):
    # bullet carried out by hand at the interior point: every pair of
    # strictly convergent sets with upper vertex 11 unions to another one
    from causalorder.reconstruction import _bounded_strict

    ip = l33.index["11"]
    fam = _bounded_strict(l33, ip, Kind.STRICTLY_CONVERGENT)
    assert fam
    for a in fam:
        for b in fam:
            u = co.causal_union(
                l33, co.PointSet(l33, a), co.PointSet(l33, b), Kind.CONVERGENT
            )
            assert co.classify(l33, u) is SetClass.STRICTLY_CONVERGENT
            assert co.vertex(l33, u, co.Direction.UPPER) == "11"


@settings(max_examples=25, derandomize=True, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(3, 6), st.floats(0.1, 0.7))
def test_congruence_decidable_or_flagged_random(seed, n, p_edge):
    # congruence either returns a verdict or raises the dedicated error;
    # anything else is a bug
    c = random_poset(n, p_edge, np.random.default_rng(seed))
    for p in c.points:
        pairs = co.ribbon(c, p).pairs
        bit = 1 << c.index[p]
        for i, pr1 in enumerate(pairs):
            for pr2 in pairs[i:]:
                try:
                    verdict = _congruent_masks(c, bit, pr1.masks(), pr2.masks())
                except co.NotCongruentDecidable:
                    continue
                assert verdict in (True, False)
