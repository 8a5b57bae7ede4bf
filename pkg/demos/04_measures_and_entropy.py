#!/usr/bin/env python3
"""Causal measures and formal entropy on finite ground sets.

A divergent causal measure weighs each complete+divergent set with a
value in [1, inf], is 1 on the empty set and singletons, and is
super-multiplicative under causal union, with equality when the causal
union adds nothing.  On a finite ground set those axioms force the
constant table: peel a maximal element off any divergent set and the
remainder is still divergent, so the equality case telescopes down to
singletons.  Non-constant tables exist here to show the reporting.
"""

import math

import causalorder as co
from causalorder import Kind

l33 = co.grid(3, 3)
chain3 = co.chain(3)

# The constant measure passes all axioms and is monotone.
unit = co.constant_measure(l33)
print("constant measure axioms:", co.verify_measure_axioms(l33, unit).all_hold)
print("monotone:", co.check_monotonicity(l33, unit).all_hold)

# Raise any multi-point value and the equality case flags it.
table = dict(co.constant_measure(chain3).table)
table[chain3.mask_of(["a", "b"])] = 2.0
bumped = co.CausalMeasure(chain3, Kind.DIVERGENT, table)
report = co.verify_measure_axioms(chain3, bumped)
print("\nbumped table verdict:", report.all_hold)
print("witness:", report.result("super-multiplicativity").counterexample)

# Formal entropy is the log of the weight; inner/outer extensions cover
# subsets outside the family.
d4 = co.diamond4()
m = co.constant_measure(d4)
print("\nentropy of a future cone under the unit table:",
      co.formal_entropy(d4, m, d4.subset(["p", "q", "r"])).value)
print("inner extension of the non-causal {q, r}:",
      co.inner_measure_value(d4, m, d4.subset(["q", "r"])))

# Entropy composition with a deformation parameter: additive at q = 1,
# monotonicity-breaking for q > 1.
print("\ncomposition at q=1:", co.tsallis_compose(1.5, 2.5, q=1.0))
print("composition at q=2, S=2 both:", co.tsallis_compose(2.0, 2.0, q=2.0))
hit = co.find_tsallis_violation()
print("first monotonicity violation on the default grid:", hit)
print("no violation with q <= 1:",
      co.find_tsallis_violation(q_values=(0.5, 1.0)) is None)

# Serialization round trip.
doc = bumped.to_dict()
back = co.CausalMeasure.from_dict(chain3, doc)
print("\nJSON round trip preserves the table:", back.table == bumped.table)
print("entry with an infinite weight serializes as",
      co.CausalMeasure(chain3, Kind.DIVERGENT,
                       {0: 1.0, chain3.mask_of(["a"]): math.inf}).to_dict()["entries"][-1])
