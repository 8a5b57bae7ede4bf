#!/usr/bin/env python3
"""Finite causal orders: construction, diamonds, cones, crossing, export.

Walks through the core vocabulary on small posets: the diamond between
two points, the full past/future of a point, causal completeness,
convergence/divergence, and the crossing property.
"""

import causalorder as co
from causalorder import Direction

# A four-point diamond: p below q and r (unrelated), both below s.
d4 = co.diamond4()
print("diamond4 points:", d4.points)
print("p <= s:", d4.leq("p", "s"), "   q <= r:", d4.leq("q", "r"))

# The diamond C[x, y] holds everything between x and y; it is empty when
# the endpoints are reversed or unrelated.
print("\nC[p, s] =", co.diamond(d4, "p", "s").ids())
print("C[s, p] =", co.diamond(d4, "s", "p").ids())
print("C[q, r] =", co.diamond(d4, "q", "r").ids())

# Incomplete diamonds are the full causal past/future of a point.
print("past(s)   =", co.incomplete_diamond(d4, "s", Direction.UPPER).ids())
print("future(p) =", co.incomplete_diamond(d4, "p", Direction.LOWER).ids())

# Completeness demands every internal diamond; {a, c} on a chain misses b.
chain3 = co.chain(3)
print("\n{a, c} complete on a <= b <= c:",
      co.is_causally_complete(chain3, chain3.subset(["a", "c"])))

# Convergence and divergence ask for internal bounds of unrelated pairs.
u = d4.subset(["q", "r", "s"])
print("{q, r, s} convergent:", co.is_convergent(d4, u),
      " divergent:", co.is_divergent(d4, u))

# The crossing property: for unrelated x, y below common z, w at least one
# cross-pair of diamonds intersects.  All product lattices have it.
for c, name in [(d4, "diamond4"), (co.grid(3, 3), "3x3 lattice"),
                (co.antichain(3), "antichain")]:
    print(f"crossing on {name}:", co.has_crossing_property(c).holds)

# Order reversal: structurally (transpose the relation) or through an
# order-reversing involution of the points.
pqr = d4.subset(["p", "q", "r"])
image = co.reverse(d4, co.OrderReversal.structural(), pqr)
print("\n{p, q, r} is", co.classify(d4, pqr).name,
      "and its reversal is", co.classify(image.parent, image).name)

# Cover-diagram export for graphviz.
print("\nDOT output:")
print(co.to_dot(d4, name="diamond4"))
