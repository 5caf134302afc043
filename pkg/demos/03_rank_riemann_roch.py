"""Rank of a divisor and the graph Riemann-Roch identity.

The rank of a winnable position measures how robust the win is: it is the
largest s such that the position stays winnable after any s dollars are
removed.  Unwinnable positions get rank -1.  Rank satisfies the same
identity as on an algebraic curve, with genus |E| - |V| + 1.
"""

from chipfire import (
    Divisor,
    canonical_divisor,
    clifford_check,
    dichotomy,
    linear_system,
    rank,
    verify_riemann_roch,
)
from chipfire.catalog import banana_graph, pentagon_with_chord

# two vertices joined by m parallel edges; the canonical class is famously stiff
for m in (3, 4, 5):
    g = banana_graph(m)
    k = canonical_divisor(g)
    r = rank(g, k)
    members = linear_system(g, k).members
    print(f"banana m={m}: rank(K)={r.value}, |K| has {len(members)} member(s)")

g = pentagon_with_chord()
d = Divisor.at(g.n, g.index("v4"), 2)  # two dollars on v4, nothing else
r = rank(g, d)
print("\npentagon, 2 dollars at v4: rank", r.value)
print("  certificate (removing it kills the win):", dict(zip(g.vertices, r.certificate.coeffs)))
print("  full linear system:", [m.coeffs for m in linear_system(g, d).members])

report = verify_riemann_roch(g, d)
print("\nidentity at that divisor:", report)

# every divisor class either contains an effective divisor or is dominated
# by a benchmark built from some vertex order; never both
split = dichotomy(g, Divisor((-2, 1, 0, 1, 0)))
print("\ndichotomy:", "effective," if split.has_effective else "dominated,",
      "witness", split.witness.coeffs, "order", split.order)

# effective special divisors obey the Clifford bound 2 r(D) <= deg(D)
k = canonical_divisor(g)
print("\nclifford on the canonical divisor:", clifford_check(g, k))
