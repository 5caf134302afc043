"""Flow and cut lattices: the class group as integer lattice quotients.

Orient the edges once and for all.  Integer combinations of cycles form the
flow lattice, integer combinations of vertex cuts the cut lattice; both sit
inside Z^E with the standard inner product, and both remember a surprising
amount of the graph.
"""

from fractions import Fraction

from chipfire import (
    Divisor,
    abel_map,
    cut_lattice,
    flow_lattice,
    lattice_determinant,
    lattice_diagnostics,
    quotient_group,
)
from chipfire.catalog import cycle_graph, pentagon_with_chord

g = pentagon_with_chord()
flow = flow_lattice(g)
cut = cut_lattice(g)
print("graph:", g, " spanning trees:", g.spanning_tree_count())
print("flow rank", flow.rank, " basis:")
for v in flow.vectors:
    print("   ", v)
print("cut rank", cut.rank)

# both Gram determinants equal the spanning tree count
print("dets:", lattice_determinant(flow), lattice_determinant(cut))

# quotient invariants agree with the Jacobian invariant factors
print("flow quotient:", quotient_group(flow), " cut quotient:", quotient_group(cut))

d = lattice_diagnostics(g)
print("\nshortest nonzero squared norms: flow", d["flow_min_norm"], "(girth", str(g.girth()) + ")",
      " cut", d["cut_min_norm"], "(edge connectivity", str(g.edge_connectivity()) + ")")
print("flow even?", d["flow_even"], "(bipartite:", g.is_bipartite(), ")  cut even?",
      d["cut_even"], "(eulerian:", g.is_eulerian(), ")")

# degree-0 divisors land on a rational torus; principal ones land on 0
g = cycle_graph(4)
print("\ntorus points on the 4-cycle:")
for coeffs in [(1, -1, 0, 0), (1, 0, -1, 0), (2, 0, -2, 0), (0, 0, 0, 0)]:
    pt = abel_map(g, Divisor(coeffs))
    print("  ", coeffs, "->", tuple(str(x) for x in pt))

# (2, 0, -2, 0) is principal on the 4-cycle, so it sits at the origin
assert abel_map(g, Divisor((2, 0, -2, 0))) == (Fraction(0),)
