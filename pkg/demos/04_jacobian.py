"""The Jacobian: degree-zero divisor classes form a finite abelian group."""

from chipfire import Divisor, abel_jacobi, divisor_class, jacobian_structure, symmetric_power_map
from chipfire.catalog import complete_graph, cycle_graph, path_graph

# cycles give cyclic groups, trees give the trivial group
for g in (cycle_graph(5), path_graph(4), complete_graph(4)):
    js = jacobian_structure(g)
    print(f"{g}: {js!r}, order {js.order}")

g = complete_graph(4)
js = jacobian_structure(g, "v1")

# group elements are canonical coordinates; equal coordinates means the
# divisors are reachable from one another in the game
d1 = Divisor((-1, 1, 0, 0))
d2 = Divisor((-1, 0, 0, 1))
print("\nclass of", d1.coeffs, "->", divisor_class(js, d1).coords)
print("class of", d2.coeffs, "->", divisor_class(js, d2).coords)
print("sum:", (divisor_class(js, d1) + divisor_class(js, d2)).coords)

# the vertex embedding v -> [(v) - (base)]
for v in g.vertices:
    print("embed", v, "->", abel_jacobi(js, v).coords)

# symmetric powers: send each effective degree-k divisor to its class.
# surjective once k reaches the genus, injective while the graph is
# (k+1)-edge-connected
print("\nk  domain  image  injective  surjective   (genus", js.genus, ")")
for k in range(1, js.genus + 2):
    row = symmetric_power_map(js, k)
    print(k, row["domain_size"], row["image_size"], row["injective"], row["surjective"], sep="  ")
