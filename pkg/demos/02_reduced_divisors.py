"""Reduced divisors: one canonical representative per equivalence class."""

from chipfire import Divisor, apply_laplacian, enumerate_reduced, is_reduced, reduce
from chipfire.catalog import pentagon_with_chord

g = pentagon_with_chord()
base = "v1"

messy = Divisor((7, -3, 0, 2, -1))
out = reduce(g, messy, base)
print("input:  ", messy.coeffs)
print("reduced:", out.divisor.coeffs)
print("firing script that gets there:", out.script.coeffs)

# the script is a witness: input minus its Laplacian image is the output
assert messy - apply_laplacian(g, out.script) == out.divisor
print("witness checks out")

# any equivalent divisor lands on the same representative
shifted = messy + apply_laplacian(g, out.script.normalized())
assert reduce(g, shifted, base).divisor == out.divisor
print("equivalent input, same reduced form")

print("\nis_reduced on a few candidates:")
for coeffs in [(0, 0, 0, 0, 0), (0, 1, 2, 1, 1), (-4, 0, 1, 0, 1)]:
    d = Divisor(coeffs)
    print(" ", coeffs, "->", is_reduced(g, d, base))

# degree-0 reduced divisors enumerate the class group; their number is the
# spanning tree count of the graph
reps = enumerate_reduced(g, base, 0)
print("\ndegree-0 classes:", len(reps), "   spanning trees:", g.spanning_tree_count())
for d in reps[:5]:
    print("  ", d.coeffs)
print("   ...")
