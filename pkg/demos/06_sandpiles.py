"""Constrained chip-firing: vertices may only fire when they can afford it.

A vertex fires by sending one chip along each incident edge, allowed only
when it holds at least its degree.  Play is forced in a strong sense: the
final configuration, the number of moves, even how often each vertex fires,
none of it depends on the order of play.
"""

import random

from chipfire import (
    Divisor,
    SandpileConfig,
    finiteness_via_duality,
    is_critical,
    k_plus,
    lowest_index_policy,
    random_policy,
    round_robin_policy,
    run,
    star_transform,
)
from chipfire.catalog import cycle_graph, pentagon_with_chord

g = pentagon_with_chord()
config = SandpileConfig((4, 0, 1, 0, 0))

for name, policy in [
    ("lowest index", lowest_index_policy),
    ("round robin", round_robin_policy()),
    ("random(7)", random_policy(7)),
]:
    res = run(g, config, policy)
    print(f"{name:12s}: {res.outcome} after {res.move_count} moves, terminal {res.terminal.chips}, fired {res.fired}")

# whether play ever halts is decidable without playing: reflect the
# configuration through k_plus and ask the dollar game
print("\nk_plus:", k_plus(g).coeffs)
for chips in [(4, 0, 1, 0, 0), (3, 2, 3, 2, 2), (2, 2, 2, 2, 2)]:
    cfg = SandpileConfig(chips)
    predicted = finiteness_via_duality(g, cfg)
    played = run(g, cfg).outcome == "terminated"
    print(f"  {chips}: duality says {'halts' if predicted else 'runs forever'}, simulation agrees: {predicted == played}")

# critical configurations (stable and self-reproducing) are the classical
# group representatives; the star reflection swaps them with reduced divisors
g = cycle_graph(4)
rng = random.Random(11)
found = []
for _ in range(200):
    # the base coordinate plays no role in criticality, pin it at zero
    d = Divisor([0] + [rng.randrange(g.degree(v)) for v in range(1, g.n)])
    if is_critical(g, d, "a") and d.coeffs not in found:
        found.append(d.coeffs)
print("\ncritical configurations on the 4-cycle (base a):", sorted(found))
print("spanning trees:", g.spanning_tree_count())
print("their star reflections:", sorted(star_transform(g, Divisor(c)).coeffs for c in found))
