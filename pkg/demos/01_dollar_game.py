"""The dollar game, played by hand and then by the solver.

Every vertex holds some dollars (possibly negative, that's debt).  A move
picks a vertex which either lends a dollar to each neighbor or borrows one
from each.  The game is won when nobody is in debt.
"""

from chipfire import Divisor, GameState, apply_move, unwinnable_example, winning_strategy
from chipfire.catalog import cycle_graph

g = cycle_graph(3)  # vertices a, b, c in a triangle
print("graph:", g)
print("genus:", g.genus())

state = GameState(g, Divisor((-1, 2, -1)))
print("\nstart:", dict(zip(g.vertices, state.config.coeffs)), "total", state.total)

# b is rich, let it lend
state = apply_move(state, "b", "lend")
print("after b lends:", dict(zip(g.vertices, state.config.coeffs)))
print("won?", state.is_won())

# the solver finds a script of moves whenever one exists
state = GameState(g, Divisor((-3, 2, 2)))
plan = winning_strategy(state)
print("\nposition", state.config.coeffs, "-> strategy:", plan.moves)
for vertex, kind in plan.moves:
    state = apply_move(state, vertex, kind)
print("replayed to", state.config.coeffs, "won?", state.is_won())

# total money decides nothing by itself: degree genus-1 can be hopeless
bad = unwinnable_example(g)
print("\nunwinnable at degree", bad.degree(), ":", bad.coeffs)
print("solver agrees:", winning_strategy(GameState(g, bad)))
