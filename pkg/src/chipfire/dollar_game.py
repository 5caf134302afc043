"""The unconstrained lending game on a graph.

Each move picks a vertex and either borrows one dollar from every neighbor
or gives one to every neighbor (counted with edge multiplicity).  Moves
preserve the total, reachability is exactly linear equivalence, and a
position is winnable precisely when its class contains an effective divisor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .divisors import Divisor, FiringScript, apply_laplacian, nu_divisor
from .multigraph import Multigraph
from .rank import has_effective_representative

Move = tuple[str, str]  # (vertex, "borrow" | "lend")


@dataclass(frozen=True)
class GameState:
    graph: Multigraph
    config: Divisor
    log: tuple[Move, ...] = ()

    def __post_init__(self):
        if len(self.config.coeffs) != self.graph.n:
            raise ValueError("configuration length does not match the graph")

    @property
    def total(self) -> int:
        return self.config.degree()

    def is_won(self) -> bool:
        return self.config.is_effective()


@dataclass(frozen=True)
class Strategy:
    moves: tuple[Move, ...]

    def __len__(self):
        return len(self.moves)


def _move_delta(g: Multigraph, vertex: str, kind: str) -> Divisor:
    if kind not in ("borrow", "lend"):
        raise ValueError(f"unknown move kind {kind!r}")
    f = [0] * g.n
    f[g.index(vertex)] = 1
    delta = apply_laplacian(g, FiringScript(f))
    return delta if kind == "borrow" else -delta


def apply_move(state: GameState, vertex: str, kind: str) -> GameState:
    """One lending move; always legal, the total never changes."""
    delta = _move_delta(state.graph, vertex, kind)
    return GameState(
        graph=state.graph,
        config=state.config + delta,
        log=state.log + ((vertex, kind),),
    )


def apply_script(state: GameState, script: FiringScript) -> GameState:
    """Replay a net script as individual moves, positive entries as borrows."""
    out = state
    for v, count in zip(state.graph.vertices, script.coeffs):
        kind = "borrow" if count > 0 else "lend"
        for _ in range(abs(count)):
            out = apply_move(out, v, kind)
    return out


def is_winnable(state: GameState) -> bool:
    """True when some move sequence clears every debt."""
    return has_effective_representative(state.graph, state.config)


def lowest_in_debt(config: Divisor, in_debt: Sequence[int]) -> int:
    return in_debt[0]


def winning_strategy(
    state: GameState,
    choose: Callable[[Divisor, Sequence[int]], int] = lowest_in_debt,
    cap: Optional[int] = None,
) -> Optional[Strategy]:
    """Borrowing-only play: some vertex in debt borrows, until no debt remains.

    Winnability is decided up front at the class level, so the search never
    proves a negative by running out of steps.  On winnable positions the
    greedy terminates, under any in-debt choice rule, within
    deg_plus(config) * diameter * n moves; the default cap is that bound.
    """
    g = state.graph
    if not is_winnable(state):
        return None
    if cap is None:
        cap = max(1, state.config.deg_plus() * g.diameter() * g.n)
    config = state.config
    moves: list[Move] = []
    while not config.is_effective():
        in_debt = [v for v in range(g.n) if config[v] < 0]
        v = choose(config, in_debt)
        assert config[v] < 0
        config = config + _move_delta(g, g.vertices[v], "borrow")
        moves.append((g.vertices[v], "borrow"))
        assert len(moves) <= cap, "termination bound exceeded on a winnable position"
    return Strategy(tuple(moves))


def unwinnable_example(g: Multigraph, base: str | None = None, degree: int | None = None) -> Divisor:
    """A position of the requested degree (default genus - 1) with no way out.

    Built from the edge-ordering divisor for the ordering that starts at the
    base; no subset of vertices can fire its way out of that divisor, so the
    class contains nothing effective.  Degrees below genus - 1 drop extra
    dollars from the last vertex in the ordering.  Degrees at or above genus
    are always winnable, so they are rejected.
    """
    base = base if base is not None else g.vertices[0]
    genus = g.genus()
    if degree is None:
        degree = genus - 1
    if degree > genus - 1:
        raise ValueError("every class of degree at least the genus is winnable")
    order = [base] + [v for v in g.vertices if v != base]
    d = nu_divisor(g, order)
    coeffs = list(d.coeffs)
    # dropping dollars from the last vertex keeps the class dominated, hence unwinnable
    coeffs[g.index(order[-1])] -= (genus - 1) - degree
    out = Divisor(coeffs)
    assert not has_effective_representative(g, out, base)
    return out
