"""The constrained chip-firing game and its duality with the lending game.

Here chips are nonnegative and a vertex may fire only when it holds at least
as many chips as its degree.  Whether play goes on forever is decided by the
star involution: flip the configuration across one-less-than-the-degrees and
ask the unconstrained game whether that position is winnable.  Critical
configurations are the star images of reduced divisors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .divisors import Divisor
from .multigraph import Multigraph
from .rank import has_effective_representative

Policy = Callable[[tuple[int, ...], Sequence[int]], int]


@dataclass(frozen=True)
class SandpileConfig:
    chips: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.chips):
            raise ValueError("chip counts must be nonnegative")
        object.__setattr__(self, "chips", tuple(int(c) for c in self.chips))

    @classmethod
    def from_divisor(cls, d: Divisor) -> "SandpileConfig":
        return cls(d.coeffs)

    def as_divisor(self) -> Divisor:
        return Divisor(self.chips)

    def total(self) -> int:
        return sum(self.chips)


@dataclass(frozen=True)
class RunResult:
    outcome: str  # "terminated" | "infinite"
    terminal: Optional[SandpileConfig]
    move_count: int
    fired: tuple[int, ...]
    evidence: str  # "stuck" | "repeat" | "cap"


def k_plus(g: Multigraph) -> Divisor:
    """One less than the degree at every vertex: the largest stable configuration."""
    return Divisor([g.degree(v) - 1 for v in range(g.n)])


def star_transform(g: Multigraph, d: Divisor) -> Divisor:
    """Reflect across k_plus; an involution exchanging the two games' viewpoints."""
    return k_plus(g) - d


def lowest_index_policy(chips: tuple[int, ...], eligible: Sequence[int]) -> int:
    return eligible[0]


def random_policy(seed: int) -> Policy:
    rng = random.Random(seed)

    def choose(chips: tuple[int, ...], eligible: Sequence[int]) -> int:
        return rng.choice(list(eligible))

    return choose


def round_robin_policy() -> Policy:
    cursor = [0]

    def choose(chips: tuple[int, ...], eligible: Sequence[int]) -> int:
        n = len(chips)
        for offset in range(n):
            v = (cursor[0] + offset) % n
            if v in eligible:
                cursor[0] = v + 1
                return v
        raise AssertionError("policy called with empty eligible set")

    return choose


def run(
    g: Multigraph,
    config: SandpileConfig,
    policy: Policy = lowest_index_policy,
    cap: int = 100_000,
) -> RunResult:
    """Fire per policy until stuck, a repeat proves an endless game, or the cap.

    Chip totals are conserved and stay nonnegative, so the reachable state
    space at a fixed total is finite: a repeated configuration means play
    can cycle forever, and the terminal-run theorem (any terminating play
    terminates every play) upgrades that to "the game is infinite".  The cap
    is a backstop only; hitting it reports infinite with weaker evidence.
    """
    chips = list(config.chips)
    degrees = g.degrees
    fired = [0] * g.n
    seen = {tuple(chips)}
    moves = 0
    while True:
        eligible = [v for v in range(g.n) if chips[v] >= degrees[v]]
        if not eligible:
            terminal = SandpileConfig(tuple(chips))
            assert all(chips[v] < degrees[v] for v in range(g.n))
            return RunResult("terminated", terminal, moves, tuple(fired), "stuck")
        if moves >= cap:
            return RunResult("infinite", None, moves, tuple(fired), "cap")
        v = policy(tuple(chips), eligible)
        assert chips[v] >= degrees[v], "policy chose an ineligible vertex"
        chips[v] -= degrees[v]
        row = g.adjacency[v]
        for w in g.neighbors(v):
            chips[w] += row[w]
        fired[v] += 1
        moves += 1
        key = tuple(chips)
        if key in seen:
            return RunResult("infinite", None, moves, tuple(fired), "repeat")
        seen.add(key)


def finiteness_via_duality(g: Multigraph, config: SandpileConfig) -> bool:
    """True iff every play from this configuration halts, decided without playing."""
    return has_effective_representative(g, star_transform(g, config.as_divisor()))


def _critical_order(g: Multigraph, d: Divisor, v0: int) -> Optional[list[int]]:
    """Greedy construction of a one-pass firing order certifying criticality.

    After the base fires, each chosen vertex must already hold enough to
    cover its edges toward the not-yet-fired part.  Eligibility only grows
    as the remaining set shrinks, so greedy choice loses no solutions.
    """
    remaining = set(range(g.n)) - {v0}
    order = []
    while remaining:
        pick = None
        for v in sorted(remaining):
            row = g.adjacency[v]
            outgoing = sum(row[w] for w in g.neighbors(v) if w in remaining)
            if d[v] >= outgoing:
                pick = v
                break
        if pick is None:
            return None
        order.append(pick)
        remaining.discard(pick)
    return order


def is_critical(g: Multigraph, d: Divisor, base: str | None = None) -> bool:
    """Stable off the base, and rechargeable by one full firing pass from it.

    The per-vertex bound is the non-strict 0 <= d(v) <= deg(v) - 1; that is
    the version under which star_transform carries reduced divisors exactly
    onto critical ones.
    """
    v0 = g.index(base) if base is not None else 0
    for v in range(g.n):
        if v == v0:
            continue
        if not (0 <= d[v] <= g.degree(v) - 1):
            return False
    return _critical_order(g, d, v0) is not None
