"""Reduction of divisors to their unique base-point canonical form.

A divisor is reduced with respect to a base vertex when every other vertex
is out of debt and no nonempty set of non-base vertices can fire without
someone going negative.  Each equivalence class contains exactly one reduced
divisor per base, which makes reduced forms the workhorse for equivalence
tests, winnability and class enumeration.

reduce() runs two phases.  Phase one clears debt from the farthest
breadth-first layer inward, each debtor borrowing through its tree parent.
Phase two repeatedly runs a burning scan from the base: a vertex ignites
once the edges from already-burnt vertices outnumber its dollars, and if the
fire dies out early the surviving set fires as a whole.  The loop asserts
the strict lexicographic climb of the layer-sum potential that the
uniqueness argument is built on, rather than trusting termination blindly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .divisors import Divisor, FiringScript, apply_laplacian
from .errors import ResourceGuardError
from .multigraph import Multigraph


@dataclass(frozen=True)
class ReducedDivisor:
    """Reduced form plus the script witnessing input - divisor = action(script)."""

    divisor: Divisor
    base: str
    script: FiringScript


def _dhar_unburnt(g: Multigraph, coeffs, v0: int) -> list[int]:
    """Vertices the burning scan from the base never reaches.

    Empty means the divisor passes the set-firing test.  A nonempty result is
    itself the next set to fire: every survivor has at least as many dollars
    as edges leaving the set.
    """
    n = g.n
    adj = g.adjacency
    burnt = [False] * n
    burnt[v0] = True
    count = [0] * n
    stack = [v0]
    burned = 1
    while stack:
        u = stack.pop()
        row = adj[u]
        for w in g.neighbors(u):
            if not burnt[w]:
                count[w] += row[w]
                if count[w] > coeffs[w]:
                    burnt[w] = True
                    burned += 1
                    stack.append(w)
    if burned == n:
        return []
    return [v for v in range(n) if not burnt[v]]


def is_reduced(g: Multigraph, d: Divisor, base: str, method: str = "auto") -> bool:
    """Check the debt-free and no-set-can-fire conditions at a base vertex.

    method "exhaustive" scans every nonempty subset of non-base vertices;
    "burning" uses the fire-spread shortcut.  "auto" picks the exhaustive
    route up to 12 vertices and burning above.  Both routes agree wherever
    both run (property-tested).
    """
    v0 = g.index(base)
    n = g.n
    if any(d[v] < 0 for v in range(n) if v != v0):
        return False
    if method == "auto":
        method = "exhaustive" if n <= 12 else "burning"
    if method == "burning":
        return not _dhar_unburnt(g, d.coeffs, v0)
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")
    others = [v for v in range(n) if v != v0]
    adj = g.adjacency
    for size in range(1, len(others) + 1):
        for subset in itertools.combinations(others, size):
            inside = set(subset)
            # the set may fire iff every member can cover its outgoing edges
            if all(
                d[v] >= g.degree(v) - sum(adj[v][u] for u in inside)
                for v in subset
            ):
                return False
    return True


def _layers(g: Multigraph, v0: int) -> list[list[int]]:
    key = ("layers", v0)
    got = g._cache.get(key)
    if got is None:
        dist = g.bfs(v0)[2]
        got = [[] for _ in range(max(dist) + 1)]
        for v, dv in enumerate(dist):
            got[dv].append(v)
        g._cache[key] = got
    return got


def reduce(g: Multigraph, d: Divisor, base: str) -> ReducedDivisor:
    """The unique reduced divisor equivalent to d, with its firing script."""
    v0 = g.index(base)
    cache_key = ("reduced", d.coeffs, v0)
    got = g._cache.get(cache_key)
    if got is not None:
        return got

    n = g.n
    adj = g.adjacency
    degrees = g.degrees
    _, parent, dist = g.bfs(v0)
    coeffs = list(d.coeffs)
    script = [0] * n

    # Phase 1: clear debt from the farthest layer inward.  Each debtor v is
    # bailed out by its tree parent lending enough times; the parent sits
    # strictly closer to the base, so it is repaired later and nothing
    # already processed can fall back into debt.
    for v in sorted(range(n), key=lambda v: (-dist[v], v)):
        if v == v0 or coeffs[v] >= 0:
            continue
        w = parent[v]
        mult = adj[v][w]
        lends = (-coeffs[v] + mult - 1) // mult
        script[w] -= lends
        coeffs[w] -= lends * degrees[w]
        row = adj[w]
        for u in g.neighbors(w):
            coeffs[u] += lends * row[u]

    # Phase 2: burn from the base; fire whatever survives, until the fire
    # consumes everything.  Firing the surviving set keeps every non-base
    # vertex out of debt, and strictly raises the layer-sum potential read
    # from the base outward, which is exactly why the loop must stop.
    layers = _layers(g, v0)

    def layer_sums():
        return tuple(sum(coeffs[v] for v in layer) for layer in layers)

    potential = layer_sums()
    while True:
        survivors = _dhar_unburnt(g, coeffs, v0)
        if not survivors:
            break
        inside = [False] * n
        for v in survivors:
            inside[v] = True
        for v in survivors:
            row = adj[v]
            outgoing = degrees[v] - sum(row[u] for u in survivors)
            coeffs[v] -= outgoing
            script[v] -= 1
            assert coeffs[v] >= 0
            for u in g.neighbors(v):
                if not inside[u]:
                    coeffs[u] += row[u]
        next_potential = layer_sums()
        assert next_potential > potential, "set firing failed to make progress"
        potential = next_potential

    result = ReducedDivisor(
        divisor=Divisor(coeffs),
        base=base,
        script=FiringScript(-s for s in script),
    )
    assert apply_laplacian(g, result.script) == d - result.divisor
    g._cache[cache_key] = result
    return result


def enumerate_reduced(
    g: Multigraph, base: str, degree: int, cap: int = 2_000_000
) -> list[Divisor]:
    """Every reduced divisor of the given total degree, in lexicographic order.

    Away from the base a reduced coefficient is trapped in [0, deg(v) - 1],
    so the search space is the product of vertex degrees; the cap guards that
    product.  The degree-zero count equals the number of spanning trees.
    """
    v0 = g.index(base)
    n = g.n
    others = [v for v in range(n) if v != v0]
    space = 1
    for v in others:
        space *= g.degree(v)
    if space > cap:
        raise ResourceGuardError("enumerate_reduced_degree_box")
    out = []
    for combo in itertools.product(*(range(g.degree(v)) for v in others)):
        coeffs = [0] * n
        for v, c in zip(others, combo):
            coeffs[v] = c
        coeffs[v0] = degree - sum(combo)
        if not _dhar_unburnt(g, coeffs, v0):
            out.append(Divisor(coeffs))
    out.sort(key=lambda d: d.coeffs)
    return out
