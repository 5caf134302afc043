"""Graph constructors and a small-multigraph census for tests and demos.

The census enumerates connected loopless multigraphs up to bounds on
vertices and edges.  Isomorphic duplicates are folded away by brute-force
canonicalization, which is cheap at these sizes and keeps downstream sweeps
from re-proving the same facts.
"""

from __future__ import annotations

import itertools
import random
import string
from typing import Iterator

from .multigraph import Multigraph


def banana_graph(m: int) -> Multigraph:
    """Two vertices p, q joined by m parallel edges."""
    if m < 1:
        raise ValueError("need at least one edge")
    return Multigraph(("p", "q"), tuple(("p", "q") for _ in range(m)))


def cycle_graph(n: int) -> Multigraph:
    """Cycle on n >= 2 vertices named a, b, c, ...; n = 2 is the double edge."""
    if n < 2:
        raise ValueError("a loopless cycle needs at least two vertices")
    names = _letters(n)
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return Multigraph(tuple(names), tuple(edges))


def complete_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("need at least one vertex")
    names = [f"v{i + 1}" for i in range(n)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    return Multigraph(tuple(names), tuple(edges))


def path_graph(n: int) -> Multigraph:
    if n < 1:
        raise ValueError("need at least one vertex")
    names = [f"v{i + 1}" for i in range(n)]
    return Multigraph(tuple(names), tuple((names[i], names[i + 1]) for i in range(n - 1)))


def pentagon_with_chord() -> Multigraph:
    """Five-cycle v1..v5 with the extra chord v1-v3; genus 2 workhorse example."""
    names = ("v1", "v2", "v3", "v4", "v5")
    edges = (("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v1"), ("v3", "v1"))
    return Multigraph(names, edges)


def _letters(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"v{i + 1}" for i in range(n)]


def _canonical_key(n: int, counts: dict[tuple[int, int], int]) -> tuple:
    """Lexicographically least edge multiset over all vertex relabelings."""
    pairs = sorted(counts.items())
    best = None
    for perm in itertools.permutations(range(n)):
        mapped = sorted(
            ((min(perm[a], perm[b]), max(perm[a], perm[b])), c) for (a, b), c in pairs
        )
        key = tuple(mapped)
        if best is None or key < best:
            best = key
    return best


def _connected_support(n: int, support: tuple[tuple[int, int], ...]) -> bool:
    if n == 1:
        return True
    adj = [[] for _ in range(n)]
    for a, b in support:
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def connected_multigraphs(
    max_vertices: int, max_edges: int, dedup: bool = True
) -> Iterator[Multigraph]:
    """All connected loopless multigraphs with n <= max_vertices, m <= max_edges.

    Vertices are named v1..vn.  With dedup (the default) exactly one graph
    per isomorphism class is produced, in a deterministic order.
    """
    for n in range(1, max_vertices + 1):
        names = tuple(f"v{i + 1}" for i in range(n))
        if n == 1:
            yield Multigraph(names, ())
            continue
        all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        seen_keys = set()
        for size in range(n - 1, min(max_edges, len(all_pairs)) + 1):
            for support in itertools.combinations(all_pairs, size):
                if not _connected_support(n, support):
                    continue
                for extra in range(0, max_edges - size + 1):
                    # spread `extra` additional copies over the support pairs
                    for split in _compositions(extra, size):
                        counts = {
                            pair: 1 + add for pair, add in zip(support, split)
                        }
                        if dedup:
                            key = _canonical_key(n, counts)
                            if key in seen_keys:
                                continue
                            seen_keys.add(key)
                        edges = []
                        for (a, b), c in sorted(counts.items()):
                            edges.extend([(names[a], names[b])] * c)
                        yield Multigraph(names, tuple(edges))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def random_connected_multigraph(
    rng: random.Random, max_vertices: int = 5, max_edges: int = 8
) -> Multigraph:
    """Random spanning tree plus random extra edges; sizes drawn uniformly."""
    n = rng.randint(1, max_vertices)
    names = tuple(f"v{i + 1}" for i in range(n))
    if n == 1:
        return Multigraph(names, ())
    edges = []
    for v in range(1, n):
        edges.append((names[rng.randrange(v)], names[v]))
    m = rng.randint(n - 1, max(n - 1, max_edges))
    while len(edges) < m:
        a, b = rng.sample(range(n), 2)
        edges.append((names[a], names[b]))
    return Multigraph(names, tuple(edges))


def random_bridged_graph(
    rng: random.Random, side_vertices: int = 3, side_edges: int = 5
) -> Multigraph:
    """Two random connected blocks joined by a single edge, which is a bridge."""
    left = random_connected_multigraph(rng, side_vertices, side_edges)
    right = random_connected_multigraph(rng, side_vertices, side_edges)
    names = tuple(f"L{v}" for v in left.vertices) + tuple(f"R{v}" for v in right.vertices)
    edges = [(f"L{left.vertices[a]}", f"L{left.vertices[b]}") for a, b in left.edges]
    edges += [(f"R{right.vertices[a]}", f"R{right.vertices[b]}") for a, b in right.edges]
    edges.append((f"L{left.vertices[rng.randrange(left.n)]}", f"R{right.vertices[rng.randrange(right.n)]}"))
    return Multigraph(names, tuple(edges))
