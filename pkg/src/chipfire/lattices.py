"""Integral flow and cut lattices of an oriented multigraph.

Orienting each edge turns the edge set into a lattice Z^m with boundary maps
to and from the vertex space.  Cycles of a spanning tree span the kernel of
the boundary (flows), bond vectors of the tree span the image of the
coboundary (cuts).  Both lattices have determinant equal to the spanning
tree count, their quotient recovers the critical group, and a rational
projection onto the flow side gives a torus-valued class invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .divisors import Divisor
from .errors import ResourceGuardError
from .linalg import dot, gram_matrix, solve_rational
from .multigraph import Multigraph


@dataclass(frozen=True)
class OrientedEdgeSpace:
    """A choice of head and tail for every edge, in edge order.

    The difference operator sends vertex functions to edge functions, its
    adjoint sends edge functions back, and adjoint-after-difference is the
    Laplacian.
    """

    graph: Multigraph
    tails: tuple[int, ...]
    heads: tuple[int, ...]

    def difference(self, f) -> list[int]:
        """Vertex vector -> edge vector of head minus tail values."""
        return [f[self.heads[e]] - f[self.tails[e]] for e in range(self.graph.m)]

    def adjoint(self, x) -> list[int]:
        """Edge vector -> vertex vector: x[e] lands at the head, leaves the tail."""
        out = [0] * self.graph.n
        for e, val in enumerate(x):
            out[self.heads[e]] += val
            out[self.tails[e]] -= val
        return out

    def incidence_matrix(self) -> list[list[int]]:
        """Matrix of the difference operator: one row per edge, +1 head, -1 tail."""
        rows = []
        for e in range(self.graph.m):
            row = [0] * self.graph.n
            row[self.heads[e]] = 1
            row[self.tails[e]] = -1
            rows.append(row)
        return rows


def boundary_operators(g: Multigraph, flips=None) -> OrientedEdgeSpace:
    """Orient each edge toward its higher-index endpoint, unless flipped.

    flips, when given, is one bool per edge; True reverses that edge.  Every
    lattice invariant below is orientation-independent (flipping an edge
    negates a coordinate), wired through so tests can prove that claim.
    """
    tails = []
    heads = []
    for e, (a, b) in enumerate(g.edges):
        if flips is not None and flips[e]:
            a, b = b, a
        tails.append(a)
        heads.append(b)
    return OrientedEdgeSpace(g, tuple(tails), tuple(heads))


@dataclass(frozen=True)
class LatticeBasis:
    kind: str
    space: OrientedEdgeSpace
    vectors: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.vectors)


def _tree_adjacency(g: Multigraph):
    tree_edges, parent, parent_edge = g.spanning_tree()
    depth = [0] * g.n
    order = g.bfs(0)[0]
    for v in order:
        if parent[v] >= 0:
            depth[v] = depth[parent[v]] + 1
    return tree_edges, parent, parent_edge, depth


def _walk_up(space: OrientedEdgeSpace, parent, parent_edge, u, acc, sign):
    """Step u to its parent; sign says whether the path traverses u -> parent."""
    e = parent_edge[u]
    if space.tails[e] == u:
        acc[e] += sign
    else:
        acc[e] -= sign
    return parent[u]


def _tree_path(space, parent, parent_edge, depth, a, b):
    """Edge vector of the tree path a -> b (+1 where it follows edge orientation)."""
    acc = [0] * space.graph.m
    # the a side is walked forward, the b side in reverse
    while depth[a] > depth[b]:
        a = _walk_up(space, parent, parent_edge, a, acc, +1)
    while depth[b] > depth[a]:
        b = _walk_up(space, parent, parent_edge, b, acc, -1)
    while a != b:
        a = _walk_up(space, parent, parent_edge, a, acc, +1)
        b = _walk_up(space, parent, parent_edge, b, acc, -1)
    return acc


def flow_lattice(g: Multigraph, space: OrientedEdgeSpace | None = None) -> LatticeBasis:
    """Fundamental cycle basis: one vector per non-tree edge, in edge order."""
    default = space is None
    if default:
        cached = g._cache.get("flow_basis")
        if cached is not None:
            return cached
        space = boundary_operators(g)
    tree_edges, parent, parent_edge, depth = _tree_adjacency(g)
    in_tree = set(tree_edges)
    vectors = []
    for e in range(g.m):
        if e in in_tree:
            continue
        x = _tree_path(space, parent, parent_edge, depth, space.heads[e], space.tails[e])
        x[e] += 1
        assert all(val == 0 for val in space.adjoint(x))
        vectors.append(tuple(x))
    basis = LatticeBasis(
        kind="flow",
        space=space,
        vectors=tuple(vectors),
        gram=tuple(tuple(row) for row in gram_matrix(vectors)),
    )
    if default:
        g._cache["flow_basis"] = basis
    return basis


def cut_lattice(g: Multigraph, space: OrientedEdgeSpace | None = None) -> LatticeBasis:
    """Fundamental bond basis: one vector per tree edge, in edge order.

    Removing a tree edge splits the tree in two; the bond vector scores
    every edge +1/-1/0 by whether it crosses into the head side, against it,
    or not at all.
    """
    default = space is None
    if default:
        cached = g._cache.get("cut_basis")
        if cached is not None:
            return cached
        space = boundary_operators(g)
    tree_edges, parent, parent_edge, depth = _tree_adjacency(g)
    children: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        if parent[v] >= 0:
            children[parent[v]].append(v)
    vectors = []
    for f in sorted(tree_edges):
        a, b = g.edges[f]
        # the child endpoint of f roots the component cut off by removing f
        child = a if parent_edge[a] == f else b
        side = [False] * g.n
        stack = [child]
        while stack:
            v = stack.pop()
            side[v] = True
            stack.extend(children[v])
        head_side = side[space.heads[f]]
        y = []
        for e in range(g.m):
            val = int(side[space.heads[e]]) - int(side[space.tails[e]])
            y.append(val if head_side else -val)
        assert y[f] == 1
        vectors.append(tuple(y))
    basis = LatticeBasis(
        kind="cut",
        space=space,
        vectors=tuple(vectors),
        gram=tuple(tuple(row) for row in gram_matrix(vectors)),
    )
    if default:
        g._cache["cut_basis"] = basis
    return basis


def quotient_group(basis: LatticeBasis) -> tuple[int, ...]:
    """Invariant factors of (saturation of the lattice) / lattice via the Gram matrix."""
    from .jacobian import smith_normal_form

    if basis.rank == 0:
        return ()
    _, s, _ = smith_normal_form([list(row) for row in basis.gram])
    return tuple(s[i][i] for i in range(basis.rank))


def lattice_determinant(basis: LatticeBasis) -> int:
    from .linalg import bareiss_determinant

    return bareiss_determinant([list(row) for row in basis.gram])


def abel_map(g: Multigraph, d: Divisor, base: str | None = None) -> tuple[Fraction, ...]:
    """Degree-zero divisor -> point of the flow torus, as fractions in [0, 1).

    Paths from the base to each vertex give an edge vector for d; its
    orthogonal projection onto the flow space, written in the fundamental
    cycle basis, is rational, and reducing each coordinate mod 1 kills the
    lattice ambiguity.  The zero point is hit exactly by the classes of
    borrowing moves, so this is a faithful invariant of the divisor class.
    """
    if d.degree() != 0:
        raise ValueError("the torus point is defined for degree-zero divisors")
    basis = flow_lattice(g)
    if basis.rank == 0:
        return ()
    space = basis.space
    v0 = g.index(base) if base is not None else 0
    tree_edges, parent, parent_edge, depth = _tree_adjacency(g)
    c = [0] * g.m
    for v in range(g.n):
        if d[v] == 0 or v == v0:
            continue
        path = _tree_path(space, parent, parent_edge, depth, v0, v)
        for e in range(g.m):
            c[e] += d[v] * path[e]
    pairings = [dot(c, vec) for vec in basis.vectors]
    t = solve_rational([list(row) for row in basis.gram], pairings)
    return tuple(val % 1 for val in t)


def shortest_vector_norm(
    basis: LatticeBasis, *, radius: int | None = None, cap: int = 600_000
) -> int | None:
    """Minimum squared length over nonzero lattice vectors in a coefficient box.

    Searches integer combinations with coefficients in [-radius, radius].
    A single cycle or bond has fundamental-basis coefficients in {-1, 0, 1}
    (its coordinates are just its entries on the non-tree or tree edges), so
    radius 1 already sees every indicator vector; the default radius is the
    largest of 3, 2, 1 whose box fits under cap, shrinking only when the
    lattice rank is large.
    """
    r = basis.rank
    if r == 0:
        return None
    if radius is None:
        radius = next((c for c in (3, 2, 1) if (2 * c + 1) ** r <= cap), 1)
    if (2 * radius + 1) ** r > cap:
        raise ResourceGuardError("lattice_shortest_vector_scan")
    gram = basis.gram
    best = None
    for combo in itertools.product(range(-radius, radius + 1), repeat=r):
        if not any(combo):
            continue
        # skip mirror images
        first = next(val for val in combo if val)
        if first < 0:
            continue
        norm = 0
        for i, xi in enumerate(combo):
            if xi == 0:
                continue
            row = gram[i]
            norm += xi * sum(xj * row[j] for j, xj in enumerate(combo) if xj)
        if best is None or norm < best:
            best = norm
    return best


def lattice_diagnostics(g: Multigraph, *, radius: int | None = None) -> dict:
    """Structural summary of both lattices for one graph.

    Evenness of an integral lattice here reduces to parity of the Gram
    diagonal, since basis-vector norms even forces all norms even.
    """
    flow = flow_lattice(g)
    cut = cut_lattice(g)
    return {
        "flow_rank": flow.rank,
        "cut_rank": cut.rank,
        "flow_determinant": lattice_determinant(flow) if flow.rank else 1,
        "cut_determinant": lattice_determinant(cut) if cut.rank else 1,
        "flow_min_norm": shortest_vector_norm(flow, radius=radius),
        "cut_min_norm": shortest_vector_norm(cut, radius=radius),
        "flow_even": all(flow.gram[i][i] % 2 == 0 for i in range(flow.rank)),
        "cut_even": all(cut.gram[i][i] % 2 == 0 for i in range(cut.rank)),
    }
