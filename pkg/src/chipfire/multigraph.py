"""Finite connected multigraphs with parallel edges and no loops.

A Multigraph is an immutable value: an ordered tuple of opaque string vertex
ids plus a tuple of undirected edges given as index pairs.  Edge order is
stable (it follows construction order), which downstream modules rely on for
deterministic orientations and certificates.  Loops and disconnected inputs
are rejected at construction, so every operation may assume a connected
loopless graph.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .errors import GraphConstructionError, ResourceGuardError
from .linalg import bareiss_determinant

INFINITE = math.inf  # sentinel for the edge connectivity of a single vertex


class Multigraph:
    """Connected loopless multigraph over named vertices.

    The vertex order given at construction is the stable order used for
    coefficient vectors, matrices, enumeration and tie-breaking everywhere
    in the package.
    """

    __slots__ = ("vertices", "edges", "_index", "adjacency", "_degrees", "_cache")

    def __init__(self, vertices: Sequence[str], edges: Iterable[tuple[str, str]]):
        vertices = tuple(vertices)
        if not vertices:
            raise GraphConstructionError("a multigraph needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise GraphConstructionError("duplicate vertex ids")
        index = {v: i for i, v in enumerate(vertices)}

        n = len(vertices)
        edge_list: list[tuple[int, int]] = []
        adjacency = [[0] * n for _ in range(n)]
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphConstructionError(f"edge {e!r} is not a pair")
            if u not in index or v not in index:
                raise GraphConstructionError(f"edge {e!r} mentions an unknown vertex")
            if u == v:
                raise GraphConstructionError(f"loop at {u!r} is not allowed")
            i, j = index[u], index[v]
            if i > j:
                i, j = j, i
            edge_list.append((i, j))
            adjacency[i][j] += 1
            adjacency[j][i] += 1

        self.vertices = vertices
        self.edges = tuple(edge_list)
        self._index = index
        self.adjacency = tuple(tuple(row) for row in adjacency)
        self._degrees = tuple(sum(row) for row in adjacency)
        self._cache: dict = {}

        if not self._is_connected():
            raise GraphConstructionError("graph is not connected")

    # -- basic structure ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, vertex: str) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise GraphConstructionError(f"unknown vertex {vertex!r}")

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    def multiplicity(self, u: int, v: int) -> int:
        return self.adjacency[u][v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        key = ("nbrs", v)
        got = self._cache.get(key)
        if got is None:
            got = tuple(u for u, k in enumerate(self.adjacency[v]) if k)
            self._cache[key] = got
        return got

    def _is_connected(self) -> bool:
        n = self.n
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w, k in enumerate(self.adjacency[u]):
                if k and not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    def __eq__(self, other):
        return (
            isinstance(other, Multigraph)
            and self.vertices == other.vertices
            and sorted(self.edges) == sorted(other.edges)
        )

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.edges))))

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m}, vertices={list(self.vertices)!r})"

    # -- traversal helpers -------------------------------------------------

    def bfs(self, source: int) -> tuple[list[int], list[int], list[int]]:
        """Breadth-first order, parent and distance arrays from a vertex.

        Neighbor visits follow the stable index order, so the tree (and every
        tie-break built on it) is deterministic.
        """
        key = ("bfs", source)
        got = self._cache.get(key)
        if got is not None:
            return got
        n = self.n
        parent = [-1] * n
        dist = [-1] * n
        dist[source] = 0
        order = [source]
        head = 0
        while head < len(order):
            u = order[head]
            head += 1
            for w in self.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    order.append(w)
        got = (order, parent, dist)
        self._cache[key] = got
        return got

    def diameter(self) -> int:
        got = self._cache.get("diam")
        if got is None:
            got = max(max(self.bfs(s)[2]) for s in range(self.n))
            self._cache["diam"] = got
        return got

    def spanning_tree(self) -> tuple[list[int], list[int], list[int]]:
        """A deterministic BFS spanning tree.

        Returns (tree_edge_ids, parent_vertex, parent_edge) where parent_edge[v]
        is the edge id linking v to its parent (-1 at the root).  Lowest edge id
        wins whenever several parallel edges could serve.
        """
        got = self._cache.get("tree")
        if got is not None:
            return got
        n = self.n
        parent = [-1] * n
        parent_edge = [-1] * n
        seen = [False] * n
        seen[0] = True
        order = [0]
        head = 0
        tree_edges: list[int] = []
        while head < len(order):
            u = order[head]
            head += 1
            for eid, (a, b) in enumerate(self.edges):
                w = b if a == u else a if b == u else -1
                if w >= 0 and not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    parent_edge[w] = eid
                    tree_edges.append(eid)
                    order.append(w)
        got = (tree_edges, parent, parent_edge)
        self._cache["tree"] = got
        return got

    # -- invariants ---------------------------------------------------------

    def laplacian(self) -> list[list[int]]:
        """Degree matrix minus adjacency matrix; symmetric with zero row sums."""
        n = self.n
        q = [[-self.adjacency[i][j] for j in range(n)] for i in range(n)]
        for i in range(n):
            q[i][i] = self._degrees[i]
        return q

    def reduced_laplacian(self, base: int = 0) -> list[list[int]]:
        """Laplacian with the base row and column deleted."""
        q = self.laplacian()
        return [
            [q[i][j] for j in range(self.n) if j != base]
            for i in range(self.n)
            if i != base
        ]

    def genus(self) -> int:
        """Cycle rank: edges - vertices + 1 (nonnegative since connected)."""
        return self.m - self.n + 1

    def spanning_tree_count(self) -> int:
        """Number of spanning trees, via the determinant of the reduced
        Laplacian.  Exact at any size that fits in memory."""
        got = self._cache.get("kappa")
        if got is None:
            got = bareiss_determinant(self.reduced_laplacian(0))
            assert got >= 1
            self._cache["kappa"] = got
        return got

    def edge_connectivity(self):
        """Minimum number of edges whose removal disconnects the graph.

        Exhaustive scan over vertex bipartitions, so it is guarded at 20
        vertices.  A single vertex cannot be disconnected; that case returns
        the INFINITE sentinel (never used in arithmetic).
        """
        n = self.n
        if n == 1:
            return INFINITE
        if n > 20:
            raise ResourceGuardError("edge_connectivity_bipartition_scan")
        got = self._cache.get("lambda")
        if got is not None:
            return got
        best = None
        # vertex 0 stays on one side; masks pick the other side
        for mask in range(1, 1 << (n - 1)):
            side = [i + 1 for i in range(n - 1) if mask >> i & 1]
            crossing = 0
            for v in side:
                row = self.adjacency[v]
                crossing += sum(row[u] for u in range(n) if not (u != 0 and (mask >> (u - 1)) & 1))
            if best is None or crossing < best:
                best = crossing
        self._cache["lambda"] = best
        return best

    def girth(self):
        """Length of a shortest cycle, or None for a tree.

        A parallel pair is a 2-cycle.  Otherwise the shortest cycle through a
        multiplicity-one edge is one more than the distance between its ends
        with that edge removed.
        """
        if self.genus() == 0:
            return None
        got = self._cache.get("girth")
        if got is not None:
            return got
        n = self.n
        if any(self.adjacency[i][j] >= 2 for i in range(n) for j in range(i + 1, n)):
            self._cache["girth"] = 2
            return 2
        best = None
        seen_pairs = set()
        for a, b in self.edges:
            if (a, b) in seen_pairs:
                continue
            seen_pairs.add((a, b))
            dist = self._bfs_distance_avoiding_edge(a, b)
            if dist is not None and (best is None or dist + 1 < best):
                best = dist + 1
        self._cache["girth"] = best
        return best

    def _bfs_distance_avoiding_edge(self, source: int, target: int):
        dist = {source: 0}
        queue = [source]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in self.neighbors(u):
                if (u, w) in ((source, target), (target, source)):
                    continue
                if w not in dist:
                    dist[w] = dist[u] + 1
                    if w == target:
                        return dist[w]
                    queue.append(w)
        return dist.get(target)

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        color[0] = 0
        queue = [0]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in self.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
        return True

    def is_eulerian(self) -> bool:
        # connected is guaranteed, so even degrees suffice
        return all(d % 2 == 0 for d in self._degrees)

    # -- bridges and contraction --------------------------------------------

    def bridges(self) -> list[int]:
        """Edge ids whose removal disconnects the graph.

        Iterative lowlink search over the edge list; a parallel copy acts as
        a back edge, so multi-edges are never reported.
        """
        n = self.n
        incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (a, b) in enumerate(self.edges):
            incident[a].append((eid, b))
            incident[b].append((eid, a))
        disc = [-1] * n
        low = [0] * n
        out: list[int] = []
        timer = 0
        stack: list[tuple[int, int, int]] = [(0, -1, 0)]  # vertex, entry edge, iterator pos
        while stack:
            v, entry_edge, pos = stack.pop()
            if pos == 0:
                disc[v] = low[v] = timer
                timer += 1
            advanced = False
            while pos < len(incident[v]):
                eid, w = incident[v][pos]
                pos += 1
                if eid == entry_edge:
                    continue
                if disc[w] < 0:
                    stack.append((v, entry_edge, pos))
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced and entry_edge >= 0:
                # retreat: fold the child's lowlink into the parent
                a, b = self.edges[entry_edge]
                parent = a if disc[a] < disc[b] else b
                child = b if parent == a else a
                low[parent] = min(low[parent], low[child])
                if low[child] > disc[parent]:
                    out.append(entry_edge)
        return sorted(out)

    def contract_bridges(self) -> tuple["Multigraph", dict[str, str]]:
        """Contract every bridge; returns the bridgeless graph and the vertex map.

        Merged classes are named after their lowest-index member, and the new
        stable order follows those representatives.  Contracting a tree yields
        a single vertex.
        """
        bridge_set = set(self.bridges())
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for eid in bridge_set:
            a, b = self.edges[eid]
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        reps = sorted({find(i) for i in range(self.n)})
        rep_name = {r: self.vertices[r] for r in reps}
        mapping = {self.vertices[i]: rep_name[find(i)] for i in range(self.n)}
        new_edges = []
        for eid, (a, b) in enumerate(self.edges):
            if eid in bridge_set:
                continue
            ra, rb = find(a), find(b)
            assert ra != rb, "a non-bridge edge cannot collapse to a loop"
            new_edges.append((rep_name[ra], rep_name[rb]))
        contracted = Multigraph([rep_name[r] for r in reps], new_edges)
        return contracted, mapping


# -- JSON interchange -------------------------------------------------------


def graph_to_json(g: Multigraph) -> dict:
    """{"vertices": [...], "edges": [[u, v], ...]} with parallel edges repeated."""
    return {
        "vertices": list(g.vertices),
        "edges": [[g.vertices[a], g.vertices[b]] for a, b in g.edges],
    }


def graph_from_json(data: Mapping) -> Multigraph:
    if not isinstance(data, Mapping):
        raise GraphConstructionError("graph JSON must be an object")
    try:
        vertices = data["vertices"]
        edges = data["edges"]
    except (KeyError, TypeError):
        raise GraphConstructionError('graph JSON needs "vertices" and "edges"')
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphConstructionError("vertices must be a list of strings")
    if not isinstance(edges, list):
        raise GraphConstructionError("edges must be a list of pairs")
    pairs = []
    for e in edges:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise GraphConstructionError(f"edge {e!r} is not a pair")
        pairs.append((e[0], e[1]))
    return Multigraph(vertices, pairs)
