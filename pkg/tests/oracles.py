"""Independent reference implementations used to pin expected values.

Everything here is written from the definitions, not from the library's
algorithms: determinants by cofactor expansion, tree counts by subset
enumeration, equivalence by exact linear solves, rank by the raw
quantifier.  Slow on purpose; only run on small inputs.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from chipfire import Divisor, Multigraph


def det_cofactor(m) -> int:
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    total = 0
    for j, head in enumerate(m[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += (-1) ** j * head * det_cofactor(minor)
    return total


def _edges_connected(n: int, edge_ids, edges) -> bool:
    """Do the given edges alone connect all n vertices?"""
    adj = [[] for _ in range(n)]
    for e in edge_ids:
        a, b = edges[e]
        adj[a].append(b)
        adj[b].append(a)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def spanning_trees_brute(g: Multigraph) -> int:
    if g.n == 1:
        return 1
    count = 0
    for subset in combinations(range(g.m), g.n - 1):
        if _edges_connected(g.n, subset, g.edges):
            count += 1
    return count


def bridges_brute(g: Multigraph) -> set[int]:
    out = set()
    for e in range(g.m):
        rest = [i for i in range(g.m) if i != e]
        if not _edges_connected(g.n, rest, g.edges):
            out.add(e)
    return out


def edge_connectivity_brute(g: Multigraph) -> int:
    assert g.n >= 2
    for k in range(0, g.m + 1):
        for removed in combinations(range(g.m), k):
            rest = [i for i in range(g.m) if i not in removed]
            if not _edges_connected(g.n, rest, g.edges):
                return k
    raise AssertionError("a finite graph always has a disconnecting edge set")


def girth_brute(g: Multigraph):
    """Smallest edge subset forming a cycle: every touched vertex has degree
    2 within the subset and the subset is connected."""
    best = None
    for k in range(2 if g.m >= 2 else 1, g.m + 1):
        if best is not None:
            break
        for subset in combinations(range(g.m), k):
            deg = {}
            for e in subset:
                a, b = g.edges[e]
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            if any(c != 2 for c in deg.values()):
                continue
            touched = sorted(deg)
            index = {v: i for i, v in enumerate(touched)}
            local = [(index[g.edges[e][0]], index[g.edges[e][1]]) for e in subset]
            if _edges_connected(len(touched), range(len(local)), local):
                best = k
                break
    return best


def solve_fraction(matrix, rhs):
    """Gaussian elimination over fractions; None when singular."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def equivalent_brute(g: Multigraph, d1: Divisor, d2: Divisor) -> bool:
    """d1 ~ d2 iff the Laplacian system has an integer solution with f(0) = 0."""
    if d1.degree() != d2.degree():
        return False
    diff = (d1 - d2).coeffs
    if g.n == 1:
        return diff[0] == 0
    reduced = [row[1:] for row in g.laplacian()[1:]]
    sol = solve_fraction(reduced, list(diff[1:]))
    if sol is None or any(x.denominator != 1 for x in sol):
        return False
    f = [0] + [int(x) for x in sol]
    moved = [
        g.degree(v) * f[v] - sum(g.adjacency[v][w] * f[w] for w in range(g.n))
        for v in range(g.n)
    ]
    return list(diff) == moved


def effective_divisors(n: int, degree: int):
    if degree < 0:
        return
    for combo in combinations_with_replacement(range(n), degree):
        coeffs = [0] * n
        for v in combo:
            coeffs[v] += 1
        yield Divisor(coeffs)


def winnable_brute(g: Multigraph, d: Divisor) -> bool:
    return any(equivalent_brute(g, d, e) for e in effective_divisors(g.n, d.degree()))


def rank_brute(g: Multigraph, d: Divisor) -> int:
    """The raw quantifier: largest s with every degree-s removal survivable."""
    if not winnable_brute(g, d):
        return -1
    s = 0
    while True:
        for e in effective_divisors(g.n, s + 1):
            if not winnable_brute(g, d - e):
                return s
        s += 1


def snf_diagonal_brute(matrix) -> list[int]:
    """Divisibility chain from gcds of k-by-k minors."""
    from math import gcd

    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    previous = 1
    out = []
    for k in range(1, min(rows, cols) + 1):
        g_k = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                minor = [[matrix[r][c] for c in csel] for r in rsel]
                g_k = gcd(g_k, det_cofactor(minor))
        if g_k == 0:
            out.extend([0] * (min(rows, cols) - len(out)))
            break
        out.append(g_k // previous)
        previous = g_k
    return out
