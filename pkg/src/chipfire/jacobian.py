"""The critical group of a graph and the maps into it.

The degree-zero divisor classes form a finite abelian group whose order is
the number of spanning trees.  Smith normal form of the reduced Laplacian
provides both the invariant factor decomposition and a change of basis that
sends any degree-zero divisor to canonical coordinates, which makes class
arithmetic, the one-vertex embedding and its symmetric powers all exactly
computable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Mapping

from .divisors import Divisor
from .errors import ResourceGuardError
from .linalg import identity_matrix, mat_mul, mat_vec
from .multigraph import Multigraph


def smith_normal_form(matrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Diagonalize an integer matrix by unimodular row and column moves.

    Returns (U, S, V) with U * matrix * V = S, U and V unimodular, and the
    diagonal of S a nonnegative divisibility chain.  Pivoting always grabs
    the smallest nonzero entry, which keeps intermediate values tame at desk
    scale.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [[int(x) for x in row] for row in matrix]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (
                    pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])
                ):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(pivot[0], t)
        if pivot[1] != t:
            swap_cols(pivot[1], t)
        if a[t][t] < 0:
            negate_row(t)

        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:
                        # remainder becomes the new, smaller pivot
                        swap_rows(i, t)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(j, t)
                        dirty = True
            if not dirty:
                break

        d = a[t][t]
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % d != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            # fold the offending row in and redo this pivot, shrinking it to a gcd
            add_row(t, offender, 1)
            continue
        t += 1

    assert mat_mul(mat_mul(u, [list(r) for r in matrix]), v) == a
    return u, a, v


@dataclass(frozen=True)
class JacElement:
    """Group element in canonical coordinates: entry i lives mod factor i."""

    coords: tuple[int, ...]
    factors: tuple[int, ...]

    def __add__(self, other: "JacElement") -> "JacElement":
        if self.factors != other.factors:
            raise ValueError("elements of different groups")
        return JacElement(
            tuple((a + b) % f for a, b, f in zip(self.coords, other.coords, self.factors)),
            self.factors,
        )

    def __neg__(self) -> "JacElement":
        return JacElement(
            tuple((-a) % f for a, f in zip(self.coords, self.factors)), self.factors
        )

    def __sub__(self, other: "JacElement") -> "JacElement":
        return self + (-other)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass(frozen=True)
class JacobianStructure:
    """Invariant factor decomposition of the degree-zero class group.

    invariant_factors keeps the full divisibility chain including leading
    ones; display and comparisons of group shape use nontrivial_factors.
    transform is the unimodular row change taking a coefficient vector (base
    coordinate dropped) to canonical coordinates.
    """

    graph: Multigraph
    base: str
    invariant_factors: tuple[int, ...]
    transform: tuple[tuple[int, ...], ...]

    @property
    def nontrivial_factors(self) -> tuple[int, ...]:
        return tuple(f for f in self.invariant_factors if f != 1)

    @property
    def order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    @property
    def genus(self) -> int:
        return self.graph.genus()

    def zero(self) -> JacElement:
        return JacElement((0,) * len(self.invariant_factors), self.invariant_factors)

    def __repr__(self):
        shape = " x ".join(f"Z/{f}" for f in self.nontrivial_factors) or "0"
        return f"JacobianStructure({shape}, base={self.base!r})"


def jacobian_structure(g: Multigraph, base: str | None = None) -> JacobianStructure:
    """Invariant factors and canonical transform from the reduced Laplacian.

    The factor multiset does not depend on the base vertex (property-tested
    across every base); the transform does, and class coordinates are always
    relative to the structure they came from.
    """
    base = base if base is not None else g.vertices[0]
    v0 = g.index(base)
    reduced = g.reduced_laplacian(v0)
    u, s, _ = smith_normal_form(reduced)
    factors = tuple(s[i][i] for i in range(len(reduced)))
    assert all(f >= 1 for f in factors)
    return JacobianStructure(
        graph=g,
        base=base,
        invariant_factors=factors,
        transform=tuple(tuple(row) for row in u),
    )


def divisor_class(js: JacobianStructure, d: Divisor) -> JacElement:
    """Canonical coordinates of a degree-zero divisor's class."""
    if d.degree() != 0:
        raise ValueError("only degree-zero divisors define group elements")
    g = js.graph
    v0 = g.index(js.base)
    x = [d[i] for i in range(g.n) if i != v0]
    y = mat_vec([list(r) for r in js.transform], x) if x else []
    coords = tuple(val % f for val, f in zip(y, js.invariant_factors))
    return JacElement(coords, js.invariant_factors)


def abel_jacobi(js: JacobianStructure, vertex: str) -> JacElement:
    """Class of (vertex) - (base): the one-vertex embedding into the group."""
    g = js.graph
    d = Divisor.at(g.n, g.index(vertex)) - Divisor.at(g.n, g.index(js.base))
    return divisor_class(js, d)


def symmetric_power_map(js: JacobianStructure, k: int, *, cap: int = 200_000) -> dict:
    """Image statistics of degree-k effective divisors inside the group.

    Enumerates every effective divisor of degree k, maps it through the
    base-anchored embedding, and reports image size, injectivity (image as
    large as the domain) and surjectivity (image fills the group).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    g = js.graph
    n = g.n
    domain = comb(n + k - 1, k)
    if domain > cap:
        raise ResourceGuardError("symmetric_power_enumeration")
    v0 = g.index(js.base)
    image = set()
    for combo in itertools.combinations_with_replacement(range(n), k):
        coeffs = [0] * n
        for v in combo:
            coeffs[v] += 1
        coeffs[v0] -= k
        image.add(divisor_class(js, Divisor(coeffs)).coords)
    return {
        "k": k,
        "domain_size": domain,
        "image_size": len(image),
        "injective": len(image) == domain,
        "surjective": len(image) == js.order,
        "group_order": js.order,
    }


def pushforward(
    g: Multigraph, target: Multigraph, vertex_map: Mapping[str, str], d: Divisor
) -> Divisor:
    """Transport a divisor along a vertex map, summing merged coefficients.

    The map must cover every source vertex and land inside the target graph.
    Degrees are preserved; along a bridge contraction this induces a group
    isomorphism on degree-zero classes.
    """
    if set(vertex_map.keys()) != set(g.vertices):
        raise ValueError("vertex map must cover exactly the source vertices")
    coeffs = [0] * target.n
    for v, amount in zip(g.vertices, d.coeffs):
        image = vertex_map[v]
        if image not in target._index:
            raise ValueError(f"vertex map sends {v!r} outside the target graph")
        coeffs[target.index(image)] += amount
    return Divisor(coeffs)
