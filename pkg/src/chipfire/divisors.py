"""Divisors, firing scripts and the Laplacian action.

A divisor assigns an integer number of dollars (chips) to each vertex, in the
graph's stable vertex order.  A firing script counts net borrow moves per
vertex: applying the Laplacian to a script gives the divisor difference that
many borrows produce.  Sign convention used throughout the package: a borrow
at v ADDS the Laplacian image of v's indicator to the configuration, a lend
subtracts it.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import GraphConstructionError
from .multigraph import Multigraph


class _IntVector:
    """Shared arithmetic for dense integer coefficient vectors."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(int(c) for c in coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True))

    def __neg__(self):
        return type(self)(-a for a in self.coeffs)

    def __rmul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return type(self)(k * a for a in self.coeffs)

    def __eq__(self, other):
        return type(other) is type(self) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def __repr__(self):
        return f"{type(self).__name__}{self.coeffs!r}"


class Divisor(_IntVector):
    """Integer dollar amounts per vertex."""

    @classmethod
    def zero(cls, n: int) -> "Divisor":
        return cls((0,) * n)

    @classmethod
    def at(cls, n: int, i: int, amount: int = 1) -> "Divisor":
        """The divisor with a single nonzero coefficient."""
        coeffs = [0] * n
        coeffs[i] = amount
        return cls(coeffs)

    def degree(self) -> int:
        return sum(self.coeffs)

    def deg_plus(self) -> int:
        """Sum of the nonnegative coefficients."""
        return sum(c for c in self.coeffs if c > 0)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


class FiringScript(_IntVector):
    """Integer vertex weights fed to the Laplacian action.

    In game terms a positive entry is a net borrow when the script is added
    to a configuration; witnesses that relate an input to an output via
    input - output = action(script) read positive entries as net lends.
    Constant scripts act trivially either way.
    """

    @classmethod
    def zero(cls, n: int) -> "FiringScript":
        return cls((0,) * n)

    def normalized(self) -> "FiringScript":
        """Shift by a constant so the minimum entry is zero."""
        lo = min(self.coeffs)
        return FiringScript(c - lo for c in self.coeffs)


VertexOrder = Sequence[str]


def apply_laplacian(g: Multigraph, f: FiringScript) -> Divisor:
    """Divisor produced by the borrow counts in f.

    Coefficient at v is deg(v) f(v) minus the neighbor sum, counted with edge
    multiplicity.  Constants map to zero, so scripts differing by a constant
    act identically.
    """
    n = g.n
    out = [0] * n
    for v in range(n):
        acc = g.degree(v) * f[v]
        row = g.adjacency[v]
        for w in g.neighbors(v):
            acc -= row[w] * f[w]
        out[v] = acc
    return Divisor(out)


def canonical_divisor(g: Multigraph) -> Divisor:
    """deg(v) - 2 dollars at each vertex; total degree is 2g - 2."""
    return Divisor(g.degree(v) - 2 for v in range(g.n))


def nu_divisor(g: Multigraph, order: VertexOrder) -> Divisor:
    """The benchmark divisor of a linear vertex order.

    Each vertex gets one dollar per edge to an earlier vertex, minus one.
    Its degree is always g - 1, and it never dominates an effective divisor.
    """
    if sorted(order) != sorted(g.vertices):
        raise GraphConstructionError("order must list every vertex exactly once")
    pos = {g.index(v): k for k, v in enumerate(order)}
    coeffs = [-1] * g.n
    for a, b in g.edges:
        later = a if pos[a] > pos[b] else b
        coeffs[later] += 1
    return Divisor(coeffs)


def deg_plus(d: Divisor) -> int:
    return d.deg_plus()


def linearly_equivalent(g: Multigraph, d1: Divisor, d2: Divisor):
    """Witness script f with d1 - d2 = Laplacian(f), or None.

    Equal degree is necessary; beyond that, two divisors are equivalent
    exactly when they share a reduced form, and the reduction scripts
    combine into a witness.  The witness is normalized to minimum zero.
    """
    if d1.degree() != d2.degree():
        return None
    from . import reduction

    base = g.vertices[0]
    r1 = reduction.reduce(g, d1, base)
    r2 = reduction.reduce(g, d2, base)
    if r1.divisor != r2.divisor:
        return None
    # d1 - script1 acts to r, d2 - script2 acts to the same r
    witness = FiringScript(
        a - b for a, b in zip(r1.script.coeffs, r2.script.coeffs)
    ).normalized()
    assert apply_laplacian(g, witness) == d1 - d2
    return witness


# -- JSON interchange ---------------------------------------------------------


def divisor_to_json(g: Multigraph, d: Divisor) -> dict:
    """Sparse mapping vertex -> coefficient, zeros omitted, stable order."""
    return {g.vertices[i]: c for i, c in enumerate(d.coeffs) if c != 0}


def divisor_from_json(g: Multigraph, data: Mapping) -> Divisor:
    if not isinstance(data, Mapping):
        raise GraphConstructionError("divisor JSON must be an object")
    coeffs = [0] * g.n
    for key, value in data.items():
        if not isinstance(value, int) or isinstance(value, bool):
            raise GraphConstructionError(f"coefficient for {key!r} must be an integer")
        coeffs[g.index(key)] = value
    return Divisor(coeffs)
