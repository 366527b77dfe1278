"""Matroids from graphs, subspaces and uniform parameters; characteristic,
reduced characteristic, and chromatic polynomials; Euler-characteristic sums.

The characteristic polynomial is computed two independent ways: a
deletion-contraction recursion (fast path) and the rank-sum over all
subsets of the ground set (oracle).  They are compared against each other
in the test suite on every matroid of the corpus.
"""

from fractions import Fraction
from itertools import combinations

from .exactmath import DomainError, UnivariatePolynomial, matrix_rank


class Graph:
    """Undirected multigraph; vertices 1..v, loops and parallel edges allowed."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count, edges):
        edges = [tuple(e) for e in edges]
        for u, v in edges:
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise DomainError(f"edge ({u},{v}) outside vertex range")
        self.vertex_count = vertex_count
        self.edges = tuple(edges)

    def component_count(self):
        parent = list(range(self.vertex_count + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(1, self.vertex_count + 1)})


def cycle_graph(k):
    return Graph(k, [(i, i % k + 1) for i in range(1, k + 1)])


def complete_graph(k):
    return Graph(k, list(combinations(range(1, k + 1), 2)))


def parse_graph(text):
    """Parse the plain graph format: a "v e" header line, then e lines "i j"
    with 1-based vertex indices (loops written "i i")."""
    tokens = text.split()
    if len(tokens) < 2:
        raise DomainError("graph file needs a 'v e' header")
    v, e = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * e:
        raise DomainError(f"expected {e} edges, found {(len(tokens) - 2) // 2}")
    edges = [
        (int(tokens[2 + 2 * k]), int(tokens[3 + 2 * k])) for k in range(e)
    ]
    return Graph(v, edges)


class Matroid:
    """Ground set {0..ground_size-1} with a rank oracle and a realization tag."""

    __slots__ = ("ground_size", "_rank", "tag")

    def __init__(self, ground_size, rank_oracle, tag):
        self.ground_size = ground_size
        self._rank = rank_oracle
        self.tag = tag

    def rank(self, subset):
        return self._rank(frozenset(subset))

    def full_rank(self):
        return self.rank(range(self.ground_size))

    def is_loop(self, element):
        return self.rank({element}) == 0

    def has_loop(self):
        return any(self.is_loop(e) for e in range(self.ground_size))


def matroid_from_graph(g):
    """Graphic matroid: the rank of an edge set is (#touched vertices) minus
    (#components of the subgraph it spans)."""
    edges = g.edges

    def rank(subset):
        chosen = [edges[i] for i in subset]
        touched = {v for e in chosen for v in e}
        parent = {v: v for v in touched}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in chosen:
            parent[find(u)] = find(v)
        components = len({find(v) for v in touched})
        return len(touched) - components

    return Matroid(len(edges), rank, ("graphic", g))


def matroid_from_subspace(rows):
    """Matroid on column indices 1..N of a subspace spanned by the given
    rows: a set is independent when the corresponding coordinate vectors
    stay independent modulo the subspace."""
    rows = [tuple(Fraction(x) for x in row) for row in rows]
    if not rows:
        raise DomainError("need at least one row (possibly zero) to fix N")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DomainError("rows of unequal length")
    base_rank = matrix_rank(rows)

    def rank(subset):
        unit_rows = [
            tuple(1 if j == i else 0 for j in range(ncols)) for i in sorted(subset)
        ]
        return matrix_rank(rows + unit_rows) - base_rank

    return Matroid(ncols, rank, ("linear", tuple(rows)))


def uniform_matroid(r, n):
    if not 0 <= r <= n:
        raise DomainError("uniform matroid needs 0 <= r <= n")

    def rank(subset):
        return min(len(subset), r)

    return Matroid(n, rank, ("uniform", (r, n)))


def characteristic_polynomial(m, method="deletion_contraction"):
    """Characteristic polynomial of a matroid; identically zero when the
    matroid has a loop."""
    if method == "whitney":
        return _charpoly_whitney(m)
    if method == "deletion_contraction":
        ground = frozenset(range(m.ground_size))
        return _charpoly_dc(m._rank, ground)
    raise DomainError(f"unknown method {method!r}")


def _charpoly_whitney(m):
    full = m.full_rank()
    coeffs = [0] * (full + 1)
    elements = list(range(m.ground_size))
    for size in range(m.ground_size + 1):
        sign = -1 if size % 2 else 1
        for subset in combinations(elements, size):
            coeffs[full - m.rank(subset)] += sign
    return UnivariatePolynomial(coeffs)


def _charpoly_dc(rank, ground):
    if not ground:
        return UnivariatePolynomial([1])
    e = min(ground)
    if rank(frozenset({e})) == 0:
        return UnivariatePolynomial()
    rest = ground - {e}
    if rank(rest) < rank(ground):
        # coloop: contributes a factor (x - 1)
        return UnivariatePolynomial([-1, 1]) * _charpoly_dc(_contract(rank, e), rest)
    return _charpoly_dc(rank, rest) - _charpoly_dc(_contract(rank, e), rest)


def _contract(rank, e):
    def contracted(subset):
        return rank(subset | {e}) - rank(frozenset({e}))

    return contracted


def reduced_characteristic_coefficients(m):
    """Unsigned coefficients, top degree first, of the characteristic
    polynomial divided exactly by (x - 1)."""
    if m.full_rank() < 1:
        raise DomainError("matroid must have rank >= 1")
    chi = characteristic_polynomial(m)
    quotient, remainder = chi.divide_by_linear(1)
    if remainder != 0 or chi.is_zero():
        raise DomainError("chi_M(1) != 0")
    out = []
    for c in reversed(quotient.coefficients):
        if c.denominator != 1:
            raise RuntimeError("non-integer reduced coefficient")
        out.append(abs(c.numerator))
    return tuple(out)


def chromatic_polynomial(g):
    """Chromatic polynomial of a graph: q^(#components) times the
    characteristic polynomial of its graphic matroid."""
    chi = characteristic_polynomial(matroid_from_graph(g))
    shift = g.component_count()
    out = [0] * shift + list(chi.coefficients)
    return UnivariatePolynomial(out)


def euler_characteristic_complement(nu):
    """Alternating sum of projective degrees: the topological Euler
    characteristic of the complement of the defining hypersurface."""
    return sum((-1) ** i * v for i, v in enumerate(nu))
