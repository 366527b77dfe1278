"""Affine cell data for the space of complete quadrics.

A generic one-parameter subgroup of the diagonal torus decomposes CQ_n
into affine cells indexed by 2-permutations: ordered partitions of
{1..n} into blocks of size one or two.  The dimension of a cell is the
weight of its 2-permutation, and each cell is parametrized by a
unitriangular matrix X and a symmetric monomial matrix Y with some
entries forced to zero.

Points of CQ_3 are pairs (A, B) of symmetric matrices with A.B scalar;
`verify_cell_point` reconstructs the pair from cell coordinates and
checks that relation exactly.
"""

from fractions import Fraction
from itertools import combinations

from .exactmath import DomainError, MultivariatePolynomial, binomial

_ONE = MultivariatePolynomial.constant(1)
_ZERO = MultivariatePolynomial()


class TwoPermutation:
    """Ordered partition of {1..n} into blocks of size 1 or 2; block j is
    the preimage of j under the underlying map {1..n} -> {1..k}."""

    __slots__ = ("n", "blocks")

    def __init__(self, blocks):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        seen = set()
        for b in blocks:
            if len(b) not in (1, 2) or len(set(b)) != len(b):
                raise DomainError(f"block {b} must have one or two elements")
            seen.update(b)
        n = sum(len(b) for b in blocks)
        if seen != set(range(1, n + 1)):
            raise DomainError("blocks must partition 1..n")
        self.n = n
        self.blocks = blocks

    @classmethod
    def parse(cls, text):
        """Parse the bar syntax used in tables, e.g. "2|13"."""
        blocks = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if not chunk:
                raise DomainError(f"empty block in {text!r}")
            blocks.append(tuple(int(ch) for ch in chunk))
        return cls(blocks)

    def __str__(self):
        return "|".join("".join(str(e) for e in b) for b in self.blocks)

    def __repr__(self):
        return f"TwoPermutation.parse({str(self)!r})"

    def __eq__(self, other):
        return isinstance(other, TwoPermutation) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def block_of(self, element):
        """1-based index of the block containing the element."""
        for j, b in enumerate(self.blocks, start=1):
            if element in b:
                return j
        raise DomainError(f"element {element} not covered")


def enumerate_two_permutations(n):
    """All ordered partitions of {1..n} into blocks of size <= 2, in
    lexicographic order of their block sequences."""
    if n < 1:
        raise DomainError("need n >= 1")
    out = []

    def extend(remaining, blocks):
        if not remaining:
            out.append(TwoPermutation(blocks))
            return
        elems = sorted(remaining)
        for size in (1, 2):
            for block in combinations(elems, size):
                extend(remaining - set(block), blocks + [block])

    extend(set(range(1, n + 1)), [])
    out.sort(key=lambda s: s.blocks)
    return out


def weight(sigma):
    """Dimension of the cell: the number of non-inversions of the block map
    plus the number of ascents of block maxima."""
    n = sigma.n
    block_index = {e: sigma.block_of(e) for e in range(1, n + 1)}
    part1 = sum(
        1
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if block_index[i] <= block_index[j]
    )
    maxima = [max(b) for b in sigma.blocks]
    part2 = sum(1 for j in range(len(maxima) - 1) if maxima[j] < maxima[j + 1])
    return part1 + part2


def chow_group_dimensions(n):
    """Histogram of cell dimensions: entry m counts the cells of dimension
    m, which is the rank of the m-th Chow group."""
    if n < 2:
        raise DomainError("need n >= 2")
    hist = [0] * binomial(n + 1, 2)
    for sigma in enumerate_two_permutations(n):
        hist[weight(sigma)] += 1
    return hist


def one_parameter_exponents(n):
    """A concrete choice of torus exponents d_i = 4^i; the pairwise sums
    d_i + d_j (i <= j) must be strictly increasing in the block order
    (1,1) < (1,2) < (2,2) < (1,3) < ..., which pins the cell decomposition."""
    if not 1 <= n <= 16:
        raise DomainError("exponent chain checked only for n <= 16")
    d = [4**i for i in range(1, n + 1)]
    chain = [d[i - 1] + d[j - 1] for j in range(1, n + 1) for i in range(1, j + 1)]
    if any(x >= y for x, y in zip(chain, chain[1:])):
        raise RuntimeError("exponent chain violated")
    return tuple(d)


def _x_name(i, j, n):
    return f"x{i}{j}" if n <= 9 else f"x{i}_{j}"


class CellParametrization:
    """Symbolic coordinates of one cell.

    X is lower unitriangular in the variables x_ij (i < j, entry at row j,
    column i), with x_ij = 0 exactly when the block of i comes after the
    block of j.  Y is symmetric with monomial entries in y_1..y_{k-1}
    (projectively normalized so the first block's entry is 1), with y_j = 0
    exactly when the maxima of blocks j and j+1 descend.
    """

    __slots__ = (
        "sigma",
        "X",
        "Y",
        "Y_symbolic",
        "companion",
        "free_x",
        "free_y",
        "forced_x",
        "forced_y",
        "free_variable_count",
    )

    def __init__(self, sigma):
        n = sigma.n
        k = len(sigma.blocks)

        self.sigma = sigma
        block_index = {e: sigma.block_of(e) for e in range(1, n + 1)}

        self.forced_x = tuple(
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if block_index[i] > block_index[j]
        )
        maxima = [max(b) for b in sigma.blocks]
        self.forced_y = tuple(
            j for j in range(1, k) if maxima[j - 1] > maxima[j]
        )

        forced_x = set(self.forced_x)
        x_rows = []
        free_x = []
        for r in range(1, n + 1):
            row = []
            for c in range(1, n + 1):
                if r == c:
                    row.append(_ONE)
                elif c < r:
                    if (c, r) in forced_x:
                        row.append(_ZERO)
                    else:
                        name = _x_name(c, r, n)
                        free_x.append(name)
                        row.append(MultivariatePolynomial.variable(name))
                else:
                    row.append(_ZERO)
            x_rows.append(tuple(row))
        self.X = tuple(x_rows)
        self.free_x = tuple(free_x)

        # Symmetric monomial matrix: the t-th block carries y_1 ... y_{t-1}.
        y_entries = {}
        for t, block in enumerate(sigma.blocks, start=1):
            mono = _ONE
            for u in range(1, t):
                mono = mono * MultivariatePolynomial.variable(f"y{u}")
            if len(block) == 1:
                y_entries[(block[0], block[0])] = mono
            else:
                y_entries[(block[0], block[1])] = mono
                y_entries[(block[1], block[0])] = mono
        y_sym = tuple(
            tuple(y_entries.get((r, c), _ZERO) for c in range(1, n + 1))
            for r in range(1, n + 1)
        )
        self.Y_symbolic = y_sym

        kill = {f"y{j}": 0 for j in self.forced_y}
        self.Y = tuple(
            tuple(entry.substitute(kill) for entry in row) for row in y_sym
        )
        self.free_y = tuple(
            f"y{j}" for j in range(1, k) if j not in self.forced_y
        )
        self.free_variable_count = len(self.free_x) + len(self.free_y)

        self.companion = tuple(
            tuple(entry.substitute(kill) for entry in row)
            for row in _companion_matrix(y_sym)
        )

    def free_variables(self):
        return self.free_x + self.free_y


def cell_parametrization(sigma):
    return CellParametrization(sigma)


def _transpose(a):
    return tuple(tuple(row[c] for row in a) for c in range(len(a)))


def _determinant(a):
    size = len(a)
    if size == 1:
        return a[0][0]
    total = _ZERO
    for c in range(size):
        if a[0][c].is_zero():
            continue
        minor = tuple(row[:c] + row[c + 1 :] for row in a[1:])
        term = a[0][c] * _determinant(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def _adjugate(a):
    size = len(a)
    if size == 1:
        return ((_ONE,),)
    cof = [[_ZERO] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            minor = tuple(
                tuple(a[i][j] for j in range(size) if j != c)
                for i in range(size)
                if i != r
            )
            term = _determinant(minor)
            cof[r][c] = term if (r + c) % 2 == 0 else -term
    return _transpose(tuple(tuple(row) for row in cof))


def _companion_matrix(y_sym):
    """Adjugate of the symbolic Y with the common monomial (and sign of the
    first nonzero entry) cleared; pairs with Y so that the product of the
    reconstructed matrices is scalar."""
    adj = _adjugate(y_sym)
    gcd = None
    sign = None
    for row in adj:
        for entry in row:
            if entry.is_zero():
                continue
            expo = entry.monomial_gcd()
            if gcd is None:
                gcd = expo
                sign = 1 if entry.leading_coefficient() > 0 else -1
            else:
                gcd = {
                    v: min(e, expo.get(v, 0)) for v, e in gcd.items() if v in expo
                }
                gcd = {v: e for v, e in gcd.items() if e > 0}
    if gcd is None:
        return adj
    return tuple(
        tuple(entry.divide_by_monomial(gcd, sign) for entry in row) for row in adj
    )


def _numeric(matrix, values):
    return tuple(
        tuple(entry.evaluate(values) if not entry.is_zero() else Fraction(0) for entry in row)
        for row in matrix
    )


def cell_matrices(sigma, values):
    """Numeric pair (A, B) on the cell of a 2-permutation of {1,2,3}.

    A = X Y X^t and B = adj(X)^t Ytilde adj(X), where Ytilde is the cleared
    adjugate companion of Y; the pair construction is only pinned down for
    n = 3."""
    if sigma.n != 3:
        raise DomainError("companion matrix construction only specified for n=3")
    param = cell_parametrization(sigma)
    expected = set(param.free_variables())
    given = set(values)
    if expected != given:
        raise DomainError(
            f"free variables are {sorted(expected)}, got {sorted(given)}"
        )
    vals = {name: Fraction(v) for name, v in values.items()}
    if any(v == 0 for v in vals.values()):
        raise DomainError("assignments must be nonzero")

    x_num = _numeric(param.X, vals)
    y_num = _numeric(param.Y, vals)
    companion_num = _numeric(param.companion, vals)
    adj_x = _adjugate_numeric(x_num)
    a = _mat_mul_numeric(_mat_mul_numeric(x_num, y_num), _transpose(x_num))
    b = _mat_mul_numeric(
        _mat_mul_numeric(_transpose(adj_x), companion_num), adj_x
    )
    return a, b


def _mat_mul_numeric(a, b):
    size = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(size)) for c in range(size))
        for r in range(size)
    )


def _adjugate_numeric(a):
    size = len(a)
    if size == 1:
        return ((Fraction(1),),)
    cof = [[Fraction(0)] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            minor = [
                [a[i][j] for j in range(size) if j != c]
                for i in range(size)
                if i != r
            ]
            det = _det_numeric(minor)
            cof[r][c] = det if (r + c) % 2 == 0 else -det
    return _transpose(tuple(tuple(row) for row in cof))


def _det_numeric(a):
    size = len(a)
    if size == 1:
        return a[0][0]
    total = Fraction(0)
    for c in range(size):
        if a[0][c] == 0:
            continue
        minor = [row[:c] + row[c + 1 :] for row in a[1:]]
        term = a[0][c] * _det_numeric(minor)
        total += term if c % 2 == 0 else -term
    return total


def verify_cell_point(sigma, values):
    """Check that the reconstructed pair (A, B) satisfies A.B = lambda I
    for some scalar lambda (possibly zero)."""
    a, b = cell_matrices(sigma, values)
    product = _mat_mul_numeric(a, b)
    lam = product[0][0]
    size = len(product)
    for r in range(size):
        for c in range(size):
            expected = lam if r == c else Fraction(0)
            if product[r][c] != expected:
                return False
    return True


def verify_generic_point(sigma, values):
    """Weaker membership check available for any n: when the reconstructed
    primary matrix A is invertible, the full tuple of its compounds lies on
    the inversion graph by construction.  Returns True exactly in that case;
    False is inconclusive (the point may sit in the boundary)."""
    param = cell_parametrization(sigma)
    expected = set(param.free_variables())
    if expected != set(values):
        raise DomainError(
            f"free variables are {sorted(expected)}, got {sorted(values)}"
        )
    vals = {name: Fraction(v) for name, v in values.items()}
    if any(v == 0 for v in vals.values()):
        raise DomainError("assignments must be nonzero")
    x_num = _numeric(param.X, vals)
    y_num = _numeric(param.Y, vals)
    a = _mat_mul_numeric(_mat_mul_numeric(x_num, y_num), _transpose(x_num))
    return _det_numeric([list(row) for row in a]) != 0
