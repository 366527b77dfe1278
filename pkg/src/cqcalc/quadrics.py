"""Intersection products on the space of complete quadrics CQ_n.

CQ_n compactifies the graph of matrix inversion on symmetric n x n
matrices; its dimension is C(n+1,2) - 1.  The degree-one classes come in
two families: hyperplane pullbacks L_1..L_{n-1} (a basis) and degeneration
divisors S_1..S_{n-1}, related by S_i = -L_{i-1} + 2 L_i - L_{i+1} with
L_0 = L_n = 0.

A top-degree monomial in these classes is integrated by rewriting it until
only the locus of completely degenerate quadrics remains.  That locus is a
complete flag variety, where the restriction of L_i is twice the Schubert
divisor of the transposition s_{n-i} (the extra 2 comes from the rank-one
locus sitting in its ambient space by a quadratic Veronese map), so the
value there is 2^(sum of exponents) times a Monk-rule coefficient.

For n = 2 the space is the plane of binary quadrics and the same relations
hold with S_1 = 2 L_1, so no special casing is needed.

Everything here is pure and deterministic; the memo tables are the only
shared state and individual dict operations are atomic, so concurrent
callers always read complete entries.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactmath import (
    DomainError,
    UnivariatePolynomial,
    binomial,
    interpolate,
    solve_linear_system,
)
from .schubert import flag_integral


def cq_dimension(n):
    return binomial(n + 1, 2) - 1


class DivisorClass:
    """Degree-one class on CQ_n, stored in the basis L_1..L_{n-1}."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if n < 2 or len(coeffs) != n - 1:
            raise DomainError(f"need {n-1} coordinates for CQ_{n}")
        self.n = n
        self.coeffs = coeffs

    @classmethod
    def hyperplane(cls, n, i):
        """The class L_i."""
        if not 1 <= i <= n - 1:
            raise DomainError(f"L_{i} undefined on CQ_{n}")
        return cls(n, tuple(1 if j == i else 0 for j in range(1, n)))

    @classmethod
    def degeneration(cls, n, i):
        """The class S_i = -L_{i-1} + 2 L_i - L_{i+1}."""
        if not 1 <= i <= n - 1:
            raise DomainError(f"S_{i} undefined on CQ_{n}")
        coeffs = [0] * (n - 1)
        for j, c in ((i - 1, -1), (i, 2), (i + 1, -1)):
            if 1 <= j <= n - 1:
                coeffs[j - 1] += c
        return cls(n, coeffs)

    def __add__(self, other):
        if not isinstance(other, DivisorClass) or other.n != self.n:
            return NotImplemented
        return DivisorClass(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __rmul__(self, scalar):
        return DivisorClass(self.n, [Fraction(scalar) * c for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, DivisorClass)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"DivisorClass({self.n}, {list(self.coeffs)!r})"


@dataclass(frozen=True)
class CQProduct:
    """Exponent profile for the monomial S_1^a_1..S_{n-1}^a_{n-1} *
    L_1^b_1..L_{n-1}^b_{n-1} on CQ_n."""

    n: int
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if self.n < 2:
            raise DomainError("CQ_n needs n >= 2")
        if len(self.a) != self.n - 1 or len(self.b) != self.n - 1:
            raise DomainError(f"exponent vectors must have length {self.n - 1}")
        if any(x < 0 for x in self.a + self.b):
            raise DomainError("negative exponent")

    def total_degree(self):
        return sum(self.a) + sum(self.b)


@lru_cache(maxsize=None)
def _mixed_basis_expansion(n, i, frozen_x):
    x_set = set(frozen_x)
    columns = []
    for j in range(1, n):
        cls = (
            DivisorClass.degeneration(n, j)
            if j in x_set
            else DivisorClass.hyperplane(n, j)
        )
        columns.append(cls.coeffs)
    matrix = [[columns[c][r] for c in range(n - 1)] for r in range(n - 1)]
    rhs = [1 if r == i - 1 else 0 for r in range(n - 1)]
    solution = solve_linear_system(matrix, rhs)
    out = {}
    for j in range(1, n):
        coeff = solution[j - 1]
        if coeff != 0:
            out[("S" if j in x_set else "L", j)] = coeff
    return out


def l_in_mixed_basis(n, i, X):
    """Coordinates of L_i in the basis {S_j : j in X} u {L_j : j not in X}.

    Any subset X of 1..n-1 yields a basis, so the underlying linear system
    is never singular.
    """
    if not 1 <= i <= n - 1:
        raise DomainError(f"index {i} out of range for CQ_{n}")
    X = frozenset(X)
    if any(not 1 <= j <= n - 1 for j in X):
        raise DomainError("basis selector out of range")
    return dict(_mixed_basis_expansion(n, i, X))


_product_memo = {}


def clear_caches():
    """Drop all memo tables (here and in the flag-variety layer); only
    useful for timing measurements."""
    from . import schubert

    _product_memo.clear()
    _mixed_basis_expansion.cache_clear()
    schubert._integral_memo.clear()
    schubert._cover_cache.clear()


def _reduce(n, a, b, pick):
    memoize = pick is None
    if memoize:
        cached = _product_memo.get((n, a, b))
        if cached is not None:
            return cached

    value = None

    # Surplus degeneration factors: trade one S_i for its L-expansion.
    for i in range(n - 1):
        if a[i] >= 2:
            new_a = a[:i] + (a[i] - 1,) + a[i + 1 :]
            value = Fraction(0)
            for j, coeff in ((i - 1, -1), (i, 2), (i + 1, -1)):
                if 0 <= j <= n - 2:
                    new_b = b[:j] + (b[j] + 1,) + b[j + 1 :]
                    value += coeff * _reduce(n, new_a, new_b, pick)
            break

    if value is None and all(x == 1 for x in a):
        # Fully degenerate locus: a flag variety, with each L_i restricting
        # to twice a Schubert divisor.
        value = Fraction(2 ** sum(b) * flag_integral(n, b))

    if value is None:
        zero_slots = [i for i in range(n - 1) if a[i] == 0]
        candidates = [i for i in zero_slots if b[i] > 0]
        if not candidates:
            # Every missing degeneration direction also misses hyperplane
            # factors, and the product dies on a smaller partial-flag locus.
            value = Fraction(0)
        else:
            i = candidates[0] if pick is None else pick(candidates)
            x_set = frozenset(j + 1 for j in zero_slots)
            value = Fraction(0)
            for (kind, j), coeff in _mixed_basis_expansion(n, i + 1, x_set).items():
                if kind == "S":
                    new_a = a[: j - 1] + (1,) + a[j:]
                    new_b = b[:i] + (b[i] - 1,) + b[i + 1 :]
                else:
                    new_a = a
                    new_b = list(b)
                    new_b[i] -= 1
                    new_b[j - 1] += 1
                    new_b = tuple(new_b)
                value += coeff * _reduce(n, new_a, new_b, pick)

    if memoize:
        _product_memo[(n, a, b)] = value
    return value


def intersection_product(product, pick=None):
    """Exact integer value of the top intersection product on CQ_n.

    `pick` optionally overrides which eligible hyperplane slot is rewritten
    first; the result is independent of that choice (tests randomize it)
    and the default deterministic strategy is memoized.
    """
    n = product.n
    if product.total_degree() != cq_dimension(n):
        raise DomainError("degree mismatch")
    value = _reduce(n, product.a, product.b, pick)
    if value.denominator != 1:
        raise RuntimeError(f"non-integer intersection product {value}")
    return int(value)


def integrate_monomial(n, a, b, pick=None):
    return intersection_product(CQProduct(n, tuple(a), tuple(b)), pick=pick)


def _corner_exponents(n, first, last):
    b = [0] * (n - 1)
    b[0] += first
    b[n - 2] += last
    return tuple(b)


def phi(n, d):
    """ML-degree of a generic d-dimensional linear concentration model on
    symmetric n x n matrices: the integral of L_1^(C(n+1,2)-d) L_{n-1}^(d-1).
    """
    top = binomial(n + 1, 2)
    if n < 2:
        raise DomainError("phi needs n >= 2")
    if not 1 <= d <= top:
        raise DomainError(f"d={d} out of range 1..{top}")
    b = _corner_exponents(n, top - d, d - 1)
    return integrate_monomial(n, (0,) * (n - 1), b)


def delta(m, n, r):
    """Algebraic degree of semidefinite programming: the integral of
    S_r L_1^(C(n+1,2)-m-1) L_{n-1}^(m-1)."""
    top = binomial(n + 1, 2)
    if n < 2:
        raise DomainError("delta needs n >= 2")
    if not 0 < m < top:
        raise DomainError(f"m={m} out of range 1..{top - 1}")
    if not 0 < r < n:
        raise DomainError(f"r={r} out of range 1..{n - 1}")
    a = tuple(1 if j == r else 0 for j in range(1, n))
    b = _corner_exponents(n, top - m - 1, m - 1)
    return integrate_monomial(n, a, b)


def pataki_nonzero(m, n, r):
    """Support window for delta: nonzero exactly when
    C(n-r+1,2) <= m <= C(n+1,2) - C(r+1,2)."""
    top = binomial(n + 1, 2)
    if n < 2 or not 0 < m < top or not 0 < r < n:
        raise DomainError("parameter out of range")
    return binomial(n - r + 1, 2) <= m <= top - binomial(r + 1, 2)


def phi_from_delta(n, d):
    """Recover phi(n, d) as (1/n) * sum of s * delta(d, n, n-s) over the s
    with C(s+1,2) <= d.

    The identity expands one L_1 factor into degeneration classes, so it
    needs at least one L_1 in the integrand; the single boundary column
    d = C(n+1,2) has none and is evaluated through the duality
    phi(n, C(n+1,2)) = phi(n, 1) instead.
    """
    top = binomial(n + 1, 2)
    if n < 2:
        raise DomainError("phi_from_delta needs n >= 2")
    if not 1 <= d <= top:
        raise DomainError(f"d={d} out of range 1..{top}")
    if d == top:
        d = 1
    total = 0
    for s in range(1, n):
        if binomial(s + 1, 2) > d:
            break
        total += s * delta(d, n, n - s)
    if total % n:
        raise RuntimeError("phi-delta relation produced a non-integer")
    return total // n


def phi_c(n, c, d):
    """Integral of L_c L_1^(C(n+1,2)-d-1) L_{n-1}^(d-1); equals c * phi(n, d)
    whenever C(n-c+2,2) > d."""
    top = binomial(n + 1, 2)
    if n < 2 or not 1 <= c <= n - 1:
        raise DomainError("c out of range")
    if not 1 <= d < top:
        raise DomainError(f"d={d} out of range 1..{top - 1}")
    b = list(_corner_exponents(n, top - d - 1, d - 1))
    b[c - 1] += 1
    return integrate_monomial(n, (0,) * (n - 1), tuple(b))


def _phi_sample(args):
    n, d = args
    return phi(n, d)


def _delta_sample(args):
    m, n, s = args
    return delta(m, n, n - s)


def _evaluate_samples(worker, arg_list, jobs):
    if jobs and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, arg_list))
    return [worker(args) for args in arg_list]


def phi_polynomial(d, jobs=1):
    """The function n -> phi(n, d) as an exact polynomial of degree d - 1.

    Samples d consecutive admissible n starting from the smallest one,
    interpolates, and double-checks the result against one further engine
    evaluation before returning it.
    """
    if d < 1:
        raise DomainError("d must be positive")
    n0 = 2
    while binomial(n0 + 1, 2) < d:
        n0 += 1
    sample_ns = list(range(n0, n0 + d))
    check_n = n0 + d
    values = _evaluate_samples(_phi_sample, [(n, d) for n in sample_ns + [check_n]], jobs)
    poly = interpolate(list(zip(sample_ns, values[:-1])))
    if poly(check_n) != values[-1]:
        raise DomainError("polynomiality check failed")
    return poly


def delta_polynomial(m, s, jobs=1):
    """The function n -> delta(m, n, n-s) as an exact polynomial of degree
    at most m, checked to vanish at n = 0 and at one extra sample point."""
    if m < 1 or s < 1:
        raise DomainError("m and s must be positive")
    n0 = max(2, s + 1)
    while binomial(n0 + 1, 2) <= m:
        n0 += 1
    sample_ns = list(range(n0, n0 + m + 1))
    check_n = n0 + m + 1
    values = _evaluate_samples(
        _delta_sample, [(m, n, s) for n in sample_ns + [check_n]], jobs
    )
    poly = interpolate(list(zip(sample_ns, values[:-1])))
    if poly(check_n) != values[-1]:
        raise DomainError("polynomiality check failed")
    if poly(0) != 0:
        raise DomainError("polynomiality check failed")
    return poly


def hypersurface_characteristic_number(d, n, b):
    """Count of smooth degree-d hypersurfaces in projective n-space through
    the complementary number of general points and tangent to b general
    hyperplanes: (n (d-1)^(n-1))^b, valid for d = 5 or d >= 7 and
    b < n(d-2) + 3."""
    if n < 1 or not (d == 5 or d >= 7) or not 0 <= b < n * (d - 2) + 3:
        raise DomainError("outside theorem hypotheses")
    return (n * (d - 1) ** (n - 1)) ** b
