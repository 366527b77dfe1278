"""Schubert calculus on the complete flag variety Fl_n.

Permutations are tuples in one-line notation, w(i) = w[i-1].  Classes are
finite integer combinations of permutations, graded by inversion number.
Top-degree integrals extract the coefficient of the longest permutation;
the normalization makes the class of a point integrate to 1.

All functions are pure; the only shared state is the integral memo table,
which is safe under CPython's atomic dict operations and deterministic
regardless of call interleaving.
"""

from .exactmath import DomainError, binomial

_integral_memo = {}


def validate_permutation(w):
    w = tuple(w)
    n = len(w)
    if sorted(w) != list(range(1, n + 1)):
        raise DomainError(f"not a permutation of 1..{n}: {w!r}")
    return w


def inversion_number(w):
    """Number of pairs i < j with w(i) > w(j); the codimension of the
    corresponding closed cell."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def longest_permutation(n):
    return tuple(range(n, 0, -1))


class SchubertCombination:
    """Integer combination of permutations of a fixed ambient size n."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if len(w) != n:
                raise DomainError("mixed ambient sizes in combination")
            if c:
                self.terms[w] = self.terms.get(w, 0) + c
        self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def identity(cls, n):
        return cls(n, {tuple(range(1, n + 1)): 1})

    def coefficient(self, w):
        return self.terms.get(tuple(w), 0)

    def is_homogeneous(self):
        degrees = {inversion_number(w) for w in self.terms}
        return len(degrees) <= 1

    def __eq__(self, other):
        return (
            isinstance(other, SchubertCombination)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"SchubertCombination({self.n}, {self.terms!r})"


def monk_multiply(i, w):
    """Product of the codimension-one class for the transposition s_i with
    the class of w, as a combination of covers.

    A pair of positions p <= i < q contributes when w(p) < w(q) and no
    position strictly between p and q carries a value strictly between
    w(p) and w(q); the contribution swaps the values at p and q.
    """
    w = validate_permutation(w)
    n = len(w)
    if not 1 <= i <= n - 1:
        raise DomainError(f"transposition index {i} out of range for n={n}")
    base_inv = inversion_number(w)
    out = {}
    for p in range(1, i + 1):
        for q in range(i + 1, n + 1):
            if w[p - 1] >= w[q - 1]:
                continue
            lo, hi = w[p - 1], w[q - 1]
            if any(lo < w[k - 1] < hi for k in range(p + 1, q)):
                continue
            v = list(w)
            v[p - 1], v[q - 1] = v[q - 1], v[p - 1]
            v = tuple(v)
            assert inversion_number(v) == base_inv + 1
            out[v] = out.get(v, 0) + 1
    return SchubertCombination(n, out)


def monk_multiply_bruhat(i, w):
    """Independent route to the same product: keep exactly the transpositions
    t_{pq} with p <= i < q that raise the inversion number by one."""
    w = validate_permutation(w)
    n = len(w)
    if not 1 <= i <= n - 1:
        raise DomainError(f"transposition index {i} out of range for n={n}")
    base_inv = inversion_number(w)
    out = {}
    for p in range(1, i + 1):
        for q in range(i + 1, n + 1):
            v = list(w)
            v[p - 1], v[q - 1] = v[q - 1], v[p - 1]
            v = tuple(v)
            if inversion_number(v) == base_inv + 1:
                out[v] = out.get(v, 0) + 1
    return SchubertCombination(n, out)


_cover_cache = {}


def _covers(i, w):
    """Cached cover list for the Monk step (coefficients are always 1)."""
    key = (i, w)
    cached = _cover_cache.get(key)
    if cached is None:
        cached = tuple(monk_multiply(i, w).terms)
        _cover_cache[key] = cached
    return cached


def monk_multiply_combination(i, comb):
    """Extend the Monk step linearly to a whole combination."""
    out = {}
    for w, c in comb.terms.items():
        for v in _covers(i, w):
            out[v] = out.get(v, 0) + c
    return SchubertCombination(comb.n, out)


def flag_integral(n, b, order=None):
    """Top intersection number of hyperplane-type generators on Fl_n.

    b lists the exponents of the generators attached to slots 1..n-1; slot i
    multiplies by the class of the transposition s_{n-i}.  The exponents must
    sum to C(n,2), the dimension of Fl_n.  `order` overrides the default
    multiplication schedule (descending remaining multiplicity) and exists
    because the result provably does not depend on it; tests shuffle it.
    """
    b = tuple(b)
    if n < 2 or len(b) != n - 1:
        raise DomainError(f"need n >= 2 and {n-1} exponents, got {b!r}")
    if any(x < 0 for x in b):
        raise DomainError("negative exponent")
    if sum(b) != binomial(n, 2):
        raise DomainError("degree mismatch")

    if order is None:
        key = (n, b)
        cached = _integral_memo.get(key)
        if cached is not None:
            return cached

    result = _flag_integral_uncached(n, b, order)
    if order is None:
        _integral_memo[(n, b)] = result
    return result


def _flag_integral_uncached(n, b, order):
    if order is None:
        remaining = list(b)
        schedule = []
        while any(remaining):
            slot = max(range(n - 1), key=lambda s: (remaining[s], -s))
            schedule.append(slot + 1)
            remaining[slot] -= 1
    else:
        schedule = list(order)
        counts = [0] * (n - 1)
        for slot in schedule:
            counts[slot - 1] += 1
        if tuple(counts) != b:
            raise DomainError("order does not match exponents")

    terms = {tuple(range(1, n + 1)): 1}
    for slot in schedule:
        gen = n - slot
        out = {}
        for w, c in terms.items():
            for v in _covers(gen, w):
                out[v] = out.get(v, 0) + c
        if not out:
            return 0
        terms = out
    return terms.get(longest_permutation(n), 0)
