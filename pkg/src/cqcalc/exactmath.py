"""Exact arithmetic: rationals, polynomials, interpolation, small combinatorics.

Everything here is exact; no floating point is used anywhere.  Scalars are
`fractions.Fraction` (arbitrary precision, always in lowest terms with a
positive denominator), exposed under the name `ExactRational`.  All values
are immutable after construction and every operation is a pure function, so
the module is safe to use from any number of threads.
"""

import math
from fractions import Fraction

ExactRational = Fraction


class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""


def binomial(n, k):
    """Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0, k > n or n < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def is_log_concave(seq):
    """True iff seq[i]^2 >= seq[i-1]*seq[i+1] everywhere and no zero sits
    between two nonzero entries."""
    if not seq:
        raise DomainError("empty sequence")
    nonzero = [i for i, v in enumerate(seq) if v != 0]
    if nonzero:
        lo, hi = nonzero[0], nonzero[-1]
        if any(seq[i] == 0 for i in range(lo, hi + 1)):
            return False
    return all(
        seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1)
    )


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class UnivariatePolynomial:
    """Dense polynomial in one variable over the exact rationals.

    Coefficients are stored by ascending degree; the leading coefficient is
    nonzero unless the polynomial is zero (empty coefficient list).
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [_frac(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def variable(cls):
        return cls([0, 1])

    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UnivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, UnivariatePolynomial):
            return self.coefficients == other.coefficients
        if isinstance(other, (int, Fraction)):
            return self == UnivariatePolynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def divide_by_linear(self, root):
        """Exact division by (x - root); returns (quotient, remainder scalar)."""
        root = _frac(root)
        q = []
        carry = Fraction(0)
        for c in reversed(self.coefficients):
            carry = _frac(c) + carry * root
            q.append(carry)
        if not q:
            return UnivariatePolynomial(), Fraction(0)
        remainder = q.pop()
        return UnivariatePolynomial(list(reversed(q))), remainder

    def __repr__(self):
        return f"UnivariatePolynomial({list(self.coefficients)!r})"

    def to_string(self, var="n"):
        if self.is_zero():
            return "0"
        parts = []
        for d in range(self.degree(), -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            else:
                power = var if d == 1 else f"{var}^{d}"
                if c == 1:
                    parts.append(power)
                elif c == -1:
                    parts.append(f"-{power}")
                else:
                    parts.append(f"{c}*{power}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __str__(self):
        return self.to_string()


def _as_poly(x):
    if isinstance(x, UnivariatePolynomial):
        return x
    return UnivariatePolynomial([x])


def interpolate(points):
    """Lagrange interpolation through (x, y) pairs with distinct integer x."""
    xs = [p[0] for p in points]
    if len(set(xs)) != len(xs):
        raise DomainError("duplicate abscissa")
    result = UnivariatePolynomial()
    for i, (xi, yi) in enumerate(points):
        term = UnivariatePolynomial([yi])
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # (x - xj) / (xi - xj)
            denom = Fraction(xi - xj)
            term = term * UnivariatePolynomial([Fraction(-xj) / denom, 1 / denom])
        result = result + term
    return result


class MultivariatePolynomial:
    """Sparse polynomial in named variables over the exact rationals.

    Terms map a monomial key -- a sorted tuple of (variable, exponent) pairs
    -- to a nonzero Fraction coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for key, coeff in (terms or {}).items():
            coeff = _frac(coeff)
            if coeff == 0:
                continue
            key = tuple(sorted((v, e) for v, e in key if e != 0))
            cleaned[key] = cleaned.get(key, Fraction(0)) + coeff
        self.terms = {k: c for k, c in cleaned.items() if c != 0}

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def variable(cls, name):
        return cls({((name, 1),): 1})

    @classmethod
    def monomial(cls, coeff, exponents):
        return cls({tuple(sorted(exponents.items())): coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        other = _as_mpoly(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return MultivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return MultivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_mpoly(other))

    def __rsub__(self, other):
        return _as_mpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_mpoly(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = _merge_keys(k1, k2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MultivariatePolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultivariatePolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultivariatePolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, values):
        """Substitute variables with scalars (or polynomials); missing
        variables are left symbolic."""
        result = MultivariatePolynomial()
        for key, coeff in self.terms.items():
            term = MultivariatePolynomial.constant(coeff)
            for var, exp in key:
                if var in values:
                    factor = _as_mpoly(values[var])
                else:
                    factor = MultivariatePolynomial.variable(var)
                for _ in range(exp):
                    term = term * factor
            result = result + term
        return result

    def evaluate(self, values):
        """Fully evaluate to a Fraction; every variable must be assigned."""
        total = Fraction(0)
        for key, coeff in self.terms.items():
            prod = coeff
            for var, exp in key:
                prod *= _frac(values[var]) ** exp
            total += prod
        return total

    def variables(self):
        return sorted({v for key in self.terms for v, _ in key})

    def monomial_gcd(self):
        """Greatest common monomial divisor of all terms (1 for the zero
        polynomial), as an exponent dict."""
        if not self.terms:
            return {}
        gcd = None
        for key in self.terms:
            expo = dict(key)
            if gcd is None:
                gcd = expo
            else:
                gcd = {v: min(e, expo.get(v, 0)) for v, e in gcd.items() if v in expo}
        return {v: e for v, e in gcd.items() if e > 0}

    def divide_by_monomial(self, exponents, coeff=1):
        """Exact division by coeff * monomial; raises if not divisible."""
        coeff = _frac(coeff)
        out = {}
        for key, c in self.terms.items():
            expo = dict(key)
            for v, e in exponents.items():
                if expo.get(v, 0) < e:
                    raise DomainError("monomial division leaves remainder")
                expo[v] -= e
            out[tuple(sorted(expo.items()))] = c / coeff
        return MultivariatePolynomial(out)

    def leading_coefficient(self):
        """Coefficient of the lexicographically smallest monomial key."""
        if not self.terms:
            return Fraction(0)
        return self.terms[min(self.terms)]

    def __repr__(self):
        return f"MultivariatePolynomial({self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            factors = ["*".join([str(v)] * e) for v, e in key]
            mono = "*".join(factors)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_mpoly(x):
    if isinstance(x, MultivariatePolynomial):
        return x
    return MultivariatePolynomial.constant(x)


def _merge_keys(k1, k2):
    expo = dict(k1)
    for v, e in k2:
        expo[v] = expo.get(v, 0) + e
    return tuple(sorted(expo.items()))


def solve_linear_system(matrix, rhs):
    """Solve M x = rhs exactly (square, nonsingular M) by Gaussian elimination."""
    n = len(matrix)
    aug = [[_frac(matrix[i][j]) for j in range(n)] + [_frac(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [c * inv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def matrix_rank(rows):
    """Rank over the rationals, by exact row reduction."""
    work = [[_frac(x) for x in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [c * inv for c in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank
