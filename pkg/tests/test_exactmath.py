import random
from fractions import Fraction

import pytest

from cqcalc.exactmath import (
    DomainError,
    MultivariatePolynomial,
    UnivariatePolynomial,
    binomial,
    interpolate,
    is_log_concave,
    matrix_rank,
    solve_linear_system,
)


def test_binomial_values():
    assert binomial(4, 2) == 6
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(5, -1) == 0
    assert binomial(-2, 1) == 0
    assert binomial(0, 0) == 1


def test_is_log_concave():
    assert is_log_concave((1, 3, 3))
    assert is_log_concave((1, 2, 1))
    assert not is_log_concave((1, 1, 4))
    # zeros between nonzero entries are disallowed even if the inequality holds
    assert not is_log_concave((1, 0, 0, 1))
    assert is_log_concave((0, 1, 2, 1, 0))
    assert is_log_concave((5,))
    with pytest.raises(DomainError):
        is_log_concave(())


def test_interpolate_examples():
    # two points of the ML-degree column d=2 pin the line n - 1
    assert interpolate([(3, 2), (4, 3)]) == UnivariatePolynomial([-1, 1])
    assert interpolate([(0, 0)]) == UnivariatePolynomial()
    # three points of the column d=3 pin (n - 1)^2
    assert interpolate([(3, 4), (4, 9), (5, 16)]) == UnivariatePolynomial([1, -2, 1])


def test_interpolate_duplicate_abscissa():
    with pytest.raises(DomainError, match="duplicate abscissa"):
        interpolate([(1, 1), (1, 2)])


def test_interpolate_round_trip_random():
    rng = random.Random(20240801)
    for _ in range(40):
        degree = rng.randint(0, 6)
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(degree + 1)]
        poly = UnivariatePolynomial(coeffs)
        xs = rng.sample(range(-15, 15), poly.degree() + 1 if not poly.is_zero() else 1)
        points = [(x, poly(x)) for x in xs]
        assert interpolate(points) == poly


def test_rational_addition_two_ways():
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.randint(-50, 50), rng.randint(1, 50)
        c, d = rng.randint(-50, 50), rng.randint(1, 50)
        direct = Fraction(a, b) + Fraction(c, d)
        common = Fraction(a * d + c * b, b * d)
        assert direct == common
        assert direct.denominator > 0
        import math

        assert math.gcd(direct.numerator, direct.denominator) == 1


def test_polynomial_arithmetic():
    p = UnivariatePolynomial([1, 2])   # 1 + 2x
    q = UnivariatePolynomial([-1, 1])  # x - 1
    assert p * q == UnivariatePolynomial([-1, -1, 2])
    assert (p + q).coefficients == (0, 3)
    assert p(Fraction(1, 2)) == 2
    assert str(UnivariatePolynomial([1, -2, 1])) == "n^2 - 2*n + 1"


def test_divide_by_linear():
    # x^3 - 4x^2 + 6x - 3 = (x - 1)(x^2 - 3x + 3)
    p = UnivariatePolynomial([-3, 6, -4, 1])
    q, rem = p.divide_by_linear(1)
    assert rem == 0
    assert q == UnivariatePolynomial([3, -3, 1])
    _, rem2 = p.divide_by_linear(2)
    assert rem2 == p(2)


def _random_mpoly(rng):
    variables = ["x", "y", "z"]
    poly = MultivariatePolynomial()
    for _ in range(rng.randint(0, 4)):
        expo = {v: rng.randint(0, 2) for v in rng.sample(variables, rng.randint(1, 3))}
        poly = poly + MultivariatePolynomial.monomial(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)), expo
        )
    return poly


def test_multivariate_mul_associative_commutative():
    rng = random.Random(99)
    for _ in range(25):
        p, q, r = (_random_mpoly(rng) for _ in range(3))
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r


def test_multivariate_no_stored_zeros():
    p = MultivariatePolynomial.variable("x") - MultivariatePolynomial.variable("x")
    assert p.terms == {}
    q = MultivariatePolynomial({(("x", 1),): 2, (("x", 0),): 0})
    assert all(c != 0 for c in q.terms.values())


def test_multivariate_substitute_and_gcd():
    x = MultivariatePolynomial.variable("x")
    y = MultivariatePolynomial.variable("y")
    p = x * x * y + 2 * x * y * y
    assert p.monomial_gcd() == {"x": 1, "y": 1}
    assert p.substitute({"x": 0}).is_zero()
    assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == 2 + 1
    quotient = p.divide_by_monomial({"x": 1, "y": 1})
    assert quotient == x + 2 * y


def test_solve_linear_system():
    sol = solve_linear_system([[2, -1], [-1, 2]], [1, 0])
    assert sol == [Fraction(2, 3), Fraction(1, 3)]
    with pytest.raises(DomainError, match="singular"):
        solve_linear_system([[1, 1], [2, 2]], [1, 0])


def test_matrix_rank():
    assert matrix_rank([[1, 0, 0], [0, 1, 0]]) == 2
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[0, 0], [0, 0]]) == 0
