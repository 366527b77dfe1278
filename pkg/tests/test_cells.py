import random
from fractions import Fraction

import pytest

from cqcalc.cells import (
    TwoPermutation,
    cell_matrices,
    cell_parametrization,
    chow_group_dimensions,
    enumerate_two_permutations,
    one_parameter_exponents,
    verify_cell_point,
    verify_generic_point,
    weight,
)
from cqcalc.exactmath import DomainError, MultivariatePolynomial
from cqcalc.quadrics import cq_dimension

TABLE_ROWS = [
    ("1|2|3", 5),
    ("1|3|2", 3),
    ("2|1|3", 3),
    ("2|3|1", 2),
    ("3|1|2", 2),
    ("3|2|1", 0),
    ("12|3", 4),
    ("13|2", 2),
    ("23|1", 1),
    ("1|23", 4),
    ("2|13", 3),
    ("3|12", 1),
]


def _poly(text_terms):
    """Build a polynomial from {(("x12",1),("x23",2)): coeff} style input."""
    return MultivariatePolynomial(dict(text_terms))


def _var(name):
    return MultivariatePolynomial.variable(name)


def test_parse_and_format():
    sigma = TwoPermutation.parse("2|13")
    assert sigma.blocks == ((2,), (1, 3))
    assert str(sigma) == "2|13"
    assert sigma.block_of(1) == 2 and sigma.block_of(2) == 1
    with pytest.raises(DomainError):
        TwoPermutation.parse("123")
    with pytest.raises(DomainError):
        TwoPermutation.parse("1|1")


def test_enumeration_counts():
    assert len(enumerate_two_permutations(1)) == 1
    assert len(enumerate_two_permutations(2)) == 3
    assert len(enumerate_two_permutations(3)) == 12
    # ordered partitions with block sizes <= 2 satisfy
    # a(n) = n a(n-1) + C(n,2) a(n-2)
    counts = {0: 1, 1: 1}
    for n in range(2, 6):
        counts[n] = n * counts[n - 1] + n * (n - 1) // 2 * counts[n - 2]
    for n in range(1, 6):
        assert len(enumerate_two_permutations(n)) == counts[n]


def test_enumeration_is_sorted_and_valid():
    sigmas = enumerate_two_permutations(2)
    assert [str(s) for s in sigmas] == ["1|2", "12", "2|1"]
    sigmas3 = enumerate_two_permutations(3)
    assert len(set(map(str, sigmas3))) == 12
    blocks = [s.blocks for s in sigmas3]
    assert blocks == sorted(blocks)


def test_weights_match_table():
    for text, expected in TABLE_ROWS:
        assert weight(TwoPermutation.parse(text)) == expected, text


def test_chow_group_dimensions():
    assert chow_group_dimensions(2) == [1, 1, 1]
    assert chow_group_dimensions(3) == [1, 2, 3, 3, 2, 1]
    for n in (2, 3, 4):
        hist = chow_group_dimensions(n)
        assert len(hist) == cq_dimension(n) + 1
        assert sum(hist) == len(enumerate_two_permutations(n))
        assert hist == hist[::-1]


def test_weight_equals_free_variable_count():
    for n in range(1, 6):
        for sigma in enumerate_two_permutations(n):
            param = cell_parametrization(sigma)
            assert param.free_variable_count == weight(sigma), str(sigma)


def test_parametrization_identity_cell():
    param = cell_parametrization(TwoPermutation.parse("1|2|3"))
    y = param.Y
    assert y[0][0] == 1 and y[1][1] == _var("y1")
    assert y[2][2] == _var("y1") * _var("y2")
    assert param.free_variable_count == 5
    assert param.free_x == ("x12", "x13", "x23")
    assert param.companion[0][0] == _var("y1") * _var("y2")
    assert param.companion[1][1] == _var("y2")
    assert param.companion[2][2] == 1


def test_parametrization_2_13():
    param = cell_parametrization(TwoPermutation.parse("2|13"))
    assert param.forced_x == ((1, 2),)
    y = param.Y
    assert y[1][1] == 1
    assert y[0][2] == _var("y1") and y[2][0] == _var("y1")
    assert y[0][0].is_zero() and y[2][2].is_zero()
    comp = param.companion
    assert comp[0][2] == 1 and comp[2][0] == 1
    assert comp[1][1] == _var("y1")
    assert param.free_variable_count == 3


def test_parametrization_bottom_cell():
    param = cell_parametrization(TwoPermutation.parse("3|2|1"))
    assert param.free_variable_count == 0
    flat_y = [param.Y[r][c] for r in range(3) for c in range(3)]
    assert [str(e) for e in flat_y] == ["0", "0", "0", "0", "0", "0", "0", "0", "1"]
    flat_b = [param.companion[r][c] for r in range(3) for c in range(3)]
    assert [str(e) for e in flat_b] == ["1", "0", "0", "0", "0", "0", "0", "0", "0"]


def test_displayed_pair_identity_cell():
    # frozen from the worked 5-dimensional cell: A = X Y X^t and the
    # companion-based B, written out entry by entry
    x12, x13, x23 = _var("x12"), _var("x13"), _var("x23")
    y1, y2 = _var("y1"), _var("y2")
    param = cell_parametrization(TwoPermutation.parse("1|2|3"))
    x, y = param.X, param.Y

    def mat_mul(a, b):
        return tuple(
            tuple(
                sum((a[r][k] * b[k][c] for k in range(3)), MultivariatePolynomial())
                for c in range(3)
            )
            for r in range(3)
        )

    a = mat_mul(mat_mul(x, y), tuple(zip(*x)))
    assert a[0][0] == 1
    assert a[1][0] == x12
    assert a[1][1] == x12 * x12 + y1
    assert a[2][1] == x12 * x13 + x23 * y1
    assert a[2][2] == x23 * x23 * y1 + x13 * x13 + y1 * y2

    values = {"x12": 2, "x13": 3, "x23": 5, "y1": 7, "y2": 11}
    a_num, b_num = cell_matrices(TwoPermutation.parse("1|2|3"), values)
    expected_b11 = (
        x12 * x12 * x23 * x23
        - 2 * x12 * x13 * x23
        + x12 * x12 * y2
        + x13 * x13
        + y1 * y2
    ).evaluate(values)
    assert b_num[0][0] == expected_b11
    assert b_num[2][2] == 1
    assert b_num[0][2] == (x12 * x23 - x13).evaluate(values)
    assert b_num[1][2] == (-x23).evaluate(values)
    assert b_num[0][1] == (-x12 * x23 * x23 + x13 * x23 - x12 * y2).evaluate(values)
    assert b_num[1][1] == (x23 * x23 + y2).evaluate(values)


def test_verify_cell_point_examples():
    assert verify_cell_point(
        TwoPermutation.parse("2|13"), {"x13": 1, "x23": 1, "y1": 1}
    )
    # bottom cell: the fixed point pair multiplies to zero
    a, b = cell_matrices(TwoPermutation.parse("3|2|1"), {})
    assert a == ((0, 0, 0), (0, 0, 0), (0, 0, 1))
    assert b == ((1, 0, 0), (0, 0, 0), (0, 0, 0))
    assert verify_cell_point(TwoPermutation.parse("3|2|1"), {})


def test_verify_cell_point_lambda_values():
    # for 2|13 the scalar is y1 itself; for the identity cell it is y1*y2
    from cqcalc.cells import _mat_mul_numeric

    sigma = TwoPermutation.parse("2|13")
    values = {"x13": Fraction(3, 2), "x23": -2, "y1": Fraction(5, 3)}
    a, b = cell_matrices(sigma, values)
    product = _mat_mul_numeric(a, b)
    assert product[0][0] == values["y1"]

    sigma = TwoPermutation.parse("1|2|3")
    values = {"x12": 1, "x13": 2, "x23": 3, "y1": 4, "y2": 5}
    a, b = cell_matrices(sigma, values)
    product = _mat_mul_numeric(a, b)
    assert product[0][0] == 20


FIXED_POINTS = {
    # sigma: (A, B) at the torus-fixed point of each cell
    "1|2|3": ("e11", "e33"),
    "1|3|2": ("e11", "e22"),
    "2|1|3": ("e22", "e33"),
    "2|3|1": ("e22", "e11"),
    "3|1|2": ("e33", "e22"),
    "3|2|1": ("e33", "e11"),
    "12|3": ("s12", "e33"),
    "13|2": ("s13", "e22"),
    "23|1": ("s23", "e11"),
    "1|23": ("e11", "s23"),
    "2|13": ("e22", "s13"),
    "3|12": ("e33", "s12"),
}


def _basis_matrix(code):
    m = [[0] * 3 for _ in range(3)]
    if code.startswith("e"):
        i = int(code[1]) - 1
        m[i][i] = 1
    else:
        i, j = int(code[1]) - 1, int(code[2]) - 1
        m[i][j] = m[j][i] = 1
    return tuple(tuple(row) for row in m)


def test_fixed_points_match_table():
    # the limit point of each cell (all free variables at zero) is the
    # tabulated pair of rank-one / rank-two symmetric matrices
    for text, (a_code, b_code) in FIXED_POINTS.items():
        param = cell_parametrization(TwoPermutation.parse(text))
        zeros = {name: 0 for name in param.free_variables()}
        a = tuple(
            tuple(entry.substitute(zeros).evaluate({}) for entry in row)
            for row in param.Y
        )
        b = tuple(
            tuple(entry.substitute(zeros).evaluate({}) for entry in row)
            for row in param.companion
        )
        assert a == _basis_matrix(a_code), text
        assert b == _basis_matrix(b_code), text


def test_verify_cell_point_all_cells_random():
    rng = random.Random(20240802)
    for sigma in enumerate_two_permutations(3):
        param = cell_parametrization(sigma)
        for _ in range(5):
            values = {
                name: Fraction(rng.randint(1, 24), rng.randint(1, 9))
                * rng.choice([1, -1])
                for name in param.free_variables()
            }
            assert verify_cell_point(sigma, values), (str(sigma), values)


def test_verify_cell_point_input_validation():
    sigma = TwoPermutation.parse("2|13")
    with pytest.raises(DomainError, match="free variables"):
        verify_cell_point(sigma, {"x13": 1})
    with pytest.raises(DomainError, match="nonzero"):
        verify_cell_point(sigma, {"x13": 0, "x23": 1, "y1": 1})
    with pytest.raises(DomainError, match="n=3"):
        verify_cell_point(TwoPermutation.parse("1|2"), {"x12": 1, "y1": 1})


def test_verify_generic_point():
    sigma = TwoPermutation.parse("1|2|3|4")
    param = cell_parametrization(sigma)
    values = {name: 1 for name in param.free_variables()}
    assert verify_generic_point(sigma, values)
    # a boundary cell never certifies: its primary matrix is singular
    bottom = TwoPermutation.parse("4|3|2|1")
    assert not verify_generic_point(bottom, {})


def test_one_parameter_exponents():
    assert one_parameter_exponents(3) == (4, 16, 64)
    for n in range(1, 17):
        one_parameter_exponents(n)
    with pytest.raises(DomainError):
        one_parameter_exponents(17)
