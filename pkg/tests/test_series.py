import pytest

from upho.constructions import GridSpec, chain, grid_construction
from upho.errors import NonUnitConstantTerm, ParseError
from upho.series import (
    IntPolynomial, IntSeries, RationalFunction, expand_rational, match_rational, parse_rational, rgf,
)


def rf(num, den):
    return RationalFunction(IntPolynomial(num), IntPolynomial(den))


@pytest.mark.parametrize("f, order, expected", [
    (rf((1,), (1, -2)), 4, [1, 2, 4, 8, 16]),
    (rf((1, 3, 2), (1, -1)), 6, [1, 4, 6, 6, 6, 6, 6]),
    (rf((1,), (1, -3, 1, 1)), 4, [1, 3, 8, 20, 49]),
])
def test_expand_rational(f, order, expected):
    assert expand_rational(f, order).to_list() == expected


def test_expansion_satisfies_convolution_identity():
    f = rf((1, 3, 2), (1, -5, 6))
    c = expand_rational(f, 10)
    d = IntSeries(list(f.denominator.coefficients) + [0] * 8)
    assert (d * c).to_list() == [1, 3, 2] + [0] * 8


def test_negative_constant_term_is_normalized():
    f = rf((-1,), (-1, 2))
    assert f.denominator.coefficients == (1, -2)
    assert expand_rational(f, 3).to_list() == [1, 2, 4, 8]


def test_non_unit_constant_term():
    with pytest.raises(NonUnitConstantTerm):
        expand_rational(rf((1,), (2, -1)), 3)


def test_big_coefficients_stay_exact():
    c = expand_rational(rf((1,), (1, -10)), 40)
    assert c[40] == 10 ** 40


def test_trailing_zeros_trimmed():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coefficients == (1, 2)
    assert p.degree == 1


def test_rgf():
    assert rgf(chain(5)).to_list() == [1, 1, 1, 1, 1]
    assert rgf(grid_construction(GridSpec((1, 2), 4))).to_list() == [1, 4, 6, 6]


def test_match_rational():
    grid = rgf(grid_construction(GridSpec((1, 2), 6)))
    assert match_rational(grid, rf((1, 3, 2), (1, -1)))
    assert match_rational(IntSeries([1, 2, 4, 8]), rf((1,), (1, -2)))
    assert not match_rational(IntSeries([1, 3, 7, 15]), rf((1,), (1, -2)))


@pytest.mark.parametrize("text, expected", [
    ("(1+x)(1+2x)/(1-x)", [1, 4, 6, 6, 6]),
    ("1/(1-2x)", [1, 2, 4, 8, 16]),
    ("(1+x)/((1-2x)(1-3x))", [1, 6, 24, 84, 276]),
    ("1/(1-3x+x^2+x^3)", [1, 3, 8, 20, 49]),
    ("1/(x-1)", [-1, -1, -1, -1, -1]),
])
def test_parse_rational(text, expected):
    assert expand_rational(parse_rational(text), 4).to_list() == expected


@pytest.mark.parametrize("text", ["", "1/(1-y)", "(1+x", "1/(1-0.5x)", "sin(x)"])
def test_parse_rational_errors(text):
    with pytest.raises(ParseError):
        parse_rational(text)
