import pytest
from hypothesis import given, settings, strategies as st

from upho.constructions import GridSpec, chain, grid_construction, k_ary_tree
from upho.errors import InsufficientDepth, InsufficientSeries, SizeMismatch
from upho.series import IntSeries, expand_rational, parse_rational, rgf
from upho.symfunc import (
    Basis, SymmetricFunctionDeg, davydov_check, dominates, ehrenborg_by_chains,
    ehrenborg_compositions, ehrenborg_monomial, is_schur_positive, kostka, monomial_from_schur,
    partitions, schur_expand,
)


def test_partitions_reverse_lex():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions(8)) == 22
    assert partitions(0) == [()]


def test_dominance():
    assert dominates((3, 1), (2, 2))
    assert not dominates((3, 1, 1, 1), (2, 2, 2))
    assert not dominates((2, 2, 2), (3, 1, 1, 1))


def test_ehrenborg_monomial_examples():
    chain_fn = ehrenborg_monomial(IntSeries([1, 1, 1, 1]), 3)
    assert chain_fn.coefficients == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    tree_fn = ehrenborg_monomial(IntSeries([1, 2, 4]), 2)
    assert tree_fn.coefficients == {(2,): 4, (1, 1): 4}
    grid_fn = ehrenborg_monomial(IntSeries([1, 4, 6]), 2)
    assert grid_fn.coefficients == {(2,): 6, (1, 1): 16}


def test_ehrenborg_monomial_needs_terms():
    with pytest.raises(InsufficientSeries):
        ehrenborg_monomial(IntSeries([1, 2, 4]), 3)


def test_chain_compositions():
    assert ehrenborg_compositions(chain(3), 2, 1) == {(1, 0): 1, (0, 1): 1}


@pytest.mark.parametrize("P", [
    grid_construction(GridSpec((1, 1), 5)),
    k_ary_tree(2, 5),
    chain(5),
])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_chains_agree_with_product_formula(P, n):
    assert ehrenborg_by_chains(P, n, n) == ehrenborg_monomial(rgf(P), n)


def test_chains_with_more_variables():
    P = grid_construction(GridSpec((1, 1), 4))
    assert ehrenborg_by_chains(P, 3, 2) == ehrenborg_monomial(rgf(P), 2)


def test_chains_need_depth():
    with pytest.raises(InsufficientDepth):
        ehrenborg_by_chains(chain(2), 2, 2)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    assert kostka((3, 2), (3, 2)) == 1
    assert kostka((3, 2), (2, 2, 1)) == 2
    with pytest.raises(SizeMismatch):
        kostka((2,), (1,))


@pytest.mark.parametrize("n", range(1, 9))
def test_kostka_unitriangular(n):
    for lam in partitions(n):
        assert kostka(lam, lam) == 1
        for mu in partitions(n):
            if kostka(lam, mu):
                assert dominates(lam, mu)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chain_is_single_schur_function(n):
    g = schur_expand(ehrenborg_monomial(rgf(chain(n + 1)), n))
    assert g.coefficients == {(n,): 1}


def test_tree_schur_expansions():
    r = rgf(k_ary_tree(2, 4))
    assert schur_expand(ehrenborg_monomial(r, 2)).coefficients == {(2,): 4}
    assert schur_expand(ehrenborg_monomial(r, 3)).coefficients == {(3,): 8}


@st.composite
def monomial_functions(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    coefficients = {
        lam: draw(st.integers(min_value=-50, max_value=50)) for lam in partitions(n)
    }
    return SymmetricFunctionDeg(n, Basis.MONOMIAL, coefficients)


@settings(max_examples=60, deadline=None)
@given(f=monomial_functions())
def test_schur_round_trip(f):
    assert monomial_from_schur(schur_expand(f)) == f


@pytest.mark.parametrize("text", ["(1+x)/(1-2x)", "(1+x)(1+2x)/(1-x)", "1/(1-3x)"])
def test_schur_positive_series(text):
    r = expand_rational(parse_rational(text), 6)
    report = is_schur_positive(r, 6)
    assert report.positive
    assert report.witness is None
    assert len(report.expansions) == 6


def test_schur_negative_witness():
    report = is_schur_positive(IntSeries([1, 1, 3]), 2)
    assert not report.positive
    assert report.witness == (2, (1, 1), -2)


def test_schur_zero_second_rank():
    report = is_schur_positive(IntSeries([1, 1, 0]), 2)
    assert report.positive
    assert report.expansions[-1].coefficients == {(1, 1): 1}


@pytest.mark.parametrize("text, expected", [
    ("(1+x)(1+2x)/(1-x)", True),
    ("(1+3x)/((1-x)(1-2x))", True),
    ("1/(1-x+x^2)", False),
    ("(1-x)/1", False),
    ("1/(1-x)^2", True),
    ("(1+x)/(1+x)", True),
])
def test_davydov(text, expected):
    assert davydov_check(parse_rational(text)) is expected


@pytest.mark.parametrize("text", [
    "(1+x)(1+2x)/(1-x)", "(1+3x)/((1-x)(1-2x))", "1/(1-2x)", "(1+x)^2/(1-3x)",
])
def test_davydov_implies_truncated_positivity(text):
    f = parse_rational(text)
    assert davydov_check(f)
    assert is_schur_positive(expand_rational(f, 6), 6).positive
