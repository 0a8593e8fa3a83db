from itertools import accumulate

import pytest

from conftest import up_set
from upho.constructions import (
    BConstructionSpec, GridSpec, b_construction, b_rational, bowtie, chain, elementary_values,
    grid_construction, grid_filter_map, grid_rational, grid_vertex, k_ary_tree,
    theorem12_construction, theorem12_rational,
)
from upho.errors import InvalidParameters, VertexNotFound
from upho.poset import are_isomorphic, order_filter, verify_upho
from upho.series import expand_rational, match_rational, rgf


@pytest.mark.parametrize("k, depth, sizes", [
    (2, 4, [1, 2, 4, 8]),
    (1, 3, [1, 1, 1]),
    (3, 3, [1, 3, 9]),
])
def test_k_ary_tree(k, depth, sizes):
    P = k_ary_tree(k, depth)
    assert P.rank_sizes() == sizes
    assert P.embedding is not None


def test_chain_is_unary_tree():
    assert chain(3) == k_ary_tree(1, 3)


def test_tree_parameters():
    with pytest.raises(InvalidParameters):
        k_ary_tree(0, 3)
    with pytest.raises(InvalidParameters):
        chain(0)


def test_bowtie():
    P = bowtie(4)
    assert P.rank_sizes() == [1, 2, 2, 2]
    assert all(len(P.down[v]) == 2 for v in P.ranks[2])


@pytest.mark.parametrize("a, depth, sizes", [
    ((1, 2), 6, [1, 4, 6, 6, 6, 6]),
    ((), 5, [1, 1, 1, 1, 1]),
    ((1, 1), 5, [1, 3, 4, 4, 4]),
])
def test_grid_rank_sizes(a, depth, sizes):
    assert grid_construction(GridSpec(a, depth)).rank_sizes() == sizes


def test_elementary_values():
    assert elementary_values([1, 1]) == [1, 2, 1]
    assert elementary_values([1, 2]) == [1, 3, 2]
    assert elementary_values([2, 3, 4]) == [1, 9, 26, 24]


@pytest.mark.parametrize("a", [(1,), (1, 2), (2, 3, 4), (1, 1, 1)])
def test_grid_sizes_are_prefix_sums(a):
    depth = len(a) + 3
    e = elementary_values(a) + [0] * 3
    P = grid_construction(GridSpec(a, depth))
    assert P.rank_sizes() == list(accumulate(e))[:depth]
    assert match_rational(rgf(P), grid_rational(a))


def test_grid_spec_validation():
    with pytest.raises(InvalidParameters):
        GridSpec((0, 1), 3)
    with pytest.raises(InvalidParameters):
        GridSpec((1,), 0)


def test_grid_filter_map_origin_is_identity():
    spec = GridSpec((1, 2), 4)
    mapping = grid_filter_map(spec, 0)
    assert mapping == {v: v for v in range(grid_construction(spec).size)}


def test_grid_filter_map_is_cover_preserving_bijection():
    spec = GridSpec((1, 2), 5)
    P = grid_construction(spec)
    p = grid_vertex(spec, (1, 0), 1)
    mapping = grid_filter_map(spec, p)
    assert mapping[grid_vertex(spec, (1, 0), 1)] == grid_vertex(spec, (0, 0), 2)
    assert sorted(mapping.values()) == up_set(P, p)
    domain = set(mapping)
    inner = [(u, v) for u, v in P.covers if u in domain and v in domain]
    assert all((mapping[u], mapping[v]) in P.covers for u, v in inner)
    image = set(mapping.values())
    assert len(inner) == sum(1 for u, v in P.covers if u in image and v in image)


def test_grid_filters_are_isomorphic_to_grid():
    spec = GridSpec((1, 1), 5)
    P = grid_construction(spec)
    smaller = grid_construction(GridSpec((1, 1), 4))
    for p in P.ranks[1]:
        assert len(grid_filter_map(spec, p)) == smaller.size
        assert are_isomorphic(order_filter(P, p), smaller).isomorphic


def test_grid_vertex_lookup():
    spec = GridSpec((1, 2), 3)
    assert grid_vertex(spec, (0, 0), 0) == 0
    with pytest.raises(VertexNotFound):
        grid_vertex(spec, (1, 2), 1)


@pytest.mark.parametrize("a, b, depth, sizes", [
    ((1,), 2, 5, [1, 3, 6, 12, 24]),
    ((), 3, 4, [1, 3, 9, 27]),
    ((1, 2), 2, 5, [1, 5, 12, 24, 48]),
    ((2,), 1, 4, [1, 3, 3, 3]),
])
def test_b_construction_rank_sizes(a, b, depth, sizes):
    P = b_construction(BConstructionSpec(a, b, depth))
    assert P.rank_sizes() == sizes
    assert match_rational(rgf(P), b_rational(a, b))


def test_b_construction_recurrence():
    a, b = (1, 2), 3
    P = b_construction(BConstructionSpec(a, b, 6))
    r = P.rank_sizes()
    e = elementary_values(a) + [0] * 6
    assert all(r[n + 1] == b * r[n] + e[n + 1] for n in range(5))


def test_b_construction_without_numerator_is_a_tree():
    P = b_construction(BConstructionSpec((), 3, 4))
    assert are_isomorphic(P, k_ary_tree(3, 4)).isomorphic


def test_b_construction_validation():
    with pytest.raises(InvalidParameters):
        BConstructionSpec((1,), 0, 3)


def test_theorem12_rank_sizes():
    P = theorem12_construction([1], [2, 3], 6)
    expected = expand_rational(theorem12_rational([1], [2, 3]), 5).to_list()
    assert expected == [1, 6, 24, 84, 276, 876]
    assert P.rank_sizes() == expected


@pytest.mark.parametrize("a, b, depth, sizes", [
    ([1], [2, 3], 4, [1, 6, 24, 84]),
    ([2], [1], 5, [1, 3, 3, 3, 3]),
])
def test_theorem12_examples(a, b, depth, sizes):
    assert theorem12_construction(a, b, depth).rank_sizes() == sizes


def test_theorem12_single_root_is_tree():
    assert are_isomorphic(theorem12_construction([], [3], 4), k_ary_tree(3, 4)).isomorphic


def test_theorem12_validation():
    with pytest.raises(InvalidParameters):
        theorem12_construction([1], [], 3)
    with pytest.raises(InvalidParameters):
        theorem12_construction([1], [2, 0], 3)


@pytest.mark.parametrize("build", [
    lambda: grid_construction(GridSpec((1, 2), 6)),
    lambda: grid_construction(GridSpec((1, 1), 6)),
    lambda: b_construction(BConstructionSpec((1,), 2, 6)),
    lambda: b_construction(BConstructionSpec((1, 2), 2, 5)),
    lambda: theorem12_construction([1], [2, 3], 5),
    lambda: theorem12_construction([2], [1], 6),
])
def test_constructions_are_upho(build):
    assert verify_upho(build(), 3, 2).passed
