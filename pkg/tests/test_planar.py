import pytest

from upho.constructions import GridSpec, bowtie, chain, grid_construction, k_ary_tree
from upho.errors import (
    MissingEmbedding, ScheduleInvalid, StructureError, WidthLimitExceeded,
)
from upho.planar import (
    MergeSchedule, check_embedding, classify_merges, embedded, find_embedding, make_schedule,
    planar_construction, planar_rgf_check, to_dot,
)
from upho.poset import are_isomorphic, is_meet_semilattice, new_poset, verify_upho
from upho.series import expand_rational, match_rational, rgf

FIG = make_schedule(3, {2: 1, 3: 1})


def test_make_schedule_assigns_pairs_left_to_right():
    assert FIG.assignments == ((2, 1), (3, 2))
    assert FIG.denominator().coefficients == (1, -3, 1, 1)
    assert FIG.q_at_one() == 0


@pytest.mark.parametrize("b, a", [
    (2, {2: 1, 3: 1}),
    (3, {1: 1}),
    (3, {2: -1}),
    (0, {}),
])
def test_invalid_schedules(b, a):
    with pytest.raises(ScheduleInvalid):
        make_schedule(b, a)


def test_duplicate_pair_index():
    with pytest.raises(ScheduleInvalid):
        MergeSchedule(3, {2: 2}, ((2, 1), (2, 1)))


def test_planar_construction_rank_sizes():
    P = planar_construction(FIG, 6)
    assert P.rank_sizes() == [1, 3, 8, 20, 49, 119]
    assert match_rational(rgf(P), FIG.rational())
    r = P.rank_sizes()
    assert all(r[i] == 3 * r[i - 1] - r[i - 2] - r[i - 3] for i in range(3, 6))


def test_planar_construction_structure():
    P = planar_construction(FIG, 6)
    assert check_embedding(P) == []
    assert all(len(P.up[v]) == 3 for i in range(5) for v in P.ranks[i])
    assert all(len(P.down[v]) <= 2 for v in range(P.size))
    assert is_meet_semilattice(P) is None


def test_merge_order_does_not_matter():
    assert planar_construction(FIG, 6, deepest_first=False) == planar_construction(FIG, 6)


def test_planar_without_merges_is_tree():
    P = planar_construction(make_schedule(2, {}), 4)
    assert are_isomorphic(P, k_ary_tree(2, 4)).isomorphic


def test_planar_b2_single_merge():
    P = planar_construction(make_schedule(2, {2: 1}), 5)
    assert P.rank_sizes() == [1, 2, 3, 4, 5]
    assert rgf(P) == expand_rational(make_schedule(2, {2: 1}).rational(), 4)


@pytest.mark.parametrize("b, a, depth", [
    (3, {2: 1, 3: 1}, 6),
    (2, {2: 1}, 6),
    (3, {2: 2}, 5),
    (4, {3: 2, 4: 1}, 5),
])
def test_planar_construction_is_upho(b, a, depth):
    schedule = make_schedule(b, a)
    P = planar_construction(schedule, depth)
    assert verify_upho(P, 3, 2).passed
    assert check_embedding(P) == []
    info = classify_merges(P)
    assert info.total_root_bifurcated <= b - 1
    assert info.root_bifurcated == [a.get(i, 0) for i in range(depth)]
    assert planar_rgf_check(P)


def test_classify_merges_counts():
    P = planar_construction(FIG, 6)
    info = classify_merges(P)
    assert info.root_bifurcated == [0, 0, 1, 1, 0, 0]
    assert info.bifurcated[3] == 3
    assert info.bifurcated[4] == 11
    assert info.spans[3] == {2: 3, 3: 1}
    assert info.spans[4] == {2: 8, 3: 3}
    assert all(P.rank_of[m] < P.rank_of[v] for v, m in info.meets.items())


def test_classify_merges_tree():
    info = classify_merges(k_ary_tree(2, 5))
    assert info.root_bifurcated == [0] * 5
    assert info.bifurcated == [0] * 5
    assert planar_rgf_check(k_ary_tree(2, 5))
    assert planar_rgf_check(chain(5))


def test_classify_merges_structure_errors():
    P = new_poset([[0], [1, 2, 3], [4]], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    with pytest.raises(StructureError) as e:
        classify_merges(P)
    assert e.value.vertex == 4
    with pytest.raises(StructureError) as e:
        classify_merges(bowtie(4))
    assert e.value.vertex == 5


def test_planar_rgf_check_rejects_mismatch():
    P = new_poset([[0], [1, 2], [3, 4, 5]], [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert not planar_rgf_check(P)


def test_check_embedding():
    assert check_embedding(chain(4)) == []
    with pytest.raises(MissingEmbedding):
        check_embedding(bowtie(3))
    P = embedded(bowtie(3), [[0], [1, 2], [3, 4]])
    assert check_embedding(P) == [((1, 4), (2, 3))]
    assert check_embedding(embedded(bowtie(3), [[0], [2, 1], [4, 3]]))


def test_find_embedding():
    tree = k_ary_tree(2, 4)
    found = find_embedding(tree)
    assert found is not None
    assert check_embedding(embedded(tree, found)) == []
    assert find_embedding(bowtie(3)) is None
    assert find_embedding(grid_construction(GridSpec((1, 1), 3))) is None


def test_find_embedding_width_limit():
    with pytest.raises(WidthLimitExceeded):
        find_embedding(k_ary_tree(2, 5), width_limit=10)


def test_dot_export():
    source = to_dot(planar_construction(FIG, 3))
    assert source.startswith("digraph")
    assert "rankdir=BT" in source
    assert "rank=same" in source
    assert "style=invis" in source
    assert "0 -> 1" in source
