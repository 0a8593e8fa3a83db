import random
from typing import Dict, List

import networkx as nx
import pytest

from upho.constructions import (
    BConstructionSpec, GridSpec, b_construction, bowtie, chain, grid_construction, k_ary_tree,
)
from upho.monoid import monoid_poset, s_family, stern_presentation
from upho.planar import make_schedule, planar_construction
from upho.poset import RankedPoset, new_poset


def relabel(P: RankedPoset, seed: int) -> RankedPoset:
    """Та же структура под случайной перестановкой id."""
    perm = list(range(P.size))
    random.Random(seed).shuffle(perm)
    ranks = [[perm[v] for v in rank] for rank in P.ranks]
    covers = [(perm[u], perm[v]) for u, v in sorted(P.covers)]
    return new_poset(ranks, covers)


def to_nx(P: RankedPoset) -> nx.DiGraph:
    G = nx.DiGraph()
    for v in range(P.size):
        G.add_node(v, rank=P.rank_of[v])
    G.add_edges_from(P.covers)
    return G


def nx_isomorphic(P: RankedPoset, Q: RankedPoset) -> bool:
    return nx.is_isomorphic(to_nx(P), to_nx(Q), node_match=lambda a, b: a["rank"] == b["rank"])


def corpus() -> Dict[str, RankedPoset]:
    return {
        "chain4": chain(4),
        "tree2_4": k_ary_tree(2, 4),
        "tree3_3": k_ary_tree(3, 3),
        "bowtie4": bowtie(4),
        "grid11_4": grid_construction(GridSpec((1, 1), 4)),
        "grid12_4": grid_construction(GridSpec((1, 2), 4)),
        "b1_2_4": b_construction(BConstructionSpec((1,), 2, 4)),
        "b0_3_3": b_construction(BConstructionSpec((), 3, 3)),
        "planar_2_4": planar_construction(make_schedule(2, {2: 1}), 4),
        "stern2": monoid_poset(stern_presentation(), 2),
        "free3": monoid_poset(s_family([]), 3),
        "mismatch": new_poset([[0], [1, 2], [3, 4, 5]],
                              [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]),
    }


@pytest.fixture(scope="session")
def small_corpus() -> Dict[str, RankedPoset]:
    return corpus()


def up_set(P: RankedPoset, s: int) -> List[int]:
    seen = {s}
    stack = [s]
    while stack:
        for w in P.up[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return sorted(seen)
