"""
Рекурсивная b-конструкция: ранг i состоит из групп G_{i,0} (ранг i решётки
с тем же a) и G_{i,j}, 1 <= j <= i; каждая G_{i,j} состоит из b-1 копий ранга j-1 самой конструкции.
Производящая функция Π(1 + a_i x) / (1 - b x).
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..config.settings import logger
from ..errors import InvalidParameters
from ..poset.model import RankedPoset, new_poset
from ..series.poly import IntPolynomial, RationalFunction
from .grid import GridSpec, grid_construction


@dataclass(frozen=True)
class BConstructionSpec:
    a: Tuple[int, ...]
    b: int
    depth: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.b < 1:
            raise InvalidParameters(f"b must be at least 1, got {self.b}")
        # заодно проверит a и depth
        GridSpec(self.a, self.depth)

    def grid(self) -> GridSpec:
        return GridSpec(self.a, self.depth)


def b_rational(a: Sequence[int], b: int) -> RationalFunction:
    return RationalFunction(IntPolynomial.linear_product(a), IntPolynomial((1, -b)))


def b_construction(spec: BConstructionSpec) -> RankedPoset:
    G = grid_construction(spec.grid())
    copies = spec.b - 1

    # sizes[i] = r_i; offsets[i][j] = начало группы G_{i,j} внутри ранга i
    sizes: List[int] = []
    offsets: List[List[int]] = []
    # local_edges[i] = покрытия ранг i-1 -> ранг i в локальных индексах рангов
    local_edges: List[List[Tuple[int, int]]] = [[]]

    for i in range(spec.depth):
        groups = [len(G.ranks[i])] + [copies * sizes[j - 1] for j in range(1, i + 1)]
        off = [0]
        for g in groups[:-1]:
            off.append(off[-1] + g)
        offsets.append(off)
        sizes.append(sum(groups))
        if i == 0:
            continue

        edges: List[Tuple[int, int]] = []
        # G_{i-1,0} -> G_{i,0}: рёбра решётки
        g_lo, g_hi = G.ranks[i - 1][0], G.ranks[i][0]
        for u, v in G.covers:
            if G.rank_of[u] == i - 1:
                edges.append((u - g_lo, v - g_hi))
        # каждая вершина G_{i,1} покрывает весь G_{i-1,0}
        for y in range(len(G.ranks[i - 1])):
            for c in range(copies):
                edges.append((y, off[1] + c))
        # G_{i-1,j} -> G_{i,j+1}: копия c повторяет покрытия рангов j-1 -> j
        for j in range(1, i):
            lo, hi = offsets[i - 1][j], off[j + 1]
            for x, y in local_edges[j]:
                for c in range(copies):
                    edges.append((lo + c * sizes[j - 1] + x, hi + c * sizes[j] + y))
        local_edges.append(edges)

    starts = [0]
    for s in sizes[:-1]:
        starts.append(starts[-1] + s)
    ranks = [list(range(start, start + s)) for start, s in zip(starts, sizes)]
    covers = [
        (starts[i - 1] + x, starts[i] + y)
        for i in range(1, spec.depth)
        for x, y in local_edges[i]
    ]
    P = new_poset(ranks, covers)
    logger.info(f"b_construction a={list(spec.a)} b={spec.b}: rank sizes {sizes}")
    return P
