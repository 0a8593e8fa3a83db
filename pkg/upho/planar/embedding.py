"""
Плоские укладки по рангам: вершина ранга i стоит на высоте i, порядок на
ранге задаёт x-координату. Рёбра (u,v) и (u',v') между одними и теми же
рангами пересекаются, если pos(u) < pos(u') и pos(v) > pos(v').
"""
import bisect
from itertools import groupby
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..config.settings import WIDTH_LIMIT, logger
from ..errors import MissingEmbedding, WidthLimitExceeded
from ..poset.model import Edge, RankedPoset, new_poset

Crossing = Tuple[Edge, Edge]
Embedding = Tuple[Tuple[int, ...], ...]


def check_embedding(P: RankedPoset) -> List[Crossing]:
    if P.embedding is None:
        raise MissingEmbedding("poset has no embedding to check")
    pos = P.position
    by_rank: Dict[int, List[Edge]] = {}
    for u, v in P.covers:
        by_rank.setdefault(P.rank_of[u], []).append((u, v))

    crossings: List[Crossing] = []
    for i in sorted(by_rank):
        edges = sorted(by_rank[i], key=lambda e: (pos[e[0]], pos[e[1]]))
        # рёбра из более левых вершин, упорядоченные по позиции верхнего конца
        seen: List[Tuple[int, Edge]] = []
        for _, group in groupby(edges, key=lambda e: pos[e[0]]):
            group = list(group)
            for e in group:
                start = bisect.bisect_right(seen, (pos[e[1]], (P.size, P.size)))
                crossings.extend((f, e) for _, f in seen[start:])
            for e in group:
                bisect.insort(seen, (pos[e[1]], e))
    return crossings


class _Search:
    def __init__(self, P: RankedPoset):
        self.P = P
        self.dead: Set[Tuple[int, Tuple[int, ...]]] = set()
        self.orders: List[Tuple[int, ...]] = []

    def orders_of(self, i: int, parent_pos: Dict[int, int]):
        """Все порядки ранга i без пересечений с рёбрами из ранга i-1."""
        rank = list(self.P.ranks[i])
        span = {
            v: (min(parent_pos[u] for u in self.P.down[v]),
                max(parent_pos[u] for u in self.P.down[v]))
            for v in rank
        } if i else {v: (0, 0) for v in rank}
        placed: List[int] = []
        used = [False] * len(rank)

        def extend(right: int):
            if len(placed) == len(rank):
                yield tuple(placed)
                return
            for k, v in enumerate(rank):
                if used[k] or span[v][0] < right:
                    continue
                used[k] = True
                placed.append(v)
                yield from extend(max(right, span[v][1]))
                placed.pop()
                used[k] = False

        yield from extend(0)

    def run(self, i: int, parent_pos: Dict[int, int]) -> bool:
        if i == self.P.depth:
            return True
        for order in self.orders_of(i, parent_pos):
            if (i, order) in self.dead:
                continue
            self.orders.append(order)
            if self.run(i + 1, {v: p for p, v in enumerate(order)}):
                return True
            self.orders.pop()
            self.dead.add((i, order))
        return False


def find_embedding(P: RankedPoset, width_limit: Optional[int] = None) -> Optional[Embedding]:
    """Перебор с откатом; None, если плоской укладки усечения нет."""
    limit = WIDTH_LIMIT if width_limit is None else width_limit
    widest = max(P.rank_sizes())
    if widest > limit:
        raise WidthLimitExceeded(f"rank width {widest} exceeds the search limit {limit}")
    search = _Search(P)
    if not search.run(0, {}):
        logger.info(f"no planar embedding for poset with rank sizes {P.rank_sizes()}")
        return None
    return tuple(search.orders)


def embedded(P: RankedPoset, embedding: Sequence[Sequence[int]]) -> RankedPoset:
    """Копия P с заданной укладкой."""
    return new_poset(P.ranks, sorted(P.covers), embedding)
