"""
Модель градуированного (ранжированного) частично упорядоченного множества.

Храним только конечное усечение: ранги 0..depth-1, рёбра покрытия между
соседними рангами и (необязательно) порядок вершин слева направо на каждом
ранге. Вершины: плотные целые числа; все построители нумеруют их по рангам,
а внутри ранга слева направо.
"""
import json
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from ..errors import (
    DanglingVertex, DuplicateEdge, EdgeRankSkip, EmptyPoset, InsufficientDepth,
    InvalidEmbedding, NonDenseIds, ParseError, VertexNotFound,
)

Rank = Tuple[int, ...]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class RankedPoset:
    ranks: Tuple[Rank, ...]
    covers: FrozenSet[Edge]
    embedding: Optional[Tuple[Rank, ...]] = None

    # производные индексы, строятся один раз
    rank_of: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    position: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    up: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    down: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = sum(len(r) for r in self.ranks)
        rank_of = [0] * n
        position = [0] * n
        for i, rank in enumerate(self.ranks):
            for v in rank:
                rank_of[v] = i
        for rank in (self.embedding if self.embedding is not None else self.ranks):
            for p, v in enumerate(rank):
                position[v] = p
        up: List[List[int]] = [[] for _ in range(n)]
        down: List[List[int]] = [[] for _ in range(n)]
        for u, v in self.covers:
            up[u].append(v)
            down[v].append(u)
        key = position.__getitem__
        object.__setattr__(self, "rank_of", tuple(rank_of))
        object.__setattr__(self, "position", tuple(position))
        object.__setattr__(self, "up", tuple(tuple(sorted(x, key=key)) for x in up))
        object.__setattr__(self, "down", tuple(tuple(sorted(x, key=key)) for x in down))

    @property
    def depth(self) -> int:
        return len(self.ranks)

    @property
    def size(self) -> int:
        return len(self.rank_of)

    @property
    def root(self) -> Optional[int]:
        return self.ranks[0][0] if len(self.ranks[0]) == 1 else None

    def rank_sizes(self) -> List[int]:
        return [len(r) for r in self.ranks]

    def layer(self, i: int) -> Rank:
        """Ранг i слева направо (по укладке, если она есть)."""
        if self.embedding is not None:
            return self.embedding[i]
        return self.ranks[i]

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.size:
            raise VertexNotFound(f"vertex {v!r} is not in the poset (size {self.size})")


def new_poset(
    ranks: Sequence[Sequence[int]],
    covers: Iterable[Sequence[int]],
    embedding: Optional[Sequence[Sequence[int]]] = None,
) -> RankedPoset:
    flat = [v for rank in ranks for v in rank]
    if not flat:
        raise EmptyPoset("poset has no vertices")
    if sorted(flat) != list(range(len(flat))):
        raise NonDenseIds("vertex ids must be exactly 0..n-1, each used once")

    rank_of: Dict[int, int] = {}
    for i, rank in enumerate(ranks):
        for v in rank:
            rank_of[v] = i

    edges = set()
    has_down = set()
    for edge in covers:
        u, v = edge
        for x in (u, v):
            if x not in rank_of:
                raise VertexNotFound(f"edge {tuple(edge)} references unknown vertex {x!r}")
        if rank_of[v] != rank_of[u] + 1:
            raise EdgeRankSkip(
                f"edge ({u}, {v}) goes from rank {rank_of[u]} to rank {rank_of[v]}")
        if (u, v) in edges:
            raise DuplicateEdge(f"edge ({u}, {v}) listed twice")
        edges.add((u, v))
        has_down.add(v)

    for v in flat:
        if rank_of[v] > 0 and v not in has_down:
            raise DanglingVertex(f"vertex {v} on rank {rank_of[v]} covers nothing")

    emb = None
    if embedding is not None:
        if len(embedding) != len(ranks):
            raise InvalidEmbedding(
                f"embedding has {len(embedding)} ranks, poset has {len(ranks)}")
        for i, (order, rank) in enumerate(zip(embedding, ranks)):
            if sorted(order) != sorted(rank):
                raise InvalidEmbedding(f"embedding of rank {i} is not a permutation of the rank")
        emb = tuple(tuple(order) for order in embedding)

    return RankedPoset(tuple(tuple(r) for r in ranks), frozenset(edges), emb)


def build_poset(
    layers: Sequence[Sequence[Hashable]],
    edges: Iterable[Tuple[Hashable, Hashable]],
    embedded: bool = False,
) -> Tuple[RankedPoset, Dict[Hashable, int]]:
    """
    Общий построитель: ключи вершин произвольные, ранги заданы слева направо.
    Нумерует вершины по рангам и возвращает (poset, ключ -> id).
    """
    id_of: Dict[Hashable, int] = {}
    ranks: List[List[int]] = []
    for layer in layers:
        rank = []
        for key in layer:
            id_of[key] = len(id_of)
            rank.append(id_of[key])
        ranks.append(rank)
    covers = [(id_of[a], id_of[b]) for a, b in edges]
    poset = new_poset(ranks, covers, ranks if embedded else None)
    return poset, id_of


def truncate(P: RankedPoset, depth: int) -> RankedPoset:
    """Первые depth рангов P."""
    if not 1 <= depth <= P.depth:
        raise InsufficientDepth(f"cannot truncate a depth-{P.depth} poset to {depth} ranks")
    if depth == P.depth:
        return P
    layers = [P.layer(i) for i in range(depth)]
    edges = [(u, v) for u, v in P.covers if P.rank_of[v] < depth]
    return build_poset(layers, edges, embedded=P.embedding is not None)[0]


# --------------- JSON -----------------

def to_json(P: RankedPoset) -> Dict[str, Any]:
    return {
        "depth": P.depth,
        "ranks": [list(r) for r in P.ranks],
        "covers": [list(e) for e in sorted(P.covers)],
        "embedding": [list(r) for r in P.embedding] if P.embedding is not None else None,
    }


def from_json(data: Dict[str, Any]) -> RankedPoset:
    try:
        ranks = data["ranks"]
        covers = data["covers"]
    except (KeyError, TypeError):
        raise ParseError("poset JSON needs 'ranks' and 'covers'")
    P = new_poset(ranks, [tuple(e) for e in covers], data.get("embedding"))
    if "depth" in data and data["depth"] != P.depth:
        raise ParseError(f"'depth' is {data['depth']} but {P.depth} ranks are listed")
    return P


def dumps(P: RankedPoset) -> str:
    return json.dumps(to_json(P))


def loads(text: str) -> RankedPoset:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not a JSON poset: {e}")
    return from_json(data)
