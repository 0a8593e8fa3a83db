from typing import Dict, List, Tuple

from ..errors import InsufficientDepth
from .model import RankedPoset, build_poset


def filter_with_map(P: RankedPoset, s: int) -> Tuple[RankedPoset, Dict[int, int]]:
    """Главный фильтр над s вместе с отображением старый id -> новый id."""
    P.check_vertex(s)
    layers: List[List[int]] = [[s]]
    edges = []
    for _ in range(P.rank_of[s] + 1, P.depth):
        nxt = set()
        for u in layers[-1]:
            for v in P.up[u]:
                nxt.add(v)
                edges.append((u, v))
        layers.append(sorted(nxt, key=P.position.__getitem__))
    poset, id_of = build_poset(layers, edges, embedded=P.embedding is not None)
    return poset, id_of


def order_filter(P: RankedPoset, s: int) -> RankedPoset:
    return filter_with_map(P, s)[0]


def _is_point(P: RankedPoset) -> bool:
    # одноэлементное upho-множество точно при любой глубине
    return P.size == 1


def product(P: RankedPoset, Q: RankedPoset, depth: int) -> RankedPoset:
    """
    Декартово произведение, усечённое до рангов < depth:
    (p,q) ⋖ (p',q') если по одной координате покрытие, а другая совпадает.
    """
    if depth < 1:
        raise InsufficientDepth(f"product depth must be positive, got {depth}")
    for name, X in (("left", P), ("right", Q)):
        if X.depth < depth and not _is_point(X):
            raise InsufficientDepth(
                f"{name} factor has {X.depth} ranks, product needs {depth}")

    layers: List[List[Tuple[int, int]]] = []
    for k in range(depth):
        layer = []
        for t in range(k + 1):
            if t >= P.depth or k - t >= Q.depth:
                continue
            for p in P.layer(t):
                for q in Q.layer(k - t):
                    layer.append((p, q))
        layers.append(layer)

    edges = []
    for k in range(depth - 1):
        for p, q in layers[k]:
            for p2 in P.up[p]:
                edges.append(((p, q), (p2, q)))
            for q2 in Q.up[q]:
                edges.append(((p, q), (p, q2)))
    return build_poset(layers, edges)[0]
