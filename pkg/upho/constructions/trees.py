from typing import List, Tuple

from ..config.settings import logger
from ..errors import InvalidParameters
from ..poset.model import RankedPoset, build_poset


def _check_depth(depth: int) -> None:
    if depth < 1:
        raise InvalidParameters(f"depth must be at least 1, got {depth}")


def k_ary_tree(k: int, depth: int) -> RankedPoset:
    """Полное k-арное дерево: у каждой вершины k детей, порядок детей = укладка."""
    if k < 1:
        raise InvalidParameters(f"tree arity must be at least 1, got {k}")
    _check_depth(depth)
    layers: List[List[Tuple[int, int]]] = [[(0, 0)]]
    edges = []
    for i in range(1, depth):
        layer = []
        for _, j in layers[-1]:
            for c in range(k):
                child = (i, j * k + c)
                layer.append(child)
                edges.append(((i - 1, j), child))
        layers.append(layer)
    P, _ = build_poset(layers, edges, embedded=True)
    logger.debug(f"k_ary_tree k={k} depth={depth}: {P.size} vertices")
    return P


def chain(depth: int) -> RankedPoset:
    return k_ary_tree(1, depth)


def bowtie(depth: int) -> RankedPoset:
    """
    "Бабочка": корень, затем по две вершины на ранг, каждая покрывает обе
    вершины предыдущего ранга. Upho, но не планарно и не полурешётка.
    """
    _check_depth(depth)
    layers = [[(0, 0)]] + [[(i, 0), (i, 1)] for i in range(1, depth)]
    edges = []
    for i in range(1, depth):
        for u in layers[i - 1]:
            for v in layers[i]:
                edges.append((u, v))
    return build_poset(layers, edges)[0]
