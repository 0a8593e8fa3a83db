"""
Плоская upho-конструкция с производящей функцией 1/Q(x),
Q(x) = 1 - b x + a_2 x^2 + ... + a_n x^n.

Строим по рангам. Каждой вершине ранга i-1 выдаём b упорядоченных слотов
для детей; затем для каждой вершины v ранга j <= i-2 и каждого события
(r = i - j, p) склеиваем соседние слоты на границе поддеревьев над детьми
p и p+1 вершины v.
"""
from typing import Dict, List, Set, Tuple

from ..config.settings import logger
from ..errors import InvalidParameters, StructureError
from ..poset.model import RankedPoset, new_poset
from .schedule import MergeSchedule

Slot = int


def _extreme(children: List[List[int]], v: int, steps: int, last: bool) -> int:
    for _ in range(steps):
        v = children[v][-1 if last else 0]
    return v


def merge_pairs(
    schedule: MergeSchedule,
    layers: List[List[int]],
    children: List[List[int]],
    pos: Dict[int, int],
    i: int,
    deepest_first: bool = True,
) -> List[Tuple[Slot, Slot]]:
    """Пары склеиваемых слотов ранга i (слот = pos(родителя)·b + номер ребёнка)."""
    b = schedule.b
    used: Set[Slot] = set()
    pairs: List[Tuple[Slot, Slot]] = []
    order = range(i - 2, -1, -1) if deepest_first else range(i - 1)
    for j in order:
        for p in schedule.events_at(i - j):
            for v in layers[j]:
                # самый правый потомок ребёнка p-1 и самый левый ребёнка p на ранге i-1
                x = _extreme(children, children[v][p - 1], i - 2 - j, last=True)
                y = _extreme(children, children[v][p], i - 2 - j, last=False)
                sx, sy = pos[x] * b + b - 1, pos[y] * b
                if sy != sx + 1 or sx in used or sy in used:
                    raise StructureError(
                        f"cannot merge slots {sx} and {sy} on rank {i} under vertex {v}", vertex=v)
                used.update((sx, sy))
                pairs.append((sx, sy))
    return sorted(pairs)


def planar_construction(
    schedule: MergeSchedule, depth: int, deepest_first: bool = True,
) -> RankedPoset:
    if depth < 1:
        raise InvalidParameters(f"depth must be at least 1, got {depth}")
    b = schedule.b
    layers: List[List[int]] = [[0]]
    children: List[List[int]] = [[]]
    pos: Dict[int, int] = {0: 0}
    covers: List[Tuple[int, int]] = []

    for i in range(1, depth):
        prev = layers[-1]
        merged = dict(merge_pairs(schedule, layers, children, pos, i, deepest_first))
        layer: List[int] = []
        slot = 0
        while slot < len(prev) * b:
            v = len(children)
            children.append([])
            pos[v] = len(layer)
            layer.append(v)
            owned = [slot, merged[slot]] if slot in merged else [slot]
            for s in owned:
                parent = prev[s // b]
                children[parent].append(v)
                covers.append((parent, v))
            slot = owned[-1] + 1
        layers.append(layer)

    P = new_poset(layers, covers, layers)
    logger.info(f"planar_construction b={b} a={dict(schedule.a)}: rank sizes {P.rank_sizes()}")
    return P
