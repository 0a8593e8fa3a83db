"""
Решётчатые upho-множества: точки y с 0 <= y_i <= a_i; на ранге k лежат точки
не более чем с k ненулевыми координатами, (y;k) ⋖ (z;k+1) если y и z
отличаются не более чем в одной координате. Производящая функция рангов
Π(1 + a_i x) / (1 - x).
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..config.settings import logger
from ..errors import InvalidParameters, VertexNotFound
from ..poset.model import RankedPoset, build_poset
from ..series.poly import IntPolynomial, RationalFunction

Point = Tuple[int, ...]
GridKey = Tuple[Point, int]


@dataclass(frozen=True)
class GridSpec:
    a: Tuple[int, ...]
    depth: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if any(x < 1 for x in self.a):
            raise InvalidParameters(f"grid parameters must be positive, got {list(self.a)}")
        if self.depth < 1:
            raise InvalidParameters(f"depth must be at least 1, got {self.depth}")


def elementary_values(a: Sequence[int]) -> List[int]:
    """e_0..e_n для (a_1..a_n): коэффициенты Π(1 + a_i x)."""
    poly = IntPolynomial.linear_product(a)
    return [poly[j] for j in range(len(a) + 1)]


def grid_rational(a: Sequence[int]) -> RationalFunction:
    return RationalFunction(IntPolynomial.linear_product(a), IntPolynomial((1, -1)))


def _nonzero(y: Point) -> int:
    return sum(1 for c in y if c)


def _neighbours(y: Point, a: Tuple[int, ...]) -> List[Point]:
    """y и все точки, отличающиеся от y ровно в одной координате."""
    out = [y]
    for i, bound in enumerate(a):
        for value in range(bound + 1):
            if value != y[i]:
                out.append(y[:i] + (value,) + y[i + 1:])
    return out


@lru_cache(maxsize=64)
def _grid(spec: GridSpec) -> Tuple[RankedPoset, Dict[GridKey, int]]:
    points = sorted(itertools.product(*(range(x + 1) for x in spec.a)))
    layers: List[List[GridKey]] = []
    for k in range(spec.depth):
        layers.append([(y, k) for y in points if _nonzero(y) <= k])
    edges = []
    for k in range(spec.depth - 1):
        for y, _ in layers[k]:
            for z in _neighbours(y, spec.a):
                if _nonzero(z) <= k + 1:
                    edges.append(((y, k), (z, k + 1)))
    P, id_of = build_poset(layers, edges)
    logger.debug(f"grid a={list(spec.a)} depth={spec.depth}: rank sizes {P.rank_sizes()}")
    return P, id_of


def grid_construction(spec: GridSpec) -> RankedPoset:
    return _grid(spec)[0]


def grid_vertex(spec: GridSpec, y: Sequence[int], k: int) -> int:
    """id вершины (y;k) в grid_construction(spec)."""
    _, id_of = _grid(spec)
    key = (tuple(y), k)
    if key not in id_of:
        raise VertexNotFound(f"point {list(y)} is not on rank {k} of the grid")
    return id_of[key]


def grid_point(spec: GridSpec, v: int) -> GridKey:
    P, id_of = _grid(spec)
    P.check_vertex(v)
    # id плотные и нумеруются по порядку ключей
    return list(id_of)[v]


def grid_filter_map(spec: GridSpec, p: int) -> Dict[int, int]:
    """
    Явная биекция ι_p: (y;k) -> ((y + p) mod (a + 1); k + k_p) с рангов
    k < depth - k_p на фильтр над p. Ключи и значения: id вершин
    grid_construction(spec).
    """
    P, id_of = _grid(spec)
    P.check_vertex(p)
    shift, k_p = grid_point(spec, p)
    mapping: Dict[int, int] = {}
    for (y, k), v in id_of.items():
        if k + k_p >= spec.depth:
            continue
        z = tuple((c + s) % (bound + 1) for c, s, bound in zip(y, shift, spec.a))
        mapping[v] = id_of[(z, k + k_p)]
    return mapping
