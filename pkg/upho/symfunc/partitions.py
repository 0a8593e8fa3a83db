from itertools import accumulate
from typing import Iterator, List, Optional, Sequence, Tuple

Partition = Tuple[int, ...]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(x >= y for x, y in zip(parts, parts[1:]))


def partitions(n: int, largest: Optional[int] = None) -> List[Partition]:
    """Разбиения n в обратном лексикографическом порядке: (n), (n-1,1), ..., (1^n)."""
    return list(_partitions(n, n if largest is None else largest))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def dominates(lam: Partition, mu: Partition) -> bool:
    """λ ⊵ μ: частичные суммы λ не меньше частичных сумм μ."""
    width = max(len(lam), len(mu))
    a = list(accumulate(tuple(lam) + (0,) * (width - len(lam))))
    b = list(accumulate(tuple(mu) + (0,) * (width - len(mu))))
    return all(x >= y for x, y in zip(a, b))


def weak_compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def shape_of(composition: Sequence[int]) -> Partition:
    return tuple(sorted((c for c in composition if c), reverse=True))


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"
