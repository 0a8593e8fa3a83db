from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from typing import Dict, FrozenSet, List, Optional, Set, Tuple, Union

from ..config.settings import WORKERS, logger
from ..errors import InsufficientDepth
from .iso import are_isomorphic
from .model import RankedPoset, truncate
from .ops import order_filter


@dataclass(frozen=True)
class NoMeet:
    """Общих нижних граней нет (несколько минимальных элементов)."""


@dataclass(frozen=True)
class NonUnique:
    antichain: Tuple[int, ...]


MeetResult = Union[int, NoMeet, NonUnique]


@dataclass
class UphoReport:
    min_depth: int
    max_root_rank: int
    checked_roots: List[Tuple[int, int]] = field(default_factory=list)
    failures: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def unique_min_check(P: RankedPoset) -> bool:
    if len(P.ranks[0]) != 1:
        return False
    return all(P.down[v] for v in range(P.size) if P.rank_of[v] > 0)


def down_set(P: RankedPoset, v: int) -> Set[int]:
    P.check_vertex(v)
    seen = {v}
    stack = [v]
    while stack:
        for w in P.down[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _maximal(P: RankedPoset, common: Set[int]) -> MeetResult:
    if not common:
        return NoMeet()
    # common замкнуто вниз: w максимален, если ни одно его покрытие не в common
    top = sorted(w for w in common if not any(x in common for x in P.up[w]))
    if len(top) == 1:
        return top[0]
    return NonUnique(tuple(top))


def meet(P: RankedPoset, u: int, v: int) -> MeetResult:
    return _maximal(P, down_set(P, u) & down_set(P, v))


def is_meet_semilattice(P: RankedPoset) -> Optional[Tuple[int, int]]:
    """Первая пара вершин без единственной точной нижней грани, либо None."""
    downs: Dict[int, FrozenSet[int]] = {}
    for rank in P.ranks:
        for v in rank:
            acc = {v}
            for w in P.down[v]:
                acc |= downs[w]
            downs[v] = frozenset(acc)
    for v in range(P.size):
        for u in range(v + 1, P.size):
            if not isinstance(_maximal(P, set(downs[u] & downs[v])), int):
                return (v, u)
    return None


def _check_root(P: RankedPoset, s: int) -> Tuple[int, int, bool]:
    d = P.depth - P.rank_of[s]
    report = are_isomorphic(order_filter(P, s), truncate(P, d), certify=False)
    return s, d, report.isomorphic


def verify_upho(
    P: RankedPoset,
    min_depth: int,
    max_root_rank: int,
    workers: Optional[int] = None,
) -> UphoReport:
    """
    Сравнивает фильтр над каждой вершиной s ранга 1..max_root_rank, усечённый до
    d = depth - rank(s) рангов, с самим P, усечённым до d рангов.
    """
    if min_depth < 1 or max_root_rank < 0:
        raise InsufficientDepth("min_depth must be >= 1 and max_root_rank >= 0")
    if P.depth < min_depth + max_root_rank:
        raise InsufficientDepth(
            f"poset has {P.depth} ranks, need min_depth + max_root_rank = "
            f"{min_depth + max_root_rank}")

    roots = [s for i in range(1, max_root_rank + 1) for s in P.layer(i)]
    workers = WORKERS if workers is None else workers
    if workers > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_root, repeat(P), roots))
    else:
        results = [_check_root(P, s) for s in roots]

    report = UphoReport(min_depth, max_root_rank)
    for s, d, ok in results:
        report.checked_roots.append((s, d))
        if not ok:
            logger.warning(f"filter above vertex {s} (rank {P.rank_of[s]}) is not isomorphic "
                           f"to the {d}-rank truncation")
            report.failures.append(s)
    logger.info(f"upho check: {len(roots)} roots, {len(report.failures)} failures")
    return report
