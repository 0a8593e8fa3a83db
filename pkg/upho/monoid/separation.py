from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple

from ..config.settings import logger
from ..errors import InvalidParameters
from .congruence import congruence_classes
from .presentation import s_family


@dataclass
class SeparationReport:
    subsets: List[FrozenSet[int]]
    counts: List[List[int]]
    # первая пара номеров подмножеств с совпавшими векторами
    coinciding: Optional[Tuple[int, int]] = None
    # (i, j, n, разность) там, где на длине 2n+2 счётчики отличаются не на 1
    sharp_failures: List[Tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def distinct(self) -> bool:
        return self.coinciding is None

    @property
    def passed(self) -> bool:
        return self.distinct and not self.sharp_failures


def distinct_rgf_check(
    subsets: Iterable[Iterable[int]], max_len: int, budget: Optional[int] = None,
) -> SeparationReport:
    """
    Считает классы для каждого подмножества соотношений t_n и проверяет, что
    векторы попарно различны. Если два подмножества впервые расходятся на t_n,
    их счётчики на длине 2n+2 должны отличаться ровно на 1.
    """
    sets = [frozenset(s) for s in subsets]
    for s in sets:
        if s and 2 * max(s) + 2 > max_len:
            raise InvalidParameters(
                f"relation t_{max(s)} has length {2 * max(s) + 2} > max_len {max_len}")

    counts = [congruence_classes(s_family(s), max_len, budget).counts() for s in sets]
    report = SeparationReport(sets, counts)
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if counts[i] == counts[j] and report.coinciding is None:
                report.coinciding = (i, j)
                logger.warning(f"subsets {sorted(sets[i])} and {sorted(sets[j])} give the same counts")
            diff = sets[i] ^ sets[j]
            if not diff:
                continue
            n = min(diff)
            length = 2 * n + 2
            delta = abs(counts[i][length] - counts[j][length])
            if delta != 1:
                report.sharp_failures.append((i, j, n, delta))
                logger.warning(f"subsets {sorted(sets[i])} and {sorted(sets[j])} differ by "
                               f"{delta} at length {length}")
    return report
