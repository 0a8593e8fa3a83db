from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

from ..errors import ScheduleInvalid
from ..series.poly import IntPolynomial, RationalFunction

# (ранг r, номер пары атомов p)
Event = Tuple[int, int]


@dataclass(frozen=True)
class MergeSchedule:
    """
    b: число детей у каждой вершины, a[r]: сколько root-bifurcated
    вершин появляется на ранге r. assignments: события (r, p): на ранге r
    склеиваются поддеревья над атомами p и p+1.
    """
    b: int
    a: Dict[int, int] = field(default_factory=dict)
    assignments: Tuple[Event, ...] = ()

    def __post_init__(self) -> None:
        if self.b < 1:
            raise ScheduleInvalid(f"up-degree b must be at least 1, got {self.b}")
        for r, count in self.a.items():
            if r < 1 or count < 0:
                raise ScheduleInvalid(f"bad entry a_{r} = {count}")
        if self.a.get(1, 0) != 0:
            raise ScheduleInvalid("a_1 must be 0: a rank-1 vertex covers only the root")
        total = sum(self.a.values())
        if total > self.b - 1:
            raise ScheduleInvalid(
                f"sum of a_r is {total}, at most b - 1 = {self.b - 1} merges fit")
        pairs = [p for _, p in self.assignments]
        if len(set(pairs)) != len(pairs):
            raise ScheduleInvalid(f"atom-pair index used twice in {list(self.assignments)}")
        if any(not 1 <= p <= self.b - 1 for p in pairs):
            raise ScheduleInvalid(f"atom-pair indices must lie in 1..{self.b - 1}")
        if list(self.assignments) != sorted(self.assignments):
            raise ScheduleInvalid("events must be sorted by rank, then pair index")
        counts: Dict[int, int] = {}
        for r, _ in self.assignments:
            counts[r] = counts.get(r, 0) + 1
        if counts != {r: c for r, c in self.a.items() if c}:
            raise ScheduleInvalid("events do not match the a_r counts")

    def events_at(self, distance: int) -> List[int]:
        return [p for r, p in self.assignments if r == distance]

    def denominator(self) -> IntPolynomial:
        """Q(x) = 1 - b x + Σ a_r x^r."""
        top = max([r for r, c in self.a.items() if c], default=1)
        coefficients = [0] * (top + 1)
        coefficients[0] = 1
        coefficients[1] -= self.b
        for r, c in self.a.items():
            coefficients[r] += c
        return IntPolynomial(coefficients)

    def rational(self) -> RationalFunction:
        return RationalFunction(IntPolynomial.one(), self.denominator())

    def q_at_one(self) -> int:
        return self.denominator().at(1)


def make_schedule(b: int, a: Mapping[int, int]) -> MergeSchedule:
    """Пары атомов раздаются слева направо в порядке возрастания ранга."""
    events: List[Event] = []
    p = 1
    for r in sorted(a):
        for _ in range(max(a[r], 0)):
            events.append((r, p))
            p += 1
    return MergeSchedule(b, dict(a), tuple(events))
