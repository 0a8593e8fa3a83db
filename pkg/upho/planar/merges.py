from dataclasses import dataclass, field
from typing import Dict, List

from ..config.settings import logger
from ..errors import StructureError
from ..poset.checks import meet
from ..poset.model import RankedPoset


@dataclass
class MergeClassification:
    """
    Вершины, покрывающие ровно две вершины. root_bifurcated[i]: сколько из
    них на ранге i имеют точной нижней гранью корень, bifurcated[i]: прочие.
    spans[i][k]: число таких вершин ранга i, у которых нижняя грань лежит
    на k рангов ниже.
    """
    root_bifurcated: List[int]
    bifurcated: List[int]
    meets: Dict[int, int] = field(default_factory=dict)
    spans: List[Dict[int, int]] = field(default_factory=list)

    @property
    def total_root_bifurcated(self) -> int:
        return sum(self.root_bifurcated)


def classify_merges(P: RankedPoset) -> MergeClassification:
    root = P.root
    if root is None:
        raise StructureError("poset has no unique minimum")
    out = MergeClassification([0] * P.depth, [0] * P.depth, spans=[{} for _ in range(P.depth)])
    for i in range(1, P.depth):
        for v in P.layer(i):
            below = P.down[v]
            if len(below) > 2:
                raise StructureError(f"vertex {v} covers {len(below)} vertices", vertex=v)
            if len(below) < 2:
                continue
            m = meet(P, below[0], below[1])
            if not isinstance(m, int):
                raise StructureError(
                    f"vertices covered by {v} have no unique meet: {m}", vertex=v)
            out.meets[v] = m
            if m == root:
                out.root_bifurcated[i] += 1
            else:
                out.bifurcated[i] += 1
            k = i - P.rank_of[m]
            out.spans[i][k] = out.spans[i].get(k, 0) + 1
    return out


def planar_rgf_check(P: RankedPoset) -> bool:
    """r_i = b·r_{i-1} - Σ_k a_k·r_{i-k}, где a_k: наблюдаемые root-bifurcated."""
    info = classify_merges(P)
    degrees = {len(P.up[v]) for i in range(P.depth - 1) for v in P.ranks[i]}
    if len(degrees) > 1:
        logger.warning(f"up-degree is not constant: {sorted(degrees)}")
        return False
    b = degrees.pop() if degrees else 0
    r = P.rank_sizes()
    a = info.root_bifurcated
    for i in range(1, P.depth):
        expected = b * r[i - 1] - sum(a[k] * r[i - k] for k in range(1, i + 1))
        if r[i] != expected:
            logger.warning(f"rank {i}: {r[i]} vertices, recurrence gives {expected}")
            return False
    return True
