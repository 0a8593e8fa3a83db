"""
Однородные компоненты функции Эренборга E_P в мономиальном базисе.

Для upho-множества E_P = F_P(x_1) F_P(x_2) ..., поэтому коэффициент при m_μ
равен Π r_{μ_i}. ehrenborg_by_chains считает то же самое прямо по
мультицепям и служит независимой проверкой.
"""
import enum
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, List, Tuple

from ..config.settings import logger
from ..errors import InsufficientDepth, InsufficientSeries, InvalidParameters, StructureError
from ..poset.model import RankedPoset
from ..series.poly import IntSeries
from .partitions import Partition, is_partition, partitions, shape_of, weak_compositions


class Basis(str, enum.Enum):
    MONOMIAL = "monomial"
    SCHUR = "schur"


@dataclass
class SymmetricFunctionDeg:
    degree: int
    basis: Basis
    coefficients: Dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for lam, c in self.coefficients.items():
            lam = tuple(lam)
            if not is_partition(lam) or sum(lam) != self.degree:
                raise InvalidParameters(f"{lam} is not a partition of {self.degree}")
            if c:
                clean[lam] = int(c)
        self.coefficients = clean

    def __getitem__(self, lam: Partition) -> int:
        return self.coefficients.get(tuple(lam), 0)

    def items(self) -> List[Tuple[Partition, int]]:
        """Ненулевые коэффициенты в обратном лексикографическом порядке."""
        return [(lam, self.coefficients[lam])
                for lam in partitions(self.degree) if lam in self.coefficients]


def ehrenborg_monomial(r: IntSeries, n: int) -> SymmetricFunctionDeg:
    if len(r) <= n:
        raise InsufficientSeries(f"need r_0..r_{n}, series has {len(r)} terms")
    coefficients = {
        mu: reduce(lambda acc, part: acc * r[part], mu, 1)
        for mu in partitions(n)
    }
    return SymmetricFunctionDeg(n, Basis.MONOMIAL, coefficients)


def _up_sets(P: RankedPoset) -> List[Dict[int, List[int]]]:
    """above[v][d]: вершины w >= v с rank(w) = rank(v) + d."""
    above: List[Dict[int, List[int]]] = [dict() for _ in range(P.size)]
    for i in reversed(range(P.depth)):
        for v in P.ranks[i]:
            layers: Dict[int, set] = {0: {v}}
            for w in P.up[v]:
                for d, xs in above[w].items():
                    layers.setdefault(d + 1, set()).update(xs)
            above[v] = {d: sorted(xs) for d, xs in layers.items()}
    return above


def ehrenborg_compositions(P: RankedPoset, m: int, n: int) -> Dict[Tuple[int, ...], int]:
    """
    Коэффициенты при x^α для слабых композиций α числа n на m частей:
    число мультицепей 0̂ = t_0 <= t_1 <= ... <= t_{k-1} < t_k с шагами α,
    где k это последняя ненулевая позиция α.
    """
    if P.root is None:
        raise StructureError("Ehrenborg function needs a unique minimum")
    if P.depth <= n:
        raise InsufficientDepth(f"need ranks 0..{n}, poset has {P.depth}")
    if m < n:
        raise InvalidParameters(f"need at least n = {n} variables, got {m}")
    above = _up_sets(P)
    out: Dict[Tuple[int, ...], int] = {}
    for alpha in weak_compositions(n, m):
        k = max((i + 1 for i, a in enumerate(alpha) if a), default=0)
        counts = {P.root: 1}
        for step in alpha[:k]:
            nxt: Dict[int, int] = {}
            for v, c in counts.items():
                for w in above[v].get(step, ()):
                    nxt[w] = nxt.get(w, 0) + c
            counts = nxt
        out[alpha] = sum(counts.values())
    return out


def ehrenborg_by_chains(P: RankedPoset, m: int, n: int) -> SymmetricFunctionDeg:
    """Сворачивает коэффициенты по композициям в разбиения; несимметричность считается ошибкой."""
    coefficients: Dict[Partition, int] = {}
    for alpha, c in ehrenborg_compositions(P, m, n).items():
        mu = shape_of(alpha)
        if mu in coefficients and coefficients[mu] != c:
            raise StructureError(
                f"Ehrenborg function is not symmetric: x^{alpha} has {c}, "
                f"another monomial of shape {mu} has {coefficients[mu]}")
        coefficients[mu] = c
    logger.debug(f"ehrenborg_by_chains n={n} m={m}: {coefficients}")
    return SymmetricFunctionDeg(n, Basis.MONOMIAL, coefficients)
