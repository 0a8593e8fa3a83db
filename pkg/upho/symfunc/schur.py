from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ..config.settings import logger
from ..errors import InsufficientSeries, InvalidParameters, SizeMismatch
from ..series.poly import IntSeries
from .ehrenborg import Basis, SymmetricFunctionDeg, ehrenborg_monomial
from .partitions import Partition, partitions


def kostka(lam: Partition, mu: Partition) -> int:
    """Число полустандартных таблиц Юнга формы λ и веса μ."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| = {sum(lam)} but |{mu}| = {sum(mu)}")
    return _kostka(lam, mu)


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> int:
    cells = [(row, col) for row, length in enumerate(lam) for col in range(length)]
    tableau = [[0] * length for length in lam]
    remaining = list(mu)
    top = len(mu)

    def backtrack(k: int) -> int:
        if k == len(cells):
            return 1
        row, col = cells[k]
        low = 1
        if col > 0:
            low = max(low, tableau[row][col - 1])  # строки не убывают
        if row > 0:
            low = max(low, tableau[row - 1][col] + 1)  # столбцы строго возрастают
        total = 0
        for val in range(low, top + 1):
            if not remaining[val - 1]:
                continue
            remaining[val - 1] -= 1
            tableau[row][col] = val
            total += backtrack(k + 1)
            remaining[val - 1] += 1
        tableau[row][col] = 0
        return total

    return backtrack(0)


def schur_expand(f: SymmetricFunctionDeg) -> SymmetricFunctionDeg:
    """
    Решает c_μ = Σ_λ d_λ K_{λμ} обратной подстановкой. Обратный
    лексикографический порядок продолжает доминирование, а K_{λλ} = 1.
    """
    if f.basis is not Basis.MONOMIAL:
        raise InvalidParameters("schur_expand expects the monomial basis")
    order = partitions(f.degree)
    d: Dict[Partition, int] = {}
    for idx, mu in enumerate(order):
        d[mu] = f[mu] - sum(d[lam] * _kostka(lam, mu) for lam in order[:idx] if d[lam])
    return SymmetricFunctionDeg(f.degree, Basis.SCHUR, d)


def monomial_from_schur(g: SymmetricFunctionDeg) -> SymmetricFunctionDeg:
    if g.basis is not Basis.SCHUR:
        raise InvalidParameters("monomial_from_schur expects the Schur basis")
    c = {
        mu: sum(d * _kostka(lam, mu) for lam, d in g.coefficients.items())
        for mu in partitions(g.degree)
    }
    return SymmetricFunctionDeg(g.degree, Basis.MONOMIAL, c)


@dataclass
class PositivityReport:
    positive: bool
    # (степень, λ, коэффициент) первого отрицательного d_λ
    witness: Optional[Tuple[int, Partition, int]] = None
    expansions: List[SymmetricFunctionDeg] = field(default_factory=list)


def is_schur_positive(r: IntSeries, max_degree: int) -> PositivityReport:
    if len(r) <= max_degree:
        raise InsufficientSeries(f"need r_0..r_{max_degree}, series has {len(r)} terms")
    report = PositivityReport(True)
    for n in range(1, max_degree + 1):
        g = schur_expand(ehrenborg_monomial(r, n))
        report.expansions.append(g)
        for lam, d in g.items():
            if d < 0:
                logger.warning(f"negative Schur coefficient {d} at s{list(lam)} in degree {n}")
                report.positive = False
                report.witness = (n, lam, d)
                return report
    return report
