"""
Замыкание конгруэнции на словах фиксированной длины.

Слово длины ℓ кодируется числом в системе счисления с основанием |Σ|
(старшая цифра соответствует первой букве), поэтому порядок кодов совпадает с
лексикографическим. Классы образуют компоненты union-find по всем одиночным
подстановкам XAY ~ XBY; представитель класса: минимальный код.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..config.settings import WORD_BUDGET, logger
from ..errors import BudgetExceeded, InvalidParameters
from ..poset.model import RankedPoset, build_poset
from .presentation import MonoidPresentation


class UnionFind:
    """Плотный union-find; корень компоненты равен её минимальному элементу."""

    def __init__(self, size: int) -> None:
        self.p: List[int] = list(range(size))

    def find(self, x: int) -> int:
        p = self.p
        # path halving
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        pa, pb = self.find(a), self.find(b)
        if pa == pb:
            return False
        if pa < pb:
            self.p[pb] = pa
        else:
            self.p[pa] = pb
        return True

    def roots(self) -> List[int]:
        return [self.find(x) for x in range(len(self.p))]


@dataclass
class CongruenceTable:
    presentation: MonoidPresentation
    max_len: int
    # canonical[ℓ][code]: минимальный код класса слова
    canonical: List[List[int]] = field(default_factory=list)

    @property
    def base(self) -> int:
        return len(self.presentation.alphabet)

    def encode(self, word: str) -> int:
        index = {a: i for i, a in enumerate(self.presentation.alphabet)}
        code = 0
        for ch in word:
            if ch not in index:
                raise InvalidParameters(f"letter {ch!r} is not in the alphabet")
            code = code * self.base + index[ch]
        return code

    def decode(self, code: int, length: int) -> str:
        letters = []
        for _ in range(length):
            code, d = divmod(code, self.base)
            letters.append(self.presentation.alphabet[d])
        return "".join(reversed(letters))

    def _check_length(self, length: int) -> None:
        if not 0 <= length <= self.max_len:
            raise InvalidParameters(f"length {length} outside 0..{self.max_len}")

    def class_of(self, word: str) -> str:
        """Каноническое (лексикографически минимальное) слово класса."""
        self._check_length(len(word))
        return self.decode(self.canonical[len(word)][self.encode(word)], len(word))

    def classes(self, length: int) -> List[int]:
        self._check_length(length)
        return sorted(set(self.canonical[length]))

    def count(self, length: int) -> int:
        return len(self.classes(length))

    def counts(self) -> List[int]:
        return [self.count(ln) for ln in range(self.max_len + 1)]

    def members(self, length: int) -> Dict[str, List[str]]:
        self._check_length(length)
        out: Dict[str, List[str]] = {}
        for code, root in enumerate(self.canonical[length]):
            out.setdefault(self.decode(root, length), []).append(self.decode(code, length))
        return out


def check_budget(pres: MonoidPresentation, max_len: int, budget: Optional[int] = None) -> None:
    budget = WORD_BUDGET if budget is None else budget
    s = len(pres.alphabet)
    total = sum(s ** ln for ln in range(max_len + 1))
    if total > budget:
        raise BudgetExceeded(
            f"{total} words up to length {max_len} over {s} letters exceed the budget {budget}")


def _close_length(table: CongruenceTable, length: int) -> List[int]:
    s = table.base
    uf = UnionFind(s ** length)
    for lhs, rhs in table.presentation.relations:
        k = len(lhs)
        if k > length:
            continue
        a, b = table.encode(lhs), table.encode(rhs)
        for pos in range(length - k + 1):
            tail = length - k - pos
            scale = s ** tail
            for x in range(s ** pos):
                head = x * s ** (length - pos)
                for y in range(scale):
                    uf.union(head + a * scale + y, head + b * scale + y)
    return uf.roots()


def congruence_classes(
    pres: MonoidPresentation, max_len: int, budget: Optional[int] = None,
) -> CongruenceTable:
    if max_len < 0:
        raise InvalidParameters(f"max_len must be non-negative, got {max_len}")
    check_budget(pres, max_len, budget)
    table = CongruenceTable(pres, max_len)
    for length in range(max_len + 1):
        table.canonical.append(_close_length(table, length))
        logger.debug(f"length {length}: {len(set(table.canonical[-1]))} classes")
    return table


def monoid_poset(
    pres: MonoidPresentation, max_len: int, budget: Optional[int] = None,
    table: Optional[CongruenceTable] = None,
) -> RankedPoset:
    """Вершины: классы слов длины 0..max_len; класс(w) ⋖ класс(w·a)."""
    table = table or congruence_classes(pres, max_len, budget)
    s = table.base
    layers = [[(ln, c) for c in table.classes(ln)] for ln in range(max_len + 1)]
    edges = set()
    for ln in range(max_len):
        lower, upper = table.canonical[ln], table.canonical[ln + 1]
        for w, cw in enumerate(lower):
            for a in range(s):
                edges.add(((ln, cw), (ln + 1, upper[w * s + a])))
    P, _ = build_poset(layers, sorted(edges))
    logger.info(f"monoid poset over {''.join(pres.alphabet)}: rank sizes {P.rank_sizes()}")
    return P


@dataclass
class CancellationReport:
    passed: bool
    # (буква a, X, Y): aX ~ aY, но X !~ Y
    witness: Optional[Tuple[str, str, str]] = None


def left_cancellation_check(
    pres: MonoidPresentation, max_len: int, budget: Optional[int] = None,
    table: Optional[CongruenceTable] = None,
) -> CancellationReport:
    """Для каждой буквы a и длины ℓ < max_len отображение [w] -> [a·w] инъективно."""
    table = table or congruence_classes(pres, max_len, budget)
    s = table.base
    for a, letter in enumerate(pres.alphabet):
        for ln in range(max_len):
            lower, upper = table.canonical[ln], table.canonical[ln + 1]
            shift = a * s ** ln
            image: Dict[int, int] = {}
            for w, cw in enumerate(lower):
                target = upper[shift + w]
                seen = image.setdefault(target, cw)
                if seen != cw:
                    x, y = sorted((seen, cw))
                    witness = (letter, table.decode(x, ln), table.decode(y, ln))
                    logger.warning(f"left cancellation fails: {witness}")
                    return CancellationReport(False, witness)
    return CancellationReport(True)
