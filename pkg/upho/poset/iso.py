"""
Проверка изоморфизма усечений: уточнение раскраски (затравка: ранг,
сигнатура: мультимножества цветов соседей сверху и снизу), затем
индивидуализация с откатом на ничьих. Сертификат: хеш канонической формы,
построенной той же индивидуализацией с отсечением по автоморфизмам.
"""
import hashlib
import json
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..config.settings import logger
from .model import RankedPoset

Adjacency = Sequence[Sequence[int]]


@dataclass(frozen=True)
class IsoReport:
    isomorphic: bool
    witness: Optional[Dict[int, int]] = None
    certificates: Optional[Tuple[str, str]] = None


def refine(colors: List[int], up: Adjacency, down: Adjacency) -> List[int]:
    """
    Уточняет раскраску до устойчивой. Новые цвета: номера сигнатур в
    отсортированном порядке, поэтому результат не зависит от нумерации вершин.
    """
    count = len(set(colors))
    while True:
        sigs = [
            (colors[v],
             tuple(sorted(colors[w] for w in up[v])),
             tuple(sorted(colors[w] for w in down[v])))
            for v in range(len(colors))
        ]
        table = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == count:
            return new
        colors, count = new, len(table)


Code = Tuple[Tuple[int, int], ...]


class _Canonizer:
    """
    Индивидуализация-уточнение до дискретной раскраски. Канонический код:
    минимальный по всем листьям список покрытий в метках листа. Ветки,
    эквивалентные уже пройденным по найденным автоморфизмам, отсекаются.
    """

    def __init__(self, P: RankedPoset):
        self.P = P
        self.first: Optional[Tuple[Code, Dict[int, int], List[int]]] = None
        self.best: Optional[Code] = None
        self.automorphisms: List[Dict[int, int]] = []

    def encode(self, colors: List[int]) -> Tuple[Code, Dict[int, int]]:
        rank_of = self.P.rank_of
        order = sorted(range(self.P.size), key=lambda v: (rank_of[v], colors[v]))
        label = {v: i for i, v in enumerate(order)}
        code = tuple(sorted((label[u], label[v]) for u, v in self.P.covers))
        return code, label

    def leaf(self, colors: List[int], path: List[int]) -> Optional[int]:
        code, label = self.encode(colors)
        if self.first is None:
            self.first = (code, label, path)
            self.best = code
            return None
        if code < self.best:
            self.best = code
        first_code, first_label, first_path = self.first
        if code != first_code:
            return None
        vertex_at = {i: v for v, i in label.items()}
        g = {v: vertex_at[i] for v, i in first_label.items()}
        self.automorphisms.append(g)
        d = 0
        while d < min(len(path), len(first_path)) and path[d] == first_path[d]:
            d += 1
        # g фиксирует общий префикс и переводит ветку первого листа в текущую
        if d < len(path) and all(g[first_path[i]] == path[i] for i in range(d + 1)):
            return d
        return None

    def _orbit_roots(self, path: List[int]) -> List[int]:
        parent = list(range(self.P.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        fixed = set(path)
        for g in self.automorphisms:
            if all(g[v] == v for v in fixed):
                for v, w in g.items():
                    rv, rw = find(v), find(w)
                    if rv != rw:
                        parent[max(rv, rw)] = min(rv, rw)
        return [find(v) for v in range(self.P.size)]

    def search(self, colors: List[int], path: List[int]) -> Optional[int]:
        cells: Dict[int, List[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        ties = [c for c, vs in cells.items() if len(vs) > 1]
        if not ties:
            return self.leaf(colors, path)

        # самый нижний ранг, затем наименьший цвет: выбор не зависит от нумерации
        rank_of = self.P.rank_of
        cell = cells[min(ties, key=lambda c: (rank_of[cells[c][0]], c))]
        level = len(path)
        fresh = max(colors) + 1
        explored: List[int] = []
        for y in cell:
            if explored and self.automorphisms:
                roots = self._orbit_roots(path)
                if roots[y] in {roots[x] for x in explored}:
                    continue
            explored.append(y)
            trial = list(colors)
            trial[y] = fresh
            jump = self.search(refine(trial, self.P.up, self.P.down), path + [y])
            if jump is not None and jump < level:
                return jump
        return None


def canonical_form(P: RankedPoset) -> Tuple[Tuple[int, ...], Code]:
    """(размеры рангов, покрытия в канонической нумерации)."""
    canonizer = _Canonizer(P)
    canonizer.search(refine(list(P.rank_of), P.up, P.down), [])
    return tuple(P.rank_sizes()), canonizer.best


def certificate(P: RankedPoset) -> str:
    """Дайджест канонической формы: равен у усечений тогда и только тогда, когда они изоморфны."""
    sizes, code = canonical_form(P)
    payload = json.dumps([list(sizes), [list(e) for e in code]])
    return hashlib.sha256(payload.encode()).hexdigest()


class _Matcher:
    def __init__(self, P: RankedPoset, Q: RankedPoset):
        self.P, self.Q = P, Q
        n = P.size
        self.n = n
        self.up = list(P.up) + [tuple(w + n for w in ws) for ws in Q.up]
        self.down = list(P.down) + [tuple(w + n for w in ws) for ws in Q.down]

    def balanced(self, colors: List[int]) -> bool:
        return Counter(colors[:self.n]) == Counter(colors[self.n:])

    def search(self, colors: List[int]) -> Optional[Dict[int, int]]:
        n = self.n
        cells_p: Dict[int, List[int]] = {}
        cells_q: Dict[int, List[int]] = {}
        for v, c in enumerate(colors):
            (cells_p if v < n else cells_q).setdefault(c, []).append(v)

        ties = [c for c, vs in cells_p.items() if len(vs) > 1]
        if not ties:
            witness = {cells_p[c][0]: cells_q[c][0] - n for c in cells_p}
            return witness if self.preserves(witness) else None

        # сначала самый нижний ранг, затем наименьший id
        cell = min(ties, key=lambda c: (self.P.rank_of[cells_p[c][0]], cells_p[c][0]))
        x = cells_p[cell][0]
        fresh = max(colors) + 1
        for y in cells_q[cell]:
            trial = list(colors)
            trial[x] = trial[y] = fresh
            trial = refine(trial, self.up, self.down)
            if not self.balanced(trial):
                continue
            found = self.search(trial)
            if found is not None:
                return found
        return None

    def preserves(self, witness: Dict[int, int]) -> bool:
        Qc = self.Q.covers
        return all((witness[u], witness[v]) in Qc for u, v in self.P.covers)


def are_isomorphic(P: RankedPoset, Q: RankedPoset, certify: bool = True) -> IsoReport:
    certs = (certificate(P), certificate(Q)) if certify else None
    if P.rank_sizes() != Q.rank_sizes() or len(P.covers) != len(Q.covers):
        return IsoReport(False, None, certs)
    if certs is not None and certs[0] != certs[1]:
        return IsoReport(False, None, certs)

    matcher = _Matcher(P, Q)
    colors = refine(list(P.rank_of) + list(Q.rank_of), matcher.up, matcher.down)
    if not matcher.balanced(colors):
        return IsoReport(False, None, certs)
    witness = matcher.search(colors)
    if witness is None:
        logger.debug(f"refinement is balanced but no witness exists ({P.size} vertices)")
        return IsoReport(False, None, certs)
    return IsoReport(True, witness, certs)
