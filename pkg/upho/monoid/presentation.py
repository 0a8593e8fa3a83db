"""
Однородные представления моноидов: алфавит из односимвольных букв и
соотношения A = B с |A| = |B| >= 2.

Формат файла: первая строка содержит буквы через пробел, далее по строке
"LHS = RHS" на соотношение. Пустые строки и строки с # пропускаются.
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Tuple

from ..errors import IndexTooSmall, InvalidRelation, ParseError

Relation = Tuple[str, str]


@dataclass(frozen=True)
class MonoidPresentation:
    alphabet: Tuple[str, ...]
    relations: Tuple[Relation, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "relations", tuple((str(a), str(b)) for a, b in self.relations))
        if not self.alphabet:
            raise InvalidRelation("alphabet is empty")
        if any(len(s) != 1 for s in self.alphabet):
            raise InvalidRelation(f"letters must be single characters: {list(self.alphabet)}")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidRelation(f"repeated letter in {list(self.alphabet)}")
        letters = set(self.alphabet)
        for lhs, rhs in self.relations:
            if len(lhs) != len(rhs):
                raise InvalidRelation(f"{lhs} = {rhs}: sides have different lengths")
            if len(lhs) < 2:
                raise InvalidRelation(f"{lhs} = {rhs}: relations between single letters are not allowed")
            unknown = set(lhs + rhs) - letters
            if unknown:
                raise InvalidRelation(f"{lhs} = {rhs}: unknown letters {sorted(unknown)}")


def parse_presentation(text: str) -> MonoidPresentation:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("presentation is empty: expected the alphabet on the first line")
    alphabet = lines[0].split()
    relations: List[Relation] = []
    for ln in lines[1:]:
        sides = [s.strip() for s in ln.split("=")]
        if len(sides) != 2 or not all(sides):
            raise ParseError(f"expected 'LHS = RHS', got {ln!r}")
        relations.append((sides[0].replace(" ", ""), sides[1].replace(" ", "")))
    return MonoidPresentation(tuple(alphabet), tuple(relations))


def load_presentation(path: str) -> MonoidPresentation:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read presentation file {path}: {e}")
    return parse_presentation(text)


def stern_presentation() -> MonoidPresentation:
    return MonoidPresentation(("a", "b", "c"), (("ac", "ba"), ("bc", "ca")))


def t_relation(n: int) -> Relation:
    """(LR)^n LL = RR L^{2(n-1)} RL, обе стороны длины 2n + 2."""
    if n < 2:
        raise IndexTooSmall(f"relation index must be at least 2, got {n}")
    return "LR" * n + "LL", "RR" + "L" * (2 * (n - 1)) + "RL"


def s_family(indices: Iterable[int]) -> MonoidPresentation:
    indices = sorted(set(indices))
    return MonoidPresentation(("L", "R"), tuple(t_relation(n) for n in indices))