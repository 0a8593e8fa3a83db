import re
from typing import Dict, FrozenSet, List, Sequence, Tuple

from ..errors import InvalidParameters

INT_LIST_RE = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
A_FLAG_RE = re.compile(r"^--a(\d+)(?:=(-?\d+))?$")
EMPTY_SET_RE = re.compile(r"^\s*(∅|\{\s*\}|empty)?\s*$", re.IGNORECASE)


def parse_int_list(raw: str) -> List[int]:
    """"1, 2,3" -> [1, 2, 3]; пустая строка -> []."""
    text = (raw or "").strip()
    if not text:
        return []
    if not INT_LIST_RE.match(text):
        raise InvalidParameters(f"expected comma-separated integers, got {raw!r}")
    return [int(x) for x in text.split(",")]


def parse_subsets(raw: str) -> List[FrozenSet[int]]:
    """"∅;2;3;2,3" -> [∅, {2}, {3}, {2, 3}]."""
    out: List[FrozenSet[int]] = []
    for chunk in (raw or "").split(";"):
        if EMPTY_SET_RE.match(chunk):
            out.append(frozenset())
        else:
            out.append(frozenset(parse_int_list(chunk.strip().strip("{}"))))
    return out


def split_a_flags(extra: Sequence[str]) -> Tuple[Dict[int, int], List[str]]:
    """
    Вытаскивает --a2 1 / --a3=1 из нераспознанных аргументов.
    Возвращает ({rank: count}, остаток).
    """
    a: Dict[int, int] = {}
    rest: List[str] = []
    i = 0
    while i < len(extra):
        m = A_FLAG_RE.match(extra[i])
        if not m:
            rest.append(extra[i])
            i += 1
            continue
        value = m.group(2)
        if value is None:
            if i + 1 >= len(extra) or not re.match(r"^-?\d+$", extra[i + 1]):
                raise InvalidParameters(f"{extra[i]} needs an integer value")
            value = extra[i + 1]
            i += 1
        a[int(m.group(1))] = int(value)
        i += 1
    return a, rest
