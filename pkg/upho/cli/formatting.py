import json
from typing import Any, Dict, List, Sequence

from ..poset.model import RankedPoset, to_json
from ..symfunc.ehrenborg import SymmetricFunctionDeg
from ..symfunc.partitions import format_partition


def series_strings(values: Sequence[int]) -> List[str]:
    # десятичные строки: ранги растут как b^n
    return [str(int(v)) for v in values]


def series_line(values: Sequence[int]) -> str:
    return " ".join(series_strings(values))


def schur_lines(g: SymmetricFunctionDeg) -> List[str]:
    """Строки "коэффициент · s[λ]" в обратном лексикографическом порядке."""
    return [f"{c} · s{format_partition(lam)}" for lam, c in g.items()]


def poset_document(P: RankedPoset) -> Dict[str, Any]:
    doc = to_json(P)
    doc["rank_sizes"] = series_strings(P.rank_sizes())
    return doc


def dump(doc: Any) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2, sort_keys=True)
