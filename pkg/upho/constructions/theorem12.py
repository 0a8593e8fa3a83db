from typing import Sequence

from ..config.settings import logger
from ..errors import InvalidParameters
from ..poset.model import RankedPoset
from ..poset.ops import product
from ..series.poly import IntPolynomial, RationalFunction
from .bconstruction import BConstructionSpec, b_construction
from .trees import k_ary_tree


def theorem12_rational(a: Sequence[int], b: Sequence[int]) -> RationalFunction:
    """Π(1 + a_i x) / Π(1 - b_j x)."""
    return RationalFunction(
        IntPolynomial.linear_product(a),
        IntPolynomial.linear_product(-x for x in b),
    )


def theorem12_construction(a: Sequence[int], b: Sequence[int], depth: int) -> RankedPoset:
    """b-конструкция для b_1, умноженная на b_j-арные деревья, j >= 2."""
    if not b:
        raise InvalidParameters("at least one denominator root b_j is required")
    if any(x < 1 for x in b):
        raise InvalidParameters(f"denominator roots must be positive, got {list(b)}")
    P = b_construction(BConstructionSpec(tuple(a), b[0], depth))
    for k in b[1:]:
        P = product(P, k_ary_tree(k, depth), depth)
    logger.info(f"theorem12 a={list(a)} b={list(b)} depth={depth}: rank sizes {P.rank_sizes()}")
    return P
