from .poly import (
    IntPolynomial, IntSeries, RationalFunction, expand_rational, rgf, match_rational,
)
from .parse import parse_rational
