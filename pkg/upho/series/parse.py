import re
from tokenize import TokenError
from typing import List

import sympy
from sympy.polys.polyerrors import BasePolynomialError
from sympy.parsing.sympy_parser import (
    convert_xor, implicit_multiplication_application, parse_expr, standard_transformations,
)

from ..errors import ParseError
from .poly import IntPolynomial, RationalFunction

_X = sympy.Symbol("x")
_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)
_ALLOWED = re.compile(r"^[\sx0-9+\-*/^()]+$")


def _int_coefficients(expr: sympy.Expr, text: str) -> List[int]:
    try:
        poly = sympy.Poly(sympy.expand(expr), _X)
    except BasePolynomialError:
        raise ParseError(f"{text!r} is not a rational function of x")
    out = []
    for c in reversed(poly.all_coeffs()):
        if not c.is_integer:
            raise ParseError(f"{text!r} has non-integer coefficient {c}")
        out.append(int(c))
    return out


def parse_rational(text: str) -> RationalFunction:
    """
    "(1+x)(1+2x)/(1-x)" -> RationalFunction. Переменная только x,
    коэффициенты целые; неявное умножение и ^ разрешены.
    """
    if not text or not _ALLOWED.match(text):
        raise ParseError(f"cannot parse rational function {text!r}")
    try:
        expr = parse_expr(text, local_dict={"x": _X}, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, ValueError, TokenError, sympy.SympifyError) as e:
        raise ParseError(f"cannot parse rational function {text!r}: {e}")
    num, den = sympy.fraction(sympy.together(expr))
    return RationalFunction(
        IntPolynomial(_int_coefficients(num, text)),
        IntPolynomial(_int_coefficients(den, text)),
    )
