"""
Критерий тотальной положительности для f = g/h: все корни g отрицательные
вещественные, все корни h положительные вещественные. Корни считаем
последовательностями Штурма над Q, кратности убираем через бесквадратную часть.
"""
from typing import List

import sympy

from ..config.settings import logger
from ..series.poly import IntPolynomial, RationalFunction

_X = sympy.Symbol("x")


def _to_sympy(p: IntPolynomial) -> sympy.Poly:
    return sympy.Poly(list(reversed(p.coefficients)) or [0], _X, domain="QQ")


def _sign_changes(values: List[sympy.Rational]) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def _at_infinity(seq: List[sympy.Poly], negative: bool) -> int:
    signs = []
    for p in seq:
        lc = p.LC()
        signs.append(-lc if negative and p.degree() % 2 else lc)
    return _sign_changes(signs)


def _at(seq: List[sympy.Poly], point: int) -> int:
    return _sign_changes([p.eval(point) for p in seq])


def roots_on_side(p: sympy.Poly, negative: bool) -> int:
    """Число различных вещественных корней на (-∞, 0) или на (0, ∞)."""
    if p.degree() <= 0:
        return 0
    seq = sympy.sturm(p)
    if negative:
        return _at_infinity(seq, True) - _at(seq, 0)
    return _at(seq, 0) - _at_infinity(seq, False)


def _all_roots_on_side(p: sympy.Poly, negative: bool) -> bool:
    if p.degree() <= 0:
        return True
    square_free = p.sqf_part()
    return roots_on_side(square_free, negative) == square_free.degree()


def davydov_check(f: RationalFunction) -> bool:
    g, h = _to_sympy(f.numerator), _to_sympy(f.denominator)
    common = sympy.gcd(g, h)
    if common.degree() > 0:
        g, h = sympy.div(g, common)[0], sympy.div(h, common)[0]
    if g.eval(0) == 0 or h.eval(0) == 0:
        logger.info("zero constant term: not of the form 1 + t·Z[[t]]")
        return False
    ok_g = _all_roots_on_side(g, negative=True)
    ok_h = _all_roots_on_side(h, negative=False)
    logger.debug(f"davydov_check: numerator {ok_g}, denominator {ok_h}")
    return ok_g and ok_h
