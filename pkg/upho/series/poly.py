"""
Точная арифметика целочисленных многочленов, усечённых рядов и рациональных
функций. Только int: размеры рангов растут как b^n.
"""
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from ..errors import NonUnitConstantTerm
from ..poset.model import RankedPoset


def _trim(coefficients: Iterable[int]) -> Tuple[int, ...]:
    c = [int(x) for x in coefficients]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def linear_product(cls, roots_signs: Iterable[int]) -> "IntPolynomial":
        """Π(1 + c·x) по всем c."""
        out = cls.one()
        for c in roots_signs:
            out = out * cls((1, c))
        return out

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def at(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class IntSeries:
    coefficients: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        """Свёртка, усечённая до меньшего порядка."""
        n = min(len(self), len(other))
        a, b = self.coefficients, other.coefficients
        return IntSeries(sum(a[t] * b[k - t] for t in range(k + 1)) for k in range(n))

    def to_list(self) -> List[int]:
        return list(self.coefficients)


@dataclass(frozen=True)
class RationalFunction:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        # знаменатель с постоянным членом -1 приводим к 1
        if self.denominator[0] == -1:
            object.__setattr__(self, "numerator", -self.numerator)
            object.__setattr__(self, "denominator", -self.denominator)


def expand_rational(f: RationalFunction, order: int) -> IntSeries:
    """Коэффициенты c_0..c_order с denominator·c = numerator (линейная рекуррента)."""
    d = f.denominator.coefficients
    if not d or d[0] != 1:
        raise NonUnitConstantTerm(
            f"denominator constant term must be ±1, got {d[0] if d else 0}")
    out: List[int] = []
    for k in range(order + 1):
        acc = f.numerator[k]
        for i in range(1, min(k, len(d) - 1) + 1):
            acc -= d[i] * out[k - i]
        out.append(acc)
    return IntSeries(out)


def rgf(P: RankedPoset) -> IntSeries:
    return IntSeries(P.rank_sizes())


def match_rational(s: IntSeries, f: RationalFunction) -> bool:
    if len(s) == 0:
        return True
    return expand_rational(f, len(s) - 1) == s