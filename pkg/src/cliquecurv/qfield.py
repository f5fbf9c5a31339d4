"""Exact arithmetic in Q(sqrt 5), enough to build polytopes with golden-ratio coordinates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=False)
class QSqrt5:
    """The number ``a + b*sqrt(5)`` with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _lift(x) -> "QSqrt5":
        return x if isinstance(x, QSqrt5) else QSqrt5(Fraction(x))

    def __add__(self, other):
        o = self._lift(other)
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def sign(self) -> int:
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return int(a > 0 or b > 0)
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2
        if a > 0:
            return 1 if a * a > 5 * b * b else -1
        return 1 if 5 * b * b > a * a else -1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self) -> str:
        return f"QSqrt5({self.a}, {self.b})"


ZERO = QSqrt5()
ONE = QSqrt5(1)
PHI = QSqrt5(Fraction(1, 2), Fraction(1, 2))
INV_PHI = QSqrt5(Fraction(-1, 2), Fraction(1, 2))  # phi - 1
