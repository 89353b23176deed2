"""Exact arithmetic in the rationals and in real quadratic fields Q(sqrt d)."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, "QuadraticNumber"]


def _squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadraticNumber:
    """An element a + b*sqrt(d) with rational a, b and square-free d > 1.

    Rationals embed with d = 1 and b = 0, so mixed arithmetic with plain
    ints and Fractions works.  Mixing two different radicands is an error.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = 1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        if self.b == 0:
            d = 1
        elif not _squarefree(d):
            raise ValueError(f"radicand {d} is not square-free")
        self.d = d

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticNumber":
        return cls(0, 1, d)

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other)
        return NotImplemented

    def _common(self, other: "QuadraticNumber") -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise ValueError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._common(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._common(other)
        return QuadraticNumber(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        num = self * other.conjugate()
        return QuadraticNumber(num.a / n, num.b / n, num.d)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(d)."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else sb

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b and (self.b == 0 or self.d == other.d)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return f"({self.a} + {self.b}*sqrt({self.d}))"


def four_cos_squared(m: int) -> QuadraticNumber:
    """4 cos^2(pi/m) for the labels whose value lies in a quadratic field."""
    table = {
        2: QuadraticNumber(0),
        3: QuadraticNumber(1),
        4: QuadraticNumber(2),
        5: QuadraticNumber(Fraction(3, 2), Fraction(1, 2), 5),
        6: QuadraticNumber(3),
        8: QuadraticNumber(2, 1, 2),
        10: QuadraticNumber(Fraction(5, 2), Fraction(1, 2), 5),
        12: QuadraticNumber(2, 1, 3),
    }
    if m not in table:
        raise ValueError(f"4cos^2(pi/{m}) is not quadratic over Q")
    return table[m]
