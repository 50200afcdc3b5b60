"""Exact scalar arithmetic over F_p (p an odd prime) or the rationals.

Elements of F_p are plain ints in [0, p); rational scalars are
fractions.Fraction.  A Field object carries the arithmetic so that the
rest of the package never touches floating point.  Characteristic 2 is
rejected outright (the theory assumes char F != 2 throughout).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


class CharacteristicTwoError(ValueError):
    pass


class NotInvertibleError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """F_p for an odd prime p, or Q.  Immutable."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == "prime":
            if p is None or not _is_prime(p):
                raise ValueError("p must be a prime, got %r" % (p,))
            if p == 2:
                raise CharacteristicTwoError("characteristic 2 is not supported")
        elif kind == "rational":
            if p is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError("unknown field kind %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @staticmethod
    def prime(p: int) -> "Field":
        return Field("prime", p)

    @staticmethod
    def rational() -> "Field":
        return Field("rational")

    @property
    def char(self) -> int:
        return self.p if self.kind == "prime" else 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "F_%d" % self.p if self.kind == "prime" else "Q"

    # -- element construction ------------------------------------------

    def coerce(self, x) -> Scalar:
        """Bring an int, Fraction, or 'a/b' string into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
            raise TypeError("cannot coerce %r into %r" % (x, self))
        if self.kind == "prime":
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise ZeroDivisionError("denominator divisible by %d" % self.p)
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return x % self.p
        return Fraction(x)

    def zero(self) -> Scalar:
        return 0 if self.kind == "prime" else Fraction(0)

    def one(self) -> Scalar:
        return 1 if self.kind == "prime" else Fraction(1)

    # -- arithmetic ----------------------------------------------------

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.kind == "prime" else -a

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise NotInvertibleError("division by zero")
        if self.kind == "prime":
            return pow(a, -1, self.p)
        return Fraction(1) / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    # -- formatting ----------------------------------------------------

    def to_str(self, a: Scalar) -> str:
        return str(a)

    def elements(self):
        """All field elements; only for prime fields (used in root search)."""
        if self.kind != "prime":
            raise ValueError("cannot enumerate the rationals")
        return range(self.p)
