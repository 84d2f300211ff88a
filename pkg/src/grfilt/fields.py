"""Coefficient fields: exact rationals (default) and odd prime fields.

Field elements are ordinary objects supporting +, -, *, /, ==, bool; the
field object itself only hands out zero, one, and of(int).  Everything
downstream does exact arithmetic through these operators, so swapping the
field never touches the linear algebra.
"""

from fractions import Fraction


class RationalField:
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def of(self, n):
        return Fraction(n)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("grfilt.QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class FpElement:
    __slots__ = ("p", "v")

    def __init__(self, p, v):
        self.p = p
        self.v = v % p

    def _check(self, other):
        if not isinstance(other, FpElement) or other.p != self.p:
            raise TypeError("mixed-field arithmetic")
        return other

    def __add__(self, other):
        return FpElement(self.p, self.v + self._check(other).v)

    def __sub__(self, other):
        return FpElement(self.p, self.v - self._check(other).v)

    def __mul__(self, other):
        return FpElement(self.p, self.v * self._check(other).v)

    def __truediv__(self, other):
        o = self._check(other)
        if o.v == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.p, self.v * pow(o.v, self.p - 2, self.p))

    def __neg__(self):
        return FpElement(self.p, -self.v)

    def __eq__(self, other):
        return (isinstance(other, FpElement) and other.p == self.p
                and other.v == self.v)

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"{self.v}~{self.p}"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"
        self.zero = FpElement(p, 0)
        self.one = FpElement(p, 1)

    def of(self, n):
        return FpElement(self.p, n)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("grfilt.Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def field_from_name(name):
    """Parse a field choice: "Q" or "Fp:<p>"."""
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r} (expected Q or Fp:<p>)")
