"""Exact coefficient fields: the rationals and prime fields F_p.

Elements are plain Python values (Fraction for Q, int in [0, p) for F_p);
the Field object supplies the arithmetic. No floating point anywhere.
"""

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (characteristic 0) or F_p for an odd prime p."""

    def __init__(self, characteristic=32003):
        if characteristic == 0:
            self.p = 0
        else:
            if characteristic == 2 or not _is_prime(characteristic):
                raise ValueError("characteristic must be 0 or an odd prime, got %r"
                                 % (characteristic,))
            self.p = characteristic

    @property
    def characteristic(self):
        return self.p

    @property
    def is_prime_field(self):
        return self.p != 0

    def __call__(self, x):
        """Coerce an int or Fraction into the field."""
        if self.p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return x % self.p
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(QQ)" if self.p == 0 else "Field(F_%d)" % self.p


QQ = Field(0)
