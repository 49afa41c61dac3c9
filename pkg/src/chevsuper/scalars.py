"""Exact ground scalars: the rationals and prime fields F_p with p > 3.

Every computation in the package is exact.  Characteristic zero uses
``fractions.Fraction`` (plain ``int`` is accepted anywhere a rational is);
positive characteristic uses :class:`FpElement` values produced by a
:class:`PrimeField`.  The ``scalar_*`` helpers give a uniform surface over
both kinds.
"""

from fractions import Fraction
from math import factorial

from .errors import DivisionByZero


def integer_binomial(m, n):
    """Binomial coefficient binom(m, n) for arbitrary integer top argument.

    Defined by the falling factorial m(m-1)...(m-n+1)/n!, which is an
    integer for every integer m, including negative ones:
    integer_binomial(-1, 3) == -1.  Returns 0 for n < 0.
    """
    if n < 0:
        return 0
    num = 1
    for i in range(n):
        num *= m - i
    value, rem = divmod(num, factorial(n))
    assert rem == 0
    return value


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FpElement:
    """Residue r mod p.  Mixes freely with ints (and p-regular Fractions)."""

    __slots__ = ("residue", "p")

    def __init__(self, residue, p):
        self.residue = residue % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("cannot mix F_%d and F_%d" % (self.p, other.p))
            return other.residue
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise DivisionByZero(
                    "denominator %d vanishes mod %d" % (other.denominator, self.p))
            inv = pow(other.denominator % self.p, self.p - 2, self.p)
            return (other.numerator * inv) % self.p
        return NotImplemented

    def __add__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FpElement(self.residue + r, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FpElement(self.residue - r, self.p)

    def __rsub__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FpElement(r - self.residue, self.p)

    def __mul__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FpElement(self.residue * r, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        if r == 0:
            raise DivisionByZero("division by zero in F_%d" % self.p)
        return FpElement(self.residue * pow(r, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        if self.residue == 0:
            raise DivisionByZero("division by zero in F_%d" % self.p)
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return FpElement(r * pow(self.residue, self.p - 2, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.residue, self.p)

    def __pow__(self, k):
        if k < 0:
            if self.residue == 0:
                raise DivisionByZero("division by zero in F_%d" % self.p)
            return FpElement(pow(self.residue, -k * (self.p - 2), self.p), self.p)
        return FpElement(pow(self.residue, k, self.p), self.p)

    def __eq__(self, other):
        r = self._coerce(other)
        if r is NotImplemented:
            return NotImplemented
        return self.residue == r

    def __hash__(self):
        return hash((self.residue, self.p))

    def __bool__(self):
        return self.residue != 0

    def __str__(self):
        return "%d mod %d" % (self.residue, self.p)

    def __repr__(self):
        return "FpElement(%d, %d)" % (self.residue, self.p)


class PrimeField:
    """The field F_p.  Only p > 3 is accepted: the structure constants of the
    basis involve 2 and 3, so smaller characteristics are not meaningful here.
    """

    __slots__ = ("p",)

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError("modulus must be prime, got %r" % (p,))
        if p <= 3:
            raise ValueError("characteristic must exceed 3, got %d" % p)
        self.p = p

    @property
    def name(self):
        return "mod:%d" % self.p

    @property
    def characteristic(self):
        return self.p

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.p != self.p:
                raise ValueError("cannot mix F_%d and F_%d" % (self.p, value.p))
            return value
        if isinstance(value, int):
            return FpElement(value, self.p)
        if isinstance(value, Fraction):
            return FpElement(0, self.p) + value
        raise TypeError("cannot coerce %r into F_%d" % (value, self.p))

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


class RationalField:
    """The rationals; a stateless singleton ``QQ``."""

    __slots__ = ()

    name = "rational"
    characteristic = 0

    def __call__(self, value):
        return Fraction(value)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def parse_field(text):
    """Map a field descriptor string, 'rational' or 'mod:<p>', to a field."""
    if text == "rational":
        return QQ
    if text.startswith("mod:"):
        try:
            p = int(text[4:])
        except ValueError:
            raise ValueError("bad modulus in field descriptor %r" % text)
        return PrimeField(p)
    raise ValueError("unknown field descriptor %r" % text)


def scalar_add(a, b):
    return a + b


def scalar_mul(a, b):
    return a * b


def scalar_neg(a):
    return -a


def scalar_inv(a):
    if isinstance(a, FpElement):
        return 1 / a
    if a == 0:
        raise DivisionByZero("division by zero")
    return Fraction(1, 1) / a


def is_integer(a):
    """True when a scalar is (the image of) a rational integer."""
    if isinstance(a, int):
        return True
    if isinstance(a, Fraction):
        return a.denominator == 1
    if isinstance(a, FpElement):
        return True
    return False
