"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values; GF(p)
scalars are :class:`GFElement` instances.  Both support ordinary
arithmetic operators, so all higher layers are field-agnostic.
"""

from fractions import Fraction

from .errors import CharacteristicTwo, InvalidInput, WrongField


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GFElement:
    """An element of GF(p), stored as the canonical representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise WrongField("mixed prime fields GF(%d) and GF(%d)" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFElement(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return GFElement(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.v * pow(o.v, self.p - 2, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GFElement(-self.v, self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "GF%d(%d)" % (self.p, self.v)


class Field:
    """Common interface of the two supported scalar fields."""

    kind = None

    @property
    def characteristic(self):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def parse(self, text):
        """Parse 'a' or 'a/b' into a field element."""
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.coerce(Fraction(int(num), int(den)))
        return self.coerce(int(text))

    def format(self, x):
        """Render an element in plain manifest syntax ('a' or 'a/b')."""
        raise NotImplementedError

    def format_tagged(self, x):
        """Render with the field made explicit ('a/b' or 'a mod p')."""
        raise NotImplementedError

    def half(self):
        return self.one / self.coerce(2)


class RationalField(Field):
    kind = "rational"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    @property
    def characteristic(self):
        return 0

    def coerce(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, GFElement):
            raise WrongField("cannot coerce a GF(p) element into Q")
        raise TypeError("cannot coerce %r into Q" % (value,))

    def format(self, x):
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)

    format_tagged = format

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class PrimeField(Field):
    kind = "gf"

    def __init__(self, p):
        if not isinstance(p, int) or not is_prime(p):
            raise InvalidInput("PrimeField parameter must be prime, got %r" % (p,))
        self.p = p
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    @property
    def characteristic(self):
        return self.p

    def coerce(self, value):
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise WrongField("element of GF(%d) used in GF(%d)" % (value.p, self.p))
            return value
        if isinstance(value, int):
            return GFElement(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError("denominator vanishes in GF(%d)" % self.p)
            return GFElement(value.numerator, self.p) / GFElement(value.denominator, self.p)
        raise TypeError("cannot coerce %r into GF(%d)" % (value, self.p))

    def elements(self):
        """All field elements in canonical order 0, 1, ..., p-1."""
        return [GFElement(v, self.p) for v in range(self.p)]

    def format(self, x):
        return str(x.v)

    def format_tagged(self, x):
        return "%d mod %d" % (x.v, self.p)

    def half(self):
        if self.p == 2:
            raise CharacteristicTwo("1/2 is undefined over GF(2)")
        return super().half()

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


def field_from_spec(text):
    """Build a field from manifest syntax: 'rational' or 'gf <p>'."""
    parts = text.split()
    if parts == ["rational"]:
        return RationalField()
    if len(parts) == 2 and parts[0] == "gf":
        return PrimeField(int(parts[1]))
    raise InvalidInput("unknown field spec %r" % text)
