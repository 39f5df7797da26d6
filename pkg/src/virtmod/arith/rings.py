"""The supported Euclidean domains and their elements.

Three rings are available: the integers, ``F_p[x]`` for a prime ``p`` and
``Q[x]``.  Ring objects work on *raw* values (Python ``int`` for the
integers, tuples of coefficients in ascending degree for polynomials) so
that matrix algorithms can run without wrapper overhead; ``Element`` wraps
a raw value together with its ring for the public API.

Canonical associates are the non-negative integers and the monic
polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from virtmod.errors import (
    BothZero,
    DivisionByZero,
    ParseError,
    RingMismatch,
    ZeroElement,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime_int(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for ``n < 3.3 * 10**24``."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Ring:
    """Common interface of the supported domains (operations on raw values)."""

    kind = ""
    zero: object
    one: object

    def __call__(self, value) -> "Element":
        return Element(self, self.coerce(value))

    # Subclasses provide: coerce, add, sub, neg, mul, is_zero, is_unit,
    # size, divmod, normalize, unit_inverse, tag, to_json_value, format.

    def is_field(self) -> bool:
        return False

    def content_scale(self, values):
        """A unit rescaling ``values`` to a size-reduced normal form, or None.

        Only QQ[x] needs this: rows are rescaled to primitive integer
        content to keep rational coefficients from growing.
        """
        return None

    def exact_div(self, a, b):
        q, r = self.divmod(a, b)
        if not self.is_zero(r):
            raise ValueError(f"{self.format(b)} does not divide {self.format(a)}")
        return q

    def divides(self, a, b) -> bool:
        """True iff ``a | b``."""
        if self.is_zero(a):
            return self.is_zero(b)
        return self.is_zero(self.divmod(b, a)[1])

    def canonical(self, a):
        if self.is_zero(a):
            return a
        return self.normalize(a)[1]

    def associates(self, a, b) -> bool:
        return self.canonical(a) == self.canonical(b)

    def power(self, a, e: int):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def xgcd(self, a, b):
        """Raw extended gcd: ``(g, u, v)`` with ``u*a + v*b = g``, g canonical."""
        if self.is_zero(a) and self.is_zero(b):
            raise BothZero("gcd(0, 0) is undefined")
        r0, r1 = a, b
        s0, s1 = self.one, self.zero
        t0, t1 = self.zero, self.one
        while not self.is_zero(r1):
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(q, s1))
            t0, t1 = t1, self.sub(t0, self.mul(q, t1))
        unit, g = self.normalize(r0)
        inv = self.unit_inverse(unit)
        return g, self.mul(inv, s0), self.mul(inv, t0)

    def gcd(self, a, b):
        if self.is_zero(a) and self.is_zero(b):
            return self.zero
        while not self.is_zero(b):
            a, b = b, self.divmod(a, b)[1]
        return self.canonical(a)

    def lcm(self, a, b):
        if self.is_zero(a) or self.is_zero(b):
            return self.zero
        return self.canonical(self.exact_div(self.mul(a, b), self.gcd(a, b)))


@dataclass(frozen=True)
class IntegerRing(Ring):
    kind = "int"

    zero = 0
    one = 1

    def coerce(self, value):
        if isinstance(value, Element):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} element used in {self}")
            return value.value
        if isinstance(value, bool):
            raise ParseError(f"not an integer: {value!r}")
        if isinstance(value, int):
            return value
        if isinstance(value, str):
            try:
                return int(value.strip(), 10)
            except ValueError:
                raise ParseError(f"not a decimal integer: {value!r}") from None
        raise ParseError(f"not an integer: {value!r}")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a == 1 or a == -1

    def size(self, a):
        return abs(a)

    def divmod(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        r = a % abs(b)
        return (a - r) // b, r

    def normalize(self, a):
        if a == 0:
            raise ZeroElement("zero has no canonical associate")
        return (-1, -a) if a < 0 else (1, a)

    def unit_inverse(self, u):
        return u

    def canonical(self, a):
        return abs(a)

    def gcd(self, a, b):
        from math import gcd

        return gcd(a, b)

    def from_int(self, n):
        return n

    def tag(self):
        return "int"

    def to_json_value(self, a):
        return str(a)

    def format(self, a):
        return str(a)

    def __str__(self):
        return "ZZ"


class PolyRing(Ring):
    """Dense univariate polynomials over a field; values are coefficient tuples."""

    zero = ()

    def _red(self, c):
        raise NotImplementedError

    def _inv(self, c):
        raise NotImplementedError

    def _parse_coeff(self, c):
        raise NotImplementedError

    @property
    def one(self):
        return (self._red(1),)

    def coerce(self, value):
        if isinstance(value, Element):
            if value.ring != self:
                raise RingMismatch(f"{value.ring} element used in {self}")
            return value.value
        if isinstance(value, (list, tuple)):
            return self._strip([self._parse_coeff(c) for c in value])
        return self._strip([self._parse_coeff(value)])

    def _strip(self, coeffs):
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        return tuple(coeffs[:n])

    def x(self):
        return (self._red(0), self._red(1))

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = self._red(out[i] + c)
        return self._strip(out)

    def neg(self, a):
        return tuple(self._red(-c) for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._strip([self._red(c) for c in out])

    def scale(self, c, a):
        return self._strip([self._red(c * x) for x in a])

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return len(a) == 1

    def size(self, a):
        return len(a) - 1

    def degree(self, a):
        return len(a) - 1

    def divmod(self, a, b):
        if not b:
            raise DivisionByZero("division by the zero polynomial")
        db = len(b) - 1
        if len(a) <= db:
            return (), a
        inv = self._inv(b[-1])
        r = list(a)
        q = [0] * (len(a) - db)
        for k in range(len(a) - 1 - db, -1, -1):
            c = self._red(r[k + db] * inv)
            q[k] = c
            if c:
                for j in range(db + 1):
                    r[k + j] = self._red(r[k + j] - c * b[j])
        return self._strip(q), self._strip(r[:db])

    def normalize(self, a):
        if not a:
            raise ZeroElement("zero has no canonical associate")
        lc = a[-1]
        if lc == 1:
            return self.one, a
        return (lc,), self.scale(self._inv(lc), a)

    def unit_inverse(self, u):
        return (self._inv(u[0]),)

    def derivative(self, a):
        return self._strip([self._red(i * a[i]) for i in range(1, len(a))])

    def from_int(self, n):
        return self._strip([self._red(n)])

    def evaluate(self, a, x):
        acc = self._red(0)
        for c in reversed(a):
            acc = self._red(acc * x + c)
        return acc

    def format(self, a):
        if not a:
            return "0"
        terms = []
        for i in range(len(a) - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c)
            if "/" in cs or cs.startswith("-"):
                cs = f"({cs})"
            if not mono:
                terms.append(cs)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)


@dataclass(frozen=True)
class PolyRingFp(PolyRing):
    p: int = 2
    kind = "fp"

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int) or not is_prime_int(self.p):
            raise ParseError(f"F_p[x] needs a prime p, got {self.p!r}")

    def _red(self, c):
        return c % self.p

    def _inv(self, c):
        c %= self.p
        if c == 0:
            raise DivisionByZero("zero coefficient has no inverse")
        return pow(c, self.p - 2, self.p)

    def _parse_coeff(self, c):
        if isinstance(c, bool):
            raise ParseError(f"bad F_{self.p} coefficient {c!r}")
        if isinstance(c, int):
            return c % self.p
        if isinstance(c, str):
            try:
                return int(c.strip(), 10) % self.p
            except ValueError:
                raise ParseError(f"bad F_{self.p} coefficient {c!r}") from None
        raise ParseError(f"bad F_{self.p} coefficient {c!r}")

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        p = self.p
        return self._strip([c % p for c in out])

    def tag(self):
        return f"fp:{self.p}"

    def to_json_value(self, a):
        return list(a)

    def __str__(self):
        return f"GF({self.p})[x]"


@dataclass(frozen=True)
class PolyRingQ(PolyRing):
    kind = "qx"

    def _red(self, c):
        return c if isinstance(c, Fraction) else Fraction(c)

    def _inv(self, c):
        if c == 0:
            raise DivisionByZero("zero coefficient has no inverse")
        return 1 / Fraction(c)

    def _parse_coeff(self, c):
        if isinstance(c, bool):
            raise ParseError(f"bad rational coefficient {c!r}")
        if isinstance(c, (int, Fraction)):
            return Fraction(c)
        if isinstance(c, str):
            try:
                return Fraction(c.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational coefficient {c!r}") from None
        raise ParseError(f"bad rational coefficient {c!r}")

    def content_scale(self, values):
        den = 1
        for v in values:
            for c in v:
                d = c.denominator
                if d != 1:
                    den = den * d // math.gcd(den, d)
        num = 0
        for v in values:
            for c in v:
                num = math.gcd(num, c.numerator * (den // c.denominator))
                if num == 1:
                    break
            if num == 1:
                break
        if num == 0 or (num == 1 and den == 1):
            return None
        return Fraction(den, num)

    def tag(self):
        return "qx"

    def to_json_value(self, a):
        return [c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in a]

    def __str__(self):
        return "QQ[x]"


ZZ = IntegerRing()
QQx = PolyRingQ()


def Fpx(p: int) -> PolyRingFp:
    return PolyRingFp(p)


def parse_ring(spec) -> Ring:
    """Ring from its JSON form: ``"int"``, ``"qx"``, ``"fp:5"`` or an object
    such as ``{"ring": "fp", "p": 5}``."""
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, dict):
        kind = spec.get("ring")
        if kind == "fp":
            if "p" not in spec:
                raise ParseError("ring 'fp' needs a prime 'p'")
            return PolyRingFp(spec["p"])
        if kind in ("int", "qx"):
            return parse_ring(kind)
        raise ParseError(f"unknown ring {spec!r}")
    if isinstance(spec, str):
        s = spec.strip().lower()
        if s in ("int", "z", "zz", "integers"):
            return ZZ
        if s in ("qx", "q[x]", "qq[x]"):
            return QQx
        if s.startswith("fp:") or s.startswith("fp"):
            digits = s[3:] if s.startswith("fp:") else s[2:]
            try:
                return PolyRingFp(int(digits))
            except ValueError:
                raise ParseError(f"unknown ring {spec!r}") from None
        raise ParseError(f"unknown ring {spec!r}")
    raise ParseError(f"unknown ring {spec!r}")


def ring_to_json(ring: Ring) -> dict:
    if isinstance(ring, PolyRingFp):
        return {"ring": "fp", "p": ring.p}
    return {"ring": ring.tag()}


class Element:
    """An element of one of the supported rings.

    >>> ZZ(-6) * ZZ(2)
    Element(ZZ, -12)
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _other(self, other):
        if isinstance(other, Element):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Element(self.ring, self.ring.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.value))

    def __pow__(self, e: int):
        return Element(self.ring, self.ring.power(self.value, e))

    def __divmod__(self, other):
        q, r = euclidean_divide(self, other if isinstance(other, Element) else self.ring(other))
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __bool__(self):
        return not self.ring.is_zero(self.value)

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def size(self) -> int:
        return self.ring.size(self.value)

    def to_json(self):
        return self.ring.to_json_value(self.value)

    def sort_key(self):
        """Total order used for canonical sorting (size first)."""
        v = self.value
        if isinstance(v, int):
            return (abs(v), 0 if v >= 0 else 1, v)
        return (len(v), tuple(reversed(v)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Element({self.ring}, {self.ring.format(self.value)})"

    def __str__(self):
        return self.ring.format(self.value)


def _check_same(a: Element, b: Element):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")


def normalize_unit(e: Element):
    """Split ``e`` into ``(unit, canonical)`` with ``e == unit * canonical``."""
    unit, canon = e.ring.normalize(e.value)
    return Element(e.ring, unit), Element(e.ring, canon)


def euclidean_divide(a: Element, b: Element):
    """``(q, r)`` with ``a = q*b + r``; ``0 <= r < |b|`` over the integers,
    ``deg r < deg b`` for polynomials."""
    _check_same(a, b)
    q, r = a.ring.divmod(a.value, b.value)
    return Element(a.ring, q), Element(a.ring, r)


def extended_gcd(a: Element, b: Element):
    """``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` the canonical gcd."""
    _check_same(a, b)
    g, u, v = a.ring.xgcd(a.value, b.value)
    return Element(a.ring, g), Element(a.ring, u), Element(a.ring, v)
