"""QQ[x] arithmetic backed by FLINT's ``fmpq_poly``.

Only the Smith form routine uses this, as a drop-in raw-value ring for the
inner elimination loop.  Public values everywhere else stay as tuples of
``Fraction``; ``to_flint``/``from_flint`` convert at the boundary.
"""

from __future__ import annotations

from fractions import Fraction

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None

from virtmod.errors import DivisionByZero, ZeroElement


def available() -> bool:
    return flint is not None


def to_flint(a):
    if not a:
        return flint.fmpq_poly()
    den = 1
    for c in a:
        den = den * c.denominator // _gcd(den, c.denominator)
    return flint.fmpq_poly([int(c * den) for c in a], den)


def from_flint(f):
    return tuple(Fraction(int(c.p), int(c.q)) for c in f.coeffs())


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class FlintQx:
    """Raw-value ring interface (the subset the Smith routines need)."""

    kind = "qx-flint"

    def __init__(self):
        self.zero = flint.fmpq_poly()
        self.one = flint.fmpq_poly([1])

    def is_zero(self, a):
        return a.is_zero()

    def is_unit(self, a):
        return a.degree() == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, c, a):
        return a * c

    def divmod(self, a, b):
        if b.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        return divmod(a, b)

    def exact_div(self, a, b):
        return self.divmod(a, b)[0]

    def divides(self, a, b):
        if a.is_zero():
            return b.is_zero()
        return (b % a).is_zero()

    def normalize(self, a):
        if a.is_zero():
            raise ZeroElement("zero has no canonical associate")
        lc = a.leading_coefficient()
        if lc == 1:
            return self.one, a
        return flint.fmpq_poly([lc]), a / lc

    def unit_inverse(self, u):
        return flint.fmpq_poly([1 / u.leading_coefficient()])

    def content_scale(self, values):
        return None

    def xgcd(self, a, b):
        if a.is_zero() and b.is_zero():
            return self.zero, self.one, self.zero
        if b.is_zero():
            lc = a.leading_coefficient()
            return a / lc, flint.fmpq_poly([1 / lc]), self.zero
        if a.is_zero():
            lc = b.leading_coefficient()
            return b / lc, self.zero, flint.fmpq_poly([1 / lc])
        g, s, t = a.xgcd(b)
        lc = g.leading_coefficient()
        if lc != 1:
            g, s, t = g / lc, s / lc, t / lc
        return g, s, t
