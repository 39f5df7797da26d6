"""Factorization into canonical primes.

Integers: trial division, then Brent's variant of Pollard rho with a
Miller-Rabin primality check.  Cofactors above 2**64 left after trial
division are refused with ``FactorizationTooHard``.

``F_p[x]``: squarefree decomposition, distinct-degree factorization, then
Cantor-Zassenhaus equal-degree splitting (trace map when ``p == 2``).
Randomness is seeded from the input so results are reproducible.

``Q[x]``: irreducible factorization is not supported.  Only squarefreeness
(a derivative gcd) and the rational-root based splitting used by
``prime_split_qx`` are available.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from virtmod.arith.rings import (
    Element,
    IntegerRing,
    PolyRingFp,
    PolyRingQ,
    Ring,
    is_prime_int,
)
from virtmod.errors import FactorizationTooHard, UnsupportedRing, ZeroOrUnit

INT_FACTOR_LIMIT = 2**64
_TRIAL_BOUND = 1 << 12


@dataclass(frozen=True)
class Factorization:
    unit: Element
    factors: tuple  # of (Element, int), primes canonical and sorted

    def expand(self) -> Element:
        out = self.unit
        for prime, e in self.factors:
            out = out * prime**e
        return out

    def exponents(self) -> dict:
        return {prime: e for prime, e in self.factors}


# -- integers ---------------------------------------------------------------


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> dict:
    """Prime -> exponent for ``|n| >= 2``."""
    n = abs(n)
    out: dict = {}
    for q in (2, 3, 5):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    q, step = 7, 4
    while q < _TRIAL_BOUND and q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step
    if n == 1:
        return out
    if n > INT_FACTOR_LIMIT:
        raise FactorizationTooHard(
            f"cofactor {n} exceeds 2**64 after trial division; refusing to factor"
        )
    rng = random.Random(n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime_int(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


# -- polynomials over F_p ----------------------------------------------------


def _powmod(R: PolyRingFp, a, e: int, f):
    result = R.one
    a = R.divmod(a, f)[1]
    while e:
        if e & 1:
            result = R.divmod(R.mul(result, a), f)[1]
        a = R.divmod(R.mul(a, a), f)[1]
        e >>= 1
    return result


def _pth_root(R: PolyRingFp, f):
    return tuple(f[i] for i in range(0, len(f), R.p))


def _squarefree_fp(R: PolyRingFp, f):
    """Squarefree decomposition of a monic ``f``: list of (g, multiplicity)."""
    out = []
    df = R.derivative(f)
    if not df:
        return [(g, e * R.p) for g, e in _squarefree_fp(R, _pth_root(R, f))]
    c = R.gcd(f, df)
    w = R.exact_div(f, c)
    i = 1
    while len(w) > 1:
        y = R.gcd(w, c)
        fac = R.exact_div(w, y)
        if len(fac) > 1:
            out.append((fac, i))
        w = y
        c = R.exact_div(c, y)
        i += 1
    if len(c) > 1:
        out.extend((g, e * R.p) for g, e in _squarefree_fp(R, _pth_root(R, c)))
    return out


def _distinct_degree(R: PolyRingFp, f):
    """Monic squarefree ``f`` -> list of (product of degree-d irreducibles, d)."""
    out = []
    x = R.x()
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(R, h, R.p, f)
        g = R.gcd(f, R.sub(h, x))
        if len(g) > 1:
            out.append((g, d))
            f = R.exact_div(f, g)
            h = R.divmod(h, f)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(R: PolyRingFp, f, d: int, rng: random.Random):
    n = len(f) - 1
    if n == d:
        return [f]
    p = R.p
    while True:
        a = R._strip([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            t, b = a, a
            for _ in range(d - 1):
                t = R.divmod(R.mul(t, t), f)[1]
                b = R.add(b, t)
        else:
            b = R.sub(_powmod(R, a, (p**d - 1) // 2, f), R.one)
        g = R.gcd(f, b)
        if 1 < len(g) < len(f):
            return _equal_degree(R, g, d, rng) + _equal_degree(R, R.exact_div(f, g), d, rng)


def factor_fp(R: PolyRingFp, f) -> tuple:
    """``(leading unit, {monic irreducible: exponent})`` for a non-unit ``f``."""
    unit, f = R.normalize(f)
    rng = random.Random(hash((R.p, f)))
    out: dict = {}
    for g, e in _squarefree_fp(R, f):
        for h, d in _distinct_degree(R, g):
            for q in _equal_degree(R, h, d, rng):
                out[q] = out.get(q, 0) + e
    return unit, out


# -- polynomials over Q ------------------------------------------------------


def _divisors(n: int):
    n = abs(n)
    divs = [1]
    for q, e in factor_int(n).items() if n > 1 else []:
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(R: PolyRingQ, f) -> list:
    """All rational roots of a non-zero ``f`` (rational root theorem)."""
    denom = 1
    for c in f:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [int(c * denom) for c in f]
    while ints and ints[0] == 0:
        ints = ints[1:]
    roots = [Fraction(0)] if len(ints) < len(f) else []
    if len(ints) <= 1:
        return roots
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and R.evaluate(f, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def prime_split_qx(R: PolyRingQ, f):
    """Monic irreducible factors of a squarefree, non-constant ``f`` over Q.

    Splits off linear factors found by the rational root test; a cofactor
    of degree 2 or 3 without rational roots is irreducible.  Anything else
    raises ``UnsupportedRing``.
    """
    f = R.canonical(f)
    out = []
    for root in rational_roots(R, f):
        lin = (-root, Fraction(1))
        out.append(lin)
        f = R.exact_div(f, lin)
    if len(f) - 1 >= 4:
        raise UnsupportedRing(
            f"cannot decide the irreducible factors of {R.format(f)} over QQ[x]"
        )
    if len(f) > 1:
        out.append(f)
    return sorted(out, key=lambda g: (len(g), tuple(reversed(g))))


# -- public operations -------------------------------------------------------


def _require_nonunit(d: Element):
    if d.is_zero() or d.is_unit():
        raise ZeroOrUnit(f"{d} is zero or a unit")


def factor(d: Element) -> Factorization:
    """Complete factorization of a non-zero non-unit over ZZ or F_p[x]."""
    _require_nonunit(d)
    R = d.ring
    if isinstance(R, IntegerRing):
        unit = -1 if d.value < 0 else 1
        pairs = factor_int(d.value).items()
        return Factorization(R(unit), tuple((R(q), e) for q, e in sorted(pairs)))
    if isinstance(R, PolyRingFp):
        unit, table = factor_fp(R, d.value)
        pairs = sorted((Element(R, q), e) for q, e in table.items())
        return Factorization(Element(R, unit), tuple(pairs))
    raise UnsupportedRing(f"irreducible factorization over {R} is not supported")


def is_squarefree(d: Element) -> bool:
    _require_nonunit(d)
    R = d.ring
    if isinstance(R, IntegerRing):
        return all(e == 1 for e in factor_int(d.value).values())
    return R.is_unit(R.gcd(d.value, R.derivative(d.value)))


def squarefree_raw(R: Ring, d) -> bool:
    return is_squarefree(Element(R, d))


def is_prime_element(d: Element) -> bool:
    """Primality of a non-zero element; ``UnsupportedRing`` when undecidable
    here (squarefree QQ[x] polynomials of degree >= 4 without rational roots)."""
    R = d.ring
    if d.is_zero() or d.is_unit():
        return False
    if isinstance(R, IntegerRing):
        return is_prime_int(abs(d.value))
    if isinstance(R, PolyRingFp):
        _, table = factor_fp(R, d.value)
        return len(table) == 1 and next(iter(table.values())) == 1
    if len(d.value) == 2:
        return True
    if not is_squarefree(d):
        return False
    return len(prime_split_qx(R, d.value)) == 1


def prime_split(d: Element) -> list:
    """``[(prime, exponent)]`` for a non-unit; over QQ[x] only squarefree
    inputs that ``prime_split_qx`` can handle are accepted."""
    R = d.ring
    if isinstance(R, PolyRingQ):
        if not is_squarefree(d):
            raise UnsupportedRing(
                f"{d} is not squarefree; prime splitting over QQ[x] needs factorization"
            )
        return [(Element(R, q), 1) for q in prime_split_qx(R, d.value)]
    return list(factor(d).factors)
