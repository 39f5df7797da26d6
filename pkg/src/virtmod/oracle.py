"""Brute-force ground truth on explicit finite abelian groups.

Everything here works on elements: a group ``Z/n1 + ... + Z/nk`` has its
elements indexed in mixed radix, subgroups are bit masks over those
indices, and every property is decided from its definition (subgroup
enumeration, complement search, homomorphism search).  Nothing here calls
the descriptor-level predicates; ``validate`` compares the two.

Bounds: groups larger than the configured bound (default 256, override
with ``VIRTMOD_ORACLE_BOUND``) are refused with ``BoundExceeded``.  The
complement search for summands runs up to order 64; above that the purity
criterion ``A n p^k G = p^k A`` is used, and the suite cross-checks the
two below 64.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from virtmod.arith import ZZ, Element, Fpx, is_prime_int
from virtmod.arith.factor import factor_int
from virtmod.errors import BoundExceeded, InvalidDescriptor, ParseError, UnknownPredicate
from virtmod.modpid import StructureDescriptor, embeds, is_quasi_prime_ideal, socle
from virtmod.virtual import PREDICATES

DEFAULT_BOUND = 256
COMPLEMENT_BOUND = 64
ENV_BOUND = "VIRTMOD_ORACLE_BOUND"


def oracle_bound(bound=None) -> int:
    if bound is not None:
        return int(bound)
    raw = os.environ.get(ENV_BOUND)
    if raw is None or raw.strip() == "":
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"{ENV_BOUND} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ParseError(f"{ENV_BOUND} must be positive, got {value}")
    return value


def _bits(mask: int):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _vp(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def type_from_order_counts(counts) -> tuple:
    """Invariant factors (ascending ints) of a finite abelian group given the
    number of its elements of each order.

    For a prime ``p`` the number of elements killed by ``p**k`` is
    ``p**(m1 + ... + mk)`` where ``mj`` counts cyclic ``p``-factors of
    exponent ``>= j``; read the ``mj`` off and pair primes up.
    """
    total = sum(counts.values())
    parts = {}
    for p in sorted(factor_int(total)) if total > 1 else []:
        top = max(_vp(o, p) for o in counts)
        ms = []  # ms[k-1] = number of cyclic p-factors of exponent >= k
        prev = 1
        for k in range(1, top + 1):
            ck = sum(c for o, c in counts.items() if _vp(o, p) <= k)
            ms.append(_vp(ck // prev, p))
            prev = ck
        ms.append(0)
        exps = []
        for k in range(top, 0, -1):
            exps.extend([k] * (ms[k - 1] - ms[k]))
        parts[p] = exps
    length = max((len(v) for v in parts.values()), default=0)
    facs = [1] * length
    for p, exps in parts.items():
        for i, e in enumerate(exps):
            facs[length - 1 - i] *= p**e
    return tuple(facs)


class _Tables:
    """Element-level data shared by all FiniteModule objects of one shape."""

    def __init__(self, orders: tuple):
        self.orders = orders
        N = math.prod(orders)
        self.N = N
        elems = list(itertools.product(*[range(n) for n in orders])) if orders else [()]
        self.elements = elems
        radix = []
        acc = 1
        for n in reversed(orders):
            radix.append(acc)
            acc *= n
        self.radix = tuple(reversed(radix))
        self.add = [[self.index(tuple((x + y) % n for x, y, n in zip(a, b, orders))) for b in elems]
                    for a in elems]
        self.neg = [self.index(tuple((-x) % n for x, n in zip(a, orders))) for a in elems]
        self.order_of = [
            math.lcm(*[n // math.gcd(x, n) for x, n in zip(a, orders)]) if orders else 1
            for a in elems
        ]
        self._mul = {}
        self.full = (1 << N) - 1
        self.prime_order_mask = sum(1 << i for i, o in enumerate(self.order_of) if is_prime_int(o))
        self.primes = sorted(factor_int(N)) if N > 1 else []

    def index(self, t) -> int:
        return sum(x * r for x, r in zip(t, self.radix))

    def mul(self, m: int) -> list:
        """``[m * g for g]`` as indices."""
        if m not in self._mul:
            self._mul[m] = [self.index(tuple((m * x) % n for x, n in zip(a, self.orders)))
                            for a in self.elements]
        return self._mul[m]

    def cyclic_mask(self, g: int) -> int:
        mask = 1
        x = g
        add = self.add
        while x:
            mask |= 1 << x
            x = add[x][g]
        return mask


@lru_cache(maxsize=256)
def _tables(orders: tuple) -> _Tables:
    return _Tables(orders)


@lru_cache(maxsize=256)
def _lattice(orders: tuple):
    """All subgroups as masks, canonically sorted, plus per-order buckets.

    Breadth-first from the zero subgroup; every subgroup ``K > H`` is reached
    through a chain of prime-index steps ``H + <g>`` with ``p*g`` in ``H``.
    """
    T = _tables(orders)
    add = T.add
    muls = [T.mul(p) for p in T.primes]
    seen = {1: [0]}
    frontier = [1]
    while frontier:
        nxt = []
        for H in frontier:
            hel = seen[H]
            covered = H
            for g in range(T.N):
                if (covered >> g) & 1:
                    continue
                if not any((H >> mp[g]) & 1 for mp in muls):
                    continue
                new = list(hel)
                x = g
                while not (H >> x) & 1:
                    row = add[x]
                    new.extend(row[h] for h in hel)
                    x = add[x][g]
                J = 0
                for e in new:
                    J |= 1 << e
                covered |= J
                if J not in seen:
                    seen[J] = sorted(new)
                    nxt.append(J)
        frontier = nxt
    subs = sorted(seen.items(), key=lambda kv: (len(kv[1]), kv[1]))
    by_order = {}
    for mask, els in subs:
        by_order.setdefault(len(els), []).append(mask)
    return subs, by_order


@dataclass(frozen=True)
class Submodule:
    module: "FiniteModule" = field(repr=False, compare=False)
    mask: int
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> tuple:
        """Canonical generating set: scan elements in index order, keep those
        not already in the span of the ones kept."""
        T = self.module.tables
        span = 1
        gens = []
        for e in self.elements:
            if not (span >> e) & 1:
                gens.append(T.elements[e])
                span = _join(T, span, e)
        return tuple(gens)

    @property
    def invariant_factors(self) -> tuple:
        return self.module.type_of(self.mask)

    @property
    def descriptor(self) -> StructureDescriptor:
        return StructureDescriptor.from_cyclic(ZZ, self.invariant_factors)


def _join(T: _Tables, H: int, g: int) -> int:
    hel = _bits(H)
    J = H
    x = g
    while not (H >> x) & 1:
        for h in hel:
            J |= 1 << T.add[x][h]
        x = T.add[x][g]
    return J


class FiniteModule:
    """``Z/n1 + ... + Z/nk`` with element-level arithmetic."""

    def __init__(self, cyclic_orders=(), bound=None):
        orders = tuple(int(n) for n in cyclic_orders)
        if any(n < 2 for n in orders):
            raise InvalidDescriptor(f"cyclic orders must be >= 2, got {list(orders)}")
        self.cyclic_orders = orders
        self.order = math.prod(orders)
        limit = oracle_bound(bound)
        if self.order > limit:
            raise BoundExceeded(f"group of order {self.order} exceeds the oracle bound {limit}")
        self.tables = _tables(orders)

    @classmethod
    def from_descriptor(cls, s: StructureDescriptor, bound=None) -> "FiniteModule":
        if s.free_rank or s.ring != ZZ:
            raise InvalidDescriptor("the oracle only handles finite ZZ-modules")
        return cls([f.value for f in s.invariant_factors], bound)

    def __repr__(self):
        return f"FiniteModule({list(self.cyclic_orders)})"

    @property
    def elements(self):
        return self.tables.elements

    def type_of(self, mask: int) -> tuple:
        oo = self.tables.order_of
        return type_from_order_counts(Counter(oo[i] for i in _bits(mask)))

    @property
    def invariant_factors(self) -> tuple:
        return self.type_of(self.tables.full)

    @property
    def descriptor(self) -> StructureDescriptor:
        return StructureDescriptor.from_cyclic(ZZ, self.invariant_factors)

    def subgroup_masks(self):
        return _lattice(self.cyclic_orders)[0]

    def quotient_type(self, mask: int) -> tuple:
        """Type of ``G/A``: the order of ``g + A`` is the least ``k`` with
        ``k*g`` in ``A``; each coset contributes ``|A|`` equal counts."""
        T = self.tables
        counts = Counter()
        for g in range(T.N):
            k, x = 1, g
            while not (mask >> x) & 1:
                x = T.add[x][g]
                k += 1
            counts[k] += 1
        size = bin(mask).count("1")
        return type_from_order_counts(Counter({k: c // size for k, c in counts.items()}))


def enumerate_submodules(G: FiniteModule) -> list:
    return [Submodule(G, mask, tuple(els)) for mask, els in G.subgroup_masks()]


# -- summands ----------------------------------------------------------------------


def is_summand_complement(G: FiniteModule, A: int) -> bool:
    """Is there ``B`` with ``A n B = 0`` and ``|A||B| = |G|``?"""
    _, by_order = _lattice(G.cyclic_orders)
    size = bin(A).count("1")
    return any(B & A == 1 for B in by_order.get(G.order // size, ()))


def _times(T: _Tables, m: int, mask: int) -> int:
    mm = T.mul(m)
    out = 0
    for e in _bits(mask):
        out |= 1 << mm[e]
    return out


def is_summand_purity(G: FiniteModule, A: int) -> bool:
    """``A`` is a summand iff ``A n p^k G = p^k A`` for every prime power."""
    T = G.tables
    for p in T.primes:
        top = max(_vp(n, p) for n in G.cyclic_orders)
        for k in range(1, top + 1):
            q = p**k
            if A & _times(T, q, T.full) != _times(T, q, A):
                return False
    return True


def summand_test(G: FiniteModule, method: str = "auto", complement_bound: int = COMPLEMENT_BOUND):
    if method == "auto":
        method = "complement" if G.order <= complement_bound else "purity"
    if method == "complement":
        if G.order > complement_bound:
            raise BoundExceeded(f"complement search is limited to order {complement_bound}")
        return lambda A: is_summand_complement(G, A)
    if method == "purity":
        return lambda A: is_summand_purity(G, A)
    raise ValueError(f"unknown summand method {method!r}")


def _types(G: FiniteModule) -> dict:
    """type -> subgroup masks of that type, in canonical order."""
    out = {}
    for mask, _ in G.subgroup_masks():
        out.setdefault(G.type_of(mask), []).append(mask)
    return out


def summand_types(G: FiniteModule, method: str = "auto") -> frozenset:
    test = summand_test(G, method)
    return frozenset(
        StructureDescriptor.from_cyclic(ZZ, t)
        for t, masks in _types(G).items() if any(test(A) for A in masks)
    )


# -- definitional predicates -----------------------------------------------------


@lru_cache(maxsize=None)
def _vss_by_type(orders: tuple) -> bool:
    G = FiniteModule(orders, bound=math.prod(orders))
    test = summand_test(G)
    return all(any(test(A) for A in masks) for masks in _types(G).values())


def is_vss_bruteforce(G: FiniteModule) -> bool:
    """Every subgroup is isomorphic to a direct summand."""
    return _vss_by_type(G.invariant_factors)


def is_virtually_simple_bruteforce(G: FiniteModule) -> bool:
    """Non-zero, and every non-zero subgroup is isomorphic to ``G``."""
    if G.order == 1:
        return False
    whole = G.invariant_factors
    return all(G.type_of(m) == whole for m, _ in G.subgroup_masks() if m != 1)


def is_completely_vss_bruteforce(G: FiniteModule) -> bool:
    return all(_vss_by_type(t) for t in _types(G))


def is_fully_vss_bruteforce(G: FiniteModule) -> bool:
    return all(_vss_by_type(G.quotient_type(m)) for m, _ in G.subgroup_masks())


def is_semisimple_bruteforce(G: FiniteModule) -> bool:
    test = summand_test(G)
    return all(test(m) for m, _ in G.subgroup_masks())


def embeds_bruteforce(G: FiniteModule, H: FiniteModule) -> bool:
    """Search for an injective homomorphism ``G -> H``.

    Generator images are chosen largest order first.  Injectivity on the
    part built so far means each new image has exactly the generator's
    order and meets the image so far only in 0.  Dead ends are memoized by
    (depth, image subgroup): what remains possible depends only on those.
    """
    if G.order == 1:
        return True
    if G.order > H.order:
        return False
    T = H.tables
    need = sorted(G.cyclic_orders, reverse=True)
    cands = {n: [h for h in range(T.N) if T.order_of[h] == n] for n in set(need)}
    cyc = {}
    dead = set()

    def search(j, image):
        if j == len(need):
            return True
        if (j, image) in dead:
            return False
        for h in cands[need[j]]:
            c = cyc.get(h)
            if c is None:
                c = cyc[h] = T.cyclic_mask(h)
            if image & c != 1:
                continue
            if search(j + 1, _join(T, image, h)):
                return True
        dead.add((j, image))
        return False

    return search(0, 1)


def _kill_count(G: FiniteModule, m: int) -> int:
    """``|G[m]|``, the number of elements with ``m*g = 0``."""
    return sum(1 for o in G.tables.order_of if m % o == 0)


def _hom_count(G: FiniteModule, source_type) -> int:
    """``|Hom(X, G)|`` for ``X`` of the given type: a map from ``Z/n`` is the
    choice of an image in ``G[n]``."""
    return math.prod(_kill_count(G, n) for n in source_type)


def is_quasi_injective_bruteforce(G: FiniteModule) -> bool:
    """Every homomorphism from a subgroup ``A`` into ``G`` extends to ``G``.

    Restriction ``End(G) -> Hom(A, G)`` has kernel ``Hom(G/A, G)``, so it is
    onto exactly when ``|End G| = |Hom(A, G)| * |Hom(G/A, G)|``.  All counts
    are exact; ``quasi_injective_by_enumeration`` does the same check by
    listing maps and is used to cross-check this on small groups.
    """
    end = _hom_count(G, G.invariant_factors)
    for mask, _ in G.subgroup_masks():
        if _hom_count(G, G.type_of(mask)) * _hom_count(G, G.quotient_type(mask)) != end:
            return False
    return True


def _all_homs(T_src: _Tables, gens, gen_orders, T_dst: _Tables, members):
    """Every homomorphism from the subgroup ``members`` (mask) of the source
    generated by ``gens`` into the destination, as dicts element -> image."""
    pools = [[h for h in range(T_dst.N) if n % T_dst.order_of[h] == 0] for n in gen_orders]
    for images in itertools.product(*pools):
        f = {0: 0}
        stack = [0]
        ok = True
        while stack and ok:
            a = stack.pop()
            for g, t in zip(gens, images):
                b = T_src.add[a][g]
                val = T_dst.add[f[a]][t]
                if b in f:
                    if f[b] != val:
                        ok = False
                        break
                else:
                    f[b] = val
                    stack.append(b)
        if ok:
            yield f


def quasi_injective_by_enumeration(G: FiniteModule) -> bool:
    """Literal version: list ``End(G)`` and every ``Hom(A, G)``; small ``G`` only."""
    T = G.tables
    unit = [T.index(tuple(1 if i == j else 0 for i in range(len(G.cyclic_orders))))
            for j in range(len(G.cyclic_orders))]
    ends = list(_all_homs(T, unit, G.cyclic_orders, T, T.full))
    for sub in enumerate_submodules(G):
        gens = [T.index(g) for g in sub.generators]
        restr = {tuple(f[a] for a in sub.elements) for f in ends}
        for h in _all_homs(T, gens, [T.order_of[g] for g in gens], T, sub.mask):
            if tuple(h[a] for a in sub.elements) not in restr:
                return False
    return True


def _essential_in(T: _Tables, A: int, B: int) -> bool:
    """``A <=_e B``: every non-zero subgroup of ``B`` meets ``A``.  It is
    enough to test the subgroups of prime order, and such a subgroup meets
    ``A`` iff its generator lies in ``A``."""
    return (T.prime_order_mask & B) & ~A == 0


def closed_subgroups(G: FiniteModule) -> list:
    """Subgroups with no proper essential extension inside ``G``."""
    T = G.tables
    subs = G.subgroup_masks()
    out = []
    for A, els in subs:
        size = len(els)
        if not any(
            len(bels) > size and B & A == A and _essential_in(T, A, B) for B, bels in subs
        ):
            out.append(A)
    return out


def extending_witness(G: FiniteModule):
    """A closed subgroup that is not a summand (as a Submodule), or None."""
    test = summand_test(G)
    for A in closed_subgroups(G):
        if not test(A):
            return Submodule(G, A, tuple(_bits(A)))
    return None


def is_extending_bruteforce(G: FiniteModule) -> bool:
    return extending_witness(G) is None


def essential_subgroups(G: FiniteModule) -> list:
    T = G.tables
    return [Submodule(G, m, tuple(e)) for m, e in G.subgroup_masks() if _essential_in(T, m, T.full)]


def socle_bruteforce(G: FiniteModule) -> tuple:
    """Type of the sum of all subgroups of prime order."""
    T = G.tables
    S = 1
    for g in _bits(T.prime_order_mask):
        if not (S >> g) & 1:
            S = _join(T, S, g)
    return G.type_of(S)


def quasi_prime_search(d: Element) -> bool:
    """Definition of a quasi-prime ideal checked on principal ideals:
    ``(d)`` fails iff some ``A = (a)``, ``B = (b)`` with ``AB <= (d) <= A n B``
    have neither ``A <= (d)`` nor ``B <= (d)``.  ``a, b`` range over the
    divisors of ``d**2`` (ZZ) or monic divisors of ``d**2`` (F_p[x])."""
    R = d.ring
    if d.is_unit():
        raise ValueError("unit ideal")
    if d.is_zero():
        return True  # AB = 0 forces A = 0 or B = 0 in a domain
    dd = R.mul(d.value, d.value)
    if R.kind == "int":
        n = abs(dd)
        divs = [k for k in range(1, n + 1) if n % k == 0]
    else:
        deg = len(dd) - 1
        divs = []
        for k in range(deg + 1):
            for low in itertools.product(range(R.p), repeat=k):
                f = tuple(low) + (1,)
                if R.divides(f, dd):
                    divs.append(f)
    for a in divs:
        for b in divs:
            contains = R.divides(a, d.value) and R.divides(b, d.value)
            product_in = R.divides(d.value, R.mul(a, b))
            if contains and product_in and not R.divides(d.value, a) and not R.divides(d.value, b):
                return False
    return True


# -- group universes ---------------------------------------------------------------


def _partitions(n: int, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def groups_of_order(n: int) -> list:
    """Invariant-factor tuples of all abelian groups of order ``n``."""
    if n == 1:
        return [()]
    per_prime = [[(p, lam) for lam in _partitions(e)] for p, e in factor_int(n).items()]
    out = []
    for combo in itertools.product(*per_prime):
        k = max(len(lam) for _, lam in combo)
        facs = [1] * k
        for p, lam in combo:
            for i, e in enumerate(lam):
                facs[k - 1 - i] *= p**e
        out.append(tuple(facs))
    return sorted(out)


def all_groups(bound: int) -> list:
    return [t for n in range(1, bound + 1) for t in groups_of_order(n)]


def p_groups(bound: int) -> dict:
    """prime -> invariant-factor tuples of all p-groups of order <= bound
    (the trivial group included)."""
    out = {}
    for p in range(2, bound + 1):
        if not is_prime_int(p):
            continue
        lst = []
        q = 1
        while q <= bound:
            lst.extend(groups_of_order(q))
            q *= p
        out[p] = sorted(set(lst), key=lambda t: (math.prod(t), t))
    return out


# -- validation ---------------------------------------------------------------------


@dataclass
class ValidationReport:
    predicate: str
    bound: int
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {
            "predicate": self.predicate,
            "bound": self.bound,
            "checked": self.checked,
            "mismatches": self.mismatches,
        }


def _fast(name):
    pred = PREDICATES[name]
    return lambda G: pred(G.descriptor)


_GROUP_CHECKS = {
    "virtually_semisimple": (_fast("virtually_semisimple"), is_vss_bruteforce),
    "virtually_simple": (_fast("virtually_simple"), is_virtually_simple_bruteforce),
    "completely_virtually_semisimple": (
        _fast("completely_virtually_semisimple"), is_completely_vss_bruteforce),
    "fully_virtually_semisimple": (_fast("fully_virtually_semisimple"), is_fully_vss_bruteforce),
    "semisimple": (_fast("semisimple"), is_semisimple_bruteforce),
    "quasi_injective": (_fast("quasi_injective"), is_quasi_injective_bruteforce),
    "socle": (
        lambda G: tuple(f.value for f in socle(G.descriptor).invariant_factors),
        socle_bruteforce,
    ),
}


def _purity_rows(G: FiniteModule, mismatches: list) -> int:
    n = 0
    for mask, els in G.subgroup_masks():
        n += 1
        a, b = is_summand_purity(G, mask), is_summand_complement(G, mask)
        if a != b:
            mismatches.append({"group": list(G.cyclic_orders), "subgroup": list(els),
                               "fast": a, "oracle": b})
    return n


PREDICATE_NAMES = tuple(_GROUP_CHECKS) + ("embeds", "summand_via_purity", "quasi_prime_ideal")


def validate(predicate: str, bound: int) -> ValidationReport:
    """Compare a fast predicate with its oracle on every abelian group of
    order <= bound (pairs of p-groups for ``embeds``; subgroups for
    ``summand_via_purity``; elements ``|d| <= bound`` of ZZ and monic F_2, F_3
    polynomials of degree <= 3 for ``quasi_prime_ideal``)."""
    if predicate not in PREDICATE_NAMES:
        raise UnknownPredicate(
            f"unknown predicate {predicate!r}; known: {', '.join(PREDICATE_NAMES)}"
        )
    bound = int(bound)
    report = ValidationReport(predicate, bound)
    if predicate in _GROUP_CHECKS:
        fast, slow = _GROUP_CHECKS[predicate]
        for t in all_groups(bound):
            G = FiniteModule(t)
            a, b = fast(G), slow(G)
            report.checked += 1
            if a != b:
                report.mismatches.append({"group": list(t), "fast": _plain(a), "oracle": _plain(b)})
    elif predicate == "embeds":
        for p, groups in p_groups(bound).items():
            for s in groups:
                for t in groups:
                    G, H = FiniteModule(s), FiniteModule(t)
                    a = embeds(G.descriptor, H.descriptor)
                    b = embeds_bruteforce(G, H)
                    report.checked += 1
                    if a != b:
                        report.mismatches.append(
                            {"pair": [list(s), list(t)], "fast": a, "oracle": b})
    elif predicate == "summand_via_purity":
        for t in all_groups(min(bound, COMPLEMENT_BOUND)):
            report.checked += _purity_rows(FiniteModule(t), report.mismatches)
    else:
        elements = [ZZ(k) for k in range(-bound, bound + 1) if abs(k) != 1]
        for p in (2, 3):
            R = Fpx(p)
            for deg in range(0, 4):
                for low in itertools.product(range(p), repeat=deg):
                    f = tuple(low) + (1,)
                    if deg:
                        elements.append(Element(R, f))
            elements.append(Element(R, ()))
        for d in elements:
            a, b = is_quasi_prime_ideal(d), quasi_prime_search(d)
            report.checked += 1
            if a != b:
                report.mismatches.append({"element": d.to_json(), "ring": d.ring.tag(),
                                          "fast": a, "oracle": b})
    return report


def _plain(v):
    return list(v) if isinstance(v, tuple) else v


__all__ = [
    "COMPLEMENT_BOUND",
    "DEFAULT_BOUND",
    "FiniteModule",
    "PREDICATE_NAMES",
    "Submodule",
    "ValidationReport",
    "all_groups",
    "closed_subgroups",
    "embeds_bruteforce",
    "enumerate_submodules",
    "essential_subgroups",
    "extending_witness",
    "groups_of_order",
    "is_completely_vss_bruteforce",
    "is_extending_bruteforce",
    "is_fully_vss_bruteforce",
    "is_quasi_injective_bruteforce",
    "is_semisimple_bruteforce",
    "is_summand_complement",
    "is_summand_purity",
    "is_virtually_simple_bruteforce",
    "is_vss_bruteforce",
    "oracle_bound",
    "quasi_injective_by_enumeration",
    "quasi_prime_search",
    "socle_bruteforce",
    "summand_types",
    "type_from_order_counts",
    "validate",
]
