"""Finitely generated modules over the supported principal ideal domains.

A module is given either by a ``Presentation`` (generator count plus a
relation matrix; the module is the cokernel, i.e. the free module modulo
the row space of the relations) or directly by its canonical
``StructureDescriptor``: a free rank ``r`` and an invariant-factor chain
``d1 | d2 | ... | dk`` of canonical non-units.

Everything below works on descriptors.  Operations that need the primes
dividing an invariant factor go through ``virtmod.arith.factor`` and so
refuse QQ[x] inputs they cannot split (``UnsupportedRing``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from virtmod.arith import Element, Ring, factor, is_prime_element, parse_ring, prime_split
from virtmod.arith.factor import squarefree_raw
from virtmod.errors import (
    InvalidDescriptor,
    ParseError,
    RingMismatch,
    ShapeMismatch,
    UnitIdeal,
    UnsupportedRing,
)
from virtmod.smith import Matrix, smith_diagonal


class _NoDimension:
    """Krull dimension of the zero module (there is none)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NoDimension"

    def to_json(self):
        return None


NoDimension = _NoDimension()


def _same_ring(a, b):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} module combined with a {b.ring} module")


def canonical_chain(ring: Ring, values) -> list:
    """Invariant-factor chain of ``D/(v1) + D/(v2) + ...`` (raw values).

    Zeros are dropped by the caller; units vanish here.  Uses the usual
    pairwise ``(gcd, lcm)`` sweep, so no factorization is needed.
    """
    d = [ring.canonical(v) for v in values if not ring.is_zero(v)]
    d = [v for v in d if not ring.is_unit(v)]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            a, b = d[i], d[j]
            if not ring.divides(a, b):
                g = ring.gcd(a, b)
                d[i], d[j] = g, ring.canonical(ring.mul(ring.exact_div(a, g), b))
    return [v for v in d if not ring.is_unit(v)]


@dataclass(frozen=True)
class StructureDescriptor:
    """``D^r (+) D/(d1) (+) ... (+) D/(dk)`` with ``d1 | ... | dk``."""

    ring: Ring
    free_rank: int = 0
    invariant_factors: tuple = ()

    def __post_init__(self):
        R = self.ring
        if not isinstance(self.free_rank, int) or self.free_rank < 0:
            raise InvalidDescriptor(f"free rank must be a non-negative integer, got {self.free_rank!r}")
        facs = tuple(
            f if isinstance(f, Element) else Element(R, R.coerce(f)) for f in self.invariant_factors
        )
        object.__setattr__(self, "invariant_factors", facs)
        for f in facs:
            if f.ring != R:
                raise RingMismatch(f"invariant factor {f} is not over {R}")
            if f.is_zero() or f.is_unit():
                raise InvalidDescriptor(f"invariant factor {f} is zero or a unit")
            if R.canonical(f.value) != f.value:
                raise InvalidDescriptor(f"invariant factor {f} is not a canonical associate")
        for a, b in zip(facs, facs[1:]):
            if not R.divides(a.value, b.value):
                raise InvalidDescriptor(f"invariant factors {a} and {b} do not form a chain")

    @classmethod
    def from_cyclic(cls, ring: Ring, orders=(), free_rank: int = 0) -> "StructureDescriptor":
        """Descriptor of ``D^free_rank (+) D/(o1) (+) ...`` for arbitrary ``oi``
        (a zero ``oi`` adds a free summand)."""
        raw = [ring.coerce(o) for o in orders]
        free_rank += sum(1 for o in raw if ring.is_zero(o))
        chain = canonical_chain(ring, raw)
        return cls(ring, free_rank, tuple(Element(ring, d) for d in chain))

    @classmethod
    def regular(cls, ring: Ring) -> "StructureDescriptor":
        return cls(ring, 1, ())

    @property
    def raw_factors(self) -> list:
        return [f.value for f in self.invariant_factors]

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def is_torsion(self) -> bool:
        return self.free_rank == 0

    def num_generators(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    def sort_key(self):
        return (self.ring.tag(), self.free_rank, len(self.invariant_factors),
                tuple(f.sort_key() for f in self.invariant_factors))

    def to_presentation(self) -> "Presentation":
        """Diagonal presentation: torsion generators first, free ones last."""
        R = self.ring
        g = self.num_generators()
        k = len(self.invariant_factors)
        grid = [[R.zero] * g for _ in range(k)]
        for i, f in enumerate(self.invariant_factors):
            grid[i][i] = f.value
        return Presentation(R, g, Matrix.from_raw(R, grid, g) if k else Matrix.zeros(R, 0, g))

    def to_json(self) -> dict:
        return {
            "ring": self.ring.tag(),
            "free_rank": self.free_rank,
            "invariant_factors": [f.to_json() for f in self.invariant_factors],
        }

    @classmethod
    def from_json(cls, data, ring=None) -> "StructureDescriptor":
        if not isinstance(data, dict):
            raise ParseError("descriptor must be a JSON object")
        R = parse_ring(data.get("ring", ring))
        r = data.get("free_rank", 0)
        if not isinstance(r, int) or isinstance(r, bool) or r < 0:
            raise ParseError(f"free_rank must be a non-negative integer, got {r!r}")
        facs = data.get("invariant_factors", [])
        if not isinstance(facs, list):
            raise ParseError("invariant_factors must be a list")
        # accept any list of cyclic orders and canonicalize
        return cls.from_cyclic(R, [R.coerce(f) for f in facs], r)

    def __str__(self):
        R = self.ring
        parts = []
        if self.free_rank:
            parts.append(f"{R}" if self.free_rank == 1 else f"{R}^{self.free_rank}")
        parts.extend(f"{R}/({f})" for f in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Presentation:
    """Cokernel of ``relations``: ``D^generators`` modulo its row space."""

    ring: Ring
    generators: int
    relations: Matrix

    def __post_init__(self):
        if self.relations.ring != self.ring:
            raise RingMismatch("relation matrix is over a different ring")
        if self.relations.cols != self.generators:
            raise ShapeMismatch(
                f"relations have {self.relations.cols} columns for {self.generators} generators"
            )

    @classmethod
    def from_rows(cls, ring: Ring, generators: int, rows) -> "Presentation":
        rows = list(rows)
        rel = Matrix.from_rows(ring, rows, generators) if rows else Matrix.zeros(ring, 0, generators)
        return cls(ring, generators, rel)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.tag(),
            "generators": self.generators,
            "relations": self.relations.to_json()["entries"],
        }

    @classmethod
    def from_json(cls, data, ring=None) -> "Presentation":
        if not isinstance(data, dict):
            raise ParseError("presentation must be a JSON object")
        R = parse_ring(data.get("ring", ring))
        g = data.get("generators")
        if not isinstance(g, int) or isinstance(g, bool) or g < 0:
            raise ParseError(f"generators must be a non-negative integer, got {g!r}")
        rel = data.get("relations", [])
        if isinstance(rel, dict):
            rel = rel.get("entries", [])
        if not isinstance(rel, list) or any(not isinstance(r, list) or len(r) != g for r in rel):
            raise ParseError(f"relations must be a list of rows of length {g}")
        return cls.from_rows(R, g, rel)


@dataclass(frozen=True)
class PrimaryDecomposition:
    ring: Ring
    free_rank: int
    components: dict = field(default_factory=dict)  # prime Element -> exponents, ascending

    def reassemble(self) -> StructureDescriptor:
        """Chinese-remainder pairing: the i-th largest exponents of every prime
        multiply together into the i-th largest invariant factor."""
        R = self.ring
        k = max((len(v) for v in self.components.values()), default=0)
        facs = [R.one] * k
        for p, exps in self.components.items():
            for i, e in enumerate(sorted(exps, reverse=True)):
                facs[k - 1 - i] = R.mul(facs[k - 1 - i], R.power(p.value, e))
        return StructureDescriptor(R, self.free_rank, tuple(Element(R, f) for f in facs))

    def to_json(self) -> dict:
        return {
            "ring": self.ring.tag(),
            "free_rank": self.free_rank,
            "components": [
                {"prime": p.to_json(), "exponents": list(e)}
                for p, e in sorted(self.components.items(), key=lambda kv: kv[0].sort_key())
            ],
        }


# -- operations ----------------------------------------------------------------


def structure(p: Presentation) -> StructureDescriptor:
    R = p.ring
    diag = smith_diagonal(p.relations) if p.relations.rows else []
    nonzero = [d for d in diag if not R.is_zero(d)]
    facs = [d for d in nonzero if not R.is_unit(d)]
    return StructureDescriptor(R, p.generators - len(nonzero), tuple(Element(R, d) for d in facs))


def is_isomorphic(a: StructureDescriptor, b: StructureDescriptor) -> bool:
    _same_ring(a, b)
    return a.free_rank == b.free_rank and a.invariant_factors == b.invariant_factors


def direct_sum(a: StructureDescriptor, b: StructureDescriptor) -> StructureDescriptor:
    _same_ring(a, b)
    return StructureDescriptor.from_cyclic(
        a.ring, a.raw_factors + b.raw_factors, a.free_rank + b.free_rank
    )


def direct_sum_all(ring: Ring, parts) -> StructureDescriptor:
    out = StructureDescriptor(ring)
    for s in parts:
        out = direct_sum(out, s)
    return out


def torsion_free_split(s: StructureDescriptor):
    return StructureDescriptor(s.ring, 0, s.invariant_factors), s.free_rank


def _require_factor(s: StructureDescriptor, what: str):
    if s.ring.kind == "qx" and s.invariant_factors:
        raise UnsupportedRing(f"{what} over {s.ring} needs irreducible factorization")


def primary_decomposition(s: StructureDescriptor) -> PrimaryDecomposition:
    _require_factor(s, "primary decomposition")
    comps: dict = {}
    for d in s.invariant_factors:
        for p, e in factor(d).factors:
            comps.setdefault(p, []).append(e)
    return PrimaryDecomposition(s.ring, s.free_rank, {p: tuple(sorted(e)) for p, e in comps.items()})


def _all_squarefree(s: StructureDescriptor) -> bool:
    return all(squarefree_raw(s.ring, d) for d in s.raw_factors)


def _prime_counts(s: StructureDescriptor) -> dict:
    """prime -> number of cyclic primary components, for any supported ring.

    Over QQ[x] this works only when every invariant factor is squarefree and
    splits (see ``prime_split``)."""
    counts: dict = {}
    for d in s.invariant_factors:
        for p, _ in prime_split(d):
            counts[p] = counts.get(p, 0) + 1
    return counts


def socle(s: StructureDescriptor) -> StructureDescriptor:
    R = s.ring
    if R.kind == "qx":
        if not _all_squarefree(s):
            raise UnsupportedRing("socle over QQ[x] needs a squarefree invariant-factor list")
        return StructureDescriptor(R, 0, s.invariant_factors)
    primes = []
    for p, exps in primary_decomposition(s).components.items():
        primes.extend([p.value] * len(exps))
    return StructureDescriptor.from_cyclic(R, primes)


def uniform_dimension(s: StructureDescriptor) -> int:
    if s.ring.kind == "qx" and not _all_squarefree(s):
        raise UnsupportedRing("uniform dimension over QQ[x] needs squarefree invariant factors")
    return s.free_rank + sum(_prime_counts(s).values())


def krull_dimension(s: StructureDescriptor):
    if s.is_zero():
        return NoDimension
    return 1 if s.free_rank else 0


def _exponent_counts(exps, t):
    return sum(1 for e in exps if e >= t)


def embeds(a: StructureDescriptor, b: StructureDescriptor) -> bool:
    """Is there an injective homomorphism ``a -> b``?

    Free ranks must not drop, and for every prime ``p`` and ``t >= 1`` the
    number of ``p``-primary cyclic components of exponent ``>= t`` in ``a``
    must not exceed the same count in ``b``.
    """
    _same_ring(a, b)
    if a.free_rank > b.free_rank:
        return False
    if not a.invariant_factors:
        return True
    if not b.invariant_factors:
        return False
    if a.ring.kind == "qx":
        raise UnsupportedRing("embedding test between QQ[x] torsion modules needs factorization")
    pa = primary_decomposition(a).components
    pb = primary_decomposition(b).components
    for p, ea in pa.items():
        eb = pb.get(p, ())
        for t in range(1, max(ea) + 1):
            if _exponent_counts(ea, t) > _exponent_counts(eb, t):
                return False
    return True


def subisomorphic(a: StructureDescriptor, b: StructureDescriptor) -> bool:
    return embeds(a, b) and embeds(b, a)


def is_quasi_prime_ideal(d: Element) -> bool:
    """Is the principal ideal ``(d)`` quasi-prime?  Over ZZ and F_p[x] this
    holds exactly for ``d = 0`` and ``d`` prime."""
    R = d.ring
    if R.kind == "qx":
        raise UnsupportedRing("quasi-prime test is only offered over ZZ and F_p[x]")
    if d.is_unit():
        raise UnitIdeal(f"({d}) is the whole ring")
    if d.is_zero():
        return True
    return is_prime_element(d)
