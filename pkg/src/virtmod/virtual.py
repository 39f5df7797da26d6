"""Virtually simple / virtually semisimple modules over the supported PIDs.

Decision procedures on canonical descriptors, constructive decomposition
into virtually simple summands, and Krull-Schmidt pairing certificates.

The characterizations used here hold for finitely generated modules over
commutative PIDs only; each is checked against the brute-force oracle on
finite abelian groups by the test suite:

* virtually semisimple  <=> every invariant factor is squarefree
* completely virtually semisimple <=> virtually semisimple
* fully virtually semisimple <=> semisimple (free rank 0, squarefree)
* virtually simple <=> the regular module ``D`` or a simple ``D/(p)``
* quasi-injective <=> free rank 0 and every primary component homocyclic
"""

from __future__ import annotations

from dataclasses import dataclass

from virtmod.arith import Element, factor, is_prime_element, is_squarefree, prime_split
from virtmod.arith.factor import squarefree_raw
from virtmod.errors import (
    CertificateError,
    NotDecomposable,
    NotSubisomorphic,
    NotVirtuallySimpleEntry,
    RingMismatch,
    UnsupportedRing,
)
from virtmod.modpid import (
    StructureDescriptor,
    direct_sum_all,
    embeds,
    is_isomorphic,
    primary_decomposition,
)

SIMPLE = "Simple"
FREE_RANK_ONE = "FreeOfRankOneOverBase"

# short anchors into the source article, carried in every verdict
CITATIONS = {
    "virtually_simple": "Sec 1 def; Cor 3.4",
    "virtually_semisimple": "Sec 1 def",
    "completely_virtually_semisimple": "Sec 1 def; Thm 2.7",
    "fully_virtually_semisimple": "Def 3.7; Prop 3.8",
    "semisimple": "Sec 1",
    "quasi_injective": "Prop 2.2",
    "decomposition": "Prop 3.1; Thm 3.10(3)",
    "krull_schmidt": "Thm 2.15",
    "uniform_dimension": "Lemma 2.1",
    "torsion_split": "Prop 2.9",
}
Z4_REMARK = "Sec 3 remark: Z/4Z is not virtually semisimple"


def _smallest_prime(ring):
    """A canonical prime of the base ring: 2 for ZZ, x otherwise."""
    if ring.kind == "int":
        return ring.coerce(2)
    return ring.x()


def _square_witness(s: StructureDescriptor):
    """``(p, d)`` with ``p**2 | d`` for some invariant factor ``d``, or None."""
    R = s.ring
    for d in s.invariant_factors:
        if squarefree_raw(R, d.value):
            continue
        if R.kind == "qx":
            g = R.gcd(d.value, R.derivative(d.value))
            # a squarefree part of the repeated factor; split it when we can
            g = R.exact_div(g, R.gcd(g, R.derivative(g))) if len(g) > 2 else g
            try:
                p = prime_split(Element(R, g))[0][0]
            except UnsupportedRing:
                p = Element(R, g)  # squarefree, square divides d, not split further
        else:
            p = next(q for q, e in factor(d).factors if e >= 2)
        return p, d
    return None


# -- predicates --------------------------------------------------------------------


def is_virtually_semisimple(s: StructureDescriptor) -> bool:
    if not s.invariant_factors:
        return True
    return is_squarefree(s.invariant_factors[-1])


def is_completely_virtually_semisimple(s: StructureDescriptor) -> bool:
    # submodules of D^r (+) semisimple have the same shape again
    return is_virtually_semisimple(s)


def is_semisimple(s: StructureDescriptor) -> bool:
    return s.free_rank == 0 and is_virtually_semisimple(s)


def is_fully_virtually_semisimple(s: StructureDescriptor) -> bool:
    # a free summand maps onto D/(p^2), which is not virtually semisimple
    return is_semisimple(s)


def is_virtually_simple(s: StructureDescriptor) -> bool:
    if s.free_rank == 1 and not s.invariant_factors:
        return True
    if s.free_rank == 0 and len(s.invariant_factors) == 1:
        return is_prime_element(s.invariant_factors[0])
    return False


def is_quasi_injective(s: StructureDescriptor) -> bool:
    if s.free_rank:
        return False
    if s.ring.kind == "qx":
        if is_virtually_semisimple(s):
            return True  # semisimple
        raise UnsupportedRing("quasi-injectivity of non-semisimple QQ[x] torsion needs factorization")
    return all(len(set(e)) == 1 for e in primary_decomposition(s).components.values())


PREDICATES = {
    "virtually_simple": is_virtually_simple,
    "virtually_semisimple": is_virtually_semisimple,
    "completely_virtually_semisimple": is_completely_virtually_semisimple,
    "fully_virtually_semisimple": is_fully_virtually_semisimple,
    "semisimple": is_semisimple,
    "quasi_injective": is_quasi_injective,
}


# -- verdicts with witnesses ----------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    predicate: str
    value: bool
    witness: object = None
    citation: str = ""

    def to_json(self) -> dict:
        return {
            "predicate": self.predicate,
            "value": self.value,
            "witness": self.witness,
            "citation": self.citation,
        }


def _cyclic_json(R, d):
    return StructureDescriptor.from_cyclic(R, [d]).to_json()


def _witness(name: str, s: StructureDescriptor, value: bool):
    R = s.ring
    if value:
        return None
    if name in ("virtually_semisimple", "completely_virtually_semisimple"):
        p, d = _square_witness(s)
        return {"prime": p.to_json(), "factor": d.to_json()}
    if name in ("fully_virtually_semisimple", "semisimple"):
        if s.free_rank:
            p = _smallest_prime(R)
            return {"quotient": _cyclic_json(R, R.mul(p, p))}
        p, d = _square_witness(s)
        return {"quotient": _cyclic_json(R, R.mul(p.value, p.value))}
    if name == "virtually_simple":
        if s.is_zero():
            return {"reason": "zero module"}
        if s.free_rank:
            return {"submodule": StructureDescriptor.regular(R).to_json()}
        try:
            p = prime_split(s.invariant_factors[0])[0][0]
        except UnsupportedRing:
            return None
        return {"submodule": _cyclic_json(R, p.value)}
    if name == "quasi_injective":
        if s.free_rank:
            return {"reason": "non-zero free rank"}
        for p, e in sorted(primary_decomposition(s).components.items(), key=lambda kv: kv[0].sort_key()):
            if len(set(e)) > 1:
                return {"prime": p.to_json(), "exponents": list(e)}
    return None


def verdict(name: str, s: StructureDescriptor) -> Verdict:
    value = PREDICATES[name](s)
    citation = CITATIONS[name]
    if name == "virtually_semisimple" and not value:
        citation = f"{citation}; {Z4_REMARK}"
    return Verdict(name, value, _witness(name, s, value), citation)


def all_verdicts(s: StructureDescriptor) -> list:
    """Every predicate that can be decided for ``s``; undecidable ones report
    ``value: None`` with the refusal message as witness."""
    out = []
    for name in PREDICATES:
        try:
            out.append(verdict(name, s))
        except UnsupportedRing as exc:
            out.append(Verdict(name, None, {"unsupported": str(exc)}, CITATIONS[name]))
    return out


# -- decomposition -------------------------------------------------------------------


@dataclass(frozen=True)
class VSDecomposition:
    summands: tuple
    tags: tuple

    def reassemble(self, ring) -> StructureDescriptor:
        return direct_sum_all(ring, self.summands)

    def to_json(self) -> dict:
        return {
            "summands": [
                {"descriptor": s.to_json(), "tag": t} for s, t in zip(self.summands, self.tags)
            ],
            "citation": CITATIONS["decomposition"],
        }


def decompose_virtually_simple(s: StructureDescriptor) -> VSDecomposition:
    """Split a virtually semisimple module into virtually simple summands:
    ``r`` copies of ``D`` and one ``D/(p)`` per primary component."""
    R = s.ring
    if not is_virtually_semisimple(s):
        p, d = _square_witness(s)
        raise NotDecomposable(
            f"{s} is not virtually semisimple: ({p})^2 divides {d}", prime=p, factor=d
        )
    simples = []
    for d in s.invariant_factors:
        simples.extend(p for p, _ in prime_split(d))
    simples.sort(key=lambda p: p.sort_key())
    summands = [StructureDescriptor.regular(R)] * s.free_rank
    summands += [StructureDescriptor(R, 0, (p,)) for p in simples]
    tags = [FREE_RANK_ONE] * s.free_rank + [SIMPLE] * len(simples)
    return VSDecomposition(tuple(summands), tuple(tags))


# -- Krull-Schmidt ---------------------------------------------------------------------


@dataclass(frozen=True)
class KSCertificate:
    """``pairing[k] = (i, j)`` pairs ``a[i]`` with an isomorphic ``b[j]``."""

    pairing: tuple

    def check(self, a, b) -> bool:
        if len(a) != len(b) or len(self.pairing) != len(a):
            return False
        left = sorted(i for i, _ in self.pairing)
        right = sorted(j for _, j in self.pairing)
        if left != list(range(len(a))) or right != list(range(len(b))):
            return False
        return all(is_isomorphic(a[i], b[j]) for i, j in self.pairing)

    def to_json(self, a=None, b=None) -> dict:
        out = {"pairing": [list(p) for p in self.pairing], "citation": CITATIONS["krull_schmidt"]}
        if a is not None and b is not None:
            out["evidence"] = [
                {"a": a[i].to_json(), "b": b[j].to_json()} for i, j in self.pairing
            ]
        return out


def ks_certify(a, b) -> KSCertificate:
    """Pair the virtually simple summands of two subisomorphic direct sums."""
    a, b = list(a), list(b)
    for side, items in (("a", a), ("b", b)):
        for i, s in enumerate(items):
            if not is_virtually_simple(s):
                raise NotVirtuallySimpleEntry(
                    f"entry {i} of {side} ({s}) is not virtually simple", side, i
                )
    rings = {s.ring for s in a + b}
    if len(rings) > 1:
        raise RingMismatch("summands are over different rings")
    ring = rings.pop() if rings else None
    if ring is not None:
        A, B = direct_sum_all(ring, a), direct_sum_all(ring, b)
        if not embeds(A, B):
            raise NotSubisomorphic(f"{A} does not embed in {B}", "a->b")
        if not embeds(B, A):
            raise NotSubisomorphic(f"{B} does not embed in {A}", "b->a")
    free = {}
    for j, s in enumerate(b):
        free.setdefault(s, []).append(j)
    pairing = []
    for i, s in enumerate(a):
        slots = free.get(s)
        if not slots:
            raise CertificateError(f"no partner for {s} although the sums are subisomorphic")
        pairing.append((i, slots.pop(0)))
    if any(free.values()):
        raise CertificateError("unpaired summands left although the sums are subisomorphic")
    return KSCertificate(tuple(pairing))
