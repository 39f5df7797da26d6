"""Matrix rings ``M_n(D)`` over the supported domains, and finite products.

Modules over ``M_n(D)`` are only ever analysed after transport to ``D``
along the column equivalence ``M -> e11 M``.  For a presentation with
``g`` generators and relation rows made of ``n x n`` blocks
``(A_k1, ..., A_kg)``, the submodule generated by one relation row
transports to the row space of the ``n x (g*n)`` matrix
``[A_k1 | ... | A_kg]``.  So the base presentation has ``g*n`` generators
and one scalar relation per row of every block row.
"""

from __future__ import annotations

from dataclasses import dataclass

from virtmod.arith import Ring, parse_ring, ring_to_json
from virtmod.errors import IndexOutOfRange, ParseError, ShapeMismatch
from virtmod.modpid import (
    Presentation,
    StructureDescriptor,
    direct_sum_all,
    structure,
    uniform_dimension,
)
from virtmod.virtual import (
    FREE_RANK_ONE,
    KSCertificate,
    VSDecomposition,
    is_virtually_semisimple,
    is_virtually_simple,
    ks_certify,
)

CITATIONS = {
    "wedderburn": "Thm 2.7 (uniqueness statement)",
    "completely_vss": "Thm 2.7(3)",
    "v_domain": "Thm 3.9(3); Thm 3.10",
    "semisimple": "Cor 2.3",
    "regular": "Thm 2.7 proof",
    "componentwise": "Lemma 2.4",
    "endomorphism": "Lemma 2.6",
}

_KIND_ORDER = {"int": 0, "fp": 1, "qx": 2}


def _ring_key(R: Ring):
    return (_KIND_ORDER[R.kind], getattr(R, "p", 0))


@dataclass(frozen=True)
class MatrixRingSpec:
    n: int
    base: Ring

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ShapeMismatch(f"matrix size must be a positive integer, got {self.n!r}")

    def sort_key(self):
        return _ring_key(self.base) + (self.n,)

    def to_json(self) -> dict:
        return {"n": self.n, "base": ring_to_json(self.base)}

    @classmethod
    def from_json(cls, data) -> "MatrixRingSpec":
        if not isinstance(data, dict) or "n" not in data:
            raise ParseError("matrix ring spec needs 'n' and 'base'")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ParseError(f"matrix size must be a positive integer, got {n!r}")
        return cls(n, parse_ring(data.get("base", data.get("ring"))))

    def __str__(self):
        return f"M_{self.n}({self.base})"


@dataclass(frozen=True)
class ProductRingSpec:
    """``M_n1(D1) x ... x M_nk(Dk)``; components kept in canonical order so
    that equal Wedderburn data compare equal."""

    components: tuple

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=MatrixRingSpec.sort_key))
        if not comps:
            raise ShapeMismatch("a product ring needs at least one component")
        object.__setattr__(self, "components", comps)

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data) -> "ProductRingSpec":
        if isinstance(data, list):
            data = {"components": data}
        if not isinstance(data, dict) or not isinstance(data.get("components"), list):
            raise ParseError("ring spec needs a 'components' list")
        return cls(tuple(MatrixRingSpec.from_json(c) for c in data["components"]))

    def __str__(self):
        return " x ".join(str(c) for c in self.components)


@dataclass(frozen=True)
class MatModPresentation:
    """``M_n(D)^g`` modulo the left submodule generated by relation rows;
    ``relations[k][j]`` is an ``n x n`` block (raw values, row-major lists)."""

    spec: MatrixRingSpec
    generators: int
    relations: tuple

    def __post_init__(self):
        n, R = self.spec.n, self.spec.base
        rels = []
        for k, row in enumerate(self.relations):
            if len(row) != self.generators:
                raise ShapeMismatch(f"relation {k} has {len(row)} blocks for {self.generators} generators")
            blocks = []
            for blk in row:
                if len(blk) != n or any(len(r) != n for r in blk):
                    raise ShapeMismatch(f"relation {k} has a block that is not {n}x{n}")
                blocks.append(tuple(tuple(R.coerce(x) for x in r) for r in blk))
            rels.append(tuple(blocks))
        object.__setattr__(self, "relations", tuple(rels))

    def to_json(self) -> dict:
        R = self.spec.base
        return {
            "spec": self.spec.to_json(),
            "generators": self.generators,
            "relations": [
                [[[R.to_json_value(x) for x in r] for r in blk] for blk in row]
                for row in self.relations
            ],
        }

    @classmethod
    def from_json(cls, data) -> "MatModPresentation":
        if not isinstance(data, dict) or "spec" not in data:
            raise ParseError("matrix-ring presentation needs 'spec'")
        spec = MatrixRingSpec.from_json(data["spec"])
        g = data.get("generators")
        if not isinstance(g, int) or isinstance(g, bool) or g < 0:
            raise ParseError(f"generators must be a non-negative integer, got {g!r}")
        rel = data.get("relations", [])
        if not isinstance(rel, list):
            raise ParseError("relations must be a list of block rows")
        try:
            return cls(spec, g, tuple(rel))
        except (ShapeMismatch, TypeError) as exc:
            raise ParseError(str(exc)) from None


def transport_to_base(mp: MatModPresentation) -> Presentation:
    n, g, R = mp.spec.n, mp.generators, mp.spec.base
    rows = []
    for blocks in mp.relations:
        for i in range(n):
            rows.append([x for blk in blocks for x in blk[i]])
    return Presentation.from_rows(R, g * n, rows)


def scalar_block_presentation(spec: MatrixRingSpec, s: StructureDescriptor) -> MatModPresentation:
    """``s`` viewed through scalar blocks: one generator per cyclic summand
    of ``s``, relation block ``d * I`` for each invariant factor ``d``."""
    R, n = spec.base, spec.n
    g = s.num_generators()
    zero = [[R.zero] * n for _ in range(n)]
    rels = []
    for k, d in enumerate(s.invariant_factors):
        row = [zero] * g
        row[k] = [[d.value if i == j else R.zero for j in range(n)] for i in range(n)]
        rels.append(row)
    return MatModPresentation(spec, g, tuple(rels))


def column_module(spec: MatrixRingSpec, j: int) -> StructureDescriptor:
    """Transported descriptor of the ``j``-th column left ideal (1-based).

    The ideal ``R e_jj`` is ``R / R(1 - e_jj)``; transport and read off."""
    n, R = spec.n, spec.base
    if not isinstance(j, int) or not 1 <= j <= n:
        raise IndexOutOfRange(f"column index {j} outside 1..{n}")
    block = [[R.one if (a == b and a != j - 1) else R.zero for b in range(n)] for a in range(n)]
    return structure(transport_to_base(MatModPresentation(spec, 1, ((block,),))))


def regular_module(spec: MatrixRingSpec) -> StructureDescriptor:
    return structure(transport_to_base(MatModPresentation(spec, 1, ())))


def is_virtually_simple_matmod(mp: MatModPresentation) -> bool:
    return is_virtually_simple(structure(transport_to_base(mp)))


def decompose_regular(spec: MatrixRingSpec):
    """The regular module as ``n`` column modules, plus the pairing of two
    runs (all summands are isomorphic)."""
    cols = tuple(column_module(spec, j) for j in range(1, spec.n + 1))
    dec = VSDecomposition(cols, (FREE_RANK_ONE,) * spec.n)
    cert = ks_certify(cols, tuple(column_module(spec, j) for j in range(1, spec.n + 1)))
    return dec, cert


def _square_of_prime(R: Ring):
    p = R.coerce(2) if R.kind == "int" else R.x()
    return StructureDescriptor.from_cyclic(R, [R.mul(p, p)])


@dataclass(frozen=True)
class ComponentReport:
    spec: MatrixRingSpec
    regular_summands: tuple
    certificate: KSCertificate
    uniform_dimension: int
    endomorphism_ring: Ring
    v_domain_status: str
    v_domain_witness: StructureDescriptor

    def to_json(self) -> dict:
        return {
            "component": self.spec.to_json(),
            "regular_decomposition": [
                {"descriptor": s.to_json(), "tag": FREE_RANK_ONE} for s in self.regular_summands
            ],
            "pairing": [list(p) for p in self.certificate.pairing],
            "regular_uniform_dimension": self.uniform_dimension,
            "column_endomorphism_ring": ring_to_json(self.endomorphism_ring),
            "v_domain_status": self.v_domain_status,
            "v_domain_witness": {
                "non_vss_cyclic_module": self.v_domain_witness.to_json(),
            },
        }


@dataclass(frozen=True)
class RingReport:
    wedderburn_data: ProductRingSpec
    is_semisimple: bool
    is_left_completely_vss: bool
    components: tuple

    @property
    def v_domain_status(self) -> list:
        return [c.v_domain_status for c in self.components]

    @property
    def regular_decomposition(self) -> list:
        """``(component index, summand)`` pairs over all components."""
        return [(i, s) for i, c in enumerate(self.components) for s in c.regular_summands]

    def to_json(self) -> dict:
        return {
            "wedderburn_data": self.wedderburn_data.to_json(),
            "is_semisimple": self.is_semisimple,
            "is_left_completely_vss": self.is_left_completely_vss,
            "v_domain_status": self.v_domain_status,
            "components": [c.to_json() for c in self.components],
            "notes": [
                "every base ring is a commutative PID that is not a field, so each "
                "component is left completely virtually semisimple",
                "no base ring is a V-domain: D/(p^2) is a cyclic module that is not "
                "virtually semisimple, so finitely generated modules need not be "
                "virtually semisimple and the ring is not semisimple",
            ],
            "citations": [CITATIONS[k] for k in
                          ("wedderburn", "completely_vss", "v_domain", "semisimple", "regular",
                           "componentwise", "endomorphism")],
        }


def ring_analyze(spec: ProductRingSpec) -> RingReport:
    comps = []
    for c in spec.components:
        summands, cert = decompose_regular(c)
        witness = _square_of_prime(c.base)
        # the status is computed, not assumed: a non-vss cyclic module exists
        status = "Field" if is_virtually_semisimple(witness) else "NotVDomain"
        comps.append(ComponentReport(
            c, summands.summands, cert, uniform_dimension(regular_module(c)), c.base,
            status, witness,
        ))
    semisimple = all(r.v_domain_status == "Field" for r in comps)
    return RingReport(spec, semisimple, True, tuple(comps))


def componentwise(predicate, modules) -> bool:
    """A module over a product ring is a tuple of component modules; the
    virtual predicates hold for it iff they hold for every component."""
    return all(predicate(structure(transport_to_base(mp))) for mp in modules)


def concatenated(modules) -> StructureDescriptor:
    """Direct sum of the transported components (all over one base)."""
    descs = [structure(transport_to_base(mp)) for mp in modules]
    return direct_sum_all(descs[0].ring, descs)
